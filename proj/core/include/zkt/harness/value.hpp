#pragma once

#include <vector>

#include "zkt/crypto/json.hpp"

namespace zkt {

/// An amount and/or a list of NFT ids of one token type.
struct Value {
    U256 amount;
    std::vector<U256> ids;
    bool empty() const { return amount.isZero() && ids.empty(); }
};

void to_json(Json& j, const Value& v);
/// Reads optional "amount" and "ids" members. Throws ParseError.
Value valueFromJson(const Json& j);

}  // namespace zkt

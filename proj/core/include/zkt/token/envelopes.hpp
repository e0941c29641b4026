#pragma once

#include "zkt/crypto/json.hpp"
#include "zkt/error.hpp"
#include "zkt/token/token.hpp"

namespace zkt {

// Canonical JSON for preimages and the off-chain envelopes. Field order is
// fixed; integers are hex strings; absent optionals are null.

void to_json(Json& j, const TokenPreimage& t);
void from_json(const Json& j, TokenPreimage& t);
void to_json(Json& j, const NullifierPreimage& n);
void from_json(const Json& j, NullifierPreimage& n);
void to_json(Json& j, const TransferPreimage& p);
void from_json(const Json& j, TransferPreimage& p);
void to_json(Json& j, const BurnPreimage& p);
void from_json(const Json& j, BurnPreimage& p);
void to_json(Json& j, const DvpPreimage& p);
void from_json(const Json& j, DvpPreimage& p);

template <class T>
Json vectorToJson(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x);
    return a;
}

template <class T>
std::vector<T> vectorFromJson(const Json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "expected an array, got " + j.dump());
    std::vector<T> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(x.template get<T>());
    return v;
}

}  // namespace zkt

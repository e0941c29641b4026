#pragma once

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "zkt/crypto/digest.hpp"
#include "zkt/crypto/merkle.hpp"
#include "zkt/crypto/seal.hpp"

namespace zkt {

/// Key order is preserved so serialized files are canonical.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers are written as minimal "0x" hex. Reading also accepts decimal
/// strings and non-negative JSON numbers. Throws ParseError.
U256 u256FromJson(const Json& j);
Json bytesToJson(std::span<const std::uint8_t> b);
Bytes bytesFromJson(const Json& j);

/// Member lookup that throws ParseError naming the missing key.
const Json& field(const Json& j, const std::string& key);

void to_json(Json& j, const U256& v);
void from_json(const Json& j, U256& v);
void to_json(Json& j, const Digest& d);
void from_json(const Json& j, Digest& d);
void to_json(Json& j, const PublicKey& pk);
void from_json(const Json& j, PublicKey& pk);
void to_json(Json& j, const MerkleStep& s);
void from_json(const Json& j, MerkleStep& s);
void to_json(Json& j, const MerklePath& p);
void from_json(const Json& j, MerklePath& p);

template <class Tag>
void to_json(Json& j, const WordOf<Tag>& w) { to_json(j, w.value); }
template <class Tag>
void from_json(const Json& j, WordOf<Tag>& w) { w.value = u256FromJson(j); }
template <class Tag>
void to_json(Json& j, const DigestOf<Tag>& d) { to_json(j, d.value); }
template <class Tag>
void from_json(const Json& j, DigestOf<Tag>& d) { from_json(j, d.value); }

template <class T>
Json optionalToJson(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optionalFromJson(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->template get<T>();
}

}  // namespace zkt

#include "zkt/crypto/json.hpp"

#include <string>

#include "zkt/error.hpp"

namespace zkt {

U256 u256FromJson(const Json& j) {
    if (j.is_number_unsigned()) return U256(j.get<std::uint64_t>());
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return U256(static_cast<std::uint64_t>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::optional<U256> v;
        if (s.starts_with("0x") || s.starts_with("0X")) {
            v = U256::fromHex(s);
        } else {
            v = U256::fromDecimal(s);
        }
        if (v) return *v;
    }
    throw Error(Errc::ParseError, "expected a 256-bit integer, got " + j.dump());
}

Json bytesToJson(std::span<const std::uint8_t> b) { return toHex(b); }

Bytes bytesFromJson(const Json& j) {
    if (j.is_string()) {
        if (auto b = bytesFromHex(j.get_ref<const std::string&>())) return *b;
    }
    throw Error(Errc::ParseError, "expected a hex byte string, got " + j.dump());
}

const Json& field(const Json& j, const std::string& key) {
    if (!j.is_object()) throw Error(Errc::ParseError, "expected an object holding '" + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw Error(Errc::ParseError, "missing field '" + key + "'");
    return *it;
}

void to_json(Json& j, const U256& v) { j = v.toHex(); }
void from_json(const Json& j, U256& v) { v = u256FromJson(j); }

void to_json(Json& j, const Digest& d) { j = d.hex(); }
void from_json(const Json& j, Digest& d) {
    if (j.is_string()) {
        if (auto v = Digest::fromHex(j.get_ref<const std::string&>())) {
            d = *v;
            return;
        }
    }
    throw Error(Errc::ParseError, "expected a 64-digit hex digest, got " + j.dump());
}

void to_json(Json& j, const PublicKey& pk) { j = bytesToJson(pk.bytes); }
void from_json(const Json& j, PublicKey& pk) { pk.bytes = bytesFromJson(j); }

void to_json(Json& j, const MerkleStep& s) {
    j = Json{{"sibling", s.sibling_hash}, {"at_left", s.at_left}};
}
void from_json(const Json& j, MerkleStep& s) {
    s.sibling_hash = field(j, "sibling").get<Digest>();
    const Json& f = field(j, "at_left");
    if (!f.is_boolean()) throw Error(Errc::ParseError, "at_left must be boolean");
    s.at_left = f.get<bool>();
}

void to_json(Json& j, const MerklePath& p) {
    j = Json::array();
    for (const auto& s : p.steps) j.push_back(s);
}
void from_json(const Json& j, MerklePath& p) {
    if (!j.is_array()) throw Error(Errc::ParseError, "merkle path must be an array");
    p.steps.clear();
    for (const auto& s : j) p.steps.push_back(s.get<MerkleStep>());
}

}  // namespace zkt

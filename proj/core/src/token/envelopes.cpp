#include "zkt/token/envelopes.hpp"

namespace zkt {
namespace {

Json optionalBytes(const std::optional<Bytes>& b) { return b ? bytesToJson(*b) : Json(nullptr); }

std::optional<Bytes> optionalBytesFrom(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return bytesFromJson(*it);
}

template <class T>
Json optionalVector(const std::optional<std::vector<T>>& v) {
    return v ? vectorToJson(*v) : Json(nullptr);
}

template <class T>
std::optional<std::vector<T>> optionalVectorFrom(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return vectorFromJson<T>(*it);
}

}  // namespace

void to_json(Json& j, const TokenPreimage& t) {
    j = Json{{"owner", t.owner},   {"type", t.type}, {"nonce", t.nonce},
             {"amount", t.amount}, {"id", t.id},     {"payload", optionalBytes(t.payload)}};
}

void from_json(const Json& j, TokenPreimage& t) {
    t.owner = field(j, "owner").get<Account>();
    t.type = u256FromJson(field(j, "type"));
    t.nonce = j.contains("nonce") ? u256FromJson(j["nonce"]) : U256();
    t.amount = j.contains("amount") ? u256FromJson(j["amount"]) : U256();
    t.id = j.contains("id") ? u256FromJson(j["id"]) : U256();
    t.payload = optionalBytesFrom(j, "payload");
}

void to_json(Json& j, const NullifierPreimage& n) {
    j = Json{{"partial_hash", n.partial_hash}, {"input_payload", optionalBytes(n.input_payload)}};
}

void from_json(const Json& j, NullifierPreimage& n) {
    n.partial_hash = field(j, "partial_hash").get<Digest>();
    n.input_payload = optionalBytesFrom(j, "input_payload");
}

void to_json(Json& j, const TransferPreimage& p) {
    j = Json{{"outputs", vectorToJson(p.outputs)}, {"inputs", optionalVector(p.inputs)}};
}

void from_json(const Json& j, TransferPreimage& p) {
    p.outputs = vectorFromJson<TokenPreimage>(field(j, "outputs"));
    p.inputs = optionalVectorFrom<NullifierPreimage>(j, "inputs");
}

void to_json(Json& j, const BurnPreimage& p) {
    j = Json{{"amount", optionalToJson(p.amount)}, {"ids", optionalVector(p.ids)}, {"nonce", p.nonce}};
}

void from_json(const Json& j, BurnPreimage& p) {
    p.amount = optionalFromJson<U256>(j, "amount");
    p.ids = optionalVectorFrom<U256>(j, "ids");
    p.nonce = u256FromJson(field(j, "nonce"));
}

void to_json(Json& j, const DvpPreimage& p) {
    j = Json{{"inputs", optionalVector(p.inputs)},
             {"outputs", vectorToJson(p.outputs)},
             {"delivery", vectorToJson(p.delivery)}};
}

void from_json(const Json& j, DvpPreimage& p) {
    p.inputs = optionalVectorFrom<NullifierPreimage>(j, "inputs");
    p.outputs = vectorFromJson<TokenPreimage>(field(j, "outputs"));
    p.delivery = vectorFromJson<TokenPreimage>(field(j, "delivery"));
}

}  // namespace zkt

#include "zkt/circuits/json.hpp"

namespace zkt {
namespace {

template <class T>
std::vector<T> listAt(const Json& j, const std::string& key) {
    return vectorFromJson<T>(field(j, key));
}

}  // namespace

void to_json(Json& j, const MintPublic& p) {
    j = Json{{"type_t", p.type_t}, {"comms", vectorToJson(p.comms)}, {"root_i", optionalToJson(p.root_i)}};
}

void from_json(const Json& j, MintPublic& p) {
    p.type_t = u256FromJson(field(j, "type_t"));
    p.comms = listAt<TokenCommitment>(j, "comms");
    p.root_i = optionalFromJson<Digest>(j, "root_i");
}

void to_json(Json& j, const TransferPublic& p) {
    j = Json{{"nulls", vectorToJson(p.nulls)},
             {"grabs", vectorToJson(p.grabs)},
             {"comms", vectorToJson(p.comms)},
             {"type_t", p.type_t},
             {"root_c", p.root_c},
             {"nonce_g", p.nonce_g},
             {"burn_c", p.burn_c},
             {"audit_acc", p.audit_acc},
             {"audit_d", bytesToJson(p.audit_d)}};
}

void from_json(const Json& j, TransferPublic& p) {
    p.nulls = listAt<TokenNullifier>(j, "nulls");
    p.grabs = listAt<TokenGrabber>(j, "grabs");
    p.comms = listAt<TokenCommitment>(j, "comms");
    p.type_t = u256FromJson(field(j, "type_t"));
    p.root_c = field(j, "root_c").get<Digest>();
    p.nonce_g = u256FromJson(field(j, "nonce_g"));
    p.burn_c = field(j, "burn_c").get<Digest>();
    p.audit_acc = field(j, "audit_acc").get<Account>();
    p.audit_d = bytesFromJson(field(j, "audit_d"));
}

void to_json(Json& j, const RevealingPublic& p) {
    j = Json{{"nulls", vectorToJson(p.nulls)},
             {"grabs", vectorToJson(p.grabs)},
             {"comms", vectorToJson(p.comms)},
             {"outputs", vectorToJson(p.outputs)},
             {"type_t", p.type_t},
             {"root_c", p.root_c},
             {"nonce_g", p.nonce_g},
             {"audit_d", bytesToJson(p.audit_d)},
             {"audit_acc", p.audit_acc}};
}

void from_json(const Json& j, RevealingPublic& p) {
    p.nulls = listAt<TokenNullifier>(j, "nulls");
    p.grabs = listAt<TokenGrabber>(j, "grabs");
    p.comms = listAt<TokenCommitment>(j, "comms");
    p.outputs = listAt<TokenPreimage>(j, "outputs");
    p.type_t = u256FromJson(field(j, "type_t"));
    p.root_c = field(j, "root_c").get<Digest>();
    p.nonce_g = u256FromJson(field(j, "nonce_g"));
    p.audit_d = bytesFromJson(field(j, "audit_d"));
    p.audit_acc = field(j, "audit_acc").get<Account>();
}

void to_json(Json& j, const HidingPublic& p) {
    j = Json{{"amount_i", p.amount_i},
             {"ids_i", vectorToJson(p.ids_i)},
             {"acc_i", p.acc_i},
             {"comms", vectorToJson(p.comms)},
             {"type_t", p.type_t},
             {"audit_d", bytesToJson(p.audit_d)},
             {"audit_acc", p.audit_acc}};
}

void from_json(const Json& j, HidingPublic& p) {
    p.amount_i = u256FromJson(field(j, "amount_i"));
    p.ids_i = listAt<U256>(j, "ids_i");
    p.acc_i = field(j, "acc_i").get<Account>();
    p.comms = listAt<TokenCommitment>(j, "comms");
    p.type_t = u256FromJson(field(j, "type_t"));
    p.audit_d = bytesFromJson(field(j, "audit_d"));
    p.audit_acc = field(j, "audit_acc").get<Account>();
}

void to_json(Json& j, const GrabPublic& p) {
    j = Json{{"grabs", vectorToJson(p.grabs)}, {"comms", vectorToJson(p.comms)}, {"type_t", p.type_t},
             {"root_c", p.root_c},             {"nonce_g", p.nonce_g},           {"auth_acc", p.auth_acc}};
}

void from_json(const Json& j, GrabPublic& p) {
    p.grabs = listAt<TokenGrabber>(j, "grabs");
    p.comms = listAt<TokenCommitment>(j, "comms");
    p.type_t = u256FromJson(field(j, "type_t"));
    p.root_c = field(j, "root_c").get<Digest>();
    p.nonce_g = u256FromJson(field(j, "nonce_g"));
    p.auth_acc = field(j, "auth_acc").get<Account>();
}

void to_json(Json& j, const DvpPublic& p) {
    j = Json{{"payment", p.payment}, {"delivery", p.delivery}, {"type_d", p.type_d}, {"dvp_bind", p.dvp_bind}};
}

void from_json(const Json& j, DvpPublic& p) {
    p.payment = field(j, "payment").get<DelegatedTransferTx>();
    p.delivery = field(j, "delivery").get<Digest>();
    p.type_d = u256FromJson(field(j, "type_d"));
    p.dvp_bind = field(j, "dvp_bind").get<Digest>();
}

void to_json(Json& j, const AuditPreimage& a) {
    j = Json{{"inputs", vectorToJson(a.inputs)},
             {"outputs", vectorToJson(a.outputs)},
             {"burn_a", a.burn_a},
             {"burn_ids", vectorToJson(a.burn_ids)}};
}

void from_json(const Json& j, AuditPreimage& a) {
    a.inputs = listAt<TokenPreimage>(j, "inputs");
    a.outputs = listAt<TokenPreimage>(j, "outputs");
    a.burn_a = u256FromJson(field(j, "burn_a"));
    a.burn_ids = listAt<U256>(j, "burn_ids");
}

void to_json(Json& j, const Proof& p) { j = bytesToJson(serializeProof(p)); }

void from_json(const Json& j, Proof& p) { p = parseProof(bytesFromJson(j)); }

}  // namespace zkt

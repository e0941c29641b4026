#include "zkt/circuits/encoding.hpp"

#include "zkt/crypto/hash.hpp"

namespace zkt {
namespace {

template <class Tag>
void words(Encoder& e, const std::vector<DigestOf<Tag>>& v) {
    e.word(static_cast<std::uint64_t>(v.size()));
    for (const auto& d : v) e.digest(d);
}

void words(Encoder& e, const std::vector<U256>& v) {
    e.word(static_cast<std::uint64_t>(v.size()));
    for (const auto& x : v) e.word(x);
}

void imgs(Encoder& e, const std::vector<ImgPath>& v) {
    e.word(static_cast<std::uint64_t>(v.size()));
    for (const auto& ip : v) encode(e, ip);
}

}  // namespace

void encode(Encoder& e, const MerklePath& p) {
    e.word(static_cast<std::uint64_t>(p.steps.size()));
    for (const auto& s : p.steps) e.digest(s.sibling_hash).flag(s.at_left);
}

void encode(Encoder& e, const ImgPath& ip) {
    encode(e, ip.img);
    encode(e, ip.path);
}

void encode(Encoder& e, const MintWitness& w) {
    encode(e, w.outputs);
    e.flag(w.issuer_sk.has_value());
    if (w.issuer_sk) e.word(*w.issuer_sk);
    e.flag(w.path_i.has_value());
    if (w.path_i) encode(e, *w.path_i);
}

void encode(Encoder& e, const MintPublic& p) {
    e.word(p.type_t);
    words(e, p.comms);
    e.flag(p.root_i.has_value());
    if (p.root_i) e.digest(*p.root_i);
}

void encode(Encoder& e, const TransferWitness& w) {
    imgs(e, w.inputs);
    encode(e, w.outputs);
    e.word(w.sk).bytes(w.audit_pk.bytes).word(w.burn_a);
    words(e, w.burn_ids);
}

void encode(Encoder& e, const TransferPublic& p) {
    words(e, p.nulls);
    words(e, p.grabs);
    words(e, p.comms);
    e.word(p.type_t).digest(p.root_c).word(p.nonce_g).digest(p.burn_c).word(p.audit_acc).bytes(p.audit_d);
}

void encode(Encoder& e, const RevealingWitness& w) {
    imgs(e, w.inputs);
    e.word(w.sk);
    encode(e, w.outputs);
    e.bytes(w.audit_pk.bytes);
}

void encode(Encoder& e, const RevealingPublic& p) {
    words(e, p.nulls);
    words(e, p.grabs);
    words(e, p.comms);
    encode(e, p.outputs);
    e.word(p.type_t).digest(p.root_c).word(p.nonce_g).bytes(p.audit_d).word(p.audit_acc);
}

void encode(Encoder& e, const HidingWitness& w) {
    encode(e, w.outputs);
    e.flag(w.sk.has_value());
    if (w.sk) e.word(*w.sk);
    e.bytes(w.audit_pk.bytes);
}

void encode(Encoder& e, const HidingPublic& p) {
    e.word(p.amount_i);
    words(e, p.ids_i);
    e.word(p.acc_i);
    words(e, p.comms);
    e.word(p.type_t).bytes(p.audit_d).word(p.audit_acc);
}

void encode(Encoder& e, const GrabWitness& w) {
    imgs(e, w.inputs);
    encode(e, w.outputs);
    e.word(w.auth_sk).bytes(w.owner_pk.bytes).word(w.grabber_k);
}

void encode(Encoder& e, const GrabPublic& p) {
    words(e, p.grabs);
    words(e, p.comms);
    e.word(p.type_t).digest(p.root_c).word(p.nonce_g).word(p.auth_acc);
}

void encode(Encoder& e, const Proof& p) {
    e.text(p.circuit_id).digest(p.binding);
}

void encode(Encoder& e, const DvpWitness& w) {
    encode(e, w.payment_w);
    encode(e, w.delivery_w);
}

void encode(Encoder& e, const DvpPublic& p) {
    encode(e, p.payment);
    e.digest(p.delivery).word(p.type_d).digest(p.dvp_bind);
}

void encode(Encoder& e, const AuditPreimage& a) {
    encode(e, a.inputs);
    encode(e, a.outputs);
    e.word(a.burn_a);
    words(e, a.burn_ids);
}

Digest witnessHashOfBytes(std::span<const std::uint8_t> encoded) {
    return taggedHash(domain::kWitness, encoded);
}

AuditPreimage decodeAuditPreimage(std::span<const std::uint8_t> bytes) {
    Decoder d(bytes);
    AuditPreimage a;
    a.inputs = decodeTokens(d);
    a.outputs = decodeTokens(d);
    a.burn_a = d.word();
    std::size_t n = d.count(32);
    for (std::size_t i = 0; i < n; ++i) a.burn_ids.push_back(d.word());
    d.finish();
    return a;
}

}  // namespace zkt

#include "zkt/circuits/builders.hpp"

#include "zkt/crypto/hash.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/crypto/seal.hpp"

namespace zkt {

Digest issuerLeaf(const Account& acc) {
    Encoder e;
    e.word(acc);
    return hash256(e.out());
}

Digest burnCommitment(const TransferWitness& w) {
    Encoder items;
    std::uint64_t n = (w.burn_a.isZero() ? 0 : 1) + w.burn_ids.size();
    items.word(n);
    if (!w.burn_a.isZero()) items.word(w.burn_a);
    for (const auto& id : w.burn_ids) items.word(id);
    items.digest(witnessHash(w));
    return taggedHash(domain::kBurn, items.out());
}

Digest deliveryHash(std::span<const TokenPreimage> tokens) {
    Encoder e;
    e.word(static_cast<std::uint64_t>(tokens.size()));
    for (const auto& t : tokens) encode(e, t);
    return taggedHash(domain::kDelivery, e.out());
}

Digest delegateBinding(const Address& del_add, const Digest& witness_hash) {
    Encoder e;
    e.word(del_add).digest(witness_hash);
    return taggedHash(domain::kDelegate, e.out());
}

Bytes sealAudit(const PublicKey& audit_pk, const AuditPreimage& a) {
    return serializeSealedBox(sealToKey(audit_pk, canonicalBytes(a)));
}

namespace {

std::vector<TokenPreimage> imagesOf(const std::vector<ImgPath>& inputs) {
    std::vector<TokenPreimage> out;
    out.reserve(inputs.size());
    for (const auto& ip : inputs) out.push_back(ip.img);
    return out;
}

}  // namespace

AuditPreimage auditPreimageOf(const TransferWitness& w) {
    return AuditPreimage{imagesOf(w.inputs), w.outputs, w.burn_a, w.burn_ids};
}

AuditPreimage auditPreimageOf(const RevealingWitness& w, std::span<const TokenPreimage> clear_outputs) {
    AuditPreimage a{imagesOf(w.inputs), w.outputs, U256(), {}};
    a.outputs.insert(a.outputs.end(), clear_outputs.begin(), clear_outputs.end());
    return a;
}

AuditPreimage auditPreimageOf(const HidingWitness& w) { return AuditPreimage{{}, w.outputs, U256(), {}}; }

std::vector<TokenCommitment> commitAll(std::span<const TokenPreimage> tokens) {
    std::vector<TokenCommitment> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(commit(t));
    return out;
}

MintPublic buildMintPublic(const MintWitness& w, const U256& type_t, std::optional<Digest> root_i) {
    return MintPublic{type_t, commitAll(w.outputs), root_i};
}

namespace {

template <class Inputs>
void fillSpends(const Inputs& inputs, const SecretKey& sk, const U256& nonce_g,
                std::vector<TokenNullifier>& nulls, std::vector<TokenGrabber>& grabs) {
    GrabberKey gk = createGrabberKey(sk, nonce_g);
    for (const auto& ip : inputs) {
        nulls.push_back(nullify(ip.img, sk));
        grabs.push_back(grabToken(ip.img, gk));
    }
}

}  // namespace

TransferPublic buildTransferPublic(const TransferWitness& w, const U256& type_t, const Digest& root_c,
                                   const U256& nonce_g) {
    TransferPublic p;
    fillSpends(w.inputs, w.sk, nonce_g, p.nulls, p.grabs);
    p.comms = commitAll(w.outputs);
    p.type_t = type_t;
    p.root_c = root_c;
    p.nonce_g = nonce_g;
    p.burn_c = burnCommitment(w);
    p.audit_acc = accountOf(w.audit_pk);
    p.audit_d = sealAudit(w.audit_pk, auditPreimageOf(w));
    return p;
}

RevealingPublic buildRevealingPublic(const RevealingWitness& w, std::vector<TokenPreimage> clear_outputs,
                                     const U256& type_t, const Digest& root_c, const U256& nonce_g) {
    RevealingPublic p;
    fillSpends(w.inputs, w.sk, nonce_g, p.nulls, p.grabs);
    p.comms = commitAll(w.outputs);
    p.audit_d = sealAudit(w.audit_pk, auditPreimageOf(w, clear_outputs));
    p.outputs = std::move(clear_outputs);
    p.type_t = type_t;
    p.root_c = root_c;
    p.nonce_g = nonce_g;
    p.audit_acc = accountOf(w.audit_pk);
    return p;
}

HidingPublic buildHidingPublic(const HidingWitness& w, const U256& amount_i, std::vector<U256> ids_i,
                               const Account& acc_i, const U256& type_t) {
    HidingPublic p;
    p.amount_i = amount_i;
    p.ids_i = std::move(ids_i);
    p.acc_i = acc_i;
    p.comms = commitAll(w.outputs);
    p.type_t = type_t;
    p.audit_d = sealAudit(w.audit_pk, auditPreimageOf(w));
    p.audit_acc = accountOf(w.audit_pk);
    return p;
}

GrabPublic buildGrabPublic(const GrabWitness& w, const U256& type_t, const Digest& root_c,
                           const U256& nonce_g) {
    GrabPublic p;
    for (const auto& ip : w.inputs) p.grabs.push_back(grabToken(ip.img, w.grabber_k));
    p.comms = commitAll(w.outputs);
    p.type_t = type_t;
    p.root_c = root_c;
    p.nonce_g = nonce_g;
    p.auth_acc = getAccount(w.auth_sk);
    return p;
}

DvpPublic buildDvpPublic(const DvpWitness& w, DelegatedTransferTx payment, const U256& type_d) {
    return DvpPublic{std::move(payment), deliveryHash(w.delivery_w), type_d, witnessHash(w)};
}

}  // namespace zkt

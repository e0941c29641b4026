#include "zkt/circuits/checks.hpp"

#include <algorithm>
#include <set>

#include "zkt/crypto/keys.hpp"
#include "zkt/error.hpp"

namespace zkt {
namespace {

constexpr CheckResult kOk{};

template <class T>
bool hasDuplicates(std::span<const T> v) {
    std::set<T> seen;
    for (const auto& x : v) {
        if (!seen.insert(x).second) return true;
    }
    return false;
}

std::vector<U256> nftIds(std::span<const TokenPreimage> ts) {
    std::vector<U256> ids;
    for (const auto& t : ts) {
        if (!t.id.isZero()) ids.push_back(t.id);
    }
    return ids;
}

bool sameMultiset(std::vector<U256> a, std::vector<U256> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<TokenPreimage> imagesOf(const std::vector<ImgPath>& inputs) {
    std::vector<TokenPreimage> out;
    out.reserve(inputs.size());
    for (const auto& ip : inputs) out.push_back(ip.img);
    return out;
}

std::optional<Account> accountIfValid(const SecretKey& sk) {
    if (sk.isZero()) return std::nullopt;
    return getAccount(sk);
}

CheckResult outputsMatch(const std::vector<TokenPreimage>& outputs, const std::vector<TokenCommitment>& comms,
                         const U256& type_t) {
    if (outputs.size() != comms.size()) return {"outputs_size"};
    if (hasDuplicates<TokenPreimage>(outputs)) return {"duplicate_output"};
    if (hasDuplicates<TokenCommitment>(comms)) return {"duplicate_commitment"};
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        const auto& o = outputs[i];
        if (!o.hasValue()) return {"output_value"};
        if (o.type != type_t) return {"output_type"};
        if (commit(o) != comms[i]) return {"commitment"};
    }
    return kOk;
}

CheckResult spendsMatch(const std::vector<ImgPath>& inputs, const SecretKey& sk,
                        const std::vector<TokenNullifier>& nulls, const std::vector<TokenGrabber>& grabs,
                        const U256& type_t, const Digest& root_c, const U256& nonce_g) {
    if (inputs.size() != nulls.size() || inputs.size() != grabs.size()) return {"sizes"};
    auto imgs = imagesOf(inputs);
    if (hasDuplicates<TokenPreimage>(imgs)) return {"duplicate_input"};
    auto owner = accountIfValid(sk);
    if (!owner && !inputs.empty()) return {"nullifier"};
    std::optional<GrabberKey> gk;
    if (owner) gk = createGrabberKey(sk, nonce_g);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& img = inputs[i].img;
        if (!img.hasValue()) return {"input_value"};
        if (img.type != type_t) return {"input_type"};
        if (img.owner != *owner || nullify(img, sk) != nulls[i]) return {"nullifier"};
        if (grabToken(img, *gk) != grabs[i]) return {"grabber"};
        if (getRoot(commit(img).value, inputs[i].path) != root_c) return {"root_c"};
    }
    return kOk;
}

CheckResult auditMatches(const PublicKey& audit_pk, const AuditPreimage& a, const Account& audit_acc,
                         const Bytes& audit_d) {
    if (accountOf(audit_pk) != audit_acc) return {"audit_acc"};
    if (sealAudit(audit_pk, a) != audit_d) return {"audit_d"};
    return kOk;
}

/// Runs a predicate that may sum amounts, mapping overflow to a constraint.
template <class F>
CheckResult guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == Errc::Overflow) return {"overflow"};
        throw;
    }
}

}  // namespace

U256 getAmountSum(std::span<const TokenPreimage> imgs) {
    U256 total;
    for (const auto& t : imgs) total = addOrThrow(total, t.amount);
    return total;
}

CheckResult checkMint(const MintWitness& w, const MintPublic& p) {
    if (auto r = outputsMatch(w.outputs, p.comms, p.type_t); !r) return r;
    if (p.root_i) {
        if (!w.issuer_sk || !w.path_i) return {"root_i"};
        auto acc = accountIfValid(*w.issuer_sk);
        if (!acc || getRoot(issuerLeaf(*acc), *w.path_i) != *p.root_i) return {"root_i"};
    }
    return kOk;
}

CheckResult checkInputs(const TransferWitness& w, const TransferPublic& p) {
    return spendsMatch(w.inputs, w.sk, p.nulls, p.grabs, p.type_t, p.root_c, p.nonce_g);
}

CheckResult checkInputs(const RevealingWitness& w, const RevealingPublic& p) {
    return spendsMatch(w.inputs, w.sk, p.nulls, p.grabs, p.type_t, p.root_c, p.nonce_g);
}

CheckResult checkOutputs(const TransferWitness& w, const TransferPublic& p) {
    return outputsMatch(w.outputs, p.comms, p.type_t);
}

CheckResult checkOutputs(const RevealingWitness& w, const RevealingPublic& p) {
    return outputsMatch(w.outputs, p.comms, p.type_t);
}

CheckResult checkOutputs(const HidingWitness& w, const HidingPublic& p) {
    return outputsMatch(w.outputs, p.comms, p.type_t);
}

CheckResult checkOutputs(const GrabWitness& w, const GrabPublic& p) {
    return outputsMatch(w.outputs, p.comms, p.type_t);
}

CheckResult checkBurn(const TransferWitness& w, const TransferPublic& p) {
    if (hasDuplicates<U256>(w.burn_ids)) return {"burn_ids"};
    if (burnCommitment(w) != p.burn_c) return {"burn_c"};
    return kOk;
}

CheckResult checkMassConservation(const TransferWitness& w) {
    return guarded([&]() -> CheckResult {
        auto in = imagesOf(w.inputs);
        U256 out = addOrThrow(getAmountSum(w.outputs), w.burn_a);
        if (getAmountSum(in) != out) return {"mass_amount"};
        auto outIds = nftIds(w.outputs);
        outIds.insert(outIds.end(), w.burn_ids.begin(), w.burn_ids.end());
        if (!sameMultiset(nftIds(in), outIds)) return {"mass_ids"};
        return kOk;
    });
}

CheckResult checkMassConservation(const GrabWitness& w) {
    TransferWitness shaped;
    shaped.inputs = w.inputs;
    shaped.outputs = w.outputs;
    return checkMassConservation(shaped);
}

CheckResult checkAuditData(const TransferWitness& w, const TransferPublic& p) {
    return auditMatches(w.audit_pk, auditPreimageOf(w), p.audit_acc, p.audit_d);
}

CheckResult checkAuditData(const RevealingWitness& w, const RevealingPublic& p) {
    return auditMatches(w.audit_pk, auditPreimageOf(w, p.outputs), p.audit_acc, p.audit_d);
}

CheckResult checkAuditData(const HidingWitness& w, const HidingPublic& p) {
    return auditMatches(w.audit_pk, auditPreimageOf(w), p.audit_acc, p.audit_d);
}

CheckResult checkClearOutputs(const RevealingPublic& p) {
    for (const auto& o : p.outputs) {
        if (!o.hasValue()) return {"clear_value"};
        if (o.type != p.type_t) return {"clear_type"};
        if (!o.nonce.isZero()) return {"nonce"};
    }
    return kOk;
}

CheckResult checkMassWithClearOutputs(const RevealingWitness& w, const RevealingPublic& p) {
    return guarded([&]() -> CheckResult {
        auto in = imagesOf(w.inputs);
        U256 out = addOrThrow(getAmountSum(w.outputs), getAmountSum(p.outputs));
        if (getAmountSum(in) != out) return {"mass_amount"};
        auto outIds = nftIds(w.outputs);
        auto clearIds = nftIds(p.outputs);
        outIds.insert(outIds.end(), clearIds.begin(), clearIds.end());
        if (!sameMultiset(nftIds(in), outIds)) return {"mass_ids"};
        return kOk;
    });
}

CheckResult checkMassWithClearInputs(const HidingWitness& w, const HidingPublic& p) {
    return guarded([&]() -> CheckResult {
        if (getAmountSum(w.outputs) != p.amount_i) return {"mass_amount"};
        if (!sameMultiset(p.ids_i, nftIds(w.outputs))) return {"mass_ids"};
        return kOk;
    });
}

CheckResult checkGrabInputs(const GrabWitness& w, const GrabPublic& p) {
    auto imgs = imagesOf(w.inputs);
    if (hasDuplicates<TokenPreimage>(imgs)) return {"duplicate_input"};
    if (w.inputs.size() != p.grabs.size()) return {"sizes"};
    if (verifyBinding(w.owner_pk, w.grabber_k) != p.nonce_g) return {"nonce_g"};
    Account owner = accountOf(w.owner_pk);
    for (std::size_t i = 0; i < w.inputs.size(); ++i) {
        const auto& img = w.inputs[i].img;
        if (!img.hasValue()) return {"input_value"};
        if (img.type != p.type_t) return {"input_type"};
        if (img.owner != owner) return {"owner"};
        if (grabToken(img, w.grabber_k) != p.grabs[i]) return {"grabber"};
        if (getRoot(commit(img).value, w.inputs[i].path) != p.root_c) return {"root_c"};
    }
    return kOk;
}

CheckResult checkStatement(const MintWitness& w, const MintPublic& p) { return checkMint(w, p); }

CheckResult checkStatement(const TransferWitness& w, const TransferPublic& p) {
    if (w.inputs.empty()) return {"no_inputs"};
    if (auto r = checkInputs(w, p); !r) return r;
    if (auto r = checkOutputs(w, p); !r) return r;
    if (auto r = checkMassConservation(w); !r) return r;
    if (auto r = checkBurn(w, p); !r) return r;
    return checkAuditData(w, p);
}

CheckResult checkStatement(const RevealingWitness& w, const RevealingPublic& p) {
    if (w.inputs.empty()) return {"no_inputs"};
    if (auto r = checkInputs(w, p); !r) return r;
    if (auto r = checkOutputs(w, p); !r) return r;
    if (auto r = checkClearOutputs(p); !r) return r;
    if (auto r = checkMassWithClearOutputs(w, p); !r) return r;
    return checkAuditData(w, p);
}

CheckResult checkStatement(const HidingWitness& w, const HidingPublic& p) {
    if (p.amount_i.isZero() && p.ids_i.empty()) return {"no_inputs"};
    if (hasDuplicates<U256>(p.ids_i)) return {"duplicate_id"};
    if (!p.acc_i.isZero()) {
        if (!w.sk) return {"acc_i"};
        auto acc = accountIfValid(*w.sk);
        if (!acc || *acc != p.acc_i) return {"acc_i"};
    }
    if (auto r = checkOutputs(w, p); !r) return r;
    if (auto r = checkMassWithClearInputs(w, p); !r) return r;
    return checkAuditData(w, p);
}

CheckResult checkStatement(const GrabWitness& w, const GrabPublic& p) {
    if (w.inputs.empty()) return {"no_inputs"};
    auto auth = accountIfValid(w.auth_sk);
    if (!auth || *auth != p.auth_acc) return {"auth_acc"};
    if (auto r = checkGrabInputs(w, p); !r) return r;
    if (auto r = checkOutputs(w, p); !r) return r;
    return checkMassConservation(w);
}

CheckResult checkStatement(const DvpWitness& w, const DvpPublic& p) {
    if (w.delivery_w.empty() || deliveryHash(w.delivery_w) != p.delivery) return {"delivery"};
    if (witnessHash(w) != p.dvp_bind) return {"dvp_bind"};
    const auto& pay = p.payment.pub;
    if (!checkStatement(w.payment_w, pay)) return {"payment"};
    // The delivery set names both sides of the swap: tokens of the paid type
    // must be exactly what this payment produces, and the set must contain
    // something of the type this leg expects.
    const U256& paid = pay.pub.type_t;
    auto produced = pay.pub.comms;
    std::sort(produced.begin(), produced.end());
    bool expects = false;
    for (const auto& t : w.delivery_w) {
        if (t.type == p.type_d) expects = true;
        if (t.type != p.type_d && t.type != paid) return {"delivery_type"};
        if (t.type == paid && t.type != p.type_d &&
            !std::binary_search(produced.begin(), produced.end(), commit(t))) {
            return {"delivery_payment"};
        }
    }
    if (!expects) return {"delivery_type"};
    return kOk;
}

}  // namespace zkt

#pragma once

#include <span>
#include <string_view>

#include "zkt/circuits/builders.hpp"
#include "zkt/circuits/types.hpp"

namespace zkt {

/// Outcome of a circuit predicate: empty on success, otherwise the name of
/// the first constraint that failed.
struct CheckResult {
    std::string_view failure;
    explicit operator bool() const noexcept { return failure.empty(); }
};

/// Checked sum of amounts. Throws Overflow.
U256 getAmountSum(std::span<const TokenPreimage> imgs);

CheckResult checkMint(const MintWitness& w, const MintPublic& p);

CheckResult checkInputs(const TransferWitness& w, const TransferPublic& p);
CheckResult checkInputs(const RevealingWitness& w, const RevealingPublic& p);
CheckResult checkOutputs(const TransferWitness& w, const TransferPublic& p);
CheckResult checkOutputs(const RevealingWitness& w, const RevealingPublic& p);
CheckResult checkOutputs(const HidingWitness& w, const HidingPublic& p);
CheckResult checkOutputs(const GrabWitness& w, const GrabPublic& p);
CheckResult checkBurn(const TransferWitness& w, const TransferPublic& p);
CheckResult checkMassConservation(const TransferWitness& w);
/// Same rule with nothing burned.
CheckResult checkMassConservation(const GrabWitness& w);
CheckResult checkAuditData(const TransferWitness& w, const TransferPublic& p);
CheckResult checkAuditData(const RevealingWitness& w, const RevealingPublic& p);
CheckResult checkAuditData(const HidingWitness& w, const HidingPublic& p);
CheckResult checkClearOutputs(const RevealingPublic& p);
CheckResult checkMassWithClearOutputs(const RevealingWitness& w, const RevealingPublic& p);
CheckResult checkMassWithClearInputs(const HidingWitness& w, const HidingPublic& p);
CheckResult checkGrabInputs(const GrabWitness& w, const GrabPublic& p);

template <class W, class PI>
CheckResult checkDelegate(const W& w, const Delegated<PI>& p) {
    if (p.del_b != delegateBinding(p.del_add, witnessHash(w))) return {"delegate"};
    return {};
}

// Whole-circuit predicates, one per circuit.
CheckResult checkStatement(const MintWitness& w, const MintPublic& p);
CheckResult checkStatement(const TransferWitness& w, const TransferPublic& p);
CheckResult checkStatement(const RevealingWitness& w, const RevealingPublic& p);
CheckResult checkStatement(const HidingWitness& w, const HidingPublic& p);
CheckResult checkStatement(const GrabWitness& w, const GrabPublic& p);
CheckResult checkStatement(const DvpWitness& w, const DvpPublic& p);

template <class W, class PI>
CheckResult checkStatement(const W& w, const Delegated<PI>& p) {
    if (auto r = checkDelegate(w, p); !r) return r;
    return checkStatement(w, p.pub);
}

}  // namespace zkt

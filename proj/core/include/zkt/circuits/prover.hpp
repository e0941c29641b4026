#pragma once

#include <string>
#include <string_view>

#include "zkt/circuits/checks.hpp"
#include "zkt/circuits/encoding.hpp"
#include "zkt/circuits/proof_system.hpp"
#include "zkt/error.hpp"

namespace zkt {

/// Circuit id for each public-input type.
template <class PI>
struct CircuitOf;
template <> struct CircuitOf<MintPublic> { static constexpr std::string_view id = circuit::kMint; };
template <> struct CircuitOf<TransferPublic> { static constexpr std::string_view id = circuit::kTransfer; };
template <> struct CircuitOf<RevealingPublic> { static constexpr std::string_view id = circuit::kRevealing; };
template <> struct CircuitOf<HidingPublic> { static constexpr std::string_view id = circuit::kHiding; };
template <> struct CircuitOf<GrabPublic> { static constexpr std::string_view id = circuit::kGrab; };
template <> struct CircuitOf<Delegated<MintPublic>> { static constexpr std::string_view id = circuit::kDelMint; };
template <> struct CircuitOf<Delegated<TransferPublic>> { static constexpr std::string_view id = circuit::kDelTransfer; };
template <> struct CircuitOf<Delegated<RevealingPublic>> { static constexpr std::string_view id = circuit::kDelRevealing; };
template <> struct CircuitOf<Delegated<HidingPublic>> { static constexpr std::string_view id = circuit::kDelHiding; };
template <> struct CircuitOf<DvpPublic> { static constexpr std::string_view id = circuit::kDvp; };

/// Checks the circuit predicate and, if it holds, asks the backend for a
/// proof. Throws ConstraintViolation naming the failed constraint.
template <class W, class PI>
Proof prove(const ProofSystem& sys, const W& w, const PI& pub) {
    if (auto r = checkStatement(w, pub); !r) throw Error(Errc::ConstraintViolation, std::string(r.failure));
    return sys.prove(CircuitOf<PI>::id, canonicalBytes(pub), canonicalBytes(w));
}

template <class W, class PI>
Transaction<PI> proveTx(const ProofSystem& sys, const W& w, PI pub) {
    Proof p = prove(sys, w, pub);
    return Transaction<PI>{std::move(pub), std::move(p)};
}

template <class PI>
bool verify(const ProofSystem& sys, const Proof& proof, const PI& pub) {
    return sys.verify(CircuitOf<PI>::id, proof, canonicalBytes(pub));
}

template <class PI>
bool verify(const ProofSystem& sys, const Transaction<PI>& tx) {
    return verify(sys, tx.proof, tx.pub);
}

// Named entry points, one per circuit.
inline Proof proveMint(const ProofSystem& s, const MintWitness& w, const MintPublic& p) { return prove(s, w, p); }
inline Proof proveTransfer(const ProofSystem& s, const TransferWitness& w, const TransferPublic& p) { return prove(s, w, p); }
inline Proof proveRevealingTransfer(const ProofSystem& s, const RevealingWitness& w, const RevealingPublic& p) { return prove(s, w, p); }
inline Proof proveHidingTransfer(const ProofSystem& s, const HidingWitness& w, const HidingPublic& p) { return prove(s, w, p); }
inline Proof proveGrabber(const ProofSystem& s, const GrabWitness& w, const GrabPublic& p) { return prove(s, w, p); }
inline Proof proveDelegatedMint(const ProofSystem& s, const MintWitness& w, const Delegated<MintPublic>& p) { return prove(s, w, p); }
inline Proof proveDelegatedTransfer(const ProofSystem& s, const TransferWitness& w, const Delegated<TransferPublic>& p) { return prove(s, w, p); }
inline Proof proveDelRevTransfer(const ProofSystem& s, const RevealingWitness& w, const Delegated<RevealingPublic>& p) { return prove(s, w, p); }
inline Proof proveDelHidTransfer(const ProofSystem& s, const HidingWitness& w, const Delegated<HidingPublic>& p) { return prove(s, w, p); }
inline Proof proveDVP(const ProofSystem& s, const DvpWitness& w, const DvpPublic& p) { return prove(s, w, p); }

}  // namespace zkt

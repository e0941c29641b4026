#pragma once

#include <optional>
#include <span>

#include "zkt/circuits/encoding.hpp"
#include "zkt/circuits/types.hpp"

namespace zkt {

// Digests shared by the circuit predicates and honest provers.

/// Leaf of the hidden-issuer tree for an issuer account.
Digest issuerLeaf(const Account& acc);

/// burn_a (if nonzero) then burn_ids, bound to the whole witness.
Digest burnCommitment(const TransferWitness& w);

Digest deliveryHash(std::span<const TokenPreimage> tokens);

Digest delegateBinding(const Address& del_add, const Digest& witness_hash);

/// Serialized SealedBox of the audit preimage under the auditor's key.
Bytes sealAudit(const PublicKey& audit_pk, const AuditPreimage& a);

AuditPreimage auditPreimageOf(const TransferWitness& w);
AuditPreimage auditPreimageOf(const RevealingWitness& w, std::span<const TokenPreimage> clear_outputs);
AuditPreimage auditPreimageOf(const HidingWitness& w);

std::vector<TokenCommitment> commitAll(std::span<const TokenPreimage> tokens);

// Honest public-input construction. These never fail; whether the result
// satisfies its circuit is decided by the prover.

MintPublic buildMintPublic(const MintWitness& w, const U256& type_t, std::optional<Digest> root_i = {});

TransferPublic buildTransferPublic(const TransferWitness& w, const U256& type_t, const Digest& root_c,
                                   const U256& nonce_g);

RevealingPublic buildRevealingPublic(const RevealingWitness& w, std::vector<TokenPreimage> clear_outputs,
                                     const U256& type_t, const Digest& root_c, const U256& nonce_g);

HidingPublic buildHidingPublic(const HidingWitness& w, const U256& amount_i, std::vector<U256> ids_i,
                               const Account& acc_i, const U256& type_t);

GrabPublic buildGrabPublic(const GrabWitness& w, const U256& type_t, const Digest& root_c,
                           const U256& nonce_g);

template <class W, class PI>
Delegated<PI> delegate(PI pub, const W& w, const Address& del_add) {
    return Delegated<PI>{std::move(pub), del_add, delegateBinding(del_add, witnessHash(w))};
}

DvpPublic buildDvpPublic(const DvpWitness& w, DelegatedTransferTx payment, const U256& type_d);

}  // namespace zkt

#pragma once

#include <string_view>

#include "zkt/crypto/digest.hpp"

namespace zkt {

/// Hash-based one-way map standing in for a curve keypair.
/// Throws Error(ZeroKey) for sk == 0.
PublicKey derivePublicKey(const SecretKey& sk);

/// hash256(derivePublicKey(sk)). Throws Error(ZeroKey).
Account getAccount(const SecretKey& sk);

/// hash256 of the public key bytes; the account any pk holder can compute.
Account accountOf(const PublicKey& pk);

/// Per-contract grabber key: the contract's grabber nonce masked with a pad
/// derived from the owner's key. Throws Error(ZeroKey).
GrabberKey createGrabberKey(const SecretKey& sk, const U256& nonce_g);

/// Recovers the nonce from a grabber key. Returns an unrelated value when pk
/// does not belong to the key's creator; callers compare.
U256 verifyBinding(const PublicKey& pk, const GrabberKey& gk);

/// Deterministic caller address for a named actor.
Address addressFromName(std::string_view name);

}  // namespace zkt

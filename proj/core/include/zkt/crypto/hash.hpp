#pragma once

#include <span>
#include <string_view>

#include "zkt/crypto/digest.hpp"

namespace zkt {

/// Domain-separation tags. Each hashed structure gets its own prefix so a
/// digest of one kind can never be replayed as another.
namespace domain {
inline constexpr std::string_view kCommitment = "zkt/commitment";
inline constexpr std::string_view kCommitmentPayload = "zkt/commitment-payload";
inline constexpr std::string_view kMerkleNode = "zkt/merkle-node";
inline constexpr std::string_view kPublicKey = "zkt/public-key";
inline constexpr std::string_view kGrabberKey = "zkt/grabber-key";
inline constexpr std::string_view kSealKey = "zkt/seal-key";
inline constexpr std::string_view kSealIv = "zkt/seal-iv";
inline constexpr std::string_view kSealMac = "zkt/seal-mac";
inline constexpr std::string_view kSealRecipient = "zkt/seal-recipient";
inline constexpr std::string_view kBurn = "zkt/burn";
inline constexpr std::string_view kWitness = "zkt/witness";
inline constexpr std::string_view kDelegate = "zkt/delegate";
inline constexpr std::string_view kDelivery = "zkt/delivery";
inline constexpr std::string_view kProof = "zkt/proof";
inline constexpr std::string_view kAddress = "zkt/address";
}  // namespace domain

/// Plain SHA-256.
Digest hash256(std::span<const std::uint8_t> data);

/// SHA-256 over (length-prefixed tag || data).
Digest taggedHash(std::string_view tag, std::span<const std::uint8_t> data);

}  // namespace zkt

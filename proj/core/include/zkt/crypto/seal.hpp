#pragma once

#include <span>

#include "zkt/crypto/digest.hpp"

namespace zkt {

/// Deterministic public-key box used for audit data.
/// ciphertext layout: iv (16) || ChaCha20 stream ciphertext || mac (32).
struct SealedBox {
    Digest recipient_tag;
    Bytes ciphertext;
    auto operator<=>(const SealedBox&) const = default;
};

/// Same (pk, data) always yields the same box, so a circuit can recompute it
/// and compare bit-exactly.
SealedBox sealToKey(const PublicKey& pk, std::span<const std::uint8_t> data);

/// Throws WrongKey if sk does not match the recipient or the box was altered.
Bytes openWithKey(const SecretKey& sk, const SealedBox& box);

Bytes serializeSealedBox(const SealedBox& box);
/// Throws ParseError.
SealedBox parseSealedBox(std::span<const std::uint8_t> bytes);

}  // namespace zkt

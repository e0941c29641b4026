#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zkt/crypto/u256.hpp"

namespace zkt {

using Bytes = std::vector<std::uint8_t>;

std::string toHex(std::span<const std::uint8_t> bytes);
/// Bare hex (no prefix), even length. nullopt on malformed input.
std::optional<Bytes> bytesFromHex(std::string_view hex);

/// A 256-bit hash output. Equality is bitwise.
struct Digest {
    std::array<std::uint8_t, 32> bytes{};

    static std::optional<Digest> fromHex(std::string_view hex);
    static Digest fromU256(const U256& v) noexcept { return Digest{v.toBigEndian()}; }

    std::string hex() const { return toHex(bytes); }
    U256 toU256() const noexcept { return U256::fromBigEndian(bytes); }
    bool isZero() const noexcept;

    auto operator<=>(const Digest&) const = default;
};

/// Strongly typed wrapper so a nullifier can never be passed where a
/// commitment is expected.
template <class Tag>
struct DigestOf {
    Digest value;
    auto operator<=>(const DigestOf&) const = default;
};

/// Strongly typed 256-bit integer wrapper (accounts, keys, addresses).
template <class Tag>
struct WordOf {
    U256 value;
    constexpr bool isZero() const noexcept { return value.isZero(); }
    auto operator<=>(const WordOf&) const = default;
};

using SecretKey = WordOf<struct SecretKeyTag>;
using Account = WordOf<struct AccountTag>;
using GrabberKey = WordOf<struct GrabberKeyTag>;
/// Caller identity on the simulated chain (msg.sender).
using Address = WordOf<struct AddressTag>;

/// Public key bytes produced by derivePublicKey.
struct PublicKey {
    Bytes bytes;
    auto operator<=>(const PublicKey&) const = default;
};

struct DigestHash {
    std::size_t operator()(const Digest& d) const noexcept {
        std::size_t h;
        std::memcpy(&h, d.bytes.data(), sizeof h);
        return h;
    }
};

}  // namespace zkt

template <>
struct std::hash<zkt::Digest> : zkt::DigestHash {};

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace zkt {

/// 256-bit unsigned integer. Only the operations the ledger actually needs:
/// checked add/sub, comparison, xor and big-endian byte conversion.
class U256 {
public:
    constexpr U256() noexcept = default;
    constexpr U256(std::uint64_t v) noexcept : limbs_{v, 0, 0, 0} {}  // NOLINT(implicit)

    static U256 fromBigEndian(std::span<const std::uint8_t, 32> bytes) noexcept;
    std::array<std::uint8_t, 32> toBigEndian() const noexcept;

    /// Accepts "0x"-prefixed or bare hex, up to 64 digits.
    static std::optional<U256> fromHex(std::string_view hex) noexcept;
    /// Accepts a decimal literal; nullopt on overflow or junk.
    static std::optional<U256> fromDecimal(std::string_view dec) noexcept;
    /// Minimal lowercase "0x..." form; zero is "0x0".
    std::string toHex() const;
    std::string toDecimal() const;

    constexpr bool isZero() const noexcept {
        return (limbs_[0] | limbs_[1] | limbs_[2] | limbs_[3]) == 0;
    }
    /// True if the value fits in 64 bits.
    constexpr bool fitsU64() const noexcept { return (limbs_[1] | limbs_[2] | limbs_[3]) == 0; }
    constexpr std::uint64_t low64() const noexcept { return limbs_[0]; }
    constexpr std::uint64_t limb(std::size_t i) const noexcept { return limbs_[i]; }

    constexpr std::strong_ordering operator<=>(const U256& o) const noexcept {
        for (int i = 3; i >= 0; --i) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
        }
        return std::strong_ordering::equal;
    }
    constexpr bool operator==(const U256&) const noexcept = default;

    friend constexpr U256 operator^(U256 a, const U256& b) noexcept {
        for (int i = 0; i < 4; ++i) a.limbs_[i] ^= b.limbs_[i];
        return a;
    }

    /// Wrapping-free addition: nullopt when the sum exceeds 2^256 - 1.
    static std::optional<U256> checkedAdd(const U256& a, const U256& b) noexcept;
    /// nullopt when b > a.
    static std::optional<U256> checkedSub(const U256& a, const U256& b) noexcept;

    static constexpr U256 max() noexcept {
        U256 r;
        r.limbs_ = {~0ULL, ~0ULL, ~0ULL, ~0ULL};
        return r;
    }

private:
    std::array<std::uint64_t, 4> limbs_{};  // little-endian limb order
};

/// checkedAdd that throws Error(Errc::Overflow).
U256 addOrThrow(const U256& a, const U256& b);
/// checkedSub that throws Error(Errc::Overflow).
U256 subOrThrow(const U256& a, const U256& b);

}  // namespace zkt

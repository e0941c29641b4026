#include "zkt/crypto/u256.hpp"

#include <algorithm>

#include "zkt/error.hpp"

namespace zkt {
namespace {

int hexValue(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// r = r * m + add, returns false on overflow.
bool mulAddSmall(U256& r, std::uint32_t m, std::uint32_t add) noexcept {
    std::array<std::uint8_t, 32> be = r.toBigEndian();
    std::uint32_t carry = add;
    for (int i = 31; i >= 0; --i) {
        std::uint32_t v = static_cast<std::uint32_t>(be[i]) * m + carry;
        be[i] = static_cast<std::uint8_t>(v & 0xff);
        carry = v >> 8;
    }
    if (carry != 0) return false;
    r = U256::fromBigEndian(be);
    return true;
}

}  // namespace

U256 U256::fromBigEndian(std::span<const std::uint8_t, 32> bytes) noexcept {
    U256 r;
    for (int limb = 0; limb < 4; ++limb) {
        std::uint64_t v = 0;
        for (int b = 0; b < 8; ++b) {
            v = (v << 8) | bytes[static_cast<std::size_t>((3 - limb) * 8 + b)];
        }
        r.limbs_[static_cast<std::size_t>(limb)] = v;
    }
    return r;
}

std::array<std::uint8_t, 32> U256::toBigEndian() const noexcept {
    std::array<std::uint8_t, 32> out{};
    for (int limb = 0; limb < 4; ++limb) {
        std::uint64_t v = limbs_[static_cast<std::size_t>(limb)];
        for (int b = 7; b >= 0; --b) {
            out[static_cast<std::size_t>((3 - limb) * 8 + b)] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
    }
    return out;
}

std::optional<U256> U256::fromHex(std::string_view hex) noexcept {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty() || hex.size() > 64) return std::nullopt;
    std::array<std::uint8_t, 32> be{};
    std::size_t nibble = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
        int v = hexValue(*it);
        if (v < 0) return std::nullopt;
        std::size_t byte = 31 - nibble / 2;
        be[byte] |= static_cast<std::uint8_t>(nibble % 2 == 0 ? v : v << 4);
    }
    return fromBigEndian(be);
}

std::optional<U256> U256::fromDecimal(std::string_view dec) noexcept {
    if (dec.empty()) return std::nullopt;
    U256 r;
    for (char c : dec) {
        if (c < '0' || c > '9') return std::nullopt;
        if (!mulAddSmall(r, 10, static_cast<std::uint32_t>(c - '0'))) return std::nullopt;
    }
    return r;
}

std::string U256::toHex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    auto be = toBigEndian();
    std::string s;
    s.reserve(64);
    for (auto b : be) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0xf]);
    }
    auto first = s.find_first_not_of('0');
    return "0x" + (first == std::string::npos ? std::string("0") : s.substr(first));
}

std::string U256::toDecimal() const {
    if (isZero()) return "0";
    // Repeated division by 10 on the big-endian byte form.
    auto be = toBigEndian();
    std::string digits;
    while (std::any_of(be.begin(), be.end(), [](std::uint8_t b) { return b != 0; })) {
        std::uint32_t rem = 0;
        for (auto& b : be) {
            std::uint32_t cur = (rem << 8) | b;
            b = static_cast<std::uint8_t>(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(static_cast<char>('0' + rem));
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<U256> U256::checkedAdd(const U256& a, const U256& b) noexcept {
    U256 r;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t s = a.limbs_[i] + b.limbs_[i];
        std::uint64_t c1 = s < a.limbs_[i] ? 1 : 0;
        std::uint64_t s2 = s + carry;
        std::uint64_t c2 = s2 < s ? 1 : 0;
        r.limbs_[i] = s2;
        carry = c1 | c2;
    }
    if (carry != 0) return std::nullopt;
    return r;
}

std::optional<U256> U256::checkedSub(const U256& a, const U256& b) noexcept {
    if (b > a) return std::nullopt;
    U256 r;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t d = a.limbs_[i] - b.limbs_[i];
        std::uint64_t b1 = a.limbs_[i] < b.limbs_[i] ? 1 : 0;
        std::uint64_t d2 = d - borrow;
        std::uint64_t b2 = d < borrow ? 1 : 0;
        r.limbs_[i] = d2;
        borrow = b1 | b2;
    }
    return r;
}

U256 addOrThrow(const U256& a, const U256& b) {
    auto r = U256::checkedAdd(a, b);
    if (!r) throw Error(Errc::Overflow, "256-bit addition overflow");
    return *r;
}

U256 subOrThrow(const U256& a, const U256& b) {
    auto r = U256::checkedSub(a, b);
    if (!r) throw Error(Errc::Overflow, "256-bit subtraction underflow");
    return *r;
}

}  // namespace zkt

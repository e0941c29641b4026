#include "zkt/crypto/encoding.hpp"

#include "zkt/error.hpp"

namespace zkt {

Encoder& Encoder::word(const U256& v) {
    auto be = v.toBigEndian();
    buf_.insert(buf_.end(), be.begin(), be.end());
    return *this;
}

Encoder& Encoder::digest(const Digest& d) {
    buf_.insert(buf_.end(), d.bytes.begin(), d.bytes.end());
    return *this;
}

Encoder& Encoder::bytes(std::span<const std::uint8_t> b) {
    word(static_cast<std::uint64_t>(b.size()));
    return raw(b);
}

Encoder& Encoder::text(std::string_view s) {
    return bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

Encoder& Encoder::raw(std::span<const std::uint8_t> b) {
    buf_.insert(buf_.end(), b.begin(), b.end());
    return *this;
}

std::span<const std::uint8_t> Decoder::take(std::size_t n) {
    if (data_.size() - pos_ < n) throw Error(Errc::ParseError, "truncated encoding");
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
}

U256 Decoder::word() {
    return U256::fromBigEndian(take(32).first<32>());
}

std::uint64_t Decoder::u64() {
    U256 v = word();
    if (!v.fitsU64()) throw Error(Errc::ParseError, "length word out of range");
    return v.low64();
}

std::size_t Decoder::count(std::size_t min_item_size) {
    std::uint64_t n = u64();
    std::size_t left = data_.size() - pos_;
    if (min_item_size > 0 && n > left / min_item_size) {
        throw Error(Errc::ParseError, "sequence count exceeds input");
    }
    return static_cast<std::size_t>(n);
}

Digest Decoder::digest() {
    Digest d;
    auto s = take(32);
    std::copy(s.begin(), s.end(), d.bytes.begin());
    return d;
}

bool Decoder::flag() {
    U256 v = word();
    if (v == U256(1)) return true;
    if (v.isZero()) return false;
    throw Error(Errc::ParseError, "flag word is neither 0 nor 1");
}

Bytes Decoder::bytes() {
    std::size_t n = count(1);
    auto s = take(n);
    return Bytes(s.begin(), s.end());
}

std::string Decoder::text() {
    Bytes b = bytes();
    return std::string(b.begin(), b.end());
}

void Decoder::finish() const {
    if (!done()) throw Error(Errc::ParseError, "trailing bytes after encoding");
}

}  // namespace zkt

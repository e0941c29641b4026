#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "zkt/crypto/digest.hpp"

namespace zkt {

/// Canonical tuple encoding fed to every hash: each scalar is a 32-byte
/// big-endian word, byte strings are a length word followed by raw bytes,
/// sequences are a count word followed by the items, optionals are a
/// presence word followed by the value when present.
class Encoder {
public:
    Encoder& word(const U256& v);
    Encoder& word(std::uint64_t v) { return word(U256(v)); }
    Encoder& digest(const Digest& d);
    Encoder& flag(bool b) { return word(b ? 1u : 0u); }
    Encoder& bytes(std::span<const std::uint8_t> b);
    Encoder& text(std::string_view s);
    /// Appends without a length prefix. Only for composing already-encoded
    /// fragments.
    Encoder& raw(std::span<const std::uint8_t> b);

    template <class Tag>
    Encoder& word(const WordOf<Tag>& w) { return word(w.value); }
    template <class Tag>
    Encoder& digest(const DigestOf<Tag>& d) { return digest(d.value); }

    const Bytes& out() const& noexcept { return buf_; }
    Bytes out() && noexcept { return std::move(buf_); }

private:
    Bytes buf_;
};

/// Inverse of Encoder. Every read throws Error(ParseError) on truncated or
/// out-of-range input.
class Decoder {
public:
    explicit Decoder(std::span<const std::uint8_t> data) : data_(data) {}

    U256 word();
    std::uint64_t u64();
    /// Count word bounded by the bytes left, so corrupt input cannot request
    /// a huge allocation.
    std::size_t count(std::size_t min_item_size);
    Digest digest();
    bool flag();
    Bytes bytes();
    std::string text();

    bool done() const noexcept { return pos_ == data_.size(); }
    /// Throws ParseError unless every byte was consumed.
    void finish() const;

private:
    std::span<const std::uint8_t> take(std::size_t n);

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace zkt

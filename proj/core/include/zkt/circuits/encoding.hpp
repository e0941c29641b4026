#pragma once

#include "zkt/circuits/types.hpp"
#include "zkt/crypto/encoding.hpp"

namespace zkt {

// Canonical encodings of every circuit structure, fields in declaration
// order. Public-input encodings feed proof bindings; witness encodings feed
// witnessHash.

void encode(Encoder& e, const MerklePath& p);
void encode(Encoder& e, const ImgPath& ip);
void encode(Encoder& e, const MintWitness& w);
void encode(Encoder& e, const MintPublic& p);
void encode(Encoder& e, const TransferWitness& w);
void encode(Encoder& e, const TransferPublic& p);
void encode(Encoder& e, const RevealingWitness& w);
void encode(Encoder& e, const RevealingPublic& p);
void encode(Encoder& e, const HidingWitness& w);
void encode(Encoder& e, const HidingPublic& p);
void encode(Encoder& e, const GrabWitness& w);
void encode(Encoder& e, const GrabPublic& p);
void encode(Encoder& e, const Proof& p);
void encode(Encoder& e, const DvpWitness& w);
void encode(Encoder& e, const DvpPublic& p);
void encode(Encoder& e, const AuditPreimage& a);

template <class PI>
void encode(Encoder& e, const Delegated<PI>& d) {
    encode(e, d.pub);
    e.word(d.del_add).digest(d.del_b);
}

template <class PI>
void encode(Encoder& e, const Transaction<PI>& t) {
    encode(e, t.pub);
    encode(e, t.proof);
}

template <class T>
Bytes canonicalBytes(const T& v) {
    Encoder e;
    encode(e, v);
    return std::move(e).out();
}

Digest witnessHashOfBytes(std::span<const std::uint8_t> encoded);

/// Domain-tagged hash of a witness's canonical encoding.
template <class W>
Digest witnessHash(const W& w) {
    return witnessHashOfBytes(canonicalBytes(w));
}

/// Throws ParseError.
AuditPreimage decodeAuditPreimage(std::span<const std::uint8_t> bytes);

}  // namespace zkt

#include "zkt/token/token.hpp"

#include "zkt/crypto/hash.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/error.hpp"

namespace zkt {
namespace {

Digest partialWithOwner(const U256& owner_slot, const TokenPreimage& t) {
    Encoder e;
    e.word(owner_slot).word(t.type).word(t.amount).word(t.id).word(t.nonce);
    return taggedHash(domain::kCommitment, e.out());
}

Digest bindPayload(const Digest& partial, const std::optional<Bytes>& payload) {
    if (!payload) return partial;
    Encoder e;
    e.digest(partial).bytes(*payload);
    return taggedHash(domain::kCommitmentPayload, e.out());
}

Digest commitWithOwner(const U256& owner_slot, const TokenPreimage& t) {
    return bindPayload(partialWithOwner(owner_slot, t), t.payload);
}

}  // namespace

Digest partialCommit(const TokenPreimage& t) { return partialWithOwner(t.owner.value, t); }

TokenCommitment commit(const TokenPreimage& t) {
    return TokenCommitment{commitWithOwner(t.owner.value, t)};
}

TokenNullifier nullify(const TokenPreimage& t, const SecretKey& sk) {
    if (getAccount(sk) != t.owner) throw Error(Errc::NotOwner, "secret key does not own the token");
    return TokenNullifier{commitWithOwner(sk.value, t)};
}

TokenGrabber grabToken(const TokenPreimage& t, const GrabberKey& gk) {
    return TokenGrabber{commitWithOwner(gk.value, t)};
}

NullifierPreimage nullifierPreimageOf(const TokenPreimage& t) {
    return NullifierPreimage{partialCommit(t), t.payload};
}

TokenCommitment recombine(const NullifierPreimage& n) {
    return TokenCommitment{bindPayload(n.partial_hash, n.input_payload)};
}

void encode(Encoder& e, const TokenPreimage& t) {
    e.word(t.owner).word(t.type).word(t.nonce).word(t.amount).word(t.id).flag(t.payload.has_value());
    if (t.payload) e.bytes(*t.payload);
}

void encode(Encoder& e, const std::vector<TokenPreimage>& ts) {
    e.word(static_cast<std::uint64_t>(ts.size()));
    for (const auto& t : ts) encode(e, t);
}

TokenPreimage decodeToken(Decoder& d) {
    TokenPreimage t;
    t.owner = Account{d.word()};
    t.type = d.word();
    t.nonce = d.word();
    t.amount = d.word();
    t.id = d.word();
    if (d.flag()) t.payload = d.bytes();
    return t;
}

std::vector<TokenPreimage> decodeTokens(Decoder& d) {
    std::size_t n = d.count(6 * 32);
    std::vector<TokenPreimage> ts;
    ts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ts.push_back(decodeToken(d));
    return ts;
}

}  // namespace zkt

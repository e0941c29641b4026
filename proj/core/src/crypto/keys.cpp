#include "zkt/crypto/keys.hpp"

#include "zkt/crypto/encoding.hpp"
#include "zkt/crypto/hash.hpp"
#include "zkt/error.hpp"

namespace zkt {
namespace {

void requireNonZero(const SecretKey& sk) {
    if (sk.isZero()) throw Error(Errc::ZeroKey, "secret key is zero");
}

U256 grabberPad(const PublicKey& pk) {
    return taggedHash(domain::kGrabberKey, pk.bytes).toU256();
}

}  // namespace

PublicKey derivePublicKey(const SecretKey& sk) {
    requireNonZero(sk);
    Encoder e;
    e.word(sk);
    Digest d = taggedHash(domain::kPublicKey, e.out());
    return PublicKey{Bytes(d.bytes.begin(), d.bytes.end())};
}

Account getAccount(const SecretKey& sk) {
    return accountOf(derivePublicKey(sk));
}

Account accountOf(const PublicKey& pk) {
    return Account{hash256(pk.bytes).toU256()};
}

GrabberKey createGrabberKey(const SecretKey& sk, const U256& nonce_g) {
    return GrabberKey{nonce_g ^ grabberPad(derivePublicKey(sk))};
}

U256 verifyBinding(const PublicKey& pk, const GrabberKey& gk) {
    return gk.value ^ grabberPad(pk);
}

Address addressFromName(std::string_view name) {
    Encoder e;
    e.text(name);
    return Address{taggedHash(domain::kAddress, e.out()).toU256()};
}

}  // namespace zkt

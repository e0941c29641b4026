#include "zkt/crypto/seal.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "zkt/crypto/encoding.hpp"
#include "zkt/crypto/hash.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/error.hpp"

namespace zkt {
namespace {

constexpr std::size_t kIvSize = 16;
constexpr std::size_t kMacSize = 32;

Bytes chacha20(const Digest& key, std::span<const std::uint8_t> iv,
               std::span<const std::uint8_t> in) {
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(),
                                                                        &EVP_CIPHER_CTX_free);
    Bytes out(in.size());
    int len = 0;
    if (!ctx ||
        EVP_EncryptInit_ex(ctx.get(), EVP_chacha20(), nullptr, key.bytes.data(), iv.data()) != 1 ||
        (!in.empty() &&
         EVP_EncryptUpdate(ctx.get(), out.data(), &len, in.data(), static_cast<int>(in.size())) != 1)) {
        throw std::runtime_error("ChaCha20 context failure");
    }
    return out;
}

Digest sealKey(const PublicKey& pk) { return taggedHash(domain::kSealKey, pk.bytes); }

Digest recipientTag(const PublicKey& pk) { return taggedHash(domain::kSealRecipient, pk.bytes); }

Digest mac(const Digest& key, std::span<const std::uint8_t> iv_and_ct) {
    Encoder e;
    e.digest(key).raw(iv_and_ct);
    return taggedHash(domain::kSealMac, e.out());
}

}  // namespace

SealedBox sealToKey(const PublicKey& pk, std::span<const std::uint8_t> data) {
    Digest key = sealKey(pk);
    Encoder ivIn;
    ivIn.bytes(pk.bytes).bytes(data);
    Digest ivFull = taggedHash(domain::kSealIv, ivIn.out());

    SealedBox box{recipientTag(pk), {}};
    box.ciphertext.assign(ivFull.bytes.begin(), ivFull.bytes.begin() + kIvSize);
    Bytes ct = chacha20(key, std::span(box.ciphertext).first(kIvSize), data);
    box.ciphertext.insert(box.ciphertext.end(), ct.begin(), ct.end());
    Digest tag = mac(key, box.ciphertext);
    box.ciphertext.insert(box.ciphertext.end(), tag.bytes.begin(), tag.bytes.end());
    return box;
}

Bytes openWithKey(const SecretKey& sk, const SealedBox& box) {
    PublicKey pk = derivePublicKey(sk);
    if (recipientTag(pk) != box.recipient_tag) throw Error(Errc::WrongKey, "box sealed to another key");
    if (box.ciphertext.size() < kIvSize + kMacSize) throw Error(Errc::WrongKey, "box too short");
    Digest key = sealKey(pk);
    std::span<const std::uint8_t> all(box.ciphertext);
    auto body = all.first(all.size() - kMacSize);
    Digest expect = mac(key, body);
    if (CRYPTO_memcmp(expect.bytes.data(), all.last(kMacSize).data(), kMacSize) != 0) {
        throw Error(Errc::WrongKey, "authentication tag mismatch");
    }
    return chacha20(key, body.first(kIvSize), body.subspan(kIvSize));
}

Bytes serializeSealedBox(const SealedBox& box) {
    Encoder e;
    e.digest(box.recipient_tag).bytes(box.ciphertext);
    return std::move(e).out();
}

SealedBox parseSealedBox(std::span<const std::uint8_t> bytes) {
    Decoder d(bytes);
    SealedBox box;
    box.recipient_tag = d.digest();
    box.ciphertext = d.bytes();
    d.finish();
    return box;
}

}  // namespace zkt

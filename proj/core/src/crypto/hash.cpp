#include "zkt/crypto/hash.hpp"

#include <openssl/evp.h>
#include <openssl/sha.h>

#include <memory>
#include <stdexcept>

#include "zkt/crypto/encoding.hpp"

namespace zkt {

Digest hash256(std::span<const std::uint8_t> data) {
    Digest d;
    SHA256(data.data(), data.size(), d.bytes.data());
    return d;
}

Digest taggedHash(std::string_view tag, std::span<const std::uint8_t> data) {
    Encoder prefix;
    prefix.text(tag);
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    Digest d;
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), prefix.out().data(), prefix.out().size()) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), d.bytes.data(), &len) != 1) {
        throw std::runtime_error("SHA-256 context failure");
    }
    return d;
}

}  // namespace zkt

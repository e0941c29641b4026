#include "zkt/circuits/proof_system.hpp"

#include <algorithm>
#include <openssl/crypto.h>

#include "zkt/crypto/encoding.hpp"
#include "zkt/crypto/hash.hpp"
#include "zkt/error.hpp"

namespace zkt {

bool circuit::isKnown(std::string_view id) noexcept {
    return std::find(kAll.begin(), kAll.end(), id) != kAll.end();
}

namespace {

void requireKnown(std::string_view id) {
    if (!circuit::isKnown(id)) throw Error(Errc::UnknownCircuit, std::string(id));
}

}  // namespace

ReferenceBackend::ReferenceBackend(std::uint64_t setup_seed) : seed_(setup_seed) {
    Encoder e;
    e.text("setup").word(setup_seed);
    setup_key_ = taggedHash(domain::kProof, e.out());
}

Digest ReferenceBackend::binding(std::string_view circuit_id,
                                 std::span<const std::uint8_t> public_bytes) const {
    Encoder e;
    e.digest(setup_key_).text(circuit_id).bytes(public_bytes).flag(true);
    return taggedHash(domain::kProof, e.out());
}

Proof ReferenceBackend::prove(std::string_view circuit_id, std::span<const std::uint8_t> public_bytes,
                              std::span<const std::uint8_t>) const {
    requireKnown(circuit_id);
    return Proof{std::string(circuit_id), binding(circuit_id, public_bytes)};
}

bool ReferenceBackend::verify(std::string_view circuit_id, const Proof& proof,
                              std::span<const std::uint8_t> public_bytes) const {
    requireKnown(circuit_id);
    if (proof.circuit_id != circuit_id) return false;
    Digest expect = binding(circuit_id, public_bytes);
    return CRYPTO_memcmp(expect.bytes.data(), proof.binding.bytes.data(), expect.bytes.size()) == 0;
}

Bytes serializeProof(const Proof& p) {
    Encoder e;
    e.text(p.circuit_id).digest(p.binding);
    return std::move(e).out();
}

Proof parseProof(std::span<const std::uint8_t> bytes) {
    Decoder d(bytes);
    Proof p;
    p.circuit_id = d.text();
    p.binding = d.digest();
    d.finish();
    return p;
}

}  // namespace zkt

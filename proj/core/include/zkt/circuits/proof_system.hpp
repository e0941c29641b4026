#pragma once

#include <array>
#include <span>
#include <string_view>

#include "zkt/circuits/types.hpp"

namespace zkt {

namespace circuit {
inline constexpr std::string_view kMint = "mint";
inline constexpr std::string_view kTransfer = "transfer";
inline constexpr std::string_view kRevealing = "revealing";
inline constexpr std::string_view kHiding = "hiding";
inline constexpr std::string_view kGrab = "grab";
inline constexpr std::string_view kDelMint = "del_mint";
inline constexpr std::string_view kDelTransfer = "del_transfer";
inline constexpr std::string_view kDelRevealing = "del_revealing";
inline constexpr std::string_view kDelHiding = "del_hiding";
inline constexpr std::string_view kDvp = "dvp";

inline constexpr std::array<std::string_view, 10> kAll{
    kMint, kTransfer, kRevealing, kHiding, kGrab, kDelMint, kDelTransfer, kDelRevealing, kDelHiding, kDvp};

bool isKnown(std::string_view id) noexcept;
}  // namespace circuit

/// Seam between the circuit predicates and whatever produces proofs. prove
/// is only called after the circuit's predicate has been checked.
class ProofSystem {
public:
    virtual ~ProofSystem() = default;

    virtual std::string_view name() const noexcept = 0;

    /// Throws UnknownCircuit.
    virtual Proof prove(std::string_view circuit_id, std::span<const std::uint8_t> public_bytes,
                        std::span<const std::uint8_t> witness_bytes) const = 0;

    /// False on any mismatch. Throws UnknownCircuit for an unregistered id.
    virtual bool verify(std::string_view circuit_id, const Proof& proof,
                        std::span<const std::uint8_t> public_bytes) const = 0;
};

/// Transparent backend: the proof is a keyed hash over the circuit id, the
/// public inputs and a satisfied flag. It binds public inputs but is not
/// zero-knowledge and not succinct in any meaningful sense. The setup key
/// plays the role of a trusted setup shared by prover and verifier.
class ReferenceBackend final : public ProofSystem {
public:
    explicit ReferenceBackend(std::uint64_t setup_seed);

    std::string_view name() const noexcept override { return "reference"; }
    Proof prove(std::string_view circuit_id, std::span<const std::uint8_t> public_bytes,
                std::span<const std::uint8_t> witness_bytes) const override;
    bool verify(std::string_view circuit_id, const Proof& proof,
                std::span<const std::uint8_t> public_bytes) const override;

    std::uint64_t setupSeed() const noexcept { return seed_; }

private:
    Digest binding(std::string_view circuit_id, std::span<const std::uint8_t> public_bytes) const;

    std::uint64_t seed_;
    Digest setup_key_;
};

/// Fixed binary layout: length-prefixed circuit id || 32-byte binding.
Bytes serializeProof(const Proof& p);
/// Throws ParseError.
Proof parseProof(std::span<const std::uint8_t> bytes);

}  // namespace zkt

#pragma once

#include <optional>
#include <vector>

#include "zkt/crypto/digest.hpp"
#include "zkt/crypto/encoding.hpp"

namespace zkt {

/// A private UTXO. Fungible tokens carry amount, NFTs carry id.
struct TokenPreimage {
    Account owner;
    U256 type;
    U256 nonce;
    U256 amount;
    U256 id;
    std::optional<Bytes> payload;

    bool hasValue() const noexcept { return !amount.isZero() || !id.isZero(); }
    auto operator<=>(const TokenPreimage&) const = default;
};

using TokenCommitment = DigestOf<struct CommitmentTag>;
using TokenNullifier = DigestOf<struct NullifierTag>;
using TokenGrabber = DigestOf<struct GrabberTag>;

/// Hash of owner, type, amount, id, nonce; payload excluded.
Digest partialCommit(const TokenPreimage& t);

/// partialCommit, or partialCommit bound with the payload when present.
TokenCommitment commit(const TokenPreimage& t);

/// Commitment with the owner slot replaced by sk. Throws NotOwner unless
/// t.owner == getAccount(sk).
TokenNullifier nullify(const TokenPreimage& t, const SecretKey& sk);

/// Commitment with the owner slot replaced by the grabber key.
TokenGrabber grabToken(const TokenPreimage& t, const GrabberKey& gk);

/// What a payer reveals about a consumed token: enough to rebuild its
/// commitment, not its contents.
struct NullifierPreimage {
    Digest partial_hash;
    std::optional<Bytes> input_payload;
    auto operator<=>(const NullifierPreimage&) const = default;
};

NullifierPreimage nullifierPreimageOf(const TokenPreimage& t);
TokenCommitment recombine(const NullifierPreimage& n);

/// Off-chain envelope sent from payer to payee.
struct TransferPreimage {
    std::vector<TokenPreimage> outputs;
    std::optional<std::vector<NullifierPreimage>> inputs;
    auto operator<=>(const TransferPreimage&) const = default;
};

/// Off-chain envelope sent to the authority when withdrawing.
struct BurnPreimage {
    std::optional<U256> amount;
    std::optional<std::vector<U256>> ids;
    U256 nonce;
    auto operator<=>(const BurnPreimage&) const = default;
};

/// Off-chain envelope exchanged between the two banks of a swap.
struct DvpPreimage {
    std::optional<std::vector<NullifierPreimage>> inputs;
    std::vector<TokenPreimage> outputs;
    std::vector<TokenPreimage> delivery;
    auto operator<=>(const DvpPreimage&) const = default;
};

void encode(Encoder& e, const TokenPreimage& t);
void encode(Encoder& e, const std::vector<TokenPreimage>& ts);
TokenPreimage decodeToken(Decoder& d);
std::vector<TokenPreimage> decodeTokens(Decoder& d);

}  // namespace zkt

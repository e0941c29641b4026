#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zkt/crypto/merkle.hpp"
#include "zkt/token/token.hpp"

namespace zkt {

/// A spent token together with its membership path in the commitment tree.
struct ImgPath {
    TokenPreimage img;
    MerklePath path;
    auto operator<=>(const ImgPath&) const = default;
};

struct MintWitness {
    std::vector<TokenPreimage> outputs;
    std::optional<SecretKey> issuer_sk;  // hidden issuer only
    std::optional<MerklePath> path_i;    // hidden issuer only
    auto operator<=>(const MintWitness&) const = default;
};

struct MintPublic {
    U256 type_t;
    std::vector<TokenCommitment> comms;
    std::optional<Digest> root_i;  // present iff the issuer is hidden
    auto operator<=>(const MintPublic&) const = default;
};

struct TransferWitness {
    std::vector<ImgPath> inputs;
    std::vector<TokenPreimage> outputs;
    SecretKey sk;
    PublicKey audit_pk;
    U256 burn_a;                 // zero when nothing fungible is burned
    std::vector<U256> burn_ids;  // empty when no NFT is burned
    auto operator<=>(const TransferWitness&) const = default;
};

struct TransferPublic {
    std::vector<TokenNullifier> nulls;
    std::vector<TokenGrabber> grabs;
    std::vector<TokenCommitment> comms;
    U256 type_t;
    Digest root_c;
    U256 nonce_g;
    Digest burn_c;
    Account audit_acc;
    Bytes audit_d;  // serialized SealedBox
    auto operator<=>(const TransferPublic&) const = default;
};

struct RevealingWitness {
    std::vector<ImgPath> inputs;
    SecretKey sk;
    std::vector<TokenPreimage> outputs;  // hidden change, may be empty
    PublicKey audit_pk;
    auto operator<=>(const RevealingWitness&) const = default;
};

struct RevealingPublic {
    std::vector<TokenNullifier> nulls;
    std::vector<TokenGrabber> grabs;
    std::vector<TokenCommitment> comms;
    std::vector<TokenPreimage> outputs;  // clear outputs, nonce 0
    U256 type_t;
    Digest root_c;
    U256 nonce_g;
    Bytes audit_d;
    Account audit_acc;
    auto operator<=>(const RevealingPublic&) const = default;
};

struct HidingWitness {
    std::vector<TokenPreimage> outputs;
    std::optional<SecretKey> sk;  // needed only when acc_i is set
    PublicKey audit_pk;
    auto operator<=>(const HidingWitness&) const = default;
};

struct HidingPublic {
    U256 amount_i;
    std::vector<U256> ids_i;
    Account acc_i;  // zero: the calling contract's own balance
    std::vector<TokenCommitment> comms;
    U256 type_t;
    Bytes audit_d;
    Account audit_acc;
    auto operator<=>(const HidingPublic&) const = default;
};

struct GrabWitness {
    std::vector<ImgPath> inputs;
    std::vector<TokenPreimage> outputs;
    SecretKey auth_sk;
    PublicKey owner_pk;
    GrabberKey grabber_k;
    auto operator<=>(const GrabWitness&) const = default;
};

struct GrabPublic {
    std::vector<TokenGrabber> grabs;
    std::vector<TokenCommitment> comms;
    U256 type_t;
    Digest root_c;
    U256 nonce_g;
    Account auth_acc;
    auto operator<=>(const GrabPublic&) const = default;
};

/// Public inputs bound to the one contract address allowed to submit them.
template <class PI>
struct Delegated {
    PI pub;
    Address del_add;
    Digest del_b;
    auto operator<=>(const Delegated&) const = default;
};

struct Proof {
    std::string circuit_id;
    Digest binding;
    auto operator<=>(const Proof&) const = default;
};

template <class PI>
struct Transaction {
    PI pub;
    Proof proof;
    auto operator<=>(const Transaction&) const = default;
};

using MintTx = Transaction<MintPublic>;
using TransferTx = Transaction<TransferPublic>;
using RevealingTx = Transaction<RevealingPublic>;
using HidingTx = Transaction<HidingPublic>;
using GrabTx = Transaction<GrabPublic>;
using DelegatedMintTx = Transaction<Delegated<MintPublic>>;
using DelegatedTransferTx = Transaction<Delegated<TransferPublic>>;
using DelegatedRevealingTx = Transaction<Delegated<RevealingPublic>>;
using DelegatedHidingTx = Transaction<Delegated<HidingPublic>>;

struct DvpWitness {
    TransferWitness payment_w;
    std::vector<TokenPreimage> delivery_w;
    auto operator<=>(const DvpWitness&) const = default;
};

struct DvpPublic {
    DelegatedTransferTx payment;
    Digest delivery;
    U256 type_d;  // token type this leg expects to receive
    Digest dvp_bind;
    auto operator<=>(const DvpPublic&) const = default;
};

using DvpTx = Transaction<DvpPublic>;

/// What the auditor recovers from audit_d.
struct AuditPreimage {
    std::vector<TokenPreimage> inputs;
    std::vector<TokenPreimage> outputs;  // hidden outputs, then clear outputs
    U256 burn_a;
    std::vector<U256> burn_ids;
    auto operator<=>(const AuditPreimage&) const = default;
};

}  // namespace zkt

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "zkt/circuits/proof_system.hpp"
#include "zkt/circuits/types.hpp"
#include "zkt/crypto/merkle.hpp"
#include "zkt/ledger/events.hpp"

namespace zkt {

struct TokenContractConfig {
    U256 type_t;
    Address address;
    Address auth_add;  // authority caller address
    Account auth_acc;  // authority account, checked by grab proofs
    Account audit_acc;
    U256 grab_nonce;
    unsigned tree_depth = CommitmentTree::kDefaultDepth;
};

void to_json(Json& j, const TokenContractConfig& c);
void from_json(const Json& j, TokenContractConfig& c);

/// One token type's contract. Every entry point validates completely before
/// mutating, so a thrown Error leaves the state untouched. Copyable: a copy
/// is a full state snapshot.
class TokenContract {
public:
    TokenContract(TokenContractConfig config, std::shared_ptr<const ProofSystem> verifier);

    const TokenContractConfig& config() const noexcept { return config_; }

    EventList mint(const MintTx& t, const Address& caller);
    EventList transfer(const TransferTx& t);
    EventList revealingTransfer(const RevealingTx& t);
    EventList hidingTransfer(const HidingTx& t, const Address& caller);
    EventList grab(const GrabTx& t, const Address& caller);

    EventList delegatedMint(const DelegatedMintTx& t, const Address& caller);
    EventList delegatedTransfer(const DelegatedTransferTx& t, const Address& caller);
    EventList delegatedRevealingTransfer(const DelegatedRevealingTx& t, const Address& caller);
    EventList delegatedHidingTransfer(const DelegatedHidingTx& t, const Address& caller);

    EventList registerIssuer(const Address& caller, const Address& issuer, bool flag);
    EventList registerHiddenIssuer(const Address& caller, const Account& issuer);
    /// Marks `account` as the clear-balance account of contract `contract`.
    EventList registerContractAccount(const Address& caller, const Address& contract, const Account& account);

    const CommitmentTree& tree() const noexcept { return tree_c_; }
    const CommitmentTree& issuerTree() const noexcept { return tree_i_; }
    bool isIssuer(const Address& a) const;
    bool isNullified(const TokenNullifier& n) const { return nullifiers_.contains(n); }
    bool isGrabbed(const TokenGrabber& g) const { return grabbers_.contains(g); }
    std::size_t nullifierCount() const noexcept { return nullifiers_.size(); }
    std::size_t grabberCount() const noexcept { return grabbers_.size(); }
    U256 balance(const Account& a) const;
    std::multiset<U256> nfts(const Account& a) const;
    const std::map<Account, U256>& balances() const noexcept { return balances_; }
    const std::map<Account, std::multiset<U256>>& nftRegistry() const noexcept { return nfts_; }
    std::optional<Account> contractAccount(const Address& contract) const;
    bool isContractAccount(const Account& a) const;
    std::uint64_t sequence() const noexcept { return sequence_; }

    /// Canonical JSON of the full state.
    Json snapshot() const;
    Digest stateHash() const;

private:
    void requireAuthority(const Address& caller) const;
    void requireProof(bool ok, std::string_view what) const;
    void requireFreshComms(const std::vector<TokenCommitment>& comms) const;
    void requireSpendable(const std::vector<TokenNullifier>& nulls, const std::vector<TokenGrabber>& grabs,
                          const U256& type_t, const Digest& root_c, const U256& nonce_g,
                          const Account& audit_acc) const;
    Account hidingOwner(const HidingPublic& p, const Address& caller) const;

    void validateMint(const MintPublic& p) const;
    void validateTransfer(const TransferPublic& p) const;
    void validateRevealing(const RevealingPublic& p) const;
    void validateHiding(const HidingPublic& p, const Address& caller) const;

    EventList applyMint(const MintPublic& p, const Json& extra);
    EventList applyTransfer(const TransferPublic& p, const Json& extra);
    EventList applyRevealing(const RevealingPublic& p, const Json& extra);
    EventList applyHiding(const HidingPublic& p, const Address& caller, const Json& extra);

    Json appendComms(const std::vector<TokenCommitment>& comms);
    Event emit(std::string kind, Json payload);

    TokenContractConfig config_;
    std::shared_ptr<const ProofSystem> verifier_;
    CommitmentTree tree_c_;
    CommitmentTree tree_i_;
    std::map<Address, bool> issuers_;
    std::set<TokenNullifier> nullifiers_;
    std::set<TokenGrabber> grabbers_;
    std::map<Account, U256> balances_;
    std::map<Account, std::multiset<U256>> nfts_;
    std::map<Address, Account> contract_accounts_;
    std::uint64_t sequence_ = 0;
};

}  // namespace zkt

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "zkt/circuits/proof_system.hpp"
#include "zkt/dvp/dvp_contract.hpp"
#include "zkt/ledger/token_contract.hpp"

namespace zkt {

/// The simulated chain: one proof backend, the token contracts, at most one
/// DvP contract, the global event log and an ordered record of every
/// submitted call (including rejected ones) that replay() can re-execute.
class Network {
public:
    explicit Network(std::uint64_t backend_seed);
    Network(Network&&) noexcept = default;
    Network& operator=(Network&&) noexcept = default;

    const ProofSystem& backend() const noexcept { return *backend_; }
    std::uint64_t backendSeed() const noexcept { return backend_seed_; }

    void deployToken(const TokenContractConfig& config);
    void deployDvp(const Address& self, const Address& deployer);

    EventList registerIssuer(const Address& caller, const U256& type, const Address& issuer, bool flag);
    EventList registerHiddenIssuer(const Address& caller, const U256& type, const Account& issuer);
    EventList registerContractAccount(const Address& caller, const U256& type, const Address& contract,
                                      const Account& account);
    EventList registerTokenContract(const Address& caller, const U256& type);

    EventList mint(const U256& type, const MintTx& t, const Address& caller);
    EventList transfer(const U256& type, const TransferTx& t, const Address& caller);
    EventList revealingTransfer(const U256& type, const RevealingTx& t, const Address& caller);
    EventList hidingTransfer(const U256& type, const HidingTx& t, const Address& caller);
    EventList grab(const U256& type, const GrabTx& t, const Address& caller);
    EventList delegatedMint(const U256& type, const DelegatedMintTx& t, const Address& caller);
    EventList delegatedTransfer(const U256& type, const DelegatedTransferTx& t, const Address& caller);
    EventList delegatedRevealingTransfer(const U256& type, const DelegatedRevealingTx& t, const Address& caller);
    EventList delegatedHidingTransfer(const U256& type, const DelegatedHidingTx& t, const Address& caller);
    EventList dvp(const DvpTx& t, const Address& caller);

    bool hasToken(const U256& type) const { return tokens_.contains(type); }
    /// Throws UnknownTokenType.
    TokenContract& token(const U256& type);
    const TokenContract& token(const U256& type) const;
    const std::map<U256, std::unique_ptr<TokenContract>>& tokens() const noexcept { return tokens_; }
    DvpContract* dvpContract() noexcept { return dvp_.get(); }
    const DvpContract* dvpContract() const noexcept { return dvp_.get(); }

    const std::vector<Event>& events() const noexcept { return events_; }
    /// Recorded calls, each with the outcome it produced ("ok" or an error name).
    const std::vector<Json>& records() const noexcept { return records_; }

    Json snapshot() const;
    Digest stateHash() const;
    Json eventLog() const;
    Json txList() const;

    /// Re-executes a txList() document. Each record must reproduce its
    /// recorded outcome; otherwise throws the actual error (or
    /// ScenarioAssertionFailed) with the record index in the detail.
    static Network replay(const Json& txlist);

private:
    template <class F>
    EventList record(Json rec, F&& apply);
    void applyRecord(const Json& rec);

    std::uint64_t backend_seed_;
    std::shared_ptr<const ProofSystem> backend_;
    std::map<U256, std::unique_ptr<TokenContract>> tokens_;
    std::unique_ptr<DvpContract> dvp_;
    std::vector<Event> events_;
    std::vector<Json> records_;
};

Digest hashJson(const Json& j);

}  // namespace zkt

#pragma once

#include <map>
#include <memory>

#include "zkt/circuits/types.hpp"
#include "zkt/ledger/token_contract.hpp"

namespace zkt {

/// Matches two swap legs by delivery hash and settles both delegated
/// payments in one step, or neither.
class DvpContract {
public:
    DvpContract(Address self, Address deployer, std::shared_ptr<const ProofSystem> verifier);

    const Address& address() const noexcept { return self_; }
    const Address& deployer() const noexcept { return deployer_; }

    /// Token contracts are not owned; they must outlive this object.
    EventList registerTokenContract(const Address& caller, const U256& type, TokenContract* contract);

    /// Stores the leg as pending, or settles it against the pending leg with
    /// the same delivery hash. Events of both inner transfers are returned
    /// after the match event. On InnerTransferFailed every touched contract
    /// and the pending set are as before the call.
    EventList dvp(const DvpTx& t, const Address& caller);

    const std::map<Digest, DvpTx>& pending() const noexcept { return pending_; }
    bool knowsType(const U256& type) const { return contracts_.contains(type); }
    std::uint64_t sequence() const noexcept { return sequence_; }

    Json snapshot() const;

private:
    TokenContract& contractFor(const U256& type) const;
    Event emit(std::string kind, Json payload);

    Address self_;
    Address deployer_;
    std::shared_ptr<const ProofSystem> verifier_;
    std::map<U256, TokenContract*> contracts_;
    std::map<Digest, DvpTx> pending_;
    std::uint64_t sequence_ = 0;
};

}  // namespace zkt

#include "zkt/dvp/dvp_contract.hpp"

#include <optional>

#include "zkt/circuits/json.hpp"
#include "zkt/circuits/prover.hpp"
#include "zkt/error.hpp"

namespace zkt {

DvpContract::DvpContract(Address self, Address deployer, std::shared_ptr<const ProofSystem> verifier)
    : self_(self), deployer_(deployer), verifier_(std::move(verifier)) {}

EventList DvpContract::registerTokenContract(const Address& caller, const U256& type, TokenContract* contract) {
    if (caller != deployer_) throw Error(Errc::NotAuthority, "only the deployer registers token contracts");
    contracts_[type] = contract;
    return {emit("TokenContractRegistered", Json{{"type", type}, {"contract", contract->config().address}})};
}

TokenContract& DvpContract::contractFor(const U256& type) const {
    auto it = contracts_.find(type);
    if (it == contracts_.end()) throw Error(Errc::UnknownTokenType, type.toHex());
    return *it->second;
}

Event DvpContract::emit(std::string kind, Json payload) {
    return Event{std::move(kind), self_, ++sequence_, std::move(payload)};
}

EventList DvpContract::dvp(const DvpTx& t, const Address&) {
    if (!verify(*verifier_, t)) throw Error(Errc::ProofRejected, "dvp proof does not verify");
    contractFor(t.pub.type_d);
    TokenContract& mine = contractFor(t.pub.payment.pub.pub.type_t);

    auto match = pending_.find(t.pub.delivery);
    if (match == pending_.end()) {
        pending_.emplace(t.pub.delivery, t);
        return {emit("DvpPending", Json{{"delivery", t.pub.delivery}, {"type_d", t.pub.type_d}})};
    }

    const DvpTx& other = match->second;
    TokenContract& theirs = contractFor(other.pub.payment.pub.pub.type_t);
    // Copies are full snapshots; restore them if either leg fails.
    TokenContract saveMine = mine;
    std::optional<TokenContract> saveTheirs;
    if (&theirs != &mine) saveTheirs.emplace(theirs);

    EventList inner;
    try {
        for (auto& e : theirs.delegatedTransfer(other.pub.payment, self_)) inner.push_back(std::move(e));
        for (auto& e : mine.delegatedTransfer(t.pub.payment, self_)) inner.push_back(std::move(e));
    } catch (const Error& e) {
        mine = saveMine;
        if (saveTheirs) theirs = *saveTheirs;
        throw Error(Errc::InnerTransferFailed, std::string(e.name()) + ": " + e.detail());
    }

    Json payload{{"delivery", t.pub.delivery},
                 {"legs", Json::array({other.pub.payment.pub.pub.type_t, t.pub.payment.pub.pub.type_t})}};
    pending_.erase(match);
    EventList events;
    events.push_back(emit("DvpMatched", std::move(payload)));
    for (auto& e : inner) events.push_back(std::move(e));
    return events;
}

Json DvpContract::snapshot() const {
    Json contracts = Json::array();
    for (const auto& [type, c] : contracts_) {
        contracts.push_back(Json{{"type", type}, {"contract", c->config().address}});
    }
    Json pending = Json::array();
    for (const auto& [key, tx] : pending_) pending.push_back(Json{{"delivery", key}, {"tx", tx}});
    return Json{{"address", self_},
                {"deployer", deployer_},
                {"contracts", std::move(contracts)},
                {"pending", std::move(pending)},
                {"sequence", sequence_}};
}

}  // namespace zkt

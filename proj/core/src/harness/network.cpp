#include "zkt/harness/network.hpp"

#include "zkt/circuits/json.hpp"
#include "zkt/crypto/hash.hpp"
#include "zkt/error.hpp"

namespace zkt {

Digest hashJson(const Json& j) {
    std::string s = j.dump();
    return hash256({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

Network::Network(std::uint64_t backend_seed)
    : backend_seed_(backend_seed), backend_(std::make_shared<ReferenceBackend>(backend_seed)) {}

template <class F>
EventList Network::record(Json rec, F&& apply) {
    Json entry{{"index", records_.size()}};
    entry.update(rec);
    try {
        EventList evs = apply();
        entry["expect"] = "ok";
        records_.push_back(std::move(entry));
        events_.insert(events_.end(), evs.begin(), evs.end());
        return evs;
    } catch (const Error& e) {
        entry["expect"] = std::string(e.name());
        records_.push_back(std::move(entry));
        throw;
    }
}

TokenContract& Network::token(const U256& type) {
    auto it = tokens_.find(type);
    if (it == tokens_.end()) throw Error(Errc::UnknownTokenType, type.toHex());
    return *it->second;
}

const TokenContract& Network::token(const U256& type) const {
    auto it = tokens_.find(type);
    if (it == tokens_.end()) throw Error(Errc::UnknownTokenType, type.toHex());
    return *it->second;
}

void Network::deployToken(const TokenContractConfig& config) {
    record(Json{{"op", "deploy_token"}, {"config", config}}, [&]() -> EventList {
        if (tokens_.contains(config.type_t)) throw Error(Errc::ParamMismatch, "token type already deployed");
        tokens_.emplace(config.type_t, std::make_unique<TokenContract>(config, backend_));
        return {};
    });
}

void Network::deployDvp(const Address& self, const Address& deployer) {
    record(Json{{"op", "deploy_dvp"}, {"address", self}, {"deployer", deployer}}, [&]() -> EventList {
        if (dvp_) throw Error(Errc::ParamMismatch, "dvp contract already deployed");
        dvp_ = std::make_unique<DvpContract>(self, deployer, backend_);
        return {};
    });
}

EventList Network::registerIssuer(const Address& caller, const U256& type, const Address& issuer, bool flag) {
    return record(Json{{"op", "register_issuer"}, {"caller", caller}, {"type", type}, {"issuer", issuer}, {"flag", flag}},
                  [&] { return token(type).registerIssuer(caller, issuer, flag); });
}

EventList Network::registerHiddenIssuer(const Address& caller, const U256& type, const Account& issuer) {
    return record(Json{{"op", "register_hidden_issuer"}, {"caller", caller}, {"type", type}, {"issuer", issuer}},
                  [&] { return token(type).registerHiddenIssuer(caller, issuer); });
}

EventList Network::registerContractAccount(const Address& caller, const U256& type, const Address& contract,
                                           const Account& account) {
    return record(Json{{"op", "register_contract_account"},
                       {"caller", caller},
                       {"type", type},
                       {"contract", contract},
                       {"account", account}},
                  [&] { return token(type).registerContractAccount(caller, contract, account); });
}

EventList Network::registerTokenContract(const Address& caller, const U256& type) {
    return record(Json{{"op", "register_token_contract"}, {"caller", caller}, {"type", type}}, [&] {
        if (!dvp_) throw Error(Errc::UnknownTokenType, "no dvp contract deployed");
        return dvp_->registerTokenContract(caller, type, &token(type));
    });
}

namespace {

template <class Tx>
Json txRecord(std::string_view op, const Address& caller, const U256& type, const Tx& t) {
    return Json{{"op", op}, {"caller", caller}, {"type", type}, {"tx", t}};
}

template <class Tx>
Tx txOf(const Json& rec) {
    return field(rec, "tx").get<Tx>();
}

}  // namespace

EventList Network::mint(const U256& type, const MintTx& t, const Address& caller) {
    return record(txRecord("mint", caller, type, t), [&] { return token(type).mint(t, caller); });
}

EventList Network::transfer(const U256& type, const TransferTx& t, const Address& caller) {
    return record(txRecord("transfer", caller, type, t), [&] { return token(type).transfer(t); });
}

EventList Network::revealingTransfer(const U256& type, const RevealingTx& t, const Address& caller) {
    return record(txRecord("revealing", caller, type, t), [&] { return token(type).revealingTransfer(t); });
}

EventList Network::hidingTransfer(const U256& type, const HidingTx& t, const Address& caller) {
    return record(txRecord("hiding", caller, type, t), [&] { return token(type).hidingTransfer(t, caller); });
}

EventList Network::grab(const U256& type, const GrabTx& t, const Address& caller) {
    return record(txRecord("grab", caller, type, t), [&] { return token(type).grab(t, caller); });
}

EventList Network::delegatedMint(const U256& type, const DelegatedMintTx& t, const Address& caller) {
    return record(txRecord("del_mint", caller, type, t), [&] { return token(type).delegatedMint(t, caller); });
}

EventList Network::delegatedTransfer(const U256& type, const DelegatedTransferTx& t, const Address& caller) {
    return record(txRecord("del_transfer", caller, type, t),
                  [&] { return token(type).delegatedTransfer(t, caller); });
}

EventList Network::delegatedRevealingTransfer(const U256& type, const DelegatedRevealingTx& t,
                                              const Address& caller) {
    return record(txRecord("del_revealing", caller, type, t),
                  [&] { return token(type).delegatedRevealingTransfer(t, caller); });
}

EventList Network::delegatedHidingTransfer(const U256& type, const DelegatedHidingTx& t, const Address& caller) {
    return record(txRecord("del_hiding", caller, type, t),
                  [&] { return token(type).delegatedHidingTransfer(t, caller); });
}

EventList Network::dvp(const DvpTx& t, const Address& caller) {
    return record(Json{{"op", "dvp"}, {"caller", caller}, {"tx", t}}, [&] {
        if (!dvp_) throw Error(Errc::UnknownTokenType, "no dvp contract deployed");
        return dvp_->dvp(t, caller);
    });
}

Json Network::snapshot() const {
    Json tokens = Json::array();
    for (const auto& [type, c] : tokens_) tokens.push_back(c->snapshot());
    return Json{{"schema_version", kSchemaVersion},
                {"backend", backend_->name()},
                {"tokens", std::move(tokens)},
                {"dvp", dvp_ ? dvp_->snapshot() : Json(nullptr)},
                {"event_count", events_.size()}};
}

Digest Network::stateHash() const { return hashJson(snapshot()); }

Json Network::eventLog() const {
    Json list = Json::array();
    for (const auto& e : events_) list.push_back(e);
    return Json{{"schema_version", kSchemaVersion}, {"events", std::move(list)}};
}

Json Network::txList() const {
    Json list = Json::array();
    for (const auto& r : records_) list.push_back(r);
    return Json{{"schema_version", kSchemaVersion}, {"backend_seed", backend_seed_}, {"records", std::move(list)}};
}

void Network::applyRecord(const Json& rec) {
    const std::string op = field(rec, "op").get<std::string>();
    auto caller = [&] { return field(rec, "caller").get<Address>(); };
    auto type = [&] { return u256FromJson(field(rec, "type")); };

    if (op == "deploy_token") {
        deployToken(field(rec, "config").get<TokenContractConfig>());
    } else if (op == "deploy_dvp") {
        deployDvp(field(rec, "address").get<Address>(), field(rec, "deployer").get<Address>());
    } else if (op == "register_issuer") {
        registerIssuer(caller(), type(), field(rec, "issuer").get<Address>(), field(rec, "flag").get<bool>());
    } else if (op == "register_hidden_issuer") {
        registerHiddenIssuer(caller(), type(), field(rec, "issuer").get<Account>());
    } else if (op == "register_contract_account") {
        registerContractAccount(caller(), type(), field(rec, "contract").get<Address>(),
                                field(rec, "account").get<Account>());
    } else if (op == "register_token_contract") {
        registerTokenContract(caller(), type());
    } else if (op == "mint") {
        mint(type(), txOf<MintTx>(rec), caller());
    } else if (op == "transfer") {
        transfer(type(), txOf<TransferTx>(rec), caller());
    } else if (op == "revealing") {
        revealingTransfer(type(), txOf<RevealingTx>(rec), caller());
    } else if (op == "hiding") {
        hidingTransfer(type(), txOf<HidingTx>(rec), caller());
    } else if (op == "grab") {
        grab(type(), txOf<GrabTx>(rec), caller());
    } else if (op == "del_mint") {
        delegatedMint(type(), txOf<DelegatedMintTx>(rec), caller());
    } else if (op == "del_transfer") {
        delegatedTransfer(type(), txOf<DelegatedTransferTx>(rec), caller());
    } else if (op == "del_revealing") {
        delegatedRevealingTransfer(type(), txOf<DelegatedRevealingTx>(rec), caller());
    } else if (op == "del_hiding") {
        delegatedHidingTransfer(type(), txOf<DelegatedHidingTx>(rec), caller());
    } else if (op == "dvp") {
        dvp(txOf<DvpTx>(rec), caller());
    } else {
        throw Error(Errc::ParseError, "unknown record op '" + op + "'");
    }
}

Network Network::replay(const Json& txlist) {
    Network net(field(txlist, "backend_seed").get<std::uint64_t>());
    const Json& records = field(txlist, "records");
    if (!records.is_array()) throw Error(Errc::ParseError, "records must be an array");
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Json& rec = records[i];
        std::string expect = rec.contains("expect") ? rec["expect"].get<std::string>() : "ok";
        std::string got = "ok";
        std::optional<Error> failure;
        try {
            net.applyRecord(rec);
        } catch (const Error& e) {
            got = std::string(e.name());
            failure = e;
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, "record " + std::to_string(i) + ": " + e.what());
        }
        if (got == expect) continue;
        std::string where = "record " + std::to_string(i);
        if (failure && expect == "ok") throw Error(failure->code(), where + ": " + failure->detail());
        throw Error(Errc::ScenarioAssertionFailed, where + ": expected " + expect + ", got " + got);
    }
    return net;
}

}  // namespace zkt

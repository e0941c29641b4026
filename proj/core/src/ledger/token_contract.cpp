#include "zkt/ledger/token_contract.hpp"

#include <algorithm>

#include "zkt/circuits/builders.hpp"
#include "zkt/circuits/json.hpp"
#include "zkt/circuits/prover.hpp"
#include "zkt/crypto/hash.hpp"
#include "zkt/error.hpp"

namespace zkt {

void to_json(Json& j, const Event& e) {
    j = Json{{"kind", e.kind}, {"contract", e.contract}, {"sequence_no", e.sequence_no}, {"payload", e.payload}};
}

void from_json(const Json& j, Event& e) {
    e.kind = field(j, "kind").get<std::string>();
    e.contract = field(j, "contract").get<Address>();
    e.sequence_no = field(j, "sequence_no").get<std::uint64_t>();
    e.payload = field(j, "payload");
}

void to_json(Json& j, const TokenContractConfig& c) {
    j = Json{{"type_t", c.type_t},       {"address", c.address},       {"auth_add", c.auth_add},
             {"auth_acc", c.auth_acc},   {"audit_acc", c.audit_acc},   {"grab_nonce", c.grab_nonce},
             {"tree_depth", c.tree_depth}};
}

void from_json(const Json& j, TokenContractConfig& c) {
    c.type_t = u256FromJson(field(j, "type_t"));
    c.address = field(j, "address").get<Address>();
    c.auth_add = field(j, "auth_add").get<Address>();
    c.auth_acc = field(j, "auth_acc").get<Account>();
    c.audit_acc = field(j, "audit_acc").get<Account>();
    c.grab_nonce = u256FromJson(field(j, "grab_nonce"));
    c.tree_depth = field(j, "tree_depth").get<unsigned>();
}

namespace {

template <class T>
bool anyRepeated(const std::vector<T>& v) {
    std::set<T> seen;
    return std::any_of(v.begin(), v.end(), [&](const T& x) { return !seen.insert(x).second; });
}

std::vector<Digest> rawDigests(const std::vector<TokenCommitment>& comms) {
    std::vector<Digest> out;
    out.reserve(comms.size());
    for (const auto& c : comms) out.push_back(c.value);
    return out;
}

Json delegateTag(const Address& del_add) { return Json{{"delegate", del_add}}; }

Json treeJson(const CommitmentTree& t) {
    Json leaves = Json::array();
    for (const auto& l : t.leaves()) leaves.push_back(l);
    Json roots = Json::array();
    for (const auto& r : t.roots()) roots.push_back(r);
    return Json{{"depth", t.depth()}, {"leaves", std::move(leaves)}, {"roots", std::move(roots)}};
}

}  // namespace

TokenContract::TokenContract(TokenContractConfig config, std::shared_ptr<const ProofSystem> verifier)
    : config_(std::move(config)),
      verifier_(std::move(verifier)),
      tree_c_(config_.tree_depth),
      tree_i_(config_.tree_depth) {}

bool TokenContract::isIssuer(const Address& a) const {
    auto it = issuers_.find(a);
    return it != issuers_.end() && it->second;
}

U256 TokenContract::balance(const Account& a) const {
    auto it = balances_.find(a);
    return it == balances_.end() ? U256() : it->second;
}

std::multiset<U256> TokenContract::nfts(const Account& a) const {
    auto it = nfts_.find(a);
    return it == nfts_.end() ? std::multiset<U256>{} : it->second;
}

std::optional<Account> TokenContract::contractAccount(const Address& contract) const {
    auto it = contract_accounts_.find(contract);
    if (it == contract_accounts_.end()) return std::nullopt;
    return it->second;
}

bool TokenContract::isContractAccount(const Account& a) const {
    return std::any_of(contract_accounts_.begin(), contract_accounts_.end(),
                       [&](const auto& kv) { return kv.second == a; });
}

void TokenContract::requireAuthority(const Address& caller) const {
    if (caller != config_.auth_add) throw Error(Errc::NotAuthority, "caller is not the authority");
}

void TokenContract::requireProof(bool ok, std::string_view what) const {
    if (!ok) throw Error(Errc::ProofRejected, std::string(what) + " proof does not verify");
}

void TokenContract::requireFreshComms(const std::vector<TokenCommitment>& comms) const {
    if (anyRepeated(comms)) throw Error(Errc::DuplicateCommitment, "commitment repeated within the batch");
    for (const auto& c : comms) {
        if (tree_c_.contains(c.value)) throw Error(Errc::DuplicateCommitment, c.value.hex());
    }
    if (!tree_c_.canAppend(comms.size())) throw Error(Errc::TreeFull, "commitment tree is full");
}

void TokenContract::requireSpendable(const std::vector<TokenNullifier>& nulls,
                                     const std::vector<TokenGrabber>& grabs, const U256& type_t,
                                     const Digest& root_c, const U256& nonce_g, const Account& audit_acc) const {
    if (type_t != config_.type_t) throw Error(Errc::TypeMismatch, "token type " + type_t.toHex());
    if (audit_acc != config_.audit_acc) throw Error(Errc::ParamMismatch, "audit_acc");
    if (nonce_g != config_.grab_nonce) throw Error(Errc::ParamMismatch, "nonce_g");
    if (!tree_c_.hasRoot(root_c)) throw Error(Errc::StaleRoot, root_c.hex());
    if (anyRepeated(nulls)) throw Error(Errc::DoubleSpend, "nullifier repeated within the batch");
    for (const auto& n : nulls) {
        if (nullifiers_.contains(n)) throw Error(Errc::DoubleSpend, n.value.hex());
    }
    if (anyRepeated(grabs)) throw Error(Errc::GrabberReuse, "grabber repeated within the batch");
    for (const auto& g : grabs) {
        if (grabbers_.contains(g)) throw Error(Errc::GrabberReuse, g.value.hex());
    }
}

Json TokenContract::appendComms(const std::vector<TokenCommitment>& comms) {
    std::uint64_t first = tree_c_.size();
    Digest root = tree_c_.append(rawDigests(comms));
    return Json{{"first_leaf", first}, {"root", root}};
}

Event TokenContract::emit(std::string kind, Json payload) {
    return Event{std::move(kind), config_.address, ++sequence_, std::move(payload)};
}

// ---- mint ---------------------------------------------------------------

void TokenContract::validateMint(const MintPublic& p) const {
    if (p.type_t != config_.type_t) throw Error(Errc::TypeMismatch, "token type " + p.type_t.toHex());
    requireFreshComms(p.comms);
    if (p.root_i && !tree_i_.hasRoot(*p.root_i)) throw Error(Errc::UnknownIssuerRoot, p.root_i->hex());
}

EventList TokenContract::applyMint(const MintPublic& p, const Json& extra) {
    Json payload{{"comms", vectorToJson(p.comms)}, {"root_i", optionalToJson(p.root_i)}};
    payload.update(appendComms(p.comms));
    payload.update(extra);
    return {emit("Mint", std::move(payload))};
}

EventList TokenContract::mint(const MintTx& t, const Address& caller) {
    if (isIssuer(caller) == t.pub.root_i.has_value()) {
        throw Error(Errc::IssuerViolation, "exactly one of registered issuer or issuer root is required");
    }
    requireProof(verify(*verifier_, t), "mint");
    validateMint(t.pub);
    return applyMint(t.pub, Json::object());
}

EventList TokenContract::delegatedMint(const DelegatedMintTx& t, const Address& caller) {
    if (caller != t.pub.del_add) throw Error(Errc::NotDelegate, "caller is not the bound delegate");
    if (!isIssuer(caller) && !t.pub.pub.root_i) throw Error(Errc::IssuerViolation, "delegate is not an issuer");
    requireProof(verify(*verifier_, t), "delegated mint");
    validateMint(t.pub.pub);
    return applyMint(t.pub.pub, delegateTag(t.pub.del_add));
}

// ---- transfer -----------------------------------------------------------

void TokenContract::validateTransfer(const TransferPublic& p) const {
    requireSpendable(p.nulls, p.grabs, p.type_t, p.root_c, p.nonce_g, p.audit_acc);
    requireFreshComms(p.comms);
}

EventList TokenContract::applyTransfer(const TransferPublic& p, const Json& extra) {
    for (const auto& n : p.nulls) nullifiers_.insert(n);
    for (const auto& g : p.grabs) grabbers_.insert(g);
    Json payload{{"nulls", vectorToJson(p.nulls)},
                 {"grabs", vectorToJson(p.grabs)},
                 {"comms", vectorToJson(p.comms)},
                 {"burn_c", p.burn_c},
                 {"audit_d", bytesToJson(p.audit_d)}};
    payload.update(appendComms(p.comms));
    payload.update(extra);
    EventList events;
    events.push_back(emit("Transfer", std::move(payload)));
    // Every transfer carries a burn commitment, so every transfer announces
    // one; a zero burn looks the same as a real one.
    events.push_back(emit("Burn", Json{{"burn_c", p.burn_c}}));
    return events;
}

EventList TokenContract::transfer(const TransferTx& t) {
    requireProof(verify(*verifier_, t), "transfer");
    validateTransfer(t.pub);
    return applyTransfer(t.pub, Json::object());
}

EventList TokenContract::delegatedTransfer(const DelegatedTransferTx& t, const Address& caller) {
    if (caller != t.pub.del_add) throw Error(Errc::NotDelegate, "caller is not the bound delegate");
    requireProof(verify(*verifier_, t), "delegated transfer");
    validateTransfer(t.pub.pub);
    return applyTransfer(t.pub.pub, delegateTag(t.pub.del_add));
}

// ---- revealing ----------------------------------------------------------

void TokenContract::validateRevealing(const RevealingPublic& p) const {
    requireSpendable(p.nulls, p.grabs, p.type_t, p.root_c, p.nonce_g, p.audit_acc);
    requireFreshComms(p.comms);
    std::map<Account, U256> credited;
    for (const auto& o : p.outputs) {
        if (!isContractAccount(o.owner)) throw Error(Errc::OwnerNotContract, o.owner.value.toHex());
        auto [it, fresh] = credited.try_emplace(o.owner, balance(o.owner));
        it->second = addOrThrow(it->second, o.amount);
    }
}

EventList TokenContract::applyRevealing(const RevealingPublic& p, const Json& extra) {
    for (const auto& n : p.nulls) nullifiers_.insert(n);
    for (const auto& g : p.grabs) grabbers_.insert(g);
    for (const auto& o : p.outputs) {
        if (!o.amount.isZero()) balances_[o.owner] = addOrThrow(balance(o.owner), o.amount);
        if (!o.id.isZero()) nfts_[o.owner].insert(o.id);
    }
    Json payload{{"nulls", vectorToJson(p.nulls)},
                 {"grabs", vectorToJson(p.grabs)},
                 {"comms", vectorToJson(p.comms)},
                 {"outputs", vectorToJson(p.outputs)},
                 {"audit_d", bytesToJson(p.audit_d)}};
    payload.update(appendComms(p.comms));
    payload.update(extra);
    return {emit("RevealingTransfer", std::move(payload))};
}

EventList TokenContract::revealingTransfer(const RevealingTx& t) {
    requireProof(verify(*verifier_, t), "revealing transfer");
    validateRevealing(t.pub);
    return applyRevealing(t.pub, Json::object());
}

EventList TokenContract::delegatedRevealingTransfer(const DelegatedRevealingTx& t, const Address& caller) {
    if (caller != t.pub.del_add) throw Error(Errc::NotDelegate, "caller is not the bound delegate");
    requireProof(verify(*verifier_, t), "delegated revealing transfer");
    validateRevealing(t.pub.pub);
    return applyRevealing(t.pub.pub, delegateTag(t.pub.del_add));
}

// ---- hiding -------------------------------------------------------------

Account TokenContract::hidingOwner(const HidingPublic& p, const Address& caller) const {
    if (!p.acc_i.isZero()) return p.acc_i;
    auto acc = contractAccount(caller);
    if (!acc) throw Error(Errc::OwnerNotContract, "caller has no registered contract account");
    return *acc;
}

void TokenContract::validateHiding(const HidingPublic& p, const Address& caller) const {
    if (p.type_t != config_.type_t) throw Error(Errc::TypeMismatch, "token type " + p.type_t.toHex());
    if (p.audit_acc != config_.audit_acc) throw Error(Errc::ParamMismatch, "audit_acc");
    requireFreshComms(p.comms);
    Account owner = hidingOwner(p, caller);
    if (balance(owner) < p.amount_i) throw Error(Errc::InsufficientBalance, owner.value.toHex());
    auto held = nfts(owner);
    for (const auto& id : p.ids_i) {
        auto it = held.find(id);
        if (it == held.end()) throw Error(Errc::MissingNft, id.toHex());
        held.erase(it);
    }
}

EventList TokenContract::applyHiding(const HidingPublic& p, const Address& caller, const Json& extra) {
    Account owner = hidingOwner(p, caller);
    if (!p.amount_i.isZero()) {
        U256 left = subOrThrow(balance(owner), p.amount_i);
        if (left.isZero()) {
            balances_.erase(owner);
        } else {
            balances_[owner] = left;
        }
    }
    if (!p.ids_i.empty()) {
        auto& held = nfts_[owner];
        for (const auto& id : p.ids_i) held.erase(held.find(id));
        if (held.empty()) nfts_.erase(owner);
    }
    Json payload{{"owner", owner},
                 {"amount_i", p.amount_i},
                 {"ids_i", vectorToJson(p.ids_i)},
                 {"comms", vectorToJson(p.comms)},
                 {"audit_d", bytesToJson(p.audit_d)}};
    payload.update(appendComms(p.comms));
    payload.update(extra);
    return {emit("HidingTransfer", std::move(payload))};
}

EventList TokenContract::hidingTransfer(const HidingTx& t, const Address& caller) {
    requireProof(verify(*verifier_, t), "hiding transfer");
    validateHiding(t.pub, caller);
    return applyHiding(t.pub, caller, Json::object());
}

EventList TokenContract::delegatedHidingTransfer(const DelegatedHidingTx& t, const Address& caller) {
    if (caller != t.pub.del_add) throw Error(Errc::NotDelegate, "caller is not the bound delegate");
    requireProof(verify(*verifier_, t), "delegated hiding transfer");
    validateHiding(t.pub.pub, caller);
    return applyHiding(t.pub.pub, caller, delegateTag(t.pub.del_add));
}

// ---- grab ---------------------------------------------------------------

EventList TokenContract::grab(const GrabTx& t, const Address& caller) {
    requireAuthority(caller);
    const auto& p = t.pub;
    if (p.auth_acc != config_.auth_acc) throw Error(Errc::NotAuthority, "auth_acc");
    requireProof(verify(*verifier_, t), "grab");
    if (p.type_t != config_.type_t) throw Error(Errc::TypeMismatch, "token type " + p.type_t.toHex());
    if (p.nonce_g != config_.grab_nonce) throw Error(Errc::ParamMismatch, "nonce_g");
    if (!tree_c_.hasRoot(p.root_c)) throw Error(Errc::StaleRoot, p.root_c.hex());
    if (anyRepeated(p.grabs)) throw Error(Errc::GrabberReuse, "grabber repeated within the batch");
    for (const auto& g : p.grabs) {
        if (grabbers_.contains(g)) throw Error(Errc::GrabberReuse, g.value.hex());
    }
    requireFreshComms(p.comms);

    for (const auto& g : p.grabs) grabbers_.insert(g);
    Json payload{{"grabs", vectorToJson(p.grabs)}, {"comms", vectorToJson(p.comms)}};
    payload.update(appendComms(p.comms));
    return {emit("Grab", std::move(payload))};
}

// ---- administration -----------------------------------------------------

EventList TokenContract::registerIssuer(const Address& caller, const Address& issuer, bool flag) {
    requireAuthority(caller);
    issuers_[issuer] = flag;
    return {emit("IssuerRegistered", Json{{"issuer", issuer}, {"flag", flag}})};
}

EventList TokenContract::registerHiddenIssuer(const Address& caller, const Account& issuer) {
    requireAuthority(caller);
    if (!tree_i_.canAppend(1)) throw Error(Errc::TreeFull, "issuer tree is full");
    Digest leaf = issuerLeaf(issuer);
    std::uint64_t index = tree_i_.size();
    Digest root = tree_i_.append(leaf);
    return {emit("HiddenIssuerRegistered", Json{{"leaf", leaf}, {"index", index}, {"root_i", root}})};
}

EventList TokenContract::registerContractAccount(const Address& caller, const Address& contract,
                                                 const Account& account) {
    requireAuthority(caller);
    contract_accounts_[contract] = account;
    return {emit("ContractAccountRegistered", Json{{"contract", contract}, {"account", account}})};
}

// ---- state --------------------------------------------------------------

Json TokenContract::snapshot() const {
    Json issuers = Json::array();
    for (const auto& [a, f] : issuers_) issuers.push_back(Json{{"address", a}, {"flag", f}});
    Json nulls = Json::array();
    for (const auto& n : nullifiers_) nulls.push_back(n);
    Json grabs = Json::array();
    for (const auto& g : grabbers_) grabs.push_back(g);
    Json balances = Json::array();
    for (const auto& [a, v] : balances_) balances.push_back(Json{{"account", a}, {"amount", v}});
    Json nfts = Json::array();
    for (const auto& [a, ids] : nfts_) {
        Json list = Json::array();
        for (const auto& id : ids) list.push_back(id);
        nfts.push_back(Json{{"account", a}, {"ids", std::move(list)}});
    }
    Json accounts = Json::array();
    for (const auto& [c, a] : contract_accounts_) accounts.push_back(Json{{"contract", c}, {"account", a}});
    return Json{{"config", config_},
                {"verifier", verifier_->name()},
                {"tree_c", treeJson(tree_c_)},
                {"tree_i", treeJson(tree_i_)},
                {"issuers", std::move(issuers)},
                {"nullifiers", std::move(nulls)},
                {"grabbers", std::move(grabs)},
                {"balances", std::move(balances)},
                {"nfts", std::move(nfts)},
                {"contract_accounts", std::move(accounts)},
                {"sequence", sequence_}};
}

Digest TokenContract::stateHash() const {
    std::string s = snapshot().dump();
    return hash256({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

}  // namespace zkt

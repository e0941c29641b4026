#include "zkt/harness/simulation.hpp"

#include <algorithm>

#include "zkt/circuits/builders.hpp"
#include "zkt/circuits/json.hpp"
#include "zkt/circuits/prover.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/error.hpp"
#include "zkt/token/envelopes.hpp"

namespace zkt {

void to_json(Json& j, const ConservationEntry& c) {
    j = Json{{"step", c.step},
             {"token", c.token},
             {"minted", c.minted},
             {"hidden", c.hidden},
             {"open", c.open},
             {"burned", c.burned},
             {"minted_ids", vectorToJson(c.minted_ids)},
             {"hidden_ids", vectorToJson(c.hidden_ids)},
             {"open_ids", vectorToJson(c.open_ids)},
             {"burned_ids", vectorToJson(c.burned_ids)},
             {"ok", c.ok}};
}

void to_json(Json& j, const DvpLegReport& r) {
    j = Json{{"bank", r.bank},
             {"token", r.token},
             {"delivery", r.delivery},
             {"nulls", vectorToJson(r.nulls)},
             {"comms", vectorToJson(r.comms)},
             {"submitted", r.submitted},
             {"status", r.status}};
}

void to_json(Json& j, const DvpReport& r) {
    j = Json{{"a", r.a}, {"b", r.b}, {"settled", r.settled}};
    if (r.settled) j["settled_at_record"] = r.settled_at_record;
}

namespace {

void addValue(Value& into, const TokenPreimage& t) {
    into.amount = addOrThrow(into.amount, t.amount);
    if (!t.id.isZero()) into.ids.push_back(t.id);
}

std::vector<U256> sorted(std::vector<U256> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string auditKey(const Bytes& audit_d) { return toHex(audit_d); }

}  // namespace

Simulation::Simulation(const SimulationConfig& config) : rng_(config.seed), net_(config.seed) {
    Participant& authority = addParticipant("authority", config.authority_sk);
    addParticipant("auditor", config.auditor_sk);
    for (const auto& [name, sk] : config.participants) addParticipant(name, sk);
    for (const auto& name : config.contracts) addParticipant(name, std::nullopt);
    if (config.dvp) addParticipant("dvp", std::nullopt);

    const Address auth = authority.address;
    for (const auto& spec : config.tokens) {
        if (types_.contains(spec.name) || names_.contains(spec.type)) {
            throw Error(Errc::ParamMismatch, "duplicate token " + spec.name);
        }
        types_[spec.name] = spec.type;
        names_[spec.type] = spec.name;

        TokenContractConfig cfg;
        cfg.type_t = spec.type;
        cfg.address = addressFromName("token:" + spec.name);
        cfg.auth_add = auth;
        cfg.auth_acc = authority.account;
        cfg.audit_acc = participant("auditor").account;
        cfg.grab_nonce = randomWord();
        cfg.tree_depth = config.tree_depth;
        net_.deployToken(cfg);

        // Onboarding: every identity derives its grabber key and hands a
        // copy to the authority (the harness keeps one shared copy).
        for (auto& [name, p] : people_) p.grabber_keys[spec.type] = createGrabberKey(p.sk, cfg.grab_nonce);
        for (const auto& name : spec.issuers) net_.registerIssuer(auth, spec.type, participant(name).address, true);
        for (const auto& name : spec.hidden_issuers) {
            net_.registerHiddenIssuer(auth, spec.type, participant(name).account);
        }
        std::vector<std::string> contracts = config.contracts;
        if (config.dvp) contracts.push_back("dvp");
        for (const auto& name : contracts) {
            const auto& c = participant(name);
            net_.registerContractAccount(auth, spec.type, c.address, c.account);
        }
    }
    if (config.dvp) {
        net_.deployDvp(participant("dvp").address, auth);
        for (const auto& spec : config.tokens) net_.registerTokenContract(auth, spec.type);
    }
    absorb();
}

U256 Simulation::randomWord() {
    std::array<std::uint8_t, 32> b{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t r = rng_();
        for (std::size_t k = 0; k < 8; ++k) b[i * 8 + k] = static_cast<std::uint8_t>(r >> (8 * k));
    }
    return U256::fromBigEndian(b);
}

SecretKey Simulation::randomKey() {
    for (;;) {
        SecretKey sk{randomWord()};
        if (!sk.isZero()) return sk;
    }
}

Participant& Simulation::addParticipant(const std::string& name, std::optional<SecretKey> sk) {
    if (people_.contains(name)) throw Error(Errc::ParamMismatch, "duplicate participant " + name);
    SecretKey key = sk ? *sk : randomKey();
    return people_.emplace(name, makeParticipant(name, key)).first->second;
}

Participant& Simulation::participant(const std::string& name) {
    auto it = people_.find(name);
    if (it == people_.end()) throw Error(Errc::ParamMismatch, "unknown participant " + name);
    return it->second;
}

const Participant& Simulation::participant(const std::string& name) const {
    auto it = people_.find(name);
    if (it == people_.end()) throw Error(Errc::ParamMismatch, "unknown participant " + name);
    return it->second;
}

U256 Simulation::typeOf(const std::string& token) const {
    auto it = types_.find(token);
    if (it == types_.end()) throw Error(Errc::UnknownTokenType, token);
    return it->second;
}

const std::string& Simulation::tokenName(const U256& type) const {
    auto it = names_.find(type);
    if (it == names_.end()) throw Error(Errc::UnknownTokenType, type.toHex());
    return it->second;
}

std::string Simulation::freshLabel(const std::string& hint) {
    return hint + "#" + std::to_string(++label_counter_);
}

TokenPreimage Simulation::makeToken(const Account& owner, const U256& type, const U256& amount, const U256& id) {
    return TokenPreimage{owner, type, randomWord(), amount, id, std::nullopt};
}

std::vector<TokenPreimage> Simulation::tokensFor(const Account& owner, const U256& type, const Value& v) {
    std::vector<TokenPreimage> out;
    if (!v.amount.isZero()) out.push_back(makeToken(owner, type, v.amount, U256{}));
    for (const auto& id : v.ids) out.push_back(makeToken(owner, type, U256{}, id));
    return out;
}

ImgPath Simulation::pathFor(const U256& type, const TokenPreimage& img, std::uint64_t leaf) const {
    return ImgPath{img, net_.token(type).tree().proofFor(leaf)};
}

Simulation::Selected Simulation::select(const std::string& owner, const U256& type, const Value& need,
                                        const std::vector<std::string>& labels) {
    Selected sel;
    if (!labels.empty()) {
        for (const auto& label : labels) {
            auto it = known_.find(label);
            if (it == known_.end()) throw Error(Errc::ParamMismatch, "unknown token label " + label);
            if (!it->second.leaf) throw Error(Errc::IndexOutOfRange, "token " + label + " never reached the ledger");
            sel.tokens.push_back(OwnedToken{it->second.img, *it->second.leaf, false, false, label});
        }
    } else {
        auto& wallet = participant(owner).wallet[type];
        std::vector<bool> taken(wallet.size(), false);
        auto usable = [&](std::size_t i) { return !taken[i] && !wallet[i].seized && !wallet[i].locked; };
        for (const auto& id : need.ids) {
            bool found = false;
            for (std::size_t i = 0; i < wallet.size() && !found; ++i) {
                if (usable(i) && wallet[i].img.id == id) taken[i] = found = true;
            }
            if (!found) throw Error(Errc::MissingNft, owner + " holds no token with id " + id.toHex());
        }
        U256 have;
        for (std::size_t i = 0; i < wallet.size(); ++i) {
            if (taken[i]) have = addOrThrow(have, wallet[i].img.amount);
        }
        for (std::size_t i = 0; i < wallet.size() && have < need.amount; ++i) {
            if (usable(i) && wallet[i].img.id.isZero() && !wallet[i].img.amount.isZero()) {
                taken[i] = true;
                have = addOrThrow(have, wallet[i].img.amount);
            }
        }
        if (have < need.amount) {
            throw Error(Errc::InsufficientBalance, owner + " holds " + have.toDecimal() + " of " +
                                                       tokenName(type) + ", needs " + need.amount.toDecimal());
        }
        for (std::size_t i = 0; i < wallet.size(); ++i) {
            if (taken[i]) sel.tokens.push_back(wallet[i]);
        }
    }
    for (const auto& t : sel.tokens) sel.paths.push_back(pathFor(type, t.img, t.leaf));
    return sel;
}

Value Simulation::changeOf(const Selected& in, const Value& out) const {
    Value have;
    for (const auto& t : in.tokens) addValue(have, t.img);
    auto left = U256::checkedSub(have.amount, out.amount);
    if (!left) throw Error(Errc::InsufficientBalance, "inputs hold " + have.amount.toDecimal());
    Value change{*left, {}};
    std::multiset<U256> ids(have.ids.begin(), have.ids.end());
    for (const auto& id : out.ids) {
        auto it = ids.find(id);
        if (it == ids.end()) throw Error(Errc::MissingNft, "inputs lack id " + id.toHex());
        ids.erase(it);
    }
    change.ids.assign(ids.begin(), ids.end());
    return change;
}

void Simulation::expect(const std::string& owner, const TokenPreimage& img, const std::string& label) {
    std::string l = label.empty() ? freshLabel(owner) : label;
    expected_[commit(img).value] = Expected{owner, img, l};
    known_[l] = Known{owner, img, std::nullopt};
    label_of_[commit(img).value] = l;
}

void Simulation::expectSpend(const std::string& owner, const TokenPreimage& img, const SecretKey& sk) {
    spent_[nullify(img, sk).value] = {owner, commit(img).value};
}

void Simulation::expectAudit(const Bytes& audit_d, AuditPreimage a) { pending_audit_[auditKey(audit_d)] = std::move(a); }

template <class F>
EventList Simulation::submit(F&& f) {
    EventList evs = f();
    absorb();
    logConservation();
    return evs;
}

void Simulation::absorb() {
    const auto& events = net_.events();
    for (; absorbed_ < events.size(); ++absorbed_) absorbEvent(absorbed_, events[absorbed_]);
}

void Simulation::absorbEvent(std::size_t index, const Event& e) {
    const Json& p = e.payload;
    if (p.contains("nulls")) {
        for (const auto& n : p["nulls"]) {
            auto it = spent_.find(n.get<Digest>());
            if (it == spent_.end()) continue;
            auto live = live_.find(it->second.second);
            if (live != live_.end()) {
                participant(it->second.first).remove(live->second.first, TokenCommitment{live->first});
                live_.erase(live);
            }
            spent_.erase(it);
        }
    }
    if (e.kind == "Grab") {
        std::set<Digest> grabbed;
        for (const auto& g : p["grabs"]) grabbed.insert(g.get<Digest>());
        for (auto& [name, person] : people_) {
            for (auto& [type, tokens] : person.wallet) {
                auto gk = person.grabber_keys.find(type);
                if (gk == person.grabber_keys.end()) continue;
                for (auto& t : tokens) {
                    if (grabbed.contains(grabToken(t.img, gk->second).value)) {
                        t.seized = true;
                        live_.erase(commit(t.img).value);
                    }
                }
            }
        }
    }
    if (p.contains("comms") && p.contains("first_leaf")) {
        const auto first = p["first_leaf"].get<std::uint64_t>();
        const auto& comms = p["comms"];
        for (std::size_t k = 0; k < comms.size(); ++k) {
            Digest c = comms[k].get<Digest>();
            auto it = expected_.find(c);
            if (it == expected_.end()) continue;
            const auto& ex = it->second;
            const U256 type = ex.img.type;
            participant(ex.owner).wallet[type].push_back(OwnedToken{ex.img, first + k, false, false, ex.label});
            known_[ex.label].leaf = first + k;
            live_[c] = {type, ex.img};
            if (e.kind == "Mint") addValue(minted_[type], ex.img);
            expected_.erase(it);
        }
    }
    if (e.kind == "Burn") {
        auto it = pending_burns_.find(p["burn_c"].get<Digest>());
        if (it != pending_burns_.end()) {
            const auto& b = it->second;
            auto& acct = reserves_[b.payer][b.type];
            auto& burned = burned_[b.type];
            if (b.preimage.amount) {
                acct.credited = addOrThrow(acct.credited, *b.preimage.amount);
                burned.amount = addOrThrow(burned.amount, *b.preimage.amount);
            }
            if (b.preimage.ids) {
                for (const auto& id : *b.preimage.ids) {
                    acct.credited_ids.push_back(id);
                    burned.ids.push_back(id);
                }
            }
            pending_burns_.erase(it);
        }
    }
    if (p.contains("audit_d")) {
        auto it = pending_audit_.find(toHex(bytesFromJson(p["audit_d"])));
        if (it != pending_audit_.end()) {
            audit_truth_.push_back(AuditTruth{index, std::move(it->second)});
            pending_audit_.erase(it);
        }
    }
}

void Simulation::logConservation() {
    for (const auto& [name, type] : types_) {
        ConservationEntry c;
        c.step = step_;
        c.token = name;
        if (auto it = minted_.find(type); it != minted_.end()) {
            c.minted = it->second.amount;
            c.minted_ids = sorted(it->second.ids);
        }
        if (auto it = burned_.find(type); it != burned_.end()) {
            c.burned = it->second.amount;
            c.burned_ids = sorted(it->second.ids);
        }
        for (const auto& [comm, entry] : live_) {
            if (entry.first != type) continue;
            c.hidden = addOrThrow(c.hidden, entry.second.amount);
            if (!entry.second.id.isZero()) c.hidden_ids.push_back(entry.second.id);
        }
        const auto& contract = net_.token(type);
        for (const auto& [acc, bal] : contract.balances()) c.open = addOrThrow(c.open, bal);
        for (const auto& [acc, ids] : contract.nftRegistry()) c.open_ids.insert(c.open_ids.end(), ids.begin(), ids.end());
        c.hidden_ids = sorted(c.hidden_ids);
        c.open_ids = sorted(c.open_ids);

        std::vector<U256> rhs = c.hidden_ids;
        rhs.insert(rhs.end(), c.open_ids.begin(), c.open_ids.end());
        rhs.insert(rhs.end(), c.burned_ids.begin(), c.burned_ids.end());
        auto total = U256::checkedAdd(c.hidden, c.open);
        if (total) total = U256::checkedAdd(*total, c.burned);
        c.ok = total && *total == c.minted && sorted(rhs) == c.minted_ids;
        conservation_.push_back(std::move(c));
    }
}

// ---- flows --------------------------------------------------------------

void Simulation::issue(const IssueSpec& s) {
    const U256 type = typeOf(s.token);
    Participant& bank = participant(s.to);
    Participant& issuer = participant(s.issuer);
    if (s.value.empty()) throw Error(Errc::ParamMismatch, "nothing to issue");
    MintWitness w{tokensFor(bank.account, type, s.value), std::nullopt, std::nullopt};
    for (std::size_t k = 0; k < w.outputs.size(); ++k) expect(s.to, w.outputs[k], k == 0 ? s.label : "");
    const auto& sys = net_.backend();

    if (s.mode == "public") {
        auto tx = proveTx(sys, w, buildMintPublic(w, type));
        submit([&] { return net_.mint(type, tx, issuer.address); });
    } else if (s.mode == "hidden") {
        const auto& tree = contract(s.token).issuerTree();
        const Digest leaf = issuerLeaf(issuer.account);
        const auto& leaves = tree.leaves();
        auto pos = std::find(leaves.begin(), leaves.end(), leaf);
        if (pos == leaves.end()) throw Error(Errc::IssuerViolation, s.issuer + " is not a hidden issuer");
        w.issuer_sk = issuer.sk;
        w.path_i = tree.proofFor(static_cast<std::uint64_t>(pos - leaves.begin()));
        auto tx = proveTx(sys, w, buildMintPublic(w, type, tree.root()));
        submit([&] { return net_.mint(type, tx, issuer.address); });
    } else if (s.mode == "delegated") {
        auto tx = proveTx(sys, w, delegate(buildMintPublic(w, type), w, issuer.address));
        submit([&] { return net_.delegatedMint(type, tx, issuer.address); });
    } else {
        throw Error(Errc::ParseError, "unknown issue mode " + s.mode);
    }

    auto& acct = reserves_[s.to][type];
    acct.debited = addOrThrow(acct.debited, s.value.amount);
    acct.debited_ids.insert(acct.debited_ids.end(), s.value.ids.begin(), s.value.ids.end());
    for (const auto& o : w.outputs) issued_.emplace_back(s.token, o);
}

void Simulation::transfer(const TransferSpec& s) {
    const U256 type = typeOf(s.token);
    Participant& payer = participant(s.from);
    if (s.to.empty() && !s.pay.empty()) throw Error(Errc::ParamMismatch, "payment without a payee");
    if (s.pay.empty() && s.burn.empty() && s.inputs.empty()) throw Error(Errc::ParamMismatch, "nothing to transfer");

    Value need{addOrThrow(s.pay.amount, s.burn.amount), s.pay.ids};
    need.ids.insert(need.ids.end(), s.burn.ids.begin(), s.burn.ids.end());
    Selected sel = select(s.from, type, need, s.inputs);
    Value change = changeOf(sel, need);

    std::vector<TokenPreimage> paid;
    if (!s.to.empty()) paid = tokensFor(participant(s.to).account, type, s.pay);
    auto kept = tokensFor(payer.account, type, change);

    TransferWitness w;
    w.inputs = sel.paths;
    w.outputs = paid;
    w.outputs.insert(w.outputs.end(), kept.begin(), kept.end());
    w.sk = payer.sk;
    w.audit_pk = participant("auditor").pk;
    w.burn_a = s.burn.amount;
    w.burn_ids = s.burn.ids;

    std::vector<NullifierPreimage> npre;
    for (const auto& t : sel.tokens) npre.push_back(nullifierPreimageOf(t.img));
    if (!s.to.empty()) {
        // The payee checks every consumed token's commitment is on the ledger
        // before acknowledging.
        const auto& msg = channel_.send(ChannelMessage{s.from, s.to, "transfer-preimage",
                                                       Json(TransferPreimage{paid, npre}), "", "unsigned"});
        for (const auto& n : npre) {
            if (!contract(s.token).tree().contains(recombine(n).value)) {
                throw Error(Errc::ParamMismatch, "payee cannot find a consumed commitment");
            }
        }
        channel_.ack(msg, s.to);
    }
    const Digest burn_c = burnCommitment(w);
    if (!s.burn.empty()) {
        BurnPreimage bp;
        if (!s.burn.amount.isZero()) bp.amount = s.burn.amount;
        if (!s.burn.ids.empty()) bp.ids = s.burn.ids;
        bp.nonce = randomWord();
        const auto& msg = channel_.send(ChannelMessage{s.from, "authority", "burn-preimage", Json(bp), burn_c.hex(),
                                                       "unsigned"});
        channel_.ack(msg, "authority");
        pending_burns_[burn_c] = PendingBurn{s.from, type, bp};
    }

    const auto& cfg = contract(s.token).config();
    TransferPublic pub = buildTransferPublic(w, type, contract(s.token).tree().root(), cfg.grab_nonce);
    for (std::size_t k = 0; k < paid.size(); ++k) expect(s.to, paid[k], k == 0 ? s.label : "");
    for (const auto& t : kept) expect(s.from, t, "");
    for (const auto& t : sel.tokens) expectSpend(s.from, t.img, payer.sk);
    expectAudit(pub.audit_d, auditPreimageOf(w));

    const auto& sys = net_.backend();
    if (!s.delegate.empty()) {
        const Address del = participant(s.delegate).address;
        auto tx = proveTx(sys, w, delegate(pub, w, del));
        const Address caller = participant(s.submitter.empty() ? s.delegate : s.submitter).address;
        submit([&] { return net_.delegatedTransfer(type, tx, caller); });
    } else {
        auto tx = proveTx(sys, w, pub);
        submit([&] { return net_.transfer(type, tx, payer.address); });
    }
}

void Simulation::reveal(const RevealSpec& s) {
    const U256 type = typeOf(s.token);
    Participant& owner = participant(s.from);
    const Participant& target = participant(s.to);
    if (s.value.empty()) throw Error(Errc::ParamMismatch, "nothing to reveal");
    Selected sel = select(s.from, type, s.value, s.inputs);
    Value change = changeOf(sel, s.value);

    std::vector<TokenPreimage> clear;
    if (!s.value.amount.isZero()) clear.push_back(TokenPreimage{target.account, type, U256{}, s.value.amount, U256{}, {}});
    for (const auto& id : s.value.ids) clear.push_back(TokenPreimage{target.account, type, U256{}, U256{}, id, {}});

    RevealingWitness w{sel.paths, owner.sk, tokensFor(owner.account, type, change), participant("auditor").pk};
    const auto& cfg = contract(s.token).config();
    RevealingPublic pub = buildRevealingPublic(w, clear, type, contract(s.token).tree().root(), cfg.grab_nonce);
    for (const auto& t : w.outputs) expect(s.from, t, "");
    for (const auto& t : sel.tokens) expectSpend(s.from, t.img, owner.sk);
    expectAudit(pub.audit_d, auditPreimageOf(w, pub.outputs));

    auto tx = proveTx(net_.backend(), w, pub);
    submit([&] { return net_.revealingTransfer(type, tx, owner.address); });
}

void Simulation::hide(const HideSpec& s) {
    const U256 type = typeOf(s.token);
    const Participant& holder = participant(s.contract);
    const Participant& recipient = participant(s.to);
    if (s.value.empty()) throw Error(Errc::ParamMismatch, "nothing to hide");

    HidingWitness w{tokensFor(recipient.account, type, s.value), std::nullopt, participant("auditor").pk};
    Account acc_i;
    Address caller = holder.address;
    if (s.mode == "account") {
        w.sk = participant(s.signer.empty() ? s.contract : s.signer).sk;
        acc_i = holder.account;
        caller = participant(s.submitter.empty() ? s.to : s.submitter).address;
    } else if (s.mode != "caller") {
        throw Error(Errc::ParseError, "unknown hide mode " + s.mode);
    }
    HidingPublic pub = buildHidingPublic(w, s.value.amount, s.value.ids, acc_i, type);

    const auto& msg = channel_.send(ChannelMessage{s.contract, s.to, "transfer-preimage",
                                                   Json(TransferPreimage{w.outputs, std::nullopt}), "", "unsigned"});
    channel_.ack(msg, s.to);
    for (std::size_t k = 0; k < w.outputs.size(); ++k) expect(s.to, w.outputs[k], k == 0 ? s.label : "");
    expectAudit(pub.audit_d, auditPreimageOf(w));

    auto tx = proveTx(net_.backend(), w, pub);
    submit([&] { return net_.hidingTransfer(type, tx, caller); });
}

void Simulation::grab(const GrabSpec& s) {
    const U256 type = typeOf(s.token);
    auto it = known_.find(s.target);
    if (it == known_.end()) throw Error(Errc::ParamMismatch, "unknown token label " + s.target);
    const Known& target = it->second;
    if (!target.leaf) throw Error(Errc::IndexOutOfRange, "token " + s.target + " never reached the ledger");
    const Participant& victim = participant(target.owner);
    const Participant& by = participant(s.by);

    GrabWitness w;
    w.inputs = {pathFor(type, target.img, *target.leaf)};
    w.outputs = tokensFor(by.account, type, Value{target.img.amount, target.img.id.isZero()
                                                                          ? std::vector<U256>{}
                                                                          : std::vector<U256>{target.img.id}});
    w.auth_sk = by.sk;
    w.owner_pk = victim.pk;
    w.grabber_k = victim.grabber_keys.at(type);
    const auto& cfg = contract(s.token).config();
    GrabPublic pub = buildGrabPublic(w, type, contract(s.token).tree().root(), cfg.grab_nonce);
    for (const auto& t : w.outputs) expect(s.by, t, "");

    auto tx = proveTx(net_.backend(), w, pub);
    submit([&] { return net_.grab(type, tx, by.address); });
}

DvpReport Simulation::dvp(const DvpSpec& s) {
    struct Leg {
        Participant* payer;
        std::string token;
        U256 type;
        U256 type_d;
        Selected sel;
        std::vector<TokenPreimage> give;
        std::vector<TokenPreimage> kept;
        TransferWitness w;
        DvpTx tx;
        std::vector<TokenPreimage> delivery;
    };
    const Address self = participant("dvp").address;
    const PublicKey audit_pk = participant("auditor").pk;
    const auto& sys = net_.backend();

    auto build = [&](const std::string& payer, const std::string& payee, const std::string& token,
                     const Value& pays, const std::string& other_token) {
        Leg l;
        l.payer = &participant(payer);
        l.token = token;
        l.type = typeOf(token);
        l.type_d = typeOf(other_token);
        if (pays.empty()) throw Error(Errc::ParamMismatch, "dvp leg pays nothing");
        l.sel = select(payer, l.type, pays, {});
        l.give = tokensFor(participant(payee).account, l.type, pays);
        l.kept = tokensFor(l.payer->account, l.type, changeOf(l.sel, pays));
        l.w.inputs = l.sel.paths;
        l.w.outputs = l.give;
        l.w.outputs.insert(l.w.outputs.end(), l.kept.begin(), l.kept.end());
        l.w.sk = l.payer->sk;
        l.w.audit_pk = audit_pk;
        return l;
    };
    Leg a = build(s.a, s.b, s.a_token, s.a_pays, s.b_token);
    Leg b = build(s.b, s.a, s.b_token, s.b_pays, s.a_token);

    // Both banks agree on one delivery set: everything changing hands.
    std::vector<TokenPreimage> set = a.give;
    set.insert(set.end(), b.give.begin(), b.give.end());
    auto byCommitment = [](const TokenPreimage& x, const TokenPreimage& y) { return commit(x) < commit(y); };
    std::sort(set.begin(), set.end(), byCommitment);
    a.delivery = set;
    b.delivery = set;
    if (s.inject == "wrong_delivery") {
        b.delivery.push_back(makeToken(b.payer->account, b.type_d, U256{1}, U256{}));
        std::sort(b.delivery.begin(), b.delivery.end(), byCommitment);
    }

    auto finish = [&](Leg& l, const std::string& to) {
        const auto& c = net_.token(l.type);
        TransferPublic pub = buildTransferPublic(l.w, l.type, c.tree().root(), c.config().grab_nonce);
        auto payment = proveTx(sys, l.w, delegate(pub, l.w, self));
        DvpWitness dw{l.w, l.delivery};
        l.tx = proveTx(sys, dw, buildDvpPublic(dw, payment, l.type_d));

        std::vector<NullifierPreimage> npre;
        for (const auto& t : l.sel.tokens) npre.push_back(nullifierPreimageOf(t.img));
        const auto& msg = channel_.send(ChannelMessage{l.payer->name, to, "dvp-request",
                                                       Json(DvpPreimage{npre, l.give, l.delivery}),
                                                       deliveryHash(l.delivery).hex(), "unsigned"});
        channel_.ack(msg, to);

        for (const auto& t : l.give) expect(to, t, "");
        for (const auto& t : l.kept) expect(l.payer->name, t, "");
        for (const auto& t : l.sel.tokens) expectSpend(l.payer->name, t.img, l.payer->sk);
        expectAudit(pub.audit_d, auditPreimageOf(l.w));
    };
    finish(a, s.b);
    finish(b, s.a);

    DvpReport report;
    auto describe = [&](const Leg& l, DvpLegReport& r) {
        r.bank = l.payer->name;
        r.token = l.token;
        r.delivery = l.tx.pub.delivery;
        r.nulls = l.tx.pub.payment.pub.pub.nulls;
        r.comms = l.tx.pub.payment.pub.pub.comms;
    };
    describe(a, report.a);
    describe(b, report.b);

    auto send = [&](Leg& l, DvpLegReport& r) {
        r.submitted = true;
        try {
            EventList evs = submit([&] { return net_.dvp(l.tx, l.payer->address); });
            r.status = "ok";
            bool matched = std::any_of(evs.begin(), evs.end(), [](const Event& e) { return e.kind == "DvpMatched"; });
            if (matched) {
                report.settled = true;
                report.settled_at_record = net_.records().size() - 1;
            } else {
                for (const auto& t : l.sel.tokens) {
                    for (auto& owned : l.payer->wallet[l.type]) {
                        if (owned.img == t.img) owned.locked = true;
                    }
                }
            }
        } catch (const Error& e) {
            r.status = std::string(e.name());
        }
    };
    auto spendInput = [&](const Leg& l) {
        const auto& first = l.sel.tokens.front();
        Value v{first.img.amount, first.img.id.isZero() ? std::vector<U256>{} : std::vector<U256>{first.img.id}};
        transfer(TransferSpec{l.token, l.payer->name, l.payer->name, v, {}, {first.label}, "", "", ""});
    };

    const bool a_first = s.order == "ab" || s.order == "a_only";
    if (s.order != "ab" && s.order != "ba" && s.order != "a_only" && s.order != "b_only") {
        throw Error(Errc::ParseError, "unknown dvp order " + s.order);
    }
    Leg& first = a_first ? a : b;
    Leg& second = a_first ? b : a;
    DvpLegReport& first_r = a_first ? report.a : report.b;
    DvpLegReport& second_r = a_first ? report.b : report.a;

    send(first, first_r);
    if (s.order == "a_only" || s.order == "b_only") return report;
    if (s.inject == "spend_a") spendInput(a);
    if (s.inject == "spend_b") spendInput(b);
    send(second, second_r);
    return report;
}

// ---- reports ------------------------------------------------------------

std::vector<std::string> Simulation::reconcile() const {
    std::vector<std::string> problems;
    for (const auto& [name, p] : people_) {
        for (const auto& [type, tokens] : p.wallet) {
            const auto& c = net_.token(type);
            for (const auto& t : tokens) {
                if (t.seized) continue;
                const Digest cm = commit(t.img).value;
                if (t.leaf >= c.tree().size() || c.tree().leaves()[t.leaf] != cm) {
                    problems.push_back(name + ": token " + t.label + " is not at its leaf");
                } else if (c.isNullified(nullify(t.img, p.sk))) {
                    problems.push_back(name + ": token " + t.label + " is already spent");
                }
            }
        }
    }
    return problems;
}

Json Simulation::wallets() const {
    Json out = Json::object();
    for (const auto& [name, p] : people_) {
        Json per = Json::object();
        for (const auto& [type, tokens] : p.wallet) {
            std::size_t seized = 0;
            for (const auto& t : tokens) seized += t.seized ? 1 : 0;
            per[tokenName(type)] = Json{{"amount", p.hiddenBalance(type)},
                                        {"ids", vectorToJson(p.hiddenIds(type))},
                                        {"tokens", tokens.size() - seized},
                                        {"seized", seized}};
        }
        if (!per.empty()) out[name] = std::move(per);
    }
    return out;
}

Json Simulation::reservesJson() const {
    Json out = Json::object();
    for (const auto& [name, per] : reserves_) {
        Json j = Json::object();
        for (const auto& [type, r] : per) {
            j[tokenName(type)] = Json{{"debited", r.debited},
                                      {"credited", r.credited},
                                      {"debited_ids", vectorToJson(r.debited_ids)},
                                      {"credited_ids", vectorToJson(r.credited_ids)}};
        }
        out[name] = std::move(j);
    }
    return out;
}

Json Simulation::issuanceRecords() const {
    Json out = Json::array();
    for (const auto& [token, img] : issued_) out.push_back(Json{{"token", token}, {"output", img}});
    return out;
}

}  // namespace zkt

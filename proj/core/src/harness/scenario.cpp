#include "zkt/harness/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zkt/error.hpp"
#include "zkt/token/envelopes.hpp"

namespace zkt {
namespace {

std::string str(const Json& j, const std::string& key, const std::string& fallback = "") {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    if (!it->is_string()) throw Error(Errc::ParseError, "'" + key + "' must be a string");
    return it->get<std::string>();
}

std::string required(const Json& j, const std::string& key) {
    if (!j.contains(key)) throw Error(Errc::ParseError, "missing '" + key + "'");
    return str(j, key);
}

std::vector<std::string> strings(const Json& j, const std::string& key) {
    std::vector<std::string> out;
    auto it = j.find(key);
    if (it == j.end()) return out;
    if (!it->is_array()) throw Error(Errc::ParseError, "'" + key + "' must be an array");
    for (const auto& s : *it) {
        if (!s.is_string()) throw Error(Errc::ParseError, "'" + key + "' must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

Value burnOf(const Json& step) {
    auto it = step.find("burn");
    if (it == step.end() || it->is_null()) return {};
    if (it->is_object()) return valueFromJson(*it);
    return Value{u256FromJson(*it), {}};
}

Value legValue(const Json& leg, std::string& token) {
    if (!leg.is_object()) throw Error(Errc::ParseError, "dvp leg must be an object");
    token = required(leg, "token");
    return valueFromJson(leg);
}

/// Runs one step; returns extra receipt fields.
Json execute(Simulation& sim, const Json& step, const std::string& op) {
    if (op == "issue") {
        IssueSpec s{required(step, "token"), required(step, "to"), valueFromJson(step),
                    str(step, "mode", "public"), str(step, "issuer", "authority"), str(step, "label")};
        sim.issue(s);
    } else if (op == "transfer" || op == "delegated_transfer") {
        TransferSpec s{required(step, "token"), required(step, "from"), str(step, "to"), valueFromJson(step),
                       burnOf(step), strings(step, "inputs"), str(step, "label"), str(step, "delegate"),
                       str(step, "submitter")};
        if (op == "delegated_transfer" && s.delegate.empty()) throw Error(Errc::ParseError, "missing 'delegate'");
        sim.transfer(s);
    } else if (op == "withdraw") {
        TransferSpec s{required(step, "token"), required(step, "from"), "", {}, valueFromJson(step),
                       strings(step, "inputs"), "", "", ""};
        sim.transfer(s);
    } else if (op == "reveal") {
        sim.reveal(RevealSpec{required(step, "token"), required(step, "from"), required(step, "to"),
                              valueFromJson(step), strings(step, "inputs")});
    } else if (op == "hide") {
        sim.hide(HideSpec{required(step, "token"), required(step, "contract"), required(step, "to"),
                          valueFromJson(step), str(step, "mode", "caller"), str(step, "signer"),
                          str(step, "submitter"), str(step, "label")});
    } else if (op == "grab") {
        sim.grab(GrabSpec{required(step, "token"), required(step, "target"), str(step, "by", "authority")});
    } else if (op == "dvp") {
        DvpSpec s;
        s.a = required(step, "a");
        s.b = required(step, "b");
        s.a_pays = legValue(field(step, "a_pays"), s.a_token);
        s.b_pays = legValue(field(step, "b_pays"), s.b_token);
        s.order = str(step, "order", "ab");
        s.inject = str(step, "inject", "none");
        DvpReport r = sim.dvp(s);
        for (const auto* leg : {&r.a, &r.b}) {
            Errc code{};
            if (leg->submitted && leg->status != "ok" && errcFromName(leg->status, code)) {
                throw Error(code, "dvp leg of " + leg->bank);
            }
        }
        return Json{{"dvp", r}};
    } else if (op == "register_issuer") {
        auto& p = sim.participant(required(step, "issuer"));
        sim.network().registerIssuer(sim.participant(str(step, "caller", "authority")).address,
                                     sim.typeOf(required(step, "token")), p.address,
                                     step.value("flag", true));
    } else if (op == "register_hidden_issuer") {
        auto& p = sim.participant(required(step, "issuer"));
        sim.network().registerHiddenIssuer(sim.participant(str(step, "caller", "authority")).address,
                                           sim.typeOf(required(step, "token")), p.account);
    } else {
        throw Error(Errc::ParseError, "unknown step op '" + op + "'");
    }
    return Json::object();
}

std::string show(const U256& v) { return v.toDecimal(); }

std::string show(const std::vector<U256>& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i].toDecimal();
    return s + "]";
}

std::vector<U256> idsOf(const Json& j, const std::string& key) {
    std::vector<U256> out;
    for (const auto& id : field(j, key)) out.push_back(u256FromJson(id));
    std::sort(out.begin(), out.end());
    return out;
}

/// Returns "" when the assertion holds, else the mismatch.
std::string check(const Simulation& sim, const ScenarioOutcome& out, const Json& a) {
    const std::string kind = required(a, "kind");
    auto compare = [](const std::string& what, const auto& want, const auto& got) -> std::string {
        if (want == got) return "";
        return what + ": expected " + show(want) + ", got " + show(got);
    };
    if (kind == "wallet") {
        const auto& p = sim.participant(required(a, "who"));
        const U256 type = sim.typeOf(required(a, "token"));
        std::string r = compare("hidden amount", u256FromJson(field(a, "amount")), p.hiddenBalance(type));
        if (r.empty() && a.contains("ids")) r = compare("hidden ids", idsOf(a, "ids"), p.hiddenIds(type));
        return r;
    }
    if (kind == "open_balance") {
        const auto& p = sim.participant(required(a, "who"));
        const auto& c = sim.contract(required(a, "token"));
        std::string r;
        if (a.contains("amount")) r = compare("open amount", u256FromJson(a["amount"]), c.balance(p.account));
        if (r.empty() && a.contains("ids")) {
            auto held = c.nfts(p.account);
            r = compare("open ids", idsOf(a, "ids"), std::vector<U256>(held.begin(), held.end()));
        }
        return r;
    }
    if (kind == "pending") {
        const auto* d = sim.network().dvpContract();
        U256 got = d ? U256{d->pending().size()} : U256{};
        return compare("pending dvp legs", u256FromJson(field(a, "count")), got);
    }
    if (kind == "reserve") {
        const std::string who = required(a, "who");
        const U256 type = sim.typeOf(required(a, "token"));
        ReserveAccount acct;
        if (auto it = sim.reserves().find(who); it != sim.reserves().end()) {
            if (auto jt = it->second.find(type); jt != it->second.end()) acct = jt->second;
        }
        std::string r;
        if (a.contains("debited")) r = compare("reserve debited", u256FromJson(a["debited"]), acct.debited);
        if (r.empty() && a.contains("credited")) r = compare("reserve credited", u256FromJson(a["credited"]), acct.credited);
        return r;
    }
    if (kind == "nullifiers") {
        const auto& c = sim.contract(required(a, "token"));
        return compare("nullifier count", u256FromJson(field(a, "count")), U256{c.nullifierCount()});
    }
    if (kind == "events") {
        const std::string event = required(a, "event");
        std::uint64_t n = 0;
        for (const auto& e : sim.network().events()) n += e.kind == event ? 1 : 0;
        return compare(event + " events", u256FromJson(field(a, "count")), U256{n});
    }
    if (kind == "seized") {
        const auto& p = sim.participant(required(a, "who"));
        const U256 type = sim.typeOf(required(a, "token"));
        std::uint64_t n = 0;
        if (auto it = p.wallet.find(type); it != p.wallet.end()) {
            for (const auto& t : it->second) n += t.seized ? 1 : 0;
        }
        return compare("seized tokens", u256FromJson(field(a, "count")), U256{n});
    }
    if (kind == "step_status") {
        const auto idx = field(a, "step").get<std::size_t>();
        if (idx >= out.receipts.size()) return "no step " + std::to_string(idx);
        const std::string got = out.receipts[idx]["status"].get<std::string>();
        const std::string want = required(a, "status");
        return want == got ? "" : "step " + std::to_string(idx) + " status: expected " + want + ", got " + got;
    }
    if (kind == "conservation") {
        for (const auto& c : sim.conservationLog()) {
            if (!c.ok) return "conservation broken at step " + std::to_string(c.step) + " for " + c.token;
        }
        return "";
    }
    throw Error(Errc::ParseError, "unknown assertion kind '" + kind + "'");
}

}  // namespace

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

SimulationConfig scenarioConfig(const Json& scenario, std::optional<std::uint64_t> seed) {
    if (!scenario.is_object()) throw Error(Errc::ParseError, "scenario must be a JSON object");
    if (scenario.contains("schema_version") && scenario["schema_version"] != kSchemaVersion) {
        throw Error(Errc::ParseError, "unsupported schema_version " + scenario["schema_version"].dump());
    }
    SimulationConfig cfg;
    try {
        cfg.seed = seed ? *seed : scenario.value("seed", std::uint64_t{1});
        cfg.tree_depth = scenario.value("tree_depth", CommitmentTree::kDefaultDepth);
        for (const auto& p : field(scenario, "participants")) {
            if (p.is_string()) {
                cfg.participants.emplace_back(p.get<std::string>(), std::nullopt);
            } else {
                cfg.participants.emplace_back(required(p, "name"), optionalFromJson<SecretKey>(p, "sk"));
            }
        }
        cfg.contracts = strings(scenario, "contracts");
        cfg.dvp = scenario.value("dvp", false);
        cfg.auditor_sk = optionalFromJson<SecretKey>(scenario, "auditor_sk");
        cfg.authority_sk = optionalFromJson<SecretKey>(scenario, "authority_sk");
        std::uint64_t index = 0;
        for (const auto& t : field(scenario, "tokens")) {
            TokenSpec spec;
            spec.name = required(t, "name");
            spec.type = t.contains("type") ? u256FromJson(t["type"]) : U256{++index};
            spec.issuers = t.contains("issuers") ? strings(t, "issuers") : std::vector<std::string>{"authority"};
            spec.hidden_issuers = strings(t, "hidden_issuers");
            cfg.tokens.push_back(std::move(spec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("scenario setup: ") + e.what());
    }
    return cfg;
}

ScenarioOutcome runScenario(const Json& scenario, std::optional<std::uint64_t> seed) {
    ScenarioOutcome out;
    SimulationConfig cfg = scenarioConfig(scenario, seed);
    out.name = str(scenario, "name", "unnamed");
    out.seed = cfg.seed;
    out.sim = std::make_unique<Simulation>(cfg);
    out.receipts = Json::array();
    Simulation& sim = *out.sim;

    const Json& steps = field(scenario, "steps");
    if (!steps.is_array()) throw Error(Errc::ParseError, "steps must be an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Json& step = steps[i];
        const std::string op = required(step, "op");
        const std::string want = str(step, "expect", "ok");
        sim.setStep(i);
        const std::size_t first_event = sim.network().events().size();
        Json receipt{{"step", i}, {"op", op}};
        std::string status = "ok";
        std::string detail;
        try {
            receipt.update(execute(sim, step, op));
        } catch (const Error& e) {
            if (e.code() == Errc::ParseError) throw Error(Errc::ParseError, "step " + std::to_string(i) + ": " + e.detail());
            status = std::string(e.name());
            detail = e.detail();
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, "step " + std::to_string(i) + ": " + e.what());
        }
        receipt["status"] = status;
        receipt["expect"] = want;
        if (!detail.empty()) receipt["detail"] = detail;
        receipt["first_event"] = first_event;
        receipt["event_count"] = sim.network().events().size() - first_event;
        out.receipts.push_back(std::move(receipt));

        if (status != want) {
            out.failures.push_back("step " + std::to_string(i) + " (" + op + "): expected " + want + ", got " +
                                   status + (detail.empty() ? "" : " (" + detail + ")"));
        }
        for (const auto& p : sim.reconcile()) out.failures.push_back("step " + std::to_string(i) + ": " + p);
    }
    for (const auto& c : sim.conservationLog()) {
        if (!c.ok) out.failures.push_back("conservation broken at step " + std::to_string(c.step) + " for " + c.token);
    }

    out.assertions = Json::array();
    if (scenario.contains("assertions")) {
        for (const auto& a : scenario["assertions"]) {
            std::string problem;
            try {
                problem = check(sim, out, a);
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::ParseError, std::string("assertion: ") + e.what());
            }
            Json r = a;
            r["ok"] = problem.empty();
            if (!problem.empty()) {
                r["diff"] = problem;
                out.failures.push_back("assertion " + a.value("kind", "?") + ": " + problem);
            }
            out.assertions.push_back(std::move(r));
        }
    }
    return out;
}

Json ScenarioOutcome::receiptsDocument() const {
    Json people = Json::array();
    for (const auto& [name, p] : sim->participants()) {
        people.push_back(Json{{"name", name}, {"address", p.address}, {"account", p.account}, {"pk", p.pk}});
    }
    Json conservation = Json::array();
    for (const auto& c : sim->conservationLog()) conservation.push_back(c);
    Json channel = Json::array();
    for (const auto& m : sim->channel().messages()) channel.push_back(m);
    Json fails = Json::array();
    for (const auto& f : failures) fails.push_back(f);
    return Json{{"schema_version", kSchemaVersion},
                {"scenario", name},
                {"seed", seed},
                {"passed", passed()},
                {"failures", std::move(fails)},
                {"steps", receipts},
                {"assertions", assertions},
                {"participants", std::move(people)},
                {"wallets", sim->wallets()},
                {"reserves", sim->reservesJson()},
                {"issuance", sim->issuanceRecords()},
                {"conservation", std::move(conservation)},
                {"channel", std::move(channel)},
                {"state_hash", sim->network().stateHash()}};
}

Json ScenarioOutcome::snapshotDocument() const {
    return Json{{"schema_version", kSchemaVersion},
                {"state_hash", sim->network().stateHash()},
                {"ledger", sim->network().snapshot()}};
}

}  // namespace zkt

#include <filesystem>

#include "doctest.h"
#include "golden.hpp"
#include "zkt/circuits/encoding.hpp"
#include "zkt/circuits/json.hpp"
#include "zkt/error.hpp"
#include "zkt/harness/audit.hpp"
#include "zkt/harness/scenario.hpp"

using namespace zkt;
using namespace zkt::test;

namespace {

std::vector<std::string> shippedScenarios() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(ZKT_SCENARIO_DIR)) {
        if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TokenPreimage> issuedOf(const Simulation& sim) {
    std::vector<TokenPreimage> out;
    for (const auto& [token, t] : sim.issued()) out.push_back(t);
    return out;
}

Errc codeOf(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::ScenarioAssertionFailed;
}

Json tinyScenario() {
    return Json::parse(R"({
      "schema_version": 1, "name": "tiny", "seed": 5,
      "participants": ["a", "b"], "tokens": [{"name": "USD"}],
      "steps": [
        {"op": "issue", "token": "USD", "to": "a", "amount": 10},
        {"op": "transfer", "token": "USD", "from": "a", "to": "b", "amount": 4}
      ],
      "assertions": [
        {"kind": "wallet", "who": "a", "token": "USD", "amount": 6},
        {"kind": "wallet", "who": "b", "token": "USD", "amount": 4}
      ]})");
}

}  // namespace

TEST_CASE("every shipped scenario passes") {
    auto names = shippedScenarios();
    REQUIRE(names.size() >= 9);
    for (const auto& name : names) {
        CAPTURE(name);
        auto o = runScenario(loadJsonFile(scenarioPath(name)));
        for (const auto& f : o.failures) MESSAGE(f);
        CHECK(o.passed());
        CHECK(o.sim->reconcile().empty());
        for (const auto& c : o.sim->conservationLog()) CHECK(c.ok);
    }
}

TEST_CASE("runs are deterministic per seed and differ across seeds") {
    auto a = runScenario(tinyScenario());
    auto b = runScenario(tinyScenario());
    auto c = runScenario(tinyScenario(), 6);
    CHECK(a.sim->network().stateHash() == b.sim->network().stateHash());
    CHECK(a.sim->network().stateHash() != c.sim->network().stateHash());
    CHECK(a.snapshotDocument().dump() == b.snapshotDocument().dump());
    CHECK(c.passed());
}

TEST_CASE("replay reproduces the state hash") {
    auto o = runScenario(loadJsonFile(scenarioPath("full.json")));
    const auto& net = o.sim->network();
    Network again = Network::replay(Json::parse(net.txList().dump()));
    CHECK(again.stateHash() == net.stateHash());
    CHECK(again.events().size() == net.events().size());
}

TEST_CASE("replay refuses a record whose outcome changed") {
    auto o = runScenario(tinyScenario());
    Json txlist = o.sim->network().txList();
    auto& records = txlist["records"];
    records.push_back(records.back());
    records.back()["index"] = records.size() - 1;
    CHECK(codeOf([&] { Network::replay(txlist); }) == Errc::DoubleSpend);
    records.back()["expect"] = "DoubleSpend";
    CHECK_NOTHROW(Network::replay(txlist));
    records.back()["expect"] = "ProofRejected";
    CHECK(codeOf([&] { Network::replay(txlist); }) == Errc::ScenarioAssertionFailed);
    records.back()["expect"] = "ok";
    records.back()["op"] = "teleport";
    CHECK(codeOf([&] { Network::replay(txlist); }) == Errc::ParseError);
}

TEST_CASE("a failed expectation is reported, not thrown") {
    Json s = tinyScenario();
    s["steps"][1]["expect"] = "DoubleSpend";
    s["assertions"][0]["amount"] = 7;
    auto o = runScenario(s);
    CHECK_FALSE(o.passed());
    CHECK(o.failures.size() >= 2);
}

TEST_CASE("malformed scenarios are parse errors") {
    Json s = tinyScenario();
    s["steps"][0]["op"] = "conjure";
    CHECK(codeOf([&] { runScenario(s); }) == Errc::ParseError);
    s = tinyScenario();
    s.erase("steps");
    CHECK(codeOf([&] { runScenario(s); }) == Errc::ParseError);
    CHECK(codeOf([] { loadJsonFile("/nonexistent/scenario.json"); }) == Errc::ParseError);
}

TEST_CASE("the auditor recovers exactly what the harness sealed") {
    for (const auto& name : shippedScenarios()) {
        CAPTURE(name);
        auto o = runScenario(loadJsonFile(scenarioPath(name)));
        const auto& sim = *o.sim;
        auto report = auditDecrypt(sim.participant("auditor").sk, sim.network().events(), issuedOf(sim));
        const auto& truth = sim.auditTruth();
        REQUIRE(report.entries.size() == truth.size());
        for (std::size_t i = 0; i < truth.size(); ++i) {
            CHECK(report.entries[i].event_index == truth[i].event_index);
            CHECK(canonicalBytes(report.entries[i].preimage) == canonicalBytes(truth[i].preimage));
        }
        for (const auto& [type, t] : report.totals) {
            if (t.hidden) {
                U256 live;
                for (const auto& [who, p] : sim.participants()) {
                    auto it = p.wallet.find(type);
                    if (it == p.wallet.end()) continue;
                    for (const auto& tok : it->second) {
                        if (!tok.seized) live = addOrThrow(live, tok.img.amount);
                    }
                }
                CHECK(*t.hidden == live);
            }
        }
    }
}

TEST_CASE("other keys cannot audit") {
    auto o = runScenario(loadJsonFile(scenarioPath("transfer_burn.json")));
    const auto& sim = *o.sim;
    for (const char* who : {"authority", "bankA", "bankB"}) {
        CHECK(codeOf([&] { auditDecrypt(sim.participant(who).sk, sim.network().events()); }) == Errc::WrongKey);
    }
    auto report = auditDecrypt(sim.participant("auditor").sk, sim.network().events());
    CHECK(codeOf([&] { auditReportToJson(report, {"amount", "salary"}); }) == Errc::ParseError);
    Json shown = auditReportToJson(report, {"amount"});
    CHECK(shown.dump().find("\"owner\"") == std::string::npos);
}

TEST_CASE("off-chain envelopes travel on the channel, never the ledger") {
    auto o = runScenario(loadJsonFile(scenarioPath("transfer_burn.json")));
    const auto& sim = *o.sim;
    bool saw_transfer = false, saw_burn = false;
    for (const auto& m : sim.channel().messages()) {
        saw_transfer |= m.kind == "transfer-preimage";
        saw_burn |= m.kind == "burn-preimage";
    }
    CHECK(saw_transfer);
    CHECK(saw_burn);
    const std::string log = sim.network().eventLog().dump();
    for (const auto& [who, p] : sim.participants()) {
        for (const auto& [type, tokens] : p.wallet) {
            for (const auto& t : tokens) CHECK(log.find(t.img.nonce.toHex()) == std::string::npos);
        }
    }
}

// zkt: run scenarios, inspect snapshots, decrypt audit data, replay
// transaction lists. JSON goes to stdout, prose to stderr.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "zkt/circuits/builders.hpp"
#include "zkt/circuits/json.hpp"
#include "zkt/crypto/hash.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/error.hpp"
#include "zkt/harness/audit.hpp"
#include "zkt/harness/scenario.hpp"
#include "zkt/token/envelopes.hpp"

namespace fs = std::filesystem;
using namespace zkt;

namespace {

enum Exit : int { kOk = 0, kLedgerError = 1, kParseError = 2, kAssertionFailed = 3, kWrongKey = 4 };

int exitFor(Errc code) {
    switch (code) {
        case Errc::ParseError: return kParseError;
        case Errc::ScenarioAssertionFailed: return kAssertionFailed;
        case Errc::WrongKey: return kWrongKey;
        default: return kLedgerError;
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int fail(const std::string& command, const Error& e) {
    emit(Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"error", std::string(e.name())},
              {"detail", e.detail()}});
    std::cerr << "zkt " << command << ": " << e.what() << '\n';
    return exitFor(e.code());
}

void writeJson(const fs::path& p, const Json& j) {
    std::ofstream out(p);
    if (!out) throw Error(Errc::ParseError, "cannot write " + p.string());
    out << j.dump(2) << '\n';
}

std::string defaultOutDir() {
    const char* env = std::getenv("ZKT_OUT_DIR");
    return env && *env ? env : "zkt-out";
}

const Json& ledgerOf(const Json& doc) { return doc.contains("ledger") ? doc["ledger"] : doc; }

int runCommand(const std::string& path, std::optional<std::uint64_t> seed, std::string out_dir) {
    Json scenario = loadJsonFile(path);
    ScenarioOutcome o = runScenario(scenario, seed);
    if (out_dir.empty()) out_dir = defaultOutDir();
    fs::create_directories(out_dir);
    const auto& net = o.sim->network();
    const fs::path dir(out_dir);
    writeJson(dir / "events.json", net.eventLog());
    writeJson(dir / "snapshot.json", o.snapshotDocument());
    writeJson(dir / "receipts.json", o.receiptsDocument());
    writeJson(dir / "txlist.json", net.txList());

    Json failures = Json::array();
    for (const auto& f : o.failures) {
        failures.push_back(f);
        std::cerr << "FAIL " << f << '\n';
    }
    emit(Json{{"schema_version", kSchemaVersion},
              {"command", "run"},
              {"scenario", o.name},
              {"seed", o.seed},
              {"passed", o.passed()},
              {"state_hash", net.stateHash()},
              {"steps", o.receipts.size()},
              {"events", net.events().size()},
              {"out_dir", dir.string()},
              {"files", Json::array({"events.json", "snapshot.json", "receipts.json", "txlist.json"})},
              {"failures", std::move(failures)}});
    if (!o.passed()) {
        std::cerr << "scenario " << o.name << ": " << o.failures.size() << " failure(s)\n";
        return kAssertionFailed;
    }
    std::cerr << "scenario " << o.name << " passed\n";
    return kOk;
}

int inspectCommand(const std::string& path, const std::string& query) {
    const Json doc = loadJsonFile(path);
    const Json& ledger = ledgerOf(doc);
    Json result = Json::array();
    try {
        if (query == "pending") {
            const Json& dvp = ledger.at("dvp");
            Json legs = Json::array();
            if (!dvp.is_null()) {
                for (const auto& p : dvp.at("pending")) {
                    legs.push_back(Json{{"delivery", p.at("delivery")}, {"type_d", p.at("tx").at("pub").at("type_d")}});
                }
            }
            result = Json{{"count", legs.size()}, {"legs", std::move(legs)}};
        } else {
            for (const auto& t : ledger.at("tokens")) {
                Json entry{{"type", t.at("config").at("type_t")}, {"address", t.at("config").at("address")}};
                if (query == "roots") {
                    entry["roots"] = t.at("tree_c").at("roots");
                    entry["issuer_roots"] = t.at("tree_i").at("roots");
                } else if (query == "nullifiers") {
                    entry["count"] = t.at("nullifiers").size();
                    entry["grabbers"] = t.at("grabbers").size();
                } else if (query == "balances") {
                    entry["balances"] = t.at("balances");
                    entry["nfts"] = t.at("nfts");
                } else {
                    throw Error(Errc::ParseError, "unknown query '" + query + "'");
                }
                result.push_back(std::move(entry));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    emit(Json{{"schema_version", kSchemaVersion}, {"command", "inspect"}, {"query", query}, {"result", std::move(result)}});
    return kOk;
}

std::set<std::string> parseFields(const std::string& csv) {
    if (csv.empty()) return kAuditFields;
    std::set<std::string> out;
    std::stringstream ss(csv);
    for (std::string f; std::getline(ss, f, ',');) {
        if (!f.empty()) out.insert(f);
    }
    return out;
}

int auditCommand(const std::string& path, const std::string& key_hex, const std::string& fields,
                 const std::string& issuance_path) {
    auto key = U256::fromHex(key_hex);
    if (!key) throw Error(Errc::ParseError, "auditor key must be hex");
    auto chosen = parseFields(fields);
    for (const auto& f : chosen) {
        if (!kAuditFields.contains(f)) throw Error(Errc::ParseError, "unknown audit field '" + f + "'");
    }
    const Json doc = loadJsonFile(path);
    std::vector<Event> events;
    std::vector<TokenPreimage> issued;
    try {
        for (const auto& e : field(doc, "events")) events.push_back(e.get<Event>());
        if (!issuance_path.empty()) {
            const Json receipts = loadJsonFile(issuance_path);
            for (const auto& r : field(receipts, "issuance")) {
                issued.push_back(field(r, "output").get<TokenPreimage>());
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    AuditReport report = auditDecrypt(SecretKey{*key}, events, issued);
    Json out = auditReportToJson(report, chosen);
    out["command"] = "audit";
    emit(out);
    std::cerr << "decrypted " << report.entries.size() << " audit record(s)\n";
    return kOk;
}

int replayCommand(const std::string& path, const std::string& expect_hash) {
    const Json doc = loadJsonFile(path);
    Network net = Network::replay(doc);
    const std::string hash = net.stateHash().hex();
    const bool match = expect_hash.empty() || expect_hash == hash;
    emit(Json{{"schema_version", kSchemaVersion},
              {"command", "replay"},
              {"records", net.records().size()},
              {"events", net.events().size()},
              {"state_hash", hash},
              {"matches", match}});
    if (!match) {
        std::cerr << "state hash " << hash << " differs from expected " << expect_hash << '\n';
        return kAssertionFailed;
    }
    return kOk;
}

/// Derivations over fixed inputs; the test suite compares them with vectors
/// produced by an independent implementation.
int vectorsCommand() {
    const SecretKey sk{U256{0x1234}};
    const PublicKey pk = derivePublicKey(sk);
    const U256 nonce_g = *U256::fromHex("0xabcdef");
    const TokenPreimage t{getAccount(sk), U256{7}, U256{99}, U256{500}, U256{}, std::nullopt};
    TokenPreimage withPayload = t;
    withPayload.payload = Bytes{0xde, 0xad, 0xbe, 0xef};
    const GrabberKey gk = createGrabberKey(sk, nonce_g);

    CommitmentTree tree(4);
    for (std::uint64_t i = 0; i < 5; ++i) tree.append(hash256(Encoder().word(U256{i}).out()));
    const std::string msg = "audit";
    const SealedBox box = sealToKey(pk, {reinterpret_cast<const std::uint8_t*>(msg.data()), msg.size()});

    emit(Json{{"schema_version", kSchemaVersion},
              {"command", "vectors"},
              {"vectors",
               Json{{"sk", sk},
                    {"pk", pk},
                    {"account", getAccount(sk)},
                    {"grabber_key", gk},
                    {"address_alice", addressFromName("alice")},
                    {"commitment", commit(t)},
                    {"commitment_payload", commit(withPayload)},
                    {"nullifier", nullify(t, sk)},
                    {"grabber", grabToken(t, gk)},
                    {"merkle_root_depth4_5leaves", tree.root()},
                    {"zero_subtree_4", zeroSubtree(4)},
                    {"issuer_leaf", issuerLeaf(getAccount(sk))},
                    {"seal_audit", bytesToJson(serializeSealedBox(box))}}}});
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zkt: private token ledger simulator"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir;
    std::optional<std::uint64_t> seed;
    auto* run = app.add_subcommand("run", "Execute a scenario and write events, snapshot, receipts and txlist");
    run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--seed", seed, "Override the scenario seed");
    run->add_option("--out-dir", out_dir, "Output directory (default $ZKT_OUT_DIR or ./zkt-out)");

    std::string snapshot_path, query = "roots";
    auto* inspect = app.add_subcommand("inspect", "Query a snapshot file");
    inspect->add_option("snapshot", snapshot_path, "snapshot.json")->required();
    inspect->add_option("--query", query, "roots | nullifiers | balances | pending")
        ->check(CLI::IsMember({"roots", "nullifiers", "balances", "pending"}));

    std::string log_path, key_hex, fields, issuance_path;
    auto* audit = app.add_subcommand("audit", "Decrypt every audit record in an event log");
    audit->add_option("events", log_path, "events.json")->required();
    audit->add_option("--auditor-key", key_hex, "Auditor secret key (hex)")->required();
    audit->add_option("--fields", fields, "Comma-separated token fields to show");
    audit->add_option("--issuance", issuance_path, "receipts.json supplying minted preimages for totals");

    std::string txlist_path, expect_hash;
    auto* replay = app.add_subcommand("replay", "Re-execute a txlist and print the final state hash");
    replay->add_option("txlist", txlist_path, "txlist.json")->required();
    replay->add_option("--expect-hash", expect_hash, "Fail unless the final state hash matches");

    auto* vectors = app.add_subcommand("vectors", "Print derivations over fixed inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(Json{{"schema_version", kSchemaVersion}, {"error", "ParseError"}, {"detail", e.what()}});
        std::cerr << "zkt: " << e.what() << '\n';
        return kParseError;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (*run) return runCommand(scenario_path, seed, out_dir);
        if (*inspect) return inspectCommand(snapshot_path, query);
        if (*audit) return auditCommand(log_path, key_hex, fields, issuance_path);
        if (*replay) return replayCommand(txlist_path, expect_hash);
        if (*vectors) return vectorsCommand();
    } catch (const Error& e) {
        return fail(command, e);
    } catch (const std::exception& e) {
        return fail(command, Error(Errc::ParseError, e.what()));
    }
    return kOk;
}

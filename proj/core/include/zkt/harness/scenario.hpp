#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zkt/harness/simulation.hpp"

namespace zkt {

/// Result of executing a scenario document. `failures` lists every step
/// whose outcome differed from its "expect", every failed assertion and
/// every broken harness invariant; an empty list means the run passed.
struct ScenarioOutcome {
    std::string name;
    std::uint64_t seed = 0;
    std::unique_ptr<Simulation> sim;
    Json receipts;
    Json assertions;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    /// The receipts document written next to the event log.
    Json receiptsDocument() const;
    /// {schema_version, state_hash, ledger}.
    Json snapshotDocument() const;
};

/// Parses the scenario's setup block. Throws ParseError.
SimulationConfig scenarioConfig(const Json& scenario, std::optional<std::uint64_t> seed = std::nullopt);

/// Throws ParseError for malformed documents; ledger rejections are step
/// outcomes, not exceptions.
ScenarioOutcome runScenario(const Json& scenario, std::optional<std::uint64_t> seed = std::nullopt);

/// Reads a JSON file. Throws ParseError naming the path.
Json loadJsonFile(const std::string& path);

}  // namespace zkt

#include <benchmark/benchmark.h>

#include "gen.hpp"
#include "zkt/circuits/prover.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/crypto/seal.hpp"
#include "zkt/harness/scenario.hpp"

using namespace zkt;

static void BM_Commit(benchmark::State& state) {
    gen::Gen g(1);
    TokenPreimage t{Account{g.word()}, U256{1}, g.word(), U256{100}, U256{}, std::nullopt};
    for (auto _ : state) {
        t.nonce = t.nonce ^ U256{1};
        benchmark::DoNotOptimize(commit(t));
    }
}
BENCHMARK(BM_Commit);

static void BM_TreeAppend(benchmark::State& state) {
    gen::Gen g(2);
    const auto depth = static_cast<unsigned>(state.range(0));
    CommitmentTree tree(depth);
    for (auto _ : state) {
        if (!tree.canAppend(1)) {
            state.PauseTiming();
            tree = CommitmentTree(depth);
            state.ResumeTiming();
        }
        tree.append(g.digest());
    }
}
BENCHMARK(BM_TreeAppend)->Arg(16)->Arg(32);

static void BM_Seal(benchmark::State& state) {
    gen::Gen g(3);
    PublicKey pk = derivePublicKey(g.key());
    Bytes data(static_cast<std::size_t>(state.range(0)), 0x5a);
    for (auto _ : state) benchmark::DoNotOptimize(sealToKey(pk, data));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Seal)->Arg(256)->Arg(4096);

static void BM_ProveTransfer(benchmark::State& state) {
    gen::Gen g(4);
    gen::World world(g);
    ReferenceBackend sys(1);
    auto inst = gen::transferInstance(g, world);
    for (auto _ : state) benchmark::DoNotOptimize(proveTransfer(sys, inst.w, inst.pub));
}
BENCHMARK(BM_ProveTransfer);

static void BM_VerifyTransfer(benchmark::State& state) {
    gen::Gen g(5);
    gen::World world(g);
    ReferenceBackend sys(1);
    auto inst = gen::transferInstance(g, world);
    Proof p = proveTransfer(sys, inst.w, inst.pub);
    for (auto _ : state) benchmark::DoNotOptimize(verify(sys, p, inst.pub));
}
BENCHMARK(BM_VerifyTransfer);

static void BM_Scenario(benchmark::State& state) {
    Json doc = Json::parse(R"({"schema_version": 1, "name": "bench", "seed": 3, "tree_depth": 20,
      "participants": ["a", "b"], "tokens": [{"name": "USD"}],
      "steps": [{"op": "issue", "token": "USD", "to": "a", "amount": 1000},
                {"op": "transfer", "token": "USD", "from": "a", "to": "b", "amount": 400},
                {"op": "transfer", "token": "USD", "from": "b", "to": "a", "amount": 100, "burn": 50},
                {"op": "withdraw", "token": "USD", "from": "a", "amount": 10}]})");
    for (auto _ : state) benchmark::DoNotOptimize(runScenario(doc).sim->network().stateHash());
}
BENCHMARK(BM_Scenario)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gts/engines.hpp"
#include "gts/suite.hpp"

namespace {

const gts::Suite& bench_suite() {
    static const gts::Suite suite = gts::gen_suite(0xC0FFEE, 4, 12, 24);
    return suite;
}

void run_engine_bench(benchmark::State& state, gts::EngineKind kind) {
    const auto& pos = bench_suite().positions[0];
    const gts::OthelloGame game = gts::OthelloGame::rooted_at(pos.board);
    const int depth = static_cast<int>(state.range(0));
    std::uint64_t leaves = 0;
    for (auto _ : state) {
        const auto res = gts::run_engine(kind, game, pos.board, depth);
        benchmark::DoNotOptimize(res.value);
        leaves += res.stats.leaf_evals;
    }
    state.counters["leaf_evals"] =
        benchmark::Counter(static_cast<double>(leaves), benchmark::Counter::kAvgIterations);
}

void BM_Minimax(benchmark::State& state) { run_engine_bench(state, gts::EngineKind::Minimax); }
void BM_AlphaBeta(benchmark::State& state) { run_engine_bench(state, gts::EngineKind::AlphaBeta); }
void BM_AlphaBetaEnhanced(benchmark::State& state) {
    run_engine_bench(state, gts::EngineKind::AlphaBetaEnhanced);
}
void BM_SssStar(benchmark::State& state) { run_engine_bench(state, gts::EngineKind::SssStar); }
void BM_MtSss(benchmark::State& state) { run_engine_bench(state, gts::EngineKind::MtSss); }

BENCHMARK(BM_Minimax)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaBeta)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaBetaEnhanced)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SssStar)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MtSss)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SssStarSynthetic(benchmark::State& state) {
    const gts::SyntheticTree tree = gts::gen_tree(3, static_cast<int>(state.range(0)), 42);
    const gts::SyntheticGame game(tree);
    for (auto _ : state)
        benchmark::DoNotOptimize(gts::sss_star(game, gts::DeweyPath{}, tree.depth()).value);
}
BENCHMARK(BM_SssStarSynthetic)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OpenListChurn(benchmark::State& state) {
    for (auto _ : state) {
        gts::OpenList<int> open;
        gts::SplitMix64 rng(1);
        for (std::uint32_t i = 0; i < 4096; ++i) {
            open.push({gts::DeweyPath({i}), gts::SssStatus::Live,
                       static_cast<gts::Score>(rng.below(1024)), gts::Player::Max, 0});
            if (i % 2 == 1) open.pop_max();
        }
        benchmark::DoNotOptimize(open.size());
    }
}
BENCHMARK(BM_OpenListChurn)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

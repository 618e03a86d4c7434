#include <benchmark/benchmark.h>

#include "gts/othello.hpp"
#include "gts/rng.hpp"

namespace {

gts::OthelloBoard midgame_position(std::uint64_t seed, int plies) {
    gts::SplitMix64 rng(seed);
    gts::OthelloBoard b = gts::initial_board();
    for (int i = 0; i < plies; ++i) {
        const auto moves = gts::legal_moves(b);
        if (moves.empty()) break;
        b = gts::apply_move(b, moves[rng.below(moves.size())]);
    }
    return b;
}

void BM_LegalMoves(benchmark::State& state) {
    const gts::OthelloBoard b = midgame_position(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gts::legal_moves(b));
}
BENCHMARK(BM_LegalMoves)->Arg(8)->Arg(20)->Arg(40);

void BM_ApplyMove(benchmark::State& state) {
    const gts::OthelloBoard b = midgame_position(7, 20);
    const auto moves = gts::legal_moves(b);
    for (auto _ : state) benchmark::DoNotOptimize(gts::apply_move(b, moves[0]));
}
BENCHMARK(BM_ApplyMove);

void BM_Evaluate(benchmark::State& state) {
    const gts::OthelloBoard b = midgame_position(7, 20);
    for (auto _ : state) benchmark::DoNotOptimize(gts::evaluate(b, gts::Color::Black));
}
BENCHMARK(BM_Evaluate);

void BM_ZobristKey(benchmark::State& state) {
    const gts::OthelloBoard b = midgame_position(7, 20);
    for (auto _ : state) benchmark::DoNotOptimize(gts::zobrist_key(b));
}
BENCHMARK(BM_ZobristKey);

void BM_Playout(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(midgame_position(seed++, 58));
}
BENCHMARK(BM_Playout);

} // namespace

BENCHMARK_MAIN();

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gts/engines.hpp"
#include "gts/suite.hpp"

namespace gts {

// One row per (position, engine, depth).
struct BenchRecord {
    int position_id = 0;
    EngineKind engine = EngineKind::Minimax;
    int depth = 0;
    SearchStats stats;
    Score root_value = 0;
    std::string best_move;
};

// Runs every engine at every depth in [depth_min, depth_max] over the suite.
// All engines must report the same root value per (position, depth); a
// mismatch throws EngineDisagreement naming the position. Records come back
// ordered by (position, engine, depth). pre: 1 <= depth_min <= depth_max <= 12.
std::vector<BenchRecord> run_suite(const Suite& suite, const std::vector<EngineKind>& engines,
                                   int depth_min, int depth_max, const SearchOptions& opt = {});

inline constexpr const char* kCsvHeader =
    "position_id,engine,depth,leaf_evals,leaf_evals_final_iter,interior_expansions,"
    "tt_probes,tt_hits,open_peak,gamma_iterations,elapsed_ns,root_value,best_move";

// elapsed_ns is written as 0 unless with_timings is set, keeping default
// output byte-reproducible across runs.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records, bool with_timings = false);

// Per-depth geometric means of leaf_evals per engine, the per-depth
// mt_sss / ab_enhanced ratio when both ran, and growth factors
// leaf(d+1)/leaf(d) split into even->odd and odd->even transitions.
void write_summary(std::ostream& os, const std::vector<BenchRecord>& records);

} // namespace gts

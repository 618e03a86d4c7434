#include "gts/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gts {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

double geomean(const std::vector<double>& xs) {
    double acc = 0.0;
    for (double x : xs) acc += std::log(x);
    return std::exp(acc / static_cast<double>(xs.size()));
}

} // namespace

std::vector<BenchRecord> run_suite(const Suite& suite, const std::vector<EngineKind>& engines,
                                   int depth_min, int depth_max, const SearchOptions& opt) {
    if (engines.empty()) throw std::invalid_argument("run_suite: no engines selected");
    if (depth_min < 1 || depth_min > depth_max || depth_max > 12)
        throw std::invalid_argument("run_suite: depths must lie within 1..12");
    std::vector<BenchRecord> records;
    records.reserve(suite.positions.size() * engines.size() *
                    static_cast<std::size_t>(depth_max - depth_min + 1));
    for (const Suite::Entry& pos : suite.positions) {
        const OthelloGame game = OthelloGame::rooted_at(pos.board);
        for (int depth = depth_min; depth <= depth_max; ++depth) {
            bool have_value = false;
            Score value = 0;
            EngineKind value_engine = engines.front();
            for (const EngineKind engine : engines) {
                const auto res = run_engine(engine, game, pos.board, depth, opt);
                if (have_value && res.value != value) {
                    std::ostringstream msg;
                    msg << "engine disagreement at position " << pos.id << " ("
                        << format_position(pos.board) << ") depth " << depth << ": "
                        << engine_name(value_engine) << "=" << value << " vs "
                        << engine_name(engine) << "=" << res.value;
                    throw EngineDisagreement(msg.str(), pos.id, depth);
                }
                have_value = true;
                value = res.value;
                value_engine = engine;
                BenchRecord rec;
                rec.position_id = pos.id;
                rec.engine = engine;
                rec.depth = depth;
                rec.stats = res.stats;
                rec.root_value = res.value;
                rec.best_move = res.best_move ? game.action_name(*res.best_move) : "-";
                records.push_back(std::move(rec));
            }
        }
    }
    // (position, engine, depth) order for the CSV
    std::map<EngineKind, std::size_t> engine_rank;
    for (std::size_t i = 0; i < engines.size(); ++i) engine_rank.emplace(engines[i], i);
    std::stable_sort(records.begin(), records.end(),
                     [&](const BenchRecord& a, const BenchRecord& b) {
                         if (a.position_id != b.position_id) return a.position_id < b.position_id;
                         if (a.engine != b.engine)
                             return engine_rank.at(a.engine) < engine_rank.at(b.engine);
                         return a.depth < b.depth;
                     });
    return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records, bool with_timings) {
    os << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        os << r.position_id << ',' << engine_name(r.engine) << ',' << r.depth << ','
           << r.stats.leaf_evals << ',' << r.stats.leaf_evals_final_iter << ','
           << r.stats.interior_expansions << ',' << r.stats.tt_probes << ',' << r.stats.tt_hits
           << ',' << r.stats.open_peak << ',' << r.stats.gamma_iterations << ','
           << (with_timings ? r.stats.elapsed_ns : 0) << ',' << r.root_value << ',' << r.best_move
           << '\n';
    }
}

void write_summary(std::ostream& os, const std::vector<BenchRecord>& records) {
    if (records.empty()) throw std::invalid_argument("write_summary: no records");

    // engines in first-appearance order; depths sorted
    std::vector<EngineKind> engines;
    std::vector<int> depths;
    for (const BenchRecord& r : records) {
        if (std::find(engines.begin(), engines.end(), r.engine) == engines.end())
            engines.push_back(r.engine);
        if (std::find(depths.begin(), depths.end(), r.depth) == depths.end())
            depths.push_back(r.depth);
    }
    std::sort(depths.begin(), depths.end());

    std::map<std::pair<EngineKind, int>, std::vector<double>> leaf_counts;
    std::map<std::pair<EngineKind, int>, std::map<int, double>> by_position;
    for (const BenchRecord& r : records) {
        leaf_counts[{r.engine, r.depth}].push_back(static_cast<double>(r.stats.leaf_evals));
        by_position[{r.engine, r.depth}][r.position_id] = static_cast<double>(r.stats.leaf_evals);
    }

    os << "== geometric mean of leaf_evals per depth ==\n";
    std::map<std::pair<EngineKind, int>, double> gm;
    for (int d : depths) {
        os << "depth " << d << ":";
        for (EngineKind e : engines) {
            const auto it = leaf_counts.find({e, d});
            if (it == leaf_counts.end()) continue;
            gm[{e, d}] = geomean(it->second);
            os << ' ' << engine_name(e) << ' ' << fmt_double(gm[{e, d}]);
        }
        os << '\n';
    }

    const bool have_pair =
        std::find(engines.begin(), engines.end(), EngineKind::MtSss) != engines.end() &&
        std::find(engines.begin(), engines.end(), EngineKind::AlphaBetaEnhanced) != engines.end();
    if (have_pair) {
        os << "== leaf count ratio mt_sss / ab_enhanced ==\n";
        for (int d : depths) {
            const auto a = gm.find({EngineKind::MtSss, d});
            const auto b = gm.find({EngineKind::AlphaBetaEnhanced, d});
            if (a == gm.end() || b == gm.end()) continue;
            os << "depth " << d << ": " << fmt_double(a->second / b->second) << '\n';
        }
    }

    os << "== growth factor leaf(d+1)/leaf(d), geometric mean over positions ==\n";
    for (EngineKind e : engines) {
        std::vector<double> even_to_odd, odd_to_even;
        std::string line;
        for (std::size_t i = 0; i + 1 < depths.size(); ++i) {
            const int d = depths[i];
            if (depths[i + 1] != d + 1) continue;
            const auto lo = by_position.find({e, d});
            const auto hi = by_position.find({e, d + 1});
            if (lo == by_position.end() || hi == by_position.end()) continue;
            std::vector<double> ratios;
            for (const auto& [pos, count] : lo->second) {
                const auto it = hi->second.find(pos);
                if (it != hi->second.end() && count > 0) ratios.push_back(it->second / count);
            }
            if (ratios.empty()) continue;
            const double g = geomean(ratios);
            const bool even = d % 2 == 0;
            (even ? even_to_odd : odd_to_even).push_back(g);
            line += " " + std::to_string(d) + "->" + std::to_string(d + 1) +
                    (even ? " (even->odd) " : " (odd->even) ") + fmt_double(g) + ";";
        }
        if (line.empty()) continue;
        os << engine_name(e) << ":" << line << '\n';
        if (!even_to_odd.empty() && !odd_to_even.empty()) {
            const double eo = geomean(even_to_odd);
            const double oe = geomean(odd_to_even);
            os << engine_name(e) << " parity means: even->odd " << fmt_double(eo)
               << ", odd->even " << fmt_double(oe) << " -> even->odd "
               << (eo > oe ? "exceeds" : "does not exceed") << " odd->even\n";
        }
    }
}

} // namespace gts

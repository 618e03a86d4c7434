#include "gts/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "gts/engines.hpp"
#include "gts/rng.hpp"
#include "gts/strategy.hpp"

namespace gts {

namespace {

int default_depth_cap(int w) {
    switch (w) {
        case 2: return 16; // 2^16 = 65536 leaves
        case 3: return 10; // 3^10 = 59049
        default: return 8; // 4^8 = 65536
    }
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string fmt1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

TreeSpec verify_tree_spec(const VerifyOptions& opt, int index) {
    TreeSpec spec;
    spec.w = 2 + index % 3;
    int cap = default_depth_cap(spec.w);
    if (opt.max_depth > 0) cap = std::min(cap, opt.max_depth);
    const int lo = std::min(2, cap);
    spec.d = lo + (index / 3) % (cap - lo + 1);
    spec.seed = mix64(opt.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1)));
    return spec;
}

VerifyReport run_verification(const VerifyOptions& opt) {
    VerifyReport report;
    SearchOptions sopt;
    sopt.tt_capacity = opt.tt_capacity;

    // -- oracle equivalence, MT-SSS* checks, and the OPEN peak bound in one sweep
    int value_mismatches = 0;
    int mt_value_mismatches = 0;
    int gamma_violations = 0;
    int peak_violations = 0;
    double worst_peak_ratio = 0.0;
    std::string first_mismatch;
    std::map<std::pair<int, int>, std::pair<double, double>> leaf_sums; // (w,d) -> (sss, mt)
    std::map<std::pair<int, int>, int> leaf_n;
    std::map<std::pair<int, int>, std::uint64_t> peak_max;

    for (int i = 0; i < opt.trees; ++i) {
        const TreeSpec spec = verify_tree_spec(opt, i);
        const SyntheticTree tree = gen_tree(spec.w, spec.d, spec.seed);
        const SyntheticGame game(tree);
        const DeweyPath root;

        const auto oracle = minimax(game, root, spec.d, sopt);
        const auto ab = alphabeta(game, root, spec.d, -kInf, kInf, sopt);
        const auto abe = alphabeta_enhanced(game, root, std::max(1, spec.d), sopt);
        const auto sss = sss_star(game, root, spec.d, sopt);
        std::vector<std::vector<Score>> gammas;
        const auto mt = mt_sss(game, root, std::max(1, spec.d), sopt, &gammas);

        const bool equal = ab.value == oracle.value && abe.value == oracle.value &&
                           sss.value == oracle.value && mt.value == oracle.value;
        if (!equal) {
            ++value_mismatches;
            if (first_mismatch.empty()) {
                std::ostringstream ss;
                ss << "w=" << spec.w << " d=" << spec.d << " seed=" << spec.seed
                   << " oracle=" << oracle.value << " ab=" << ab.value << " abe=" << abe.value
                   << " sss=" << sss.value << " mt=" << mt.value;
                first_mismatch = ss.str();
            }
        }
        if (mt.value != sss.value) ++mt_value_mismatches;
        for (const auto& stage : gammas)
            for (std::size_t k = 1; k < stage.size(); ++k)
                if (stage[k] >= stage[k - 1]) ++gamma_violations;

        const auto key = std::make_pair(spec.w, spec.d);
        leaf_sums[key].first += std::log(static_cast<double>(std::max<std::uint64_t>(1, sss.stats.leaf_evals)));
        leaf_sums[key].second += std::log(static_cast<double>(std::max<std::uint64_t>(1, mt.stats.leaf_evals)));
        leaf_n[key] += 1;

        const std::uint64_t bound = 2 * pow_u64(static_cast<std::uint64_t>(spec.w), (spec.d + 1) / 2);
        const double ratio = static_cast<double>(sss.stats.open_peak) /
                             static_cast<double>(pow_u64(static_cast<std::uint64_t>(spec.w), (spec.d + 1) / 2));
        worst_peak_ratio = std::max(worst_peak_ratio, ratio);
        if (sss.stats.open_peak > bound) ++peak_violations;
        auto& pm = peak_max[key];
        pm = std::max(pm, sss.stats.open_peak);
    }

    {
        std::ostringstream d;
        d << opt.trees << " trees, 5 engines, " << value_mismatches << " value mismatches";
        if (!first_mismatch.empty()) d << " (first: " << first_mismatch << ")";
        report.properties.push_back({"oracle-equivalence", value_mismatches == 0, d.str()});
    }

    // -- Stockman dominance on the first dominance_trees of the same schedule
    int dominance_violations = 0;
    const int dom_trees = std::min(opt.dominance_trees, opt.trees);
    for (int i = 0; i < dom_trees; ++i) {
        const TreeSpec spec = verify_tree_spec(opt, i);
        const SyntheticTree tree = gen_tree(spec.w, spec.d, spec.seed);
        const SyntheticGame game(tree);
        const RecordingGame<SyntheticGame> sss_game(game);
        const RecordingGame<SyntheticGame> ab_game(game);
        const DeweyPath root;
        sss_star(sss_game, root, spec.d, sopt);
        alphabeta(ab_game, root, spec.d, -kInf, kInf, sopt);
        if (!std::includes(ab_game.evaluated().begin(), ab_game.evaluated().end(),
                           sss_game.evaluated().begin(), sss_game.evaluated().end()))
            ++dominance_violations;
    }
    {
        std::ostringstream d;
        d << dom_trees << " trees, " << dominance_violations
          << " violations of sss-leaves within ab-leaves";
        report.properties.push_back({"stockman-dominance", dominance_violations == 0, d.str()});
    }

    // -- strategy theorem on small trees (w <= 3, d <= 4)
    int theorem_failures = 0;
    for (int i = 0; i < opt.strategy_trees; ++i) {
        const int w = 2 + i % 2;
        const int d = 2 + (i / 2) % 3;
        const std::uint64_t seed = mix64(opt.seed ^ 0xABCDEF ^ (0x2545F4914F6CDD1DULL * static_cast<std::uint64_t>(i + 1)));
        if (!check_strategy_theorem(gen_tree(w, d, seed))) ++theorem_failures;
    }
    {
        std::ostringstream d;
        d << opt.strategy_trees << " trees, " << theorem_failures
          << " failures of max-of-min == minimax with leaf upper bounds";
        report.properties.push_back({"strategy-theorem", theorem_failures == 0, d.str()});
    }

    // -- SSS* = MT-SSS*
    {
        std::ostringstream d;
        d << opt.trees << " trees, " << mt_value_mismatches << " value mismatches, "
          << gamma_violations << " non-decreasing gamma steps";
        report.properties.push_back(
            {"mt-sss-equivalence", mt_value_mismatches == 0 && gamma_violations == 0, d.str()});
    }

    // -- OPEN peak bound
    {
        std::ostringstream d;
        d << "max open_peak / w^ceil(d/2) = " << fmt2(worst_peak_ratio) << ", bound 2.0, "
          << peak_violations << " violations";
        report.properties.push_back({"open-peak-bound", peak_violations == 0, d.str()});
    }

    for (const auto& [wd, sums] : leaf_sums) {
        const int n = leaf_n[wd];
        std::ostringstream line;
        line << "w=" << wd.first << " d=" << wd.second << " trees=" << n
             << " geomean leaf_evals: sss " << fmt1(std::exp(sums.first / n)) << ", mt_sss "
             << fmt1(std::exp(sums.second / n));
        report.leaf_count_lines.push_back(line.str());
    }
    for (const auto& [wd, peak] : peak_max) {
        std::ostringstream line;
        line << "w=" << wd.first << " d=" << wd.second << " max open_peak " << peak
             << " (w^ceil(d/2) = " << pow_u64(static_cast<std::uint64_t>(wd.first), (wd.second + 1) / 2)
             << ")";
        report.open_peak_lines.push_back(line.str());
    }
    return report;
}

void write_report(std::ostream& os, const VerifyReport& report) {
    for (const auto& p : report.properties)
        os << (p.pass ? "[PASS] " : "[FAIL] ") << p.name << ": " << p.detail << '\n';
    os << "-- leaf counts, sss vs mt_sss --\n";
    for (const auto& line : report.leaf_count_lines) os << line << '\n';
    os << "-- measured OPEN peaks --\n";
    for (const auto& line : report.open_peak_lines) os << line << '\n';
}

} // namespace gts

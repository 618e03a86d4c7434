#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gts/synthetic.hpp"

namespace gts {

struct VerifyOptions {
    std::uint64_t seed = 0x5EEDBA5EULL;
    int trees = 1000;           // oracle-equivalence schedule length
    int dominance_trees = 500;  // first N of the schedule
    int strategy_trees = 200;   // separate w <= 3, d <= 4 schedule
    int max_depth = 0;          // 0 = per-branching default caps
    std::size_t tt_capacity = std::size_t{1} << 16;
};

struct VerifyReport {
    struct Property {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Property> properties;
    std::vector<std::string> leaf_count_lines; // sss vs mt_sss, side by side
    std::vector<std::string> open_peak_lines;  // measured OPEN peaks per (w, d)

    bool all_pass() const {
        for (const Property& p : properties)
            if (!p.pass) return false;
        return true;
    }
};

// The (w, d, seed) of tree i in the deterministic verification schedule.
struct TreeSpec {
    int w = 2;
    int d = 2;
    std::uint64_t seed = 0;
};
TreeSpec verify_tree_spec(const VerifyOptions& opt, int index);

// Runs the four property suites (oracle equivalence across all five engines,
// Stockman dominance, the strategy theorem, and SSS* = MT-SSS*) plus the OPEN
// peak bound, on seeded synthetic trees.
VerifyReport run_verification(const VerifyOptions& opt);

void write_report(std::ostream& os, const VerifyReport& report);

} // namespace gts

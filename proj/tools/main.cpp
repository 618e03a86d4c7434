// gts: game-tree search workbench. Subcommands generate Othello benchmark
// suites, benchmark the searchers against each other, verify the search
// properties on synthetic trees, trace SSS* step by step, enumerate
// strategies, and answer single best-move queries.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error, 3 engine
// disagreement, 4 invalid or terminal position.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gts/bench.hpp"
#include "gts/dot.hpp"
#include "gts/engines.hpp"
#include "gts/strategy.hpp"
#include "gts/suite.hpp"
#include "gts/verify.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitBadPosition = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(text, &used, 0); // accepts decimal and 0x-hex
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad seed: '" + text + "'");
    }
}

std::string format_seed(std::uint64_t seed) {
    std::ostringstream ss;
    ss << "0x" << std::hex << seed;
    return ss.str();
}

// "A..B" inclusive, or a single "N"
std::pair<int, int> parse_depth_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int d = std::stoi(text);
            return {d, d};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("bad depth range: '" + text + "' (expected A..B or N)");
    }
}

std::vector<gts::EngineKind> parse_engines(const std::string& text) {
    std::vector<gts::EngineKind> engines;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = gts::engine_from_name(item);
        if (!kind) throw UsageError("unknown engine '" + item + "'");
        for (const auto existing : engines)
            if (existing == *kind) throw UsageError("engine '" + item + "' listed twice");
        engines.push_back(*kind);
    }
    if (engines.empty()) throw UsageError("no engines selected");
    return engines;
}

// "w=2,d=3,seed=5" (seed optional, default 1)
struct TreeArgs {
    int w = 2;
    int d = 2;
    std::uint64_t seed = 1;
};

TreeArgs parse_tree_spec(const std::string& text) {
    TreeArgs args;
    bool have_w = false, have_d = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad tree spec item: '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        try {
            if (key == "w") {
                args.w = std::stoi(val);
                have_w = true;
            } else if (key == "d") {
                args.d = std::stoi(val);
                have_d = true;
            } else if (key == "seed") {
                args.seed = parse_seed(val);
            } else {
                throw UsageError("bad tree spec key: '" + key + "'");
            }
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad tree spec value: '" + item + "'");
        }
    }
    if (!have_w || !have_d) throw UsageError("tree spec needs w=... and d=... (got '" + text + "')");
    return args;
}

std::size_t parse_tt_capacity(std::uint64_t v) {
    if (v == 0 || (v & (v - 1)) != 0) throw UsageError("tt capacity must be a power of two");
    return static_cast<std::size_t>(v);
}

gts::OthelloBoard load_position(const std::string& inline_text, const std::string& file) {
    if (inline_text.empty() == file.empty())
        throw UsageError("give exactly one of --position or --position-file");
    if (!inline_text.empty()) return gts::parse_position(inline_text);
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open position file: " + file);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return gts::parse_position(line);
    }
    throw gts::ParseError("position file has no position line: " + file);
}

std::string merit_text(gts::Score v) {
    if (v >= gts::kInf) return "+INF";
    if (v <= -gts::kInf) return "-INF";
    return std::to_string(v);
}

void print_step(std::ostream& os, const gts::StepRecord& rec) {
    os << "step " << rec.step << ": case " << gts::to_string(rec.case_id) << " pop ("
       << rec.popped.path.to_string() << ", " << gts::to_string(rec.popped.status) << ", "
       << merit_text(rec.popped.merit) << ")";
    if (!rec.pushed.empty()) {
        os << " push [";
        for (std::size_t i = 0; i < rec.pushed.size(); ++i) {
            if (i) os << ", ";
            os << "(" << rec.pushed[i].path.to_string() << ", " << gts::to_string(rec.pushed[i].status)
               << ", " << merit_text(rec.pushed[i].merit) << ")";
        }
        os << "]";
    }
    if (rec.purged > 0) os << " purged " << rec.purged;
    os << " open " << rec.open_size_after;
    if (rec.final_value) os << " final value " << *rec.final_value;
    os << '\n';
}

void print_result_stats(std::ostream& os, const gts::SearchStats& s) {
    os << "leaf_evals " << s.leaf_evals << "\nleaf_evals_final_iter " << s.leaf_evals_final_iter
       << "\ninterior_expansions " << s.interior_expansions << "\ntt_probes " << s.tt_probes
       << "\ntt_hits " << s.tt_hits << "\nopen_peak " << s.open_peak << "\ngamma_iterations "
       << s.gamma_iterations << '\n';
}

// Runs SSS* step by step over either game, printing the trace and optionally
// the DOT rendering of what the run touched.
template <gts::Game G>
int run_trace(const G& game, const typename G::State& root, int depth, std::uint64_t max_steps,
              const std::string& dot_path, const gts::SearchOptions& sopt) {
    gts::SssSearch<G> search(game, root, depth, sopt);
    std::set<gts::DeweyPath> evaluated, solved_interior, touched;
    std::uint64_t steps = 0;
    while (!search.done()) {
        if (++steps > max_steps) {
            std::cerr << "trace: step budget (" << max_steps << ") exceeded\n";
            return kExitRuntime;
        }
        const gts::StepRecord rec = search.gamma_step();
        print_step(std::cout, rec);
        touched.insert(rec.popped.path);
        if (rec.case_id == gts::GammaCase::F3) evaluated.insert(rec.popped.path);
        if ((rec.case_id == gts::GammaCase::B2 || rec.case_id == gts::GammaCase::B4) &&
            !rec.pushed.empty())
            solved_interior.insert(rec.pushed.front().path);
        for (const auto& p : rec.pushed) touched.insert(p.path);
    }
    const gts::SearchStats stats = search.stats();
    std::cout << "value " << search.value() << " after " << steps << " steps\n";
    print_result_stats(std::cout, stats);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot write dot file: " + dot_path);
        gts::write_dot(out, game, root, depth, evaluated, solved_interior, touched);
        std::cout << "wrote " << dot_path << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"game-tree search workbench: alpha-beta, SSS*, and friends over Othello and synthetic trees"};
    app.require_subcommand(1);

    // gen-suite
    auto* gen = app.add_subcommand("gen-suite", "generate a benchmark suite of Othello positions");
    std::string gen_seed = "0xC0FFEE";
    int gen_count = 50, gen_min_ply = 8, gen_max_ply = 44;
    std::string gen_out;
    gen->add_option("--seed", gen_seed, "playout seed (decimal or 0x-hex)");
    gen->add_option("--count", gen_count, "number of positions");
    gen->add_option("--min-ply", gen_min_ply, "minimum playout length");
    gen->add_option("--max-ply", gen_max_ply, "maximum playout length");
    gen->add_option("-o,--output", gen_out, "output suite file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run engines over a suite and write a CSV");
    std::string bench_suite, bench_engines = "ab_enhanced,mt_sss", bench_depths = "2..8", bench_out;
    std::uint64_t bench_tt = 1ull << 20, bench_budget = 100'000'000;
    bool bench_timings = false;
    bench->add_option("--suite", bench_suite, "suite file")->required();
    bench->add_option("--engines", bench_engines, "comma list: minimax,ab,ab_enhanced,sss,mt_sss");
    bench->add_option("--depths", bench_depths, "inclusive range A..B or single depth");
    bench->add_option("-o,--output", bench_out, "output CSV file")->required();
    bench->add_option("--tt-capacity", bench_tt, "transposition table entries (power of two)");
    bench->add_option("--budget", bench_budget, "leaf-eval budget per search");
    bench->add_flag("--timings", bench_timings, "write real elapsed_ns (breaks byte-reproducibility)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the search property suites on synthetic trees");
    std::string verify_seed = "0x5EEDBA5E";
    int verify_trees = 1000, verify_dom = 500, verify_strat = 200, verify_maxd = 0;
    std::uint64_t verify_tt = 1ull << 16;
    verify->add_option("--seed", verify_seed, "tree generation seed");
    verify->add_option("--trees", verify_trees, "oracle-equivalence tree count");
    verify->add_option("--dominance-trees", verify_dom, "dominance tree count");
    verify->add_option("--strategy-trees", verify_strat, "strategy-theorem tree count");
    verify->add_option("--max-depth", verify_maxd, "cap synthetic tree depth (0 = defaults)");
    verify->add_option("--tt-capacity", verify_tt, "transposition table entries (power of two)");

    // trace
    auto* trace = app.add_subcommand("trace", "step SSS* and print every gamma application");
    std::string trace_tree, trace_pos, trace_pos_file, trace_dot;
    int trace_depth = 0;
    std::uint64_t trace_max_steps = 100'000;
    trace->add_option("--tree", trace_tree, "synthetic tree spec: w=2,d=3,seed=1");
    trace->add_option("--position", trace_pos, "Othello position text (64 chars, space, side)");
    trace->add_option("--position-file", trace_pos_file, "file with one position line");
    trace->add_option("--depth", trace_depth, "search depth (defaults to d for --tree)");
    trace->add_option("--dot", trace_dot, "also write a DOT rendering of the tree");
    trace->add_option("--max-steps", trace_max_steps, "step budget");

    // strategies
    auto* strat = app.add_subcommand("strategies", "enumerate the strategies of a synthetic tree");
    std::string strat_tree;
    strat->add_option("--tree", strat_tree, "synthetic tree spec: w=2,d=4,seed=7")->required();

    // best-move
    auto* best = app.add_subcommand("best-move", "pick a move for a position with one engine");
    std::string best_pos, best_pos_file, best_engine = "ab_enhanced";
    int best_depth = 0;
    std::uint64_t best_tt = 1ull << 20, best_budget = 100'000'000;
    best->add_option("--position", best_pos, "Othello position text");
    best->add_option("--position-file", best_pos_file, "file with one position line");
    best->add_option("--engine", best_engine, "minimax, ab, ab_enhanced, sss, or mt_sss");
    best->add_option("--depth", best_depth, "search depth (>= 1)")->required();
    best->add_option("--tt-capacity", best_tt, "transposition table entries (power of two)");
    best->add_option("--budget", best_budget, "leaf-eval budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const std::uint64_t seed = parse_seed(gen_seed);
            if (gen_count < 0) throw UsageError("count must be >= 0");
            if (gen_min_ply < 0 || gen_min_ply > gen_max_ply || gen_max_ply > 58)
                throw UsageError("need 0 <= min-ply <= max-ply <= 58");
            const gts::Suite suite = gts::gen_suite(seed, gen_count, gen_min_ply, gen_max_ply);
            std::ofstream out(gen_out);
            if (!out) throw std::runtime_error("cannot write suite file: " + gen_out);
            gts::save_suite(out, suite);
            std::cout << "wrote " << suite.positions.size() << " positions (seed "
                      << format_seed(seed) << ", ply " << gen_min_ply << ".." << gen_max_ply
                      << ") to " << gen_out << '\n';
            return 0;
        }

        if (bench->parsed()) {
            const auto engines = parse_engines(bench_engines);
            const auto [dmin, dmax] = parse_depth_range(bench_depths);
            if (dmax > 12) throw UsageError("bench depths are limited to 1..12");
            gts::SearchOptions sopt;
            sopt.tt_capacity = parse_tt_capacity(bench_tt);
            sopt.leaf_budget = bench_budget;
            std::ifstream in(bench_suite);
            if (!in) throw std::runtime_error("cannot open suite file: " + bench_suite);
            const gts::Suite suite = gts::load_suite(in);
            const auto records = gts::run_suite(suite, engines, dmin, dmax, sopt);
            std::ofstream out(bench_out);
            if (!out) throw std::runtime_error("cannot write CSV file: " + bench_out);
            gts::write_csv(out, records, bench_timings);
            std::cout << "wrote " << records.size() << " records to " << bench_out << '\n';
            gts::write_summary(std::cout, records);
            return 0;
        }

        if (verify->parsed()) {
            gts::VerifyOptions vopt;
            vopt.seed = parse_seed(verify_seed);
            vopt.trees = verify_trees;
            vopt.dominance_trees = verify_dom;
            vopt.strategy_trees = verify_strat;
            vopt.max_depth = verify_maxd;
            vopt.tt_capacity = parse_tt_capacity(verify_tt);
            const gts::VerifyReport report = gts::run_verification(vopt);
            gts::write_report(std::cout, report);
            return report.all_pass() ? 0 : kExitRuntime;
        }

        if (trace->parsed()) {
            gts::SearchOptions sopt;
            if (!trace_tree.empty()) {
                if (!trace_pos.empty() || !trace_pos_file.empty())
                    throw UsageError("give either --tree or a position, not both");
                const TreeArgs t = parse_tree_spec(trace_tree);
                const gts::SyntheticTree tree = gts::gen_tree(t.w, t.d, t.seed);
                const gts::SyntheticGame game(tree);
                const int depth = trace_depth > 0 ? trace_depth : t.d;
                return run_trace(game, gts::DeweyPath{}, depth, trace_max_steps, trace_dot, sopt);
            }
            const gts::OthelloBoard board = load_position(trace_pos, trace_pos_file);
            if (trace_depth < 1) throw UsageError("--depth >= 1 is required with a position");
            if (gts::is_terminal(board)) {
                std::cerr << "trace: position is terminal\n";
                return kExitBadPosition;
            }
            const gts::OthelloGame game = gts::OthelloGame::rooted_at(board);
            return run_trace(game, board, trace_depth, trace_max_steps, trace_dot, sopt);
        }

        if (strat->parsed()) {
            const TreeArgs t = parse_tree_spec(strat_tree);
            const gts::SyntheticTree tree = gts::gen_tree(t.w, t.d, t.seed);
            const auto strategies = gts::enumerate_strategies(tree);
            std::cout << strategies.size() << " strategies for tree w=" << t.w << " d=" << t.d
                      << " seed=" << format_seed(t.seed) << '\n';
            gts::Score best_of_min = -gts::kInf;
            for (std::size_t i = 0; i < strategies.size(); ++i) {
                const gts::Score v = gts::strategy_value(tree, strategies[i]);
                best_of_min = std::max(best_of_min, v);
                std::cout << "strategy " << i << ": value " << v << ", leaves";
                for (const auto& leaf : strategies[i].leaf_paths)
                    std::cout << ' ' << leaf.to_string();
                std::cout << '\n';
            }
            std::cout << "max-of-min " << best_of_min << '\n';
            std::cout << "minimax    " << gts::tree_minimax_value(tree) << '\n';
            return 0;
        }

        if (best->parsed()) {
            const auto kind = gts::engine_from_name(best_engine);
            if (!kind) throw UsageError("unknown engine '" + best_engine + "'");
            if (best_depth < 1) throw UsageError("--depth must be >= 1");
            const gts::OthelloBoard board = load_position(best_pos, best_pos_file);
            if (gts::is_terminal(board)) {
                std::cerr << "best-move: position is terminal\n";
                return kExitBadPosition;
            }
            gts::SearchOptions sopt;
            sopt.tt_capacity = parse_tt_capacity(best_tt);
            sopt.leaf_budget = best_budget;
            const gts::OthelloGame game = gts::OthelloGame::rooted_at(board);
            const auto res = gts::run_engine(*kind, game, board, best_depth, sopt);
            std::cout << "move " << (res.best_move ? game.action_name(*res.best_move) : "-")
                      << "\nvalue " << res.value << "\nengine " << gts::engine_name(*kind)
                      << "\ndepth " << best_depth << '\n';
            print_result_stats(std::cout, res.stats);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const gts::EngineDisagreement& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const gts::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadPosition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}

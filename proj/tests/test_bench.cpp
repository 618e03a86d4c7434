#include <sstream>

#include <doctest.h>

#include "gts/bench.hpp"
#include "gts/verify.hpp"

using namespace gts;

namespace {

Suite small_suite(int count) { return gen_suite(0xC0FFEE, count, 8, 20); }

} // namespace

TEST_CASE("gen_suite is reproducible byte for byte") {
    const Suite a = gen_suite(0xC0FFEE, 50, 8, 44);
    const Suite b = gen_suite(0xC0FFEE, 50, 8, 44);
    REQUIRE(a.positions.size() == 50);
    std::ostringstream sa, sb;
    save_suite(sa, a);
    save_suite(sb, b);
    CHECK(sa.str() == sb.str());
    CHECK(gen_suite(0xC0FFEE + 1, 50, 8, 44).positions[0].board != a.positions[0].board);
}

TEST_CASE("gen_suite edge cases and validation") {
    CHECK(gen_suite(1, 0, 8, 44).positions.empty());
    CHECK_THROWS_AS(gen_suite(1, 5, 50, 10), std::invalid_argument);
    CHECK_THROWS_AS(gen_suite(1, 5, -1, 10), std::invalid_argument);
    CHECK_THROWS_AS(gen_suite(1, 5, 0, 59), std::invalid_argument);
}

TEST_CASE("every suite position has a flipping move") {
    const Suite s = small_suite(30);
    for (const auto& e : s.positions) {
        const auto moves = legal_moves(e.board);
        REQUIRE(!moves.empty());
        CHECK_FALSE(moves[0].is_pass());
    }
}

TEST_CASE("suite save/load round-trip with comments") {
    const Suite s = small_suite(5);
    std::ostringstream os;
    os << "# a comment line\n\n";
    save_suite(os, s);
    std::istringstream is(os.str());
    const Suite loaded = load_suite(is);
    REQUIRE(loaded.positions.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(loaded.positions[i].board == s.positions[i].board);
        CHECK(loaded.positions[i].id == static_cast<int>(i));
    }
}

TEST_CASE("run_suite produces one record per (position, engine, depth)") {
    const Suite s = small_suite(5);
    const std::vector<EngineKind> engines{EngineKind::AlphaBeta, EngineKind::AlphaBetaEnhanced};
    const auto records = run_suite(s, engines, 2, 3);
    REQUIRE(records.size() == 5 * 2 * 2);
    // ordering: position, then engine in the given order, then depth
    int i = 0;
    for (int pos = 0; pos < 5; ++pos)
        for (const EngineKind e : engines)
            for (int d = 2; d <= 3; ++d, ++i) {
                CHECK(records[i].position_id == pos);
                CHECK(records[i].engine == e);
                CHECK(records[i].depth == d);
            }
    // value equality across engines per (position, depth)
    for (int pos = 0; pos < 5; ++pos)
        for (int d = 2; d <= 3; ++d) {
            Score expect = 0;
            bool first = true;
            for (const auto& r : records)
                if (r.position_id == pos && r.depth == d) {
                    if (!first) CHECK(r.root_value == expect);
                    expect = r.root_value;
                    first = false;
                }
        }
}

TEST_CASE("run_suite validates the depth range") {
    const Suite s = small_suite(1);
    CHECK_THROWS_AS(run_suite(s, {EngineKind::Minimax}, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(s, {EngineKind::Minimax}, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(s, {EngineKind::Minimax}, 2, 13), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(s, {}, 2, 3), std::invalid_argument);
}

TEST_CASE("csv header is exact and timings are zeroed by default") {
    const Suite s = small_suite(2);
    const auto records = run_suite(s, {EngineKind::SssStar}, 2, 2);
    std::ostringstream os;
    write_csv(os, records);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header ==
          "position_id,engine,depth,leaf_evals,leaf_evals_final_iter,interior_expansions,"
          "tt_probes,tt_hits,open_peak,gamma_iterations,elapsed_ns,root_value,best_move");
    std::string row;
    while (std::getline(is, row)) {
        // elapsed_ns is the 11th column
        std::istringstream cells(row);
        std::string cell;
        for (int i = 0; i < 11; ++i) std::getline(cells, cell, ',');
        CHECK(cell == "0");
    }
}

TEST_CASE("csv output is byte-identical across runs") {
    const Suite s = small_suite(3);
    const auto run = [&] {
        std::ostringstream os;
        write_csv(os, run_suite(s, {EngineKind::AlphaBetaEnhanced, EngineKind::MtSss}, 2, 3));
        return os.str();
    };
    CHECK(run() == run());
}

TEST_CASE("summary: identical engines give ratio 1, geomean of {4,16} is 8") {
    std::vector<BenchRecord> records;
    for (int pos = 0; pos < 2; ++pos) {
        for (const EngineKind e : {EngineKind::AlphaBetaEnhanced, EngineKind::MtSss}) {
            BenchRecord r;
            r.position_id = pos;
            r.engine = e;
            r.depth = 2;
            r.stats.leaf_evals = pos == 0 ? 4 : 16;
            records.push_back(r);
        }
    }
    std::ostringstream os;
    write_summary(os, records);
    const std::string text = os.str();
    CHECK(text.find("depth 2: ab_enhanced 8.0000 mt_sss 8.0000") != std::string::npos);
    CHECK(text.find("depth 2: 1.0000") != std::string::npos);
}

TEST_CASE("summary reports growth factors per parity class") {
    std::vector<BenchRecord> records;
    for (int pos = 0; pos < 2; ++pos)
        for (int d = 2; d <= 4; ++d) {
            BenchRecord r;
            r.position_id = pos;
            r.engine = EngineKind::AlphaBeta;
            r.depth = d;
            r.stats.leaf_evals = static_cast<std::uint64_t>(1) << (2 * d); // growth 4 per ply
            records.push_back(r);
        }
    std::ostringstream os;
    write_summary(os, records);
    const std::string text = os.str();
    CHECK(text.find("2->3 (even->odd) 4.0000") != std::string::npos);
    CHECK(text.find("3->4 (odd->even) 4.0000") != std::string::npos);
    CHECK(text.find("ab parity means: even->odd 4.0000, odd->even 4.0000 -> even->odd does not exceed odd->even") != std::string::npos);
    CHECK_THROWS_AS(write_summary(os, {}), std::invalid_argument);
}

TEST_CASE("verify runs clean on a small schedule") {
    VerifyOptions opt;
    opt.trees = 30;
    opt.dominance_trees = 10;
    opt.strategy_trees = 10;
    opt.max_depth = 6;
    const VerifyReport report = run_verification(opt);
    CHECK(report.all_pass());
    REQUIRE(report.properties.size() == 5);
    CHECK(report.properties[0].name == "oracle-equivalence");
    CHECK(report.properties[1].name == "stockman-dominance");
    CHECK(report.properties[2].name == "strategy-theorem");
    CHECK(report.properties[3].name == "mt-sss-equivalence");
    CHECK(report.properties[4].name == "open-peak-bound");
    CHECK_FALSE(report.leaf_count_lines.empty());
    CHECK_FALSE(report.open_peak_lines.empty());
}

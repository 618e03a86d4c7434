#include <map>

#include <doctest.h>

#include "gts/alphabeta_enhanced.hpp"
#include "gts/game.hpp"
#include "gts/minimax.hpp"
#include "gts/mtsss.hpp"
#include "gts/transposition.hpp"

using namespace gts;

TEST_CASE("store then probe round-trips") {
    TranspositionTable tt(1 << 10);
    tt.store(42, 5, 10, 10, 7);
    const auto p = tt.probe(42, 5);
    REQUIRE(p.has_value());
    CHECK(p->has_bounds);
    CHECK(p->lower == 10);
    CHECK(p->upper == 10);
    CHECK(p->move_code == 7);
}

TEST_CASE("shallow entries yield the move but not the bounds") {
    TranspositionTable tt(1 << 10);
    tt.store(42, 3, 1, 9, 7);
    const auto p = tt.probe(42, 5);
    REQUIRE(p.has_value());
    CHECK_FALSE(p->has_bounds);
    CHECK(p->move_code == 7);
}

TEST_CASE("probing an empty table misses") {
    TranspositionTable tt(1 << 10);
    CHECK_FALSE(tt.probe(42, 0).has_value());
    CHECK(tt.probes() == 1);
    CHECK(tt.hits() == 0);
}

TEST_CASE("re-storing the same key and depth intersects the bounds") {
    TranspositionTable tt(1 << 10);
    tt.store(42, 4, -kInf, 50, -1);
    tt.store(42, 4, 30, kInf, 3);
    const auto p = tt.probe(42, 4);
    REQUIRE(p.has_value());
    REQUIRE(p->has_bounds);
    CHECK(p->lower == 30);
    CHECK(p->upper == 50);
    CHECK(p->move_code == 3);
}

TEST_CASE("colliding keys follow depth-preferred replacement") {
    TranspositionTable tt(1 << 10);
    const std::uint64_t k1 = 5;
    const std::uint64_t k2 = 5 + (1 << 10); // same slot, different key
    tt.store(k1, 4, 1, 1, -1);
    tt.store(k2, 6, 2, 2, -1); // deeper: replaces
    CHECK_FALSE(tt.probe(k1, 0).has_value());
    CHECK(tt.probe(k2, 6).has_value());
    tt.store(k1, 2, 3, 3, -1); // shallower, same epoch: stays k2
    CHECK(tt.probe(k2, 6).has_value());
    CHECK_FALSE(tt.probe(k1, 0).has_value());
}

TEST_CASE("a new epoch makes stale entries replaceable but still probeable") {
    TranspositionTable tt(1 << 10);
    tt.store(5, 6, 1, 1, -1);
    const auto e0 = tt.epoch();
    tt.new_epoch();
    CHECK(tt.epoch() == e0 + 1);
    CHECK(tt.probes() == 0); // counters restart
    CHECK(tt.probe(5, 6).has_value());
    tt.store(5 + (1 << 10), 1, 2, 2, -1); // shallow, but the old entry is stale
    CHECK_FALSE(tt.probe(5, 6).has_value());
    CHECK(tt.probe(5 + (1 << 10), 1).has_value());
}

TEST_CASE("no false hits on colliding slots") {
    TranspositionTable tt(1 << 8);
    for (std::uint64_t i = 0; i < 4; ++i) tt.store(7 + (i << 8), 3, Score(i), Score(i), -1);
    // only the last writer of the slot answers, and only for its own key
    int answered = 0;
    for (std::uint64_t i = 0; i < 4; ++i) {
        const auto p = tt.probe(7 + (i << 8), 3);
        if (p) {
            ++answered;
            CHECK(p->lower == Score(i));
        }
    }
    CHECK(answered == 1);
    CHECK(tt.hits() <= tt.probes());
}

TEST_CASE("store rejects crossed bounds") {
    TranspositionTable tt(1 << 4);
    CHECK_THROWS_AS(tt.store(1, 0, 5, 4, -1), std::invalid_argument);
}

TEST_CASE("capacity must be a power of two") {
    CHECK_THROWS_AS(TranspositionTable(0), std::invalid_argument);
    CHECK_THROWS_AS(TranspositionTable(1000), std::invalid_argument);
    CHECK_NOTHROW(TranspositionTable(1 << 12));
}

TEST_CASE("every surviving entry brackets the oracle value of its node and depth") {
    // Tree searches store per-node entries; with node ids under the capacity
    // there are no cross-key evictions, so scan the whole table afterwards and
    // check each entry against a direct minimax of its subtree.
    const SyntheticTree tree = gen_tree(3, 6, 99);
    const SyntheticGame game(tree);
    SearchOptions opt;
    opt.tt_capacity = 1 << 12; // > (3^7-1)/2 node ids
    const DeweyPath root;

    // map node id -> path for the scan
    std::map<std::uint64_t, DeweyPath> paths;
    const auto index = [&](const auto& self, const DeweyPath& p) -> void {
        paths[tree.node_id(p)] = p;
        if (tree.is_leaf(p)) return;
        for (std::uint32_t c = 0; c < 3; ++c) self(self, p.child(c));
    };
    index(index, root);

    const auto check_table = [&](const TranspositionTable& tt) {
        int checked = 0;
        for (std::size_t i = 0; i < tt.capacity(); ++i) {
            const TTEntry& e = tt.slot_at(i);
            if (e.epoch == 0) continue;
            REQUIRE(paths.count(e.key) == 1);
            const DeweyPath& p = paths[e.key];
            const Score v = minimax(game, p, e.depth).value;
            CHECK(e.lower <= v);
            CHECK(v <= e.upper);
            ++checked;
        }
        CHECK(checked > 0);
    };

    {
        EnhancedAlphaBeta<SyntheticGame> engine(game, opt);
        CHECK(engine.run(root, 6).value == minimax(game, root, 6).value);
        check_table(engine.table());
    }
    {
        MtSssSearch<SyntheticGame> engine(game, opt);
        CHECK(engine.run(root, 6).value == minimax(game, root, 6).value);
        check_table(engine.table());
    }
}

#include <vector>

#include <doctest.h>

#include "gts/open_list.hpp"
#include "gts/rng.hpp"
#include "gts/sss.hpp"

using namespace gts;

namespace {

using IntState = int;

SssState<IntState> state(std::vector<std::uint32_t> path, Score merit,
                         SssStatus status = SssStatus::Live) {
    return {DeweyPath(std::move(path)), status, merit, Player::Max, 0};
}

} // namespace

TEST_CASE("push, size, and peak") {
    OpenList<IntState> open;
    open.push(state({0}, 50));
    open.push(state({1}, 70));
    CHECK(open.size() == 2);
    CHECK(open.peak() == 2);
    open.pop_max();
    open.pop_max();
    CHECK(open.size() == 0);
    CHECK(open.peak() == 2); // never decreases
    open.push(state({2}, 10));
    CHECK(open.peak() == 2);
}

TEST_CASE("duplicate paths are rejected") {
    OpenList<IntState> open;
    open.push(state({0, 1}, 50));
    CHECK_THROWS_AS(open.push(state({0, 1}, 60)), std::logic_error);
}

TEST_CASE("pop_max returns highest merit, then leftmost path") {
    OpenList<IntState> open;
    open.push(state({0}, 50));
    open.push(state({1}, 70));
    CHECK(open.pop_max().merit == 70);

    open.push(state({1}, 70));
    const auto head = open.pop_max(); // {0} at 50 vs {1} at 70
    CHECK(head.path == DeweyPath({1}));

    OpenList<IntState> tie;
    tie.push(state({1}, 70));
    tie.push(state({0}, 70));
    CHECK(tie.pop_max().path == DeweyPath({0})); // leftmost wins the tie
    CHECK_THROWS_AS([&] { OpenList<IntState> e; e.pop_max(); }(), std::logic_error);
}

TEST_CASE("purge removes proper descendants only") {
    OpenList<IntState> open;
    open.push(state({0, 1}, 5));
    open.push(state({0, 0, 2}, 6));
    open.push(state({1, 0}, 7));
    CHECK(open.purge_descendants(DeweyPath({0})) == 2);
    CHECK(open.size() == 1);
    CHECK(open.contains(DeweyPath({1, 0})));

    // prefix not present: nothing happens
    CHECK(open.purge_descendants(DeweyPath({5})) == 0);
    CHECK(open.size() == 1);

    // the state at exactly the prefix survives
    open.push(state({1}, 9));
    CHECK(open.purge_descendants(DeweyPath({1})) == 1);
    CHECK(open.contains(DeweyPath({1})));
}

TEST_CASE("max-heap contract against a naive scan") {
    OpenList<IntState> open;
    std::vector<SssState<IntState>> mirror;
    SplitMix64 rng(2024);
    int next_path = 0;
    for (int step = 0; step < 500; ++step) {
        const bool do_push = mirror.empty() || rng.below(100) < 60;
        if (do_push) {
            auto s = state({static_cast<std::uint32_t>(next_path++)},
                           static_cast<Score>(rng.below(50)));
            open.push(s);
            mirror.push_back(s);
        } else {
            const auto popped = open.pop_max();
            std::size_t best = 0;
            for (std::size_t i = 1; i < mirror.size(); ++i) {
                if (mirror[i].merit > mirror[best].merit ||
                    (mirror[i].merit == mirror[best].merit && mirror[i].path < mirror[best].path))
                    best = i;
            }
            CHECK(popped.merit == mirror[best].merit);
            CHECK(popped.path == mirror[best].path);
            mirror.erase(mirror.begin() + static_cast<std::ptrdiff_t>(best));
        }
        CHECK(open.size() == mirror.size());
    }
}

TEST_CASE("popped merits never increase across a full sss run") {
    const SyntheticTree tree = gen_tree(2, 4, 77);
    const SyntheticGame game(tree);
    SssSearch<SyntheticGame> search(game, DeweyPath{}, 4);
    Score last = kInf;
    while (!search.done()) {
        const StepRecord rec = search.gamma_step();
        CHECK(rec.popped.merit <= last);
        last = rec.popped.merit;
    }
}

TEST_CASE("identical op sequences pop identically") {
    const auto run = [] {
        OpenList<IntState> open;
        SplitMix64 rng(7);
        std::vector<std::pair<Score, DeweyPath>> pops;
        for (int i = 0; i < 200; ++i) {
            open.push(state({static_cast<std::uint32_t>(i)}, static_cast<Score>(rng.below(10))));
            if (i % 3 == 2) {
                const auto s = open.pop_max();
                pops.emplace_back(s.merit, s.path);
            }
        }
        while (!open.empty()) {
            const auto s = open.pop_max();
            pops.emplace_back(s.merit, s.path);
        }
        return pops;
    };
    CHECK(run() == run());
}

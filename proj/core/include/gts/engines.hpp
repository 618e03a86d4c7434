#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gts/alphabeta.hpp"
#include "gts/alphabeta_enhanced.hpp"
#include "gts/minimax.hpp"
#include "gts/mtsss.hpp"
#include "gts/sss.hpp"

namespace gts {

enum class EngineKind { Minimax, AlphaBeta, AlphaBetaEnhanced, SssStar, MtSss };

inline const char* engine_name(EngineKind k) {
    switch (k) {
        case EngineKind::Minimax: return "minimax";
        case EngineKind::AlphaBeta: return "ab";
        case EngineKind::AlphaBetaEnhanced: return "ab_enhanced";
        case EngineKind::SssStar: return "sss";
        default: return "mt_sss";
    }
}

inline std::optional<EngineKind> engine_from_name(std::string_view name) {
    if (name == "minimax") return EngineKind::Minimax;
    if (name == "ab") return EngineKind::AlphaBeta;
    if (name == "ab_enhanced") return EngineKind::AlphaBetaEnhanced;
    if (name == "sss") return EngineKind::SssStar;
    if (name == "mt_sss") return EngineKind::MtSss;
    return std::nullopt;
}

inline std::vector<EngineKind> all_engines() {
    return {EngineKind::Minimax, EngineKind::AlphaBeta, EngineKind::AlphaBetaEnhanced,
            EngineKind::SssStar, EngineKind::MtSss};
}

template <Game G>
SearchResult<typename G::Action> run_engine(EngineKind kind, const G& g,
                                            const typename G::State& root, int depth,
                                            const SearchOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult<typename G::Action> res;
    switch (kind) {
        case EngineKind::Minimax: res = minimax(g, root, depth, opt); break;
        case EngineKind::AlphaBeta: res = alphabeta(g, root, depth, -kInf, kInf, opt); break;
        case EngineKind::AlphaBetaEnhanced: res = alphabeta_enhanced(g, root, depth, opt); break;
        case EngineKind::SssStar: res = sss_star(g, root, depth, opt); break;
        case EngineKind::MtSss: res = mt_sss(g, root, depth, opt); break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.stats.elapsed_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return res;
}

// A move whose subtree value equals the root value, the first such move in
// the engine's final ordering.
template <Game G>
typename G::Action pick_best_move(EngineKind kind, const G& g, const typename G::State& root,
                                  int depth, const SearchOptions& opt = {}) {
    if (depth < 1) throw std::invalid_argument("pick_best_move: depth must be >= 1");
    if (g.is_terminal(root)) throw std::invalid_argument("pick_best_move: root is terminal");
    const auto res = run_engine(kind, g, root, depth, opt);
    if (!res.best_move) throw std::logic_error("pick_best_move: engine returned no move");
    return *res.best_move;
}

} // namespace gts

#pragma once

#include <cstdint>
#include <vector>

#include "hypertile/hypergraph.hpp"

namespace hypertile {

enum class FactorStatus
{
    FACTOR_FOUND,
    NO_FACTOR,
    TILING_ONLY,
};

const char *to_string(FactorStatus s);

struct FactorResult
{
    FactorStatus status = FactorStatus::NO_FACTOR;
    /// Pairwise-disjoint 4-sets, each spanning the requested pattern.
    std::vector<Quad> tiles;
    std::uint64_t nodes_explored = 0;
    /// Vertices left uncovered (TILING_ONLY).
    VertexSet uncovered;
    /// max_tiling only: the search ran to completion, so `tiles` is a maximum tiling.
    bool optimal = false;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Exact decision for a p-factor of H[within] (all of V by default).
///
/// Complete backtracking over exact covers by pattern 4-sets. The branching
/// vertex is the uncovered vertex lying in the fewest live candidates; live
/// counts are maintained incrementally with an undo trail, and refuted
/// uncovered sets are memoised. NO_FACTOR is only returned after the space
/// is exhausted; hitting `node_budget` throws Error{BudgetExhausted}.
FactorResult find_factor(const Hypergraph3 &h, Pattern4 p, std::uint64_t node_budget = kDefaultNodeBudget);
FactorResult find_factor(const Hypergraph3 &h, Pattern4 p, const VertexSet &within,
                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Shorthand for find_factor(...).status == FACTOR_FOUND.
bool has_factor(const Hypergraph3 &h, Pattern4 p, const VertexSet &within,
                std::uint64_t node_budget = kDefaultNodeBudget);

/// At least `target` disjoint p-copies if they exist; otherwise a maximum
/// tiling flagged `optimal`. Requires target <= n/4.
FactorResult max_tiling(const Hypergraph3 &h, Pattern4 p, int target,
                        std::uint64_t node_budget = kDefaultNodeBudget);

/// True iff the tiles are valid 4-sets of distinct in-range vertices, pairwise
/// disjoint, and each spans p. Independent of the search code.
bool verify_tiling(const Hypergraph3 &h, Pattern4 p, const std::vector<Quad> &tiles);

/// Least d such that every 3-graph on n vertices with δ₂ >= d has a p-factor,
/// by enumerating all 2^C(n,3) hypergraphs. Only n = 4 is accepted.
int brute_force_threshold(int n, Pattern4 p);

} // namespace hypertile

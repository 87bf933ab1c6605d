#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertile/hypergraph.hpp"

namespace hypertile {

/// Vertex-disjoint K₄−e copies (t1) and bare edges (t2).
struct Tiling
{
    std::vector<Quad> t1;
    std::vector<Triple> t2;

    [[nodiscard]] VertexSet covered() const;
    [[nodiscard]] VertexSet covered_by_copies() const;
    friend bool operator==(const Tiling &, const Tiling &) = default;
};

/// w(T) = 5|T₁| + 2|T₂|.
int weight(const Tiling &t);

/// Throws Error{InvalidTiling} unless members are disjoint, copies span K₄−e and edges are edges.
void validate_tiling(const Hypergraph3 &h, const Tiling &t);

enum class MoveKind
{
    ADD_COPY,
    ADD_EDGE,
    EXTEND_EDGE,
    UPGRADE_TWO_EDGES,
    SPLIT_EDGE_FOR_PAIRS,
    SPLIT_COPY_FOR_PAIRS,
};

const char *to_string(MoveKind k);

struct MoveRecord
{
    MoveKind kind = MoveKind::ADD_COPY;
    std::vector<Quad> removed_copies;
    std::vector<Triple> removed_edges;
    std::vector<Quad> added_copies;
    std::vector<Triple> added_edges;
    int delta_w = 0;
};

/// Result of applying `m`; the move must have been produced for `t`.
Tiling apply_move(const Tiling &t, const MoveRecord &m);

/// First applicable exchange move, in priority order:
///   ADD_COPY (+5), ADD_EDGE (+2), EXTEND_EDGE (+3, then +1), UPGRADE_TWO_EDGES (+1),
///   SPLIT_EDGE_FOR_PAIRS (+2), SPLIT_COPY_FOR_PAIRS (+1).
/// `order` fixes the vertex scanning order (identity when empty).
/// Throws Error{InvalidTiling} if t is not valid for h.
std::optional<MoveRecord> find_improving_move(const Hypergraph3 &h, const Tiling &t,
                                              const std::vector<int> &order = {});

struct GreedyResult
{
    Tiling tiling;
    std::vector<MoveRecord> trace;
    /// weight after each applied move, starting with the empty tiling's 0.
    std::vector<int> weights;
    int target = 0;
    int min_codegree = 0;
    std::uint64_t seed = 0;
    bool reached_target = false;
    /// δ₂ > (n + 2l - 2)/3 and 0 <= l <= (n - 13)/4.
    bool hypothesis_holds = false;
    /// Hypothesis held but the run got stuck below the target.
    bool counterexample = false;
    std::string diagnostics;

    [[nodiscard]] int iterations() const { return static_cast<int>(trace.size()); }
};

/// Applies improving moves until |T₁| >= l or none applies. A nonzero seed
/// permutes the vertex scanning order.
GreedyResult greedy_tile(const Hypergraph3 &h, int l, std::uint64_t seed = 0);

/// Whether the copy guarantee applies to (h, l).
bool copy_guarantee_applies(int n, int min_codegree, int l);

} // namespace hypertile

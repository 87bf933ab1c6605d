#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hypertile/hypergraph.hpp"

namespace hypertile::naive {

// Reference implementations that only read the edge list. Slow on purpose.

struct EdgeSet
{
    explicit EdgeSet(const Hypergraph3 &h);
    [[nodiscard]] bool has(int a, int b, int c) const;
    /// Edges among the four vertices.
    [[nodiscard]] int count4(int a, int b, int c, int d) const;

    int n = 0;
    std::set<Triple> edges;
};

/// Minimum codegree by counting, pair by pair, every vertex completing an edge.
int min_codegree(const EdgeSet &e);

/// Whether the vertices 0..n-1 split into 4-sets with at least `min_edges` edges
/// each. Recurses on the lowest uncovered vertex; no pruning, no memo.
bool has_factor(const EdgeSet &e, int min_edges);

/// Length-1 (x,y)-connectors: 3-sets S avoiding x, y with S+x and S+y spanning K4-e.
std::int64_t connectors_len1(const EdgeSet &e, int x, int y);

} // namespace hypertile::naive

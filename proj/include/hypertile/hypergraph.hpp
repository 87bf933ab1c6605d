#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hypertile/error.hpp"
#include "hypertile/vertex_set.hpp"

namespace hypertile {

/// Sorted vertex triple u < v < w.
using Triple = std::array<int, 3>;
/// Sorted vertex 4-set.
using Quad = std::array<int, 4>;

Triple make_triple(int a, int b, int c);
Quad make_quad(int a, int b, int c, int d);

inline VertexSet to_set(const Triple &t) { return VertexSet::of({t[0], t[1], t[2]}); }
inline VertexSet to_set(const Quad &q) { return VertexSet::of({q[0], q[1], q[2], q[3]}); }

/// The four 3-graphs on four vertices, keyed by how many triples they keep.
enum class Pattern4
{
    K4 = 4,
    K4MinusE = 3,
    K4Minus2E = 2,
    K4Minus3E = 1,
};

int edge_count(Pattern4 p);
/// Canonical triples over labels 0..3.
std::vector<Triple> pattern_triples(Pattern4 p);
/// CLI names: k4, k4m, k4m2e, k4m3e.
std::string pattern_name(Pattern4 p);
Pattern4 parse_pattern(const std::string &name);

/// Immutable 3-uniform hypergraph on vertices 0..n-1.
///
/// Pair neighbourhoods N(u,v) are stored as dense bitsets so codegree, link
/// and 4-set edge counts are a few word operations.
class Hypergraph3
{
public:
    /// Throws Error{OutOfRange, DegenerateTriple, DuplicateEdge}.
    static Hypergraph3 from_edge_list(int n, std::span<const Triple> triples);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<Triple> &edges() const { return edges_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }

    [[nodiscard]] const VertexSet &nbhd(int u, int v) const { return pair_nbhd_[index(u, v)]; }
    [[nodiscard]] int codegree(int u, int v) const { return nbhd(u, v).size(); }

    [[nodiscard]] bool has_edge(int u, int v, int w) const { return nbhd(u, v).contains(w); }
    [[nodiscard]] bool has_edge(const Triple &t) const { return has_edge(t[0], t[1], t[2]); }

    /// Number of the four triples of q that are edges.
    [[nodiscard]] int edges_in(const Quad &q) const;
    [[nodiscard]] int edges_in(int a, int b, int c, int d) const
    {
        return int(has_edge(a, b, c)) + int(has_edge(a, b, d)) + int(has_edge(a, c, d)) +
               int(has_edge(b, c, d));
    }

    /// Whether q spans a copy of p.
    [[nodiscard]] bool spans(const Quad &q, Pattern4 p) const { return edges_in(q) >= hypertile::edge_count(p); }

    /// Induced sub-hypergraph on `keep`, relabelled to 0..|keep|-1 in increasing order.
    [[nodiscard]] Hypergraph3 induced(const VertexSet &keep) const;

    friend bool operator==(const Hypergraph3 &a, const Hypergraph3 &b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Hypergraph3() = default;
    [[nodiscard]] std::size_t index(int u, int v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<VertexSet> pair_nbhd_;
};

/// δ₂(H): minimum over all pairs of |N(u,v)|. Requires n >= 2.
int min_codegree(const Hypergraph3 &h);

/// L(t): vertices v outside t such that t ∪ {v} spans K₄−e.
VertexSet link_L(const Hypergraph3 &h, const Triple &t);

/// All 4-sets spanning p, in lexicographic order.
std::vector<Quad> pattern_copies(const Hypergraph3 &h, Pattern4 p);
/// Same, restricted to 4-sets inside `within`.
std::vector<Quad> pattern_copies(const Hypergraph3 &h, Pattern4 p, const VertexSet &within);

struct EdgeExtensionResult
{
    bool holds = true;
    /// Edge minimising |L(e)|; meaningless when the hypergraph has no edges.
    Triple worst_edge{};
    int worst_link_size = 0;
    /// min over edges of |L(e)| - (3δ₂ - n)/2.
    double slack = 0.0;
    bool has_edges = false;
};

/// Checks |L(e)| >= (3δ₂(H) - n)/2 for every edge.
EdgeExtensionResult edge_extension_check(const Hypergraph3 &h);

/// Edge and K₄−e 4-set counts per type under a labelling into at most three classes.
struct PartitionStats
{
    std::vector<int> labels;
    /// Keyed by sorted label string, e.g. "AAB".
    std::map<std::string, std::int64_t> edge_counts;
    /// Keyed by sorted label string, e.g. "AAAB"; counts 4-sets spanning K₄−e.
    std::map<std::string, std::int64_t> pattern_counts;
};

/// Labels are 0, 1, 2 and print as A, B, C. Throws Error{UnlabelledVertex}.
PartitionStats partition_stats(const Hypergraph3 &h, std::span<const int> labels);

} // namespace hypertile

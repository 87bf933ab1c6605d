#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertile/hypergraph.hpp"

namespace hypertile {

struct ConnectorCount
{
    std::int64_t count = 0;
    /// Filled only when requested.
    std::vector<Triple> sets;
};

/// Exact number of 3-sets S, disjoint from {x, y}, with both S ∪ {x} and
/// S ∪ {y} spanning K₄−e (the length-1 (x,y)-connectors).
ConnectorCount connectors_len1(const Hypergraph3 &h, int x, int y, bool collect = false);

/// All-pairs length-1 connector counts; entry [x][y], zero diagonal.
std::vector<std::vector<std::int64_t>> connector_matrix(const Hypergraph3 &h, int threads = 0);

struct ConnectorQuery
{
    enum class Mode
    {
        EXACT,
        SAMPLED
    };

    int length = 1;
    /// Density threshold against n^{4·length - 1}.
    double eta = 1e-3;
    Mode mode = Mode::EXACT;
    int sample_count = 400;
    std::uint64_t seed = 1;
};

/// Per-candidate evidence behind a close-neighbourhood decision.
struct ClosenessEstimate
{
    int y = 0;
    /// Exact count (EXACT) or point estimate (SAMPLED).
    double count = 0.0;
    /// Two-sided 95% Wilson interval on the count; equal to `count` when exact.
    double low = 0.0;
    double high = 0.0;
    int hits = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    bool close = false;
    /// "exact", "confident" or "uncertain" (threshold inside the interval).
    std::string annotation;
};

struct CloseNeighborhood
{
    int x = 0;
    double threshold = 0.0;
    VertexSet members;
    std::vector<ClosenessEstimate> evidence;
};

/// Ñ_{i,η}(x): the y whose (x,y)-connector count of the given length
/// reaches η·n^{4i-1}. Exact for length 1; otherwise uniform sampling of
/// (4i-1)-sets, each side checked with the factor solver.
/// Throws Error{SamplingBudgetZero} for sampled queries with no samples,
/// Error{OutOfRange} for EXACT with length != 1.
CloseNeighborhood close_neighborhood(const Hypergraph3 &h, int x, const ConnectorQuery &q);

/// Thresholds for the four bridge conditions on a partition (X, Y).
struct BridgeParams
{
    double eps1 = 0.1;
    double eps3 = 0.1;
    double eps4 = 0.1;
};

struct BridgeStats
{
    /// (i) edges e with |L(e) ∩ X| >= ε₁n and |L(e) ∩ Y| >= ε₁n.
    std::int64_t edges_linking_both = 0;
    /// (ii) K₄ copies T with |T ∩ X| = 2 = |T ∩ Y|.
    std::int64_t balanced_k4 = 0;
    /// (iii) XYY edges e with |L(e) ∩ X| >= ε₃n.
    std::int64_t xyy_edges_into_x = 0;
    /// (iv) XXY edges e with |L(e) ∩ Y| >= ε₄n.
    std::int64_t xxy_edges_into_y = 0;
    /// Triples (x, y, S) with x ∈ X, y ∈ Y and S a length-1 (x,y)-connector.
    std::int64_t bridges_len1 = 0;
};

/// Throws Error{NotAPartition} unless X and Y partition V.
BridgeStats bridge_stats(const Hypergraph3 &h, const VertexSet &x_side, const VertexSet &y_side,
                         const BridgeParams &params = {});

struct ClosenessConfig
{
    double gamma = 0.1;
    /// η for closeness levels 1, 2, ... (level i uses eta[i-1]).
    std::vector<double> eta = {1e-3, 1e-7};
    int sample_count = 400;
    std::uint64_t seed = 1;
    int threads = 0;
    /// Refuse inputs with δ₂ < n/2 instead of warning.
    bool strict = false;
    BridgeParams bridge;
};

struct ClosedClass
{
    VertexSet members;
    /// Closeness length certified by the construction (growth rounds + 2, or 4).
    int level = 0;
    double eta = 0.0;
    /// (1/4 + 3γ/4)·n.
    double size_lower_bound = 0.0;
    /// Seed vertex and sizes of U_0, U_1, ... during growth.
    int seed_vertex = -1;
    std::vector<int> growth;
};

struct ClassBridgeStats
{
    int class_index = 0;
    BridgeStats stats;
};

struct ClosenessReport
{
    int n = 0;
    int min_codegree = 0;
    double gamma = 0.0;
    std::vector<double> eta;
    bool hypothesis_holds = false;
    std::vector<std::string> warnings;
    std::vector<ClosedClass> classes;
    /// Vertex -> class index.
    std::vector<int> labels;
    /// Exact length-1 connector counts.
    std::vector<std::vector<std::int64_t>> connectors;
    /// Ñ₁ and Ñ₂ per vertex.
    std::vector<VertexSet> close1;
    std::vector<VertexSet> close2;
    /// Sampled length-2 evidence, one entry per unordered pair x < y.
    std::vector<std::pair<int, ClosenessEstimate>> sampled2;
    /// One entry per class X (against Y = V ∖ X) when there are at least two classes.
    std::vector<ClassBridgeStats> bridges;
    std::uint64_t seed = 0;
};

/// Partition of V into at most three classes by growing closed sets from a
/// seed vertex with a small level-2 neighbourhood. Level-2 membership is
/// the sampled estimate or the shared-neighbour certificate
/// |Ñ₁(x) ∩ Ñ₁(w)| >= max(1, γ²n/6).
ClosenessReport closed_partition(const Hypergraph3 &h, const ClosenessConfig &config);

} // namespace hypertile

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertile/factor_solver.hpp"
#include "hypertile/hypergraph.hpp"
#include "hypertile/tiling_search.hpp"

namespace hypertile {

/// Whether `a` absorbs the 4-set `t`: a ∩ t = ∅ and both H[a] and H[a ∪ t]
/// have K₄−e-factors. Throws Error{Overlap}, Error{BadSize} (|t| != 4 or
/// 4 ∤ |a|), or Error{BudgetExhausted} from the solver.
bool is_absorbing(const Hypergraph3 &h, const VertexSet &a, const VertexSet &t,
                  std::uint64_t node_budget = kDefaultNodeBudget);

struct AbsorberParams
{
    /// Connector length; the absorber size is m = 12·i unless `m` is set.
    int i = 1;
    int m = 0;
    double eta = 0.1;
    std::uint64_t seed = 1;
    /// Demo mode: draw exactly this many candidates, each uniform among the
    /// m-sets avoiding already-kept members. Unset: the Poisson-approximated
    /// count for p = η⁴n / (2⁷m²·C(n,m)), drawn uniformly from all m-sets.
    std::optional<int> override_sample_count;
    /// Number of 4-sets T (outside U) for which the absorber index is recorded.
    int index_samples = 16;
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Workers for the index checks; 0 = all cores.
    int threads = 0;

    [[nodiscard]] int absorber_size() const { return m > 0 ? m : 12 * i; }
};

struct AbsorberIndexEntry
{
    Quad t{};
    /// Indices into AbsorberFamily::members that absorb t.
    std::vector<int> members;
};

struct AbsorberFamily
{
    int m = 0;
    std::vector<VertexSet> members;
    VertexSet U;
    std::vector<AbsorberIndexEntry> index;
    AbsorberParams params;
    /// p·C(n,m) for the asymptotic parameterisation.
    double expected_count = 0.0;
    int draws = 0;
    int discarded_intersecting = 0;
    int discarded_unfactorable = 0;
};

/// Random absorber family: pairwise-disjoint, individually factorable
/// m-sets. Throws Error{SampleCountZero} when the asymptotic parameterisation
/// expects fewer than one member and no override is given, and
/// Error{BadSize} when n < m + 16.
AbsorberFamily sample_absorber_family(const Hypergraph3 &h, const AbsorberParams &params);

struct AbsorbResult
{
    /// K₄−e-factor of H[U ∪ w].
    std::vector<Quad> tiles;
    /// Each 4-block of w with the member that absorbed it.
    std::vector<std::pair<Quad, int>> assignment;
};

/// Splits w (sorted) into consecutive 4-blocks, assigns each to the first
/// unused absorbing member, and returns the combined factor. Throws
/// Error{Overlap}, Error{BadSize}, or Error{NoAbsorberLeft} naming the block.
AbsorbResult absorb(const Hypergraph3 &h, const AbsorberFamily &fam, const VertexSet &w);

struct PipelineConfig
{
    double gamma = 0.1;
    AbsorberParams absorber;
    std::uint64_t tile_seed = 0;
};

/// Demo-mode defaults used for desk-scale runs (n around 48).
PipelineConfig demo_pipeline_config(std::uint64_t seed);

struct StageTiming
{
    std::string stage;
    double millis = 0.0;
};

struct PipelineReport
{
    int n = 0;
    int min_codegree = 0;
    bool hypothesis_holds = false;
    std::vector<std::string> warnings;

    bool success = false;
    /// Empty on success; otherwise "precondition", "absorber", "tiling", "absorb" or "verify".
    std::string failed_stage;
    std::string error;

    std::optional<AbsorberFamily> family;
    int u_size = 0;
    /// Tiling of H - U, in original vertex labels.
    Tiling tiling;
    int tiling_target = 0;
    /// ⌊(n - |U|)/4⌋ - 4, the number of copies the codegree argument guarantees.
    int guaranteed_copies = 0;
    int tiling_iterations = 0;
    VertexSet leftover;
    std::vector<std::pair<Quad, int>> assignment;
    std::vector<Quad> factor;
    bool verified = false;
    std::vector<StageTiming> timings;
    PipelineConfig config;
};

/// Absorber family U, local-search tiling of H - U, absorption of the leftover.
/// Failures are reported per stage, never thrown.
PipelineReport factor_via_absorption(const Hypergraph3 &h, const PipelineConfig &config);

} // namespace hypertile

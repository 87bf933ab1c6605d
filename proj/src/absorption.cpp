#include "hypertile/absorption.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hypertile/rng.hpp"
#include "parallel.hpp"

namespace hypertile {

namespace {

int poisson(Rng &rng, double lambda)
{
    if (lambda > 500.0)
        return static_cast<int>(std::lround(lambda));
    const double limit = std::exp(-lambda);
    int k = 0;
    double prod = rng.next_double();
    while (prod > limit) {
        ++k;
        prod *= rng.next_double();
    }
    return k;
}

std::vector<Quad> factor_tiles(const Hypergraph3 &h, const VertexSet &within, std::uint64_t budget)
{
    auto r = find_factor(h, Pattern4::K4MinusE, within, budget);
    if (r.status != FactorStatus::FACTOR_FOUND)
        return {};
    return r.tiles;
}

Quad quad_of(const VertexSet &s)
{
    const auto v = s.to_vector();
    return {v[0], v[1], v[2], v[3]};
}

class StageClock
{
public:
    explicit StageClock(std::vector<StageTiming> &out) : out_(out) {}

    void mark(const std::string &stage)
    {
        const auto now = std::chrono::steady_clock::now();
        out_.push_back({stage, std::chrono::duration<double, std::milli>(now - last_).count()});
        last_ = now;
    }

private:
    std::vector<StageTiming> &out_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

bool is_absorbing(const Hypergraph3 &h, const VertexSet &a, const VertexSet &t, std::uint64_t node_budget)
{
    if (a.intersects(t))
        throw Error(ErrorCode::Overlap, "absorber and 4-set intersect");
    if (t.size() != 4 || a.size() % 4 != 0 || a.empty())
        throw Error(ErrorCode::BadSize, "need |t| = 4 and a nonempty absorber with 4 | |a|");
    return has_factor(h, Pattern4::K4MinusE, a, node_budget) &&
           has_factor(h, Pattern4::K4MinusE, a | t, node_budget);
}

AbsorberFamily sample_absorber_family(const Hypergraph3 &h, const AbsorberParams &params)
{
    const int n = h.n();
    const int m = params.absorber_size();
    if (m <= 0 || m % 4 != 0)
        throw Error(ErrorCode::BadSize, "absorber size must be a positive multiple of 4");
    if (n < m + 16)
        throw Error(ErrorCode::BadSize, "need n >= m + 16 (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");

    AbsorberFamily fam;
    fam.m = m;
    fam.params = params;
    fam.expected_count = std::pow(params.eta, 4) * n / (128.0 * m * m);

    Rng rng(params.seed);
    const bool demo = params.override_sample_count.has_value();
    if (demo) {
        if (*params.override_sample_count < 1)
            throw Error(ErrorCode::SampleCountZero, "override sample count must be positive");
        fam.draws = *params.override_sample_count;
    } else {
        if (fam.expected_count < 1.0)
            throw Error(ErrorCode::SampleCountZero,
                        "p * C(n, m) = " + std::to_string(fam.expected_count) +
                            " < 1; the default constants target much larger n (use an override count)");
        fam.draws = poisson(rng, fam.expected_count);
    }

    const auto all = h.vertices().to_vector();
    for (int d = 0; d < fam.draws; ++d) {
        VertexSet candidate;
        if (demo) {
            const auto pool = (h.vertices() - fam.U).to_vector();
            if (static_cast<int>(pool.size()) < m)
                break;
            candidate = VertexSet::of(rng.sample(pool, static_cast<std::size_t>(m)));
        } else {
            candidate = VertexSet::of(rng.sample(all, static_cast<std::size_t>(m)));
            if (candidate.intersects(fam.U)) {
                ++fam.discarded_intersecting;
                continue;
            }
        }
        if (!has_factor(h, Pattern4::K4MinusE, candidate, params.node_budget)) {
            ++fam.discarded_unfactorable;
            continue;
        }
        fam.members.push_back(candidate);
        fam.U |= candidate;
    }

    const auto outside = (h.vertices() - fam.U).to_vector();
    if (outside.size() >= 4 && params.index_samples > 0) {
        fam.index.resize(static_cast<std::size_t>(params.index_samples));
        for (auto &entry : fam.index)
            entry.t = quad_of(VertexSet::of(rng.sample(outside, 4)));
        detail::parallel_for(params.index_samples, params.threads, [&](int s) {
            auto &entry = fam.index[static_cast<std::size_t>(s)];
            for (std::size_t k = 0; k < fam.members.size(); ++k)
                if (is_absorbing(h, fam.members[k], to_set(entry.t), params.node_budget))
                    entry.members.push_back(static_cast<int>(k));
        });
    }
    return fam;
}

AbsorbResult absorb(const Hypergraph3 &h, const AbsorberFamily &fam, const VertexSet &w)
{
    if (w.intersects(fam.U))
        throw Error(ErrorCode::Overlap, "leftover set meets the absorber reservoir");
    if (w.size() % 4 != 0 || fam.U.size() % 4 != 0)
        throw Error(ErrorCode::BadSize, "leftover and reservoir sizes must be multiples of 4");

    const auto budget = fam.params.node_budget;
    AbsorbResult out;
    std::vector<char> used(fam.members.size(), 0);
    const auto ws = w.to_vector();
    for (std::size_t b = 0; b < ws.size(); b += 4) {
        const Quad block{ws[b], ws[b + 1], ws[b + 2], ws[b + 3]};
        const VertexSet t = to_set(block);
        int chosen = -1;
        for (std::size_t k = 0; k < fam.members.size(); ++k)
            if (!used[k] && is_absorbing(h, fam.members[k], t, budget)) {
                chosen = static_cast<int>(k);
                break;
            }
        if (chosen < 0)
            throw Error(ErrorCode::NoAbsorberLeft,
                        "no unused absorber for {" + std::to_string(block[0]) + "," + std::to_string(block[1]) + "," +
                            std::to_string(block[2]) + "," + std::to_string(block[3]) + "}");
        used[static_cast<std::size_t>(chosen)] = 1;
        out.assignment.emplace_back(block, chosen);
        const auto tiles = factor_tiles(h, fam.members[static_cast<std::size_t>(chosen)] | t, budget);
        out.tiles.insert(out.tiles.end(), tiles.begin(), tiles.end());
    }
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
        if (used[k])
            continue;
        const auto tiles = factor_tiles(h, fam.members[k], budget);
        out.tiles.insert(out.tiles.end(), tiles.begin(), tiles.end());
    }
    std::sort(out.tiles.begin(), out.tiles.end());
    return out;
}

PipelineConfig demo_pipeline_config(std::uint64_t seed)
{
    PipelineConfig c;
    c.gamma = 0.1;
    c.absorber.i = 1;
    c.absorber.eta = 0.1;
    c.absorber.seed = seed;
    c.absorber.override_sample_count = 2;
    c.absorber.index_samples = 8;
    c.tile_seed = seed;
    return c;
}

PipelineReport factor_via_absorption(const Hypergraph3 &h, const PipelineConfig &config)
{
    PipelineReport r;
    r.config = config;
    r.n = h.n();
    r.min_codegree = h.n() >= 2 ? min_codegree(h) : 0;
    r.hypothesis_holds = r.min_codegree >= (0.5 + config.gamma) * h.n();
    if (!r.hypothesis_holds)
        r.warnings.push_back("min codegree " + std::to_string(r.min_codegree) + " below (1/2 + gamma) n");

    StageClock clock(r.timings);
    if (h.n() % 4 != 0) {
        r.failed_stage = "precondition";
        r.error = "n must be divisible by 4";
        return r;
    }

    try {
        r.family = sample_absorber_family(h, config.absorber);
    } catch (const Error &e) {
        r.failed_stage = "absorber";
        r.error = e.what();
        clock.mark("absorber");
        return r;
    }
    clock.mark("absorber");
    const AbsorberFamily &fam = *r.family;
    r.u_size = fam.U.size();

    // Local search on H - U, then map back to the original labels.
    const VertexSet rest = h.vertices() - fam.U;
    const auto back = rest.to_vector();
    const int n_rest = static_cast<int>(back.size());
    r.tiling_target = n_rest / 4;
    r.guaranteed_copies = std::max(0, n_rest / 4 - 4);
    if (n_rest > 0) {
        const Hypergraph3 sub = h.induced(rest);
        const GreedyResult g = greedy_tile(sub, r.tiling_target, config.tile_seed);
        r.tiling_iterations = g.iterations();
        auto lift = [&](int v) { return back[static_cast<std::size_t>(v)]; };
        for (const auto &q : g.tiling.t1)
            r.tiling.t1.push_back(make_quad(lift(q[0]), lift(q[1]), lift(q[2]), lift(q[3])));
        for (const auto &e : g.tiling.t2)
            r.tiling.t2.push_back(make_triple(lift(e[0]), lift(e[1]), lift(e[2])));
        if (static_cast<int>(g.tiling.t1.size()) < r.guaranteed_copies)
            r.warnings.push_back("local search left more than 16 vertices of H - U uncovered");
    }
    clock.mark("tiling");
    r.leftover = rest - r.tiling.covered_by_copies();

    try {
        const AbsorbResult a = absorb(h, fam, r.leftover);
        r.assignment = a.assignment;
        r.factor = r.tiling.t1;
        r.factor.insert(r.factor.end(), a.tiles.begin(), a.tiles.end());
        std::sort(r.factor.begin(), r.factor.end());
    } catch (const Error &e) {
        r.failed_stage = "absorb";
        r.error = e.what();
        clock.mark("absorb");
        return r;
    }
    clock.mark("absorb");

    VertexSet covered;
    for (const auto &q : r.factor)
        covered |= to_set(q);
    r.verified = verify_tiling(h, Pattern4::K4MinusE, r.factor) && covered == h.vertices();
    clock.mark("verify");
    if (!r.verified) {
        r.failed_stage = "verify";
        r.error = "assembled tiles do not form a K4-e factor";
        return r;
    }
    r.success = true;
    return r;
}

} // namespace hypertile

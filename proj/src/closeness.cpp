#include "hypertile/closeness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypertile/factor_solver.hpp"
#include "hypertile/rng.hpp"
#include "parallel.hpp"

namespace hypertile {

namespace {

void check_vertex(const Hypergraph3 &h, int v)
{
    if (v < 0 || v >= h.n())
        throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

struct Wilson
{
    double low, high;
};

Wilson wilson(int hits, int samples)
{
    constexpr double z = 1.959963984540054;
    const double s = samples;
    const double p = hits / s;
    const double denom = 1.0 + z * z / s;
    const double centre = (p + z * z / (2 * s)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / s + z * z / (4 * s * s)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

ClosenessEstimate sample_connectors(const Hypergraph3 &h, int x, int y, int length, double threshold,
                                    int samples, std::uint64_t seed)
{
    ClosenessEstimate est;
    est.y = y;
    const int k = 4 * length - 1;
    const int lo = std::min(x, y), hi = std::max(x, y);
    est.seed = Rng::stream_seed(seed, static_cast<std::uint64_t>(lo) * kMaxVertices + static_cast<std::uint64_t>(hi));

    const double total = binomial(h.n() - 2, k);
    if (total == 0.0) {
        est.annotation = "exact";
        est.close = threshold <= 0.0;
        return est;
    }

    std::vector<int> pool;
    for (int v = 0; v < h.n(); ++v)
        if (v != x && v != y)
            pool.push_back(v);

    Rng rng(est.seed);
    for (int s = 0; s < samples; ++s) {
        VertexSet set = VertexSet::of(rng.sample(pool, static_cast<std::size_t>(k)));
        VertexSet with_x = set, with_y = set;
        with_x.insert(x);
        with_y.insert(y);
        if (has_factor(h, Pattern4::K4MinusE, with_x) && has_factor(h, Pattern4::K4MinusE, with_y))
            ++est.hits;
    }
    est.samples = samples;
    est.count = total * est.hits / samples;
    const auto ci = wilson(est.hits, samples);
    est.low = std::min(total * ci.low, est.count);
    est.high = std::max(total * ci.high, est.count);
    est.close = est.count >= threshold;
    est.annotation = (est.low >= threshold || est.high < threshold) ? "confident" : "uncertain";
    return est;
}

} // namespace

ConnectorCount connectors_len1(const Hypergraph3 &h, int x, int y, bool collect)
{
    check_vertex(h, x);
    check_vertex(h, y);
    if (x == y)
        throw Error(ErrorCode::DegenerateTriple, "connector endpoints must differ");

    ConnectorCount out;
    VertexSet others = h.vertices();
    others.erase(x);
    others.erase(y);
    const auto vs = others.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const int a = vs[i], b = vs[j];
            VertexSet third = link_L(h, make_triple(a, b, x)) & link_L(h, make_triple(a, b, y)) & others;
            for (std::size_t k = 0; k <= j; ++k)
                third.erase(vs[k]);
            out.count += third.size();
            if (collect)
                third.for_each([&](int c) { out.sets.push_back({a, b, c}); });
        }
    return out;
}

std::vector<std::vector<std::int64_t>> connector_matrix(const Hypergraph3 &h, int threads)
{
    const int n = h.n();
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    detail::parallel_for(n, threads, [&](int x) {
        for (int y = x + 1; y < n; ++y)
            m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = connectors_len1(h, x, y).count;
    });
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < x; ++y)
            m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                m[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    return m;
}

CloseNeighborhood close_neighborhood(const Hypergraph3 &h, int x, const ConnectorQuery &q)
{
    check_vertex(h, x);
    if (q.length < 1)
        throw Error(ErrorCode::OutOfRange, "connector length must be positive");
    if (q.mode == ConnectorQuery::Mode::EXACT && q.length != 1)
        throw Error(ErrorCode::OutOfRange, "exact connector counts are only available for length 1");
    if (q.mode == ConnectorQuery::Mode::SAMPLED && q.sample_count <= 0)
        throw Error(ErrorCode::SamplingBudgetZero, "sampled closeness needs a positive sample count");

    CloseNeighborhood out;
    out.x = x;
    out.threshold = q.eta * std::pow(static_cast<double>(h.n()), 4 * q.length - 1);
    for (int y = 0; y < h.n(); ++y) {
        if (y == x)
            continue;
        ClosenessEstimate est;
        if (q.mode == ConnectorQuery::Mode::EXACT) {
            est.y = y;
            est.count = static_cast<double>(connectors_len1(h, x, y).count);
            est.low = est.high = est.count;
            est.close = est.count >= out.threshold;
            est.annotation = "exact";
        } else {
            est = sample_connectors(h, x, y, q.length, out.threshold, q.sample_count, q.seed);
        }
        if (est.close)
            out.members.insert(y);
        out.evidence.push_back(std::move(est));
    }
    return out;
}

BridgeStats bridge_stats(const Hypergraph3 &h, const VertexSet &x_side, const VertexSet &y_side,
                         const BridgeParams &params)
{
    if (x_side.intersects(y_side) || (x_side | y_side) != h.vertices())
        throw Error(ErrorCode::NotAPartition, "X and Y must partition the vertex set");

    const double n = h.n();
    BridgeStats s;
    for (const auto &e : h.edges()) {
        const VertexSet link = link_L(h, e);
        const int in_x = (link & x_side).size();
        const int in_y = (link & y_side).size();
        if (in_x >= params.eps1 * n && in_y >= params.eps1 * n)
            ++s.edges_linking_both;
        const int ex = int(x_side.contains(e[0])) + int(x_side.contains(e[1])) + int(x_side.contains(e[2]));
        if (ex == 1 && in_x >= params.eps3 * n)
            ++s.xyy_edges_into_x;
        if (ex == 2 && in_y >= params.eps4 * n)
            ++s.xxy_edges_into_y;
    }
    for (const auto &q : pattern_copies(h, Pattern4::K4))
        if ((to_set(q) & x_side).size() == 2)
            ++s.balanced_k4;

    x_side.for_each([&](int x) {
        y_side.for_each([&](int y) { s.bridges_len1 += connectors_len1(h, x, y).count; });
    });
    return s;
}

ClosenessReport closed_partition(const Hypergraph3 &h, const ClosenessConfig &config)
{
    if (config.eta.size() < 2)
        throw Error(ErrorCode::OutOfRange, "closed_partition needs eta for levels 1 and 2");
    if (config.sample_count <= 0)
        throw Error(ErrorCode::SamplingBudgetZero, "closed_partition needs a positive sample count");

    const int n = h.n();
    const double gamma = config.gamma;
    ClosenessReport r;
    r.n = n;
    r.gamma = gamma;
    r.eta = config.eta;
    r.seed = config.seed;
    r.min_codegree = n >= 2 ? min_codegree(h) : 0;
    r.hypothesis_holds = r.min_codegree >= (0.5 + gamma) * n;
    if (!r.hypothesis_holds) {
        if (config.strict && 2 * r.min_codegree < n)
            throw Error(ErrorCode::DegreeTooLow, "min codegree " + std::to_string(r.min_codegree) + " < n/2");
        r.warnings.push_back("min codegree " + std::to_string(r.min_codegree) + " < (1/2 + gamma) n = " +
                             std::to_string((0.5 + gamma) * n) + "; class guarantees are vacuous");
    }

    // Level 1: exact.
    r.connectors = connector_matrix(h, config.threads);
    const double t1 = config.eta[0] * std::pow(static_cast<double>(n), 3);
    r.close1.assign(static_cast<std::size_t>(n), VertexSet{});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && static_cast<double>(r.connectors[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) >= t1)
                r.close1[static_cast<std::size_t>(x)].insert(y);

    // Level 2: sampled, plus the shared-neighbour certificate.
    const double t2 = config.eta[1] * std::pow(static_cast<double>(n), 7);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            pairs.emplace_back(x, y);
    r.sampled2.resize(pairs.size());
    detail::parallel_for(static_cast<int>(pairs.size()), config.threads, [&](int i) {
        const auto [x, y] = pairs[static_cast<std::size_t>(i)];
        r.sampled2[static_cast<std::size_t>(i)] = {x, sample_connectors(h, x, y, 2, t2, config.sample_count, config.seed)};
    });
    r.close2.assign(static_cast<std::size_t>(n), VertexSet{});
    for (const auto &[x, est] : r.sampled2)
        if (est.close) {
            r.close2[static_cast<std::size_t>(x)].insert(est.y);
            r.close2[static_cast<std::size_t>(est.y)].insert(x);
        }
    const double shared_needed = std::max(1.0, gamma * gamma * n / 6.0);
    for (int x = 0; x < n; ++x)
        for (int w = 0; w < n; ++w)
            if (x != w && (r.close1[static_cast<std::size_t>(x)] & r.close1[static_cast<std::size_t>(w)]).size() >= shared_needed)
                r.close2[static_cast<std::size_t>(x)].insert(w);

    // Grow at most three classes.
    VertexSet rest = h.vertices();
    while (!rest.empty()) {
        ClosedClass cls;
        cls.size_lower_bound = (0.25 + 0.75 * gamma) * n;
        if (r.classes.size() == 2) {
            cls.members = rest;
            cls.level = 4;
            cls.eta = config.eta[1];
            r.classes.push_back(cls);
            break;
        }
        const double nr = rest.size();
        auto n1 = [&](int v) { return r.close1[static_cast<std::size_t>(v)] & rest; };
        auto n2 = [&](int v) { return r.close2[static_cast<std::size_t>(v)] & rest; };

        int seed_vertex = -1;
        int smallest = std::numeric_limits<int>::max();
        rest.for_each([&](int v) {
            const int size = n2(v).size();
            if (size < smallest) {
                smallest = size;
                seed_vertex = v;
            }
        });
        if (smallest >= (1.0 + gamma) * nr / 2.0) {
            cls.members = rest;
            cls.level = 4;
            cls.eta = config.eta[1];
            r.classes.push_back(cls);
            break;
        }

        const VertexSet n2v = n2(seed_vertex);
        VertexSet grown;
        n1(seed_vertex).for_each([&](int u) {
            if ((n1(u) & n2v).size() >= (0.25 + gamma / 3.0) * nr)
                grown.insert(u);
        });
        cls.growth.push_back(grown.size());
        grown.insert(seed_vertex);
        cls.seed_vertex = seed_vertex;

        const double step_needed = gamma * nr / 4.0;
        while (true) {
            VertexSet layer;
            (rest - grown).for_each([&](int u) {
                if ((n1(u) & grown).size() >= step_needed)
                    layer.insert(u);
            });
            grown |= layer;
            cls.growth.push_back(layer.size());
            if (layer.size() < step_needed || layer.empty())
                break;
        }
        cls.members = grown;
        cls.level = static_cast<int>(cls.growth.size()) - 1 + 2;
        cls.eta = config.eta[1];
        r.classes.push_back(cls);
        rest -= grown;
    }

    r.labels.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
        r.classes[c].members.for_each([&](int v) { r.labels[static_cast<std::size_t>(v)] = static_cast<int>(c); });
        if (r.classes[c].members.size() < r.classes[c].size_lower_bound)
            r.warnings.push_back("class " + std::to_string(c) + " has " + std::to_string(r.classes[c].members.size()) +
                                 " vertices, below (1/4 + 3 gamma/4) n");
    }

    if (r.classes.size() >= 2)
        for (std::size_t c = 0; c < r.classes.size(); ++c) {
            const VertexSet x_side = r.classes[c].members;
            r.bridges.push_back({static_cast<int>(c), bridge_stats(h, x_side, h.vertices() - x_side, config.bridge)});
        }
    return r;
}

} // namespace hypertile

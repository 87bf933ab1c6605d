#include "hypertile/tiling_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "hypertile/matching.hpp"
#include "hypertile/rng.hpp"

namespace hypertile {

VertexSet Tiling::covered() const
{
    VertexSet s = covered_by_copies();
    for (const auto &e : t2)
        s |= to_set(e);
    return s;
}

VertexSet Tiling::covered_by_copies() const
{
    VertexSet s;
    for (const auto &q : t1)
        s |= to_set(q);
    return s;
}

int weight(const Tiling &t) { return 5 * static_cast<int>(t.t1.size()) + 2 * static_cast<int>(t.t2.size()); }

const char *to_string(MoveKind k)
{
    switch (k) {
    case MoveKind::ADD_COPY: return "ADD_COPY";
    case MoveKind::ADD_EDGE: return "ADD_EDGE";
    case MoveKind::EXTEND_EDGE: return "EXTEND_EDGE";
    case MoveKind::UPGRADE_TWO_EDGES: return "UPGRADE_TWO_EDGES";
    case MoveKind::SPLIT_EDGE_FOR_PAIRS: return "SPLIT_EDGE_FOR_PAIRS";
    case MoveKind::SPLIT_COPY_FOR_PAIRS: return "SPLIT_COPY_FOR_PAIRS";
    }
    return "?";
}

void validate_tiling(const Hypergraph3 &h, const Tiling &t)
{
    VertexSet used;
    auto claim = [&](int v) {
        if (v < 0 || v >= h.n())
            throw Error(ErrorCode::InvalidTiling, "vertex " + std::to_string(v) + " out of range");
        if (used.contains(v))
            throw Error(ErrorCode::InvalidTiling, "vertex " + std::to_string(v) + " covered twice");
        used.insert(v);
    };
    for (const auto &q : t.t1) {
        for (int v : q)
            claim(v);
        if (h.edges_in(q) < 3)
            throw Error(ErrorCode::InvalidTiling, "a T1 member does not span K4-e");
    }
    for (const auto &e : t.t2) {
        for (int v : e)
            claim(v);
        if (!h.has_edge(e))
            throw Error(ErrorCode::InvalidTiling, "a T2 member is not an edge");
    }
}

Tiling apply_move(const Tiling &t, const MoveRecord &m)
{
    Tiling out = t;
    for (const auto &q : m.removed_copies)
        out.t1.erase(std::find(out.t1.begin(), out.t1.end(), q));
    for (const auto &e : m.removed_edges)
        out.t2.erase(std::find(out.t2.begin(), out.t2.end(), e));
    out.t1.insert(out.t1.end(), m.added_copies.begin(), m.added_copies.end());
    out.t2.insert(out.t2.end(), m.added_edges.begin(), m.added_edges.end());
    return out;
}

namespace {

struct Scan
{
    const Hypergraph3 &h;
    std::vector<int> order;

    /// First member of s in scanning order, or -1.
    [[nodiscard]] int first_in(const VertexSet &s) const
    {
        for (int v : order)
            if (s.contains(v))
                return v;
        return -1;
    }

    [[nodiscard]] std::vector<int> ordered(const VertexSet &s) const
    {
        std::vector<int> out;
        for (int v : order)
            if (s.contains(v))
                out.push_back(v);
        return out;
    }
};

std::optional<MoveRecord> add_copy(const Scan &scan, const VertexSet &free)
{
    const auto fs = scan.ordered(free);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const VertexSet &nb = scan.h.nbhd(fs[i], fs[j]);
            if (!nb.intersects(free))
                continue;
            for (std::size_t k = j + 1; k < fs.size(); ++k) {
                if (!nb.contains(fs[k]))
                    continue;
                const Triple e = make_triple(fs[i], fs[j], fs[k]);
                const int x = scan.first_in(link_L(scan.h, e) & free);
                if (x >= 0) {
                    MoveRecord m;
                    m.kind = MoveKind::ADD_COPY;
                    m.added_copies.push_back(make_quad(e[0], e[1], e[2], x));
                    m.delta_w = 5;
                    return m;
                }
            }
        }
    return std::nullopt;
}

std::optional<MoveRecord> add_edge(const Scan &scan, const VertexSet &free)
{
    const auto fs = scan.ordered(free);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            VertexSet later = scan.h.nbhd(fs[i], fs[j]) & free;
            for (std::size_t k = 0; k <= j; ++k)
                later.erase(fs[k]);
            const int w = scan.first_in(later);
            if (w >= 0) {
                MoveRecord m;
                m.kind = MoveKind::ADD_EDGE;
                m.added_edges.push_back(make_triple(fs[i], fs[j], w));
                m.delta_w = 2;
                return m;
            }
        }
    return std::nullopt;
}

std::optional<MoveRecord> extend_edge(const Scan &scan, const Tiling &t, const VertexSet &free)
{
    const VertexSet in_copies = t.covered_by_copies();
    // +3 variants before +1 variants.
    for (const auto &e : t.t2) {
        const int v = scan.first_in(link_L(scan.h, e) & free);
        if (v >= 0) {
            MoveRecord m;
            m.kind = MoveKind::EXTEND_EDGE;
            m.removed_edges.push_back(e);
            m.added_copies.push_back(make_quad(e[0], e[1], e[2], v));
            m.delta_w = 3;
            return m;
        }
    }
    for (const auto &e : t.t2) {
        const int v = scan.first_in(link_L(scan.h, e) - in_copies);
        if (v < 0)
            continue;
        const auto other = std::find_if(t.t2.begin(), t.t2.end(), [&](const Triple &f) {
            return f != e && to_set(f).contains(v);
        });
        MoveRecord m;
        m.kind = MoveKind::EXTEND_EDGE;
        m.removed_edges.push_back(e);
        m.removed_edges.push_back(*other);
        m.added_copies.push_back(make_quad(e[0], e[1], e[2], v));
        m.delta_w = 1;
        return m;
    }
    return std::nullopt;
}

std::optional<MoveRecord> upgrade_two_edges(const Scan &scan, const Tiling &t)
{
    if (t.t2.size() < 4)
        return std::nullopt;
    std::vector<VertexSet> links;
    links.reserve(t.t2.size());
    for (const auto &e : t.t2)
        links.push_back(link_L(scan.h, e));

    for (const auto &s : t.t1) {
        const VertexSet sv = to_set(s);
        // The four edges with the most link vertices in S; some 4-subset has
        // total >= 5 iff these do.
        std::vector<int> idx(t.t2.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return (links[static_cast<std::size_t>(a)] & sv).size() > (links[static_cast<std::size_t>(b)] & sv).size();
        });
        idx.resize(4);
        int total = 0;
        for (int i : idx)
            total += (links[static_cast<std::size_t>(i)] & sv).size();
        if (total < 5)
            continue;

        std::vector<std::pair<int, int>> adj;
        for (int li = 0; li < 4; ++li)
            for (int r = 0; r < 4; ++r)
                if (links[static_cast<std::size_t>(idx[static_cast<std::size_t>(li)])].contains(s[static_cast<std::size_t>(r)]))
                    adj.emplace_back(li, r);
        const auto matching = max_bipartite_matching(adj);
        if (matching.size() < 2)
            continue;

        MoveRecord m;
        m.kind = MoveKind::UPGRADE_TWO_EDGES;
        m.removed_copies.push_back(s);
        for (std::size_t k = 0; k < 2; ++k) {
            const auto &e = t.t2[static_cast<std::size_t>(idx[static_cast<std::size_t>(matching[k].first)])];
            const int v = s[static_cast<std::size_t>(matching[k].second)];
            m.removed_edges.push_back(e);
            m.added_copies.push_back(make_quad(e[0], e[1], e[2], v));
        }
        m.delta_w = 1;
        return m;
    }
    return std::nullopt;
}

using Pairing = std::array<std::pair<int, int>, 4>;

// Consecutive pairing of the first eight free vertices, then three fixed re-pairings.
std::vector<Pairing> pair_schedules(const std::vector<int> &f)
{
    static constexpr int kSchedules[4][8] = {
        {0, 1, 2, 3, 4, 5, 6, 7},
        {0, 2, 1, 3, 4, 6, 5, 7},
        {0, 3, 1, 2, 4, 7, 5, 6},
        {0, 4, 1, 5, 2, 6, 3, 7},
    };
    std::vector<Pairing> out;
    for (const auto &sched : kSchedules) {
        Pairing p;
        for (std::size_t i = 0; i < 4; ++i)
            p[i] = {f[static_cast<std::size_t>(sched[2 * i])], f[static_cast<std::size_t>(sched[2 * i + 1])]};
        out.push_back(p);
    }
    return out;
}

// Bipartite graph between the four pairs and the given target vertices:
// pair i ~ vertex r iff x_i y_i r is an edge.
template <std::size_t K>
std::vector<std::pair<int, int>> pair_adjacency(const Hypergraph3 &h, const Pairing &pairs,
                                                const std::array<int, K> &targets, int &total)
{
    std::vector<std::pair<int, int>> adj;
    total = 0;
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < static_cast<int>(K); ++r)
            if (h.has_edge(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second,
                           targets[static_cast<std::size_t>(r)])) {
                adj.emplace_back(i, r);
                ++total;
            }
    return adj;
}

std::optional<MoveRecord> split_for_pairs(const Scan &scan, const Tiling &t, const VertexSet &free)
{
    const auto fs = scan.ordered(free);
    if (fs.size() < 8)
        return std::nullopt;
    const auto schedules = pair_schedules(fs);

    for (const auto &pairs : schedules)
        for (const auto &e : t.t2) {
            int total = 0;
            const auto adj = pair_adjacency(scan.h, pairs, e, total);
            if (total < 5)
                continue;
            const auto matching = max_bipartite_matching(adj);
            if (matching.size() < 2)
                continue;
            MoveRecord m;
            m.kind = MoveKind::SPLIT_EDGE_FOR_PAIRS;
            m.removed_edges.push_back(e);
            for (std::size_t k = 0; k < 2; ++k) {
                const auto [x, y] = pairs[static_cast<std::size_t>(matching[k].first)];
                m.added_edges.push_back(make_triple(x, y, e[static_cast<std::size_t>(matching[k].second)]));
            }
            m.delta_w = 2;
            return m;
        }

    for (const auto &pairs : schedules)
        for (const auto &s : t.t1) {
            int total = 0;
            const auto adj = pair_adjacency(scan.h, pairs, s, total);
            if (total < 9)
                continue;
            const auto matching = max_bipartite_matching(adj);
            if (matching.size() < 3)
                continue;
            MoveRecord m;
            m.kind = MoveKind::SPLIT_COPY_FOR_PAIRS;
            m.removed_copies.push_back(s);
            for (std::size_t k = 0; k < 3; ++k) {
                const auto [x, y] = pairs[static_cast<std::size_t>(matching[k].first)];
                m.added_edges.push_back(make_triple(x, y, s[static_cast<std::size_t>(matching[k].second)]));
            }
            m.delta_w = 1;
            return m;
        }
    return std::nullopt;
}

std::vector<int> identity_order(int n)
{
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

} // namespace

std::optional<MoveRecord> find_improving_move(const Hypergraph3 &h, const Tiling &t, const std::vector<int> &order)
{
    validate_tiling(h, t);
    const Scan scan{h, order.empty() ? identity_order(h.n()) : order};
    const VertexSet free = h.vertices() - t.covered();

    if (auto m = add_copy(scan, free))
        return m;
    if (auto m = add_edge(scan, free))
        return m;
    if (auto m = extend_edge(scan, t, free))
        return m;
    if (auto m = upgrade_two_edges(scan, t))
        return m;
    return split_for_pairs(scan, t, free);
}

bool copy_guarantee_applies(int n, int min_codegree, int l)
{
    return l >= 0 && 4 * l <= n - 13 && 3 * min_codegree > n + 2 * l - 2;
}

GreedyResult greedy_tile(const Hypergraph3 &h, int l, std::uint64_t seed)
{
    GreedyResult r;
    r.target = l;
    r.seed = seed;
    r.min_codegree = h.n() >= 2 ? min_codegree(h) : 0;
    r.hypothesis_holds = copy_guarantee_applies(h.n(), r.min_codegree, l);

    std::vector<int> order = identity_order(h.n());
    if (seed != 0) {
        Rng rng(seed);
        rng.shuffle(order);
    }

    r.weights.push_back(0);
    while (static_cast<int>(r.tiling.t1.size()) < l) {
        auto move = find_improving_move(h, r.tiling, order);
        if (!move)
            break;
        r.tiling = apply_move(r.tiling, *move);
        r.weights.push_back(weight(r.tiling));
        r.trace.push_back(std::move(*move));
    }
    r.reached_target = static_cast<int>(r.tiling.t1.size()) >= l;

    if (!r.reached_target) {
        std::ostringstream os;
        os << "stuck with |T1|=" << r.tiling.t1.size() << " |T2|=" << r.tiling.t2.size() << " w=" << weight(r.tiling)
           << " below target " << l << " (delta2=" << r.min_codegree << ", n=" << h.n() << ")";
        if (r.hypothesis_holds) {
            r.counterexample = true;
            if (r.tiling.t2.size() >= 4)
                os << "; |T2| >= 4 at a stuck state under the codegree hypothesis";
        }
        r.diagnostics = os.str();
    }
    return r;
}

} // namespace hypertile

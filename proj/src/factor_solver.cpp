#include "hypertile/factor_solver.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace hypertile {

const char *to_string(FactorStatus s)
{
    switch (s) {
    case FactorStatus::FACTOR_FOUND: return "FACTOR_FOUND";
    case FactorStatus::NO_FACTOR: return "NO_FACTOR";
    case FactorStatus::TILING_ONLY: return "TILING_ONLY";
    }
    return "?";
}

namespace {

constexpr std::size_t kMemoCapacity = std::size_t{1} << 22;

// Candidate 4-sets with per-vertex incidence lists. A candidate is live while
// its kill count is zero; count_[v] is the number of live candidates on v.
class CoverEngine
{
public:
    CoverEngine(const Hypergraph3 &h, Pattern4 p, const VertexSet &within, std::uint64_t budget)
        : quads_(pattern_copies(h, p, within))
        , budget_(budget)
    {
        const auto n = static_cast<std::size_t>(h.n());
        incident_.resize(n);
        count_.assign(n, 0);
        kills_.assign(quads_.size(), 0);
        masks_.reserve(quads_.size());
        for (std::size_t c = 0; c < quads_.size(); ++c) {
            masks_.push_back(to_set(quads_[c]));
            for (int v : quads_[c]) {
                incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
                ++count_[static_cast<std::size_t>(v)];
            }
        }
    }

    bool exact_cover(const VertexSet &uncovered)
    {
        tick();
        if (uncovered.empty())
            return true;
        if (failed_.contains(uncovered))
            return false;

        int branch = -1;
        int fewest = std::numeric_limits<int>::max();
        uncovered.for_each([&](int v) {
            if (count_[static_cast<std::size_t>(v)] < fewest) {
                fewest = count_[static_cast<std::size_t>(v)];
                branch = v;
            }
        });

        if (fewest > 0) {
            for (int c : incident_[static_cast<std::size_t>(branch)]) {
                if (kills_[static_cast<std::size_t>(c)] != 0)
                    continue;
                chosen_.push_back(c);
                select(c);
                const bool ok = exact_cover(uncovered - masks_[static_cast<std::size_t>(c)]);
                unselect(c);
                if (ok)
                    return true;
                chosen_.pop_back();
            }
        }
        if (failed_.size() < kMemoCapacity)
            failed_.insert(uncovered);
        return false;
    }

    // Packing search: maximise the number of chosen candidates inside `avail`.
    void pack(const VertexSet &avail, int target)
    {
        tick();
        const int have = static_cast<int>(chosen_.size());
        if (have > static_cast<int>(best_.size()))
            best_ = chosen_;
        if (static_cast<int>(best_.size()) >= target)
            return;

        int usable = 0;
        int branch = -1;
        int fewest = std::numeric_limits<int>::max();
        avail.for_each([&](int v) {
            const int c = count_[static_cast<std::size_t>(v)];
            if (c == 0)
                return;
            ++usable;
            if (c < fewest) {
                fewest = c;
                branch = v;
            }
        });
        if (branch < 0 || have + usable / 4 <= static_cast<int>(best_.size()))
            return;

        for (int c : incident_[static_cast<std::size_t>(branch)]) {
            if (kills_[static_cast<std::size_t>(c)] != 0)
                continue;
            chosen_.push_back(c);
            select(c);
            pack(avail - masks_[static_cast<std::size_t>(c)], target);
            unselect(c);
            chosen_.pop_back();
            if (static_cast<int>(best_.size()) >= target)
                return;
        }
        // Leave `branch` unused.
        kill_vertex(branch);
        VertexSet rest = avail;
        rest.erase(branch);
        pack(rest, target);
        revive_vertex(branch);
    }

    [[nodiscard]] std::vector<Quad> tiles(const std::vector<int> &ids) const
    {
        std::vector<Quad> out;
        out.reserve(ids.size());
        for (int c : ids)
            out.push_back(quads_[static_cast<std::size_t>(c)]);
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] const std::vector<int> &chosen() const { return chosen_; }
    [[nodiscard]] const std::vector<int> &best() const { return best_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    void tick()
    {
        if (++nodes_ > budget_)
            throw Error(ErrorCode::BudgetExhausted,
                        "search truncated after " + std::to_string(budget_) + " nodes; result unknown");
    }

    void kill(int d)
    {
        if (kills_[static_cast<std::size_t>(d)]++ == 0)
            for (int w : quads_[static_cast<std::size_t>(d)])
                --count_[static_cast<std::size_t>(w)];
    }

    void revive(int d)
    {
        if (--kills_[static_cast<std::size_t>(d)] == 0)
            for (int w : quads_[static_cast<std::size_t>(d)])
                ++count_[static_cast<std::size_t>(w)];
    }

    void kill_vertex(int u)
    {
        for (int d : incident_[static_cast<std::size_t>(u)])
            kill(d);
    }

    void revive_vertex(int u)
    {
        const auto &list = incident_[static_cast<std::size_t>(u)];
        for (auto it = list.rbegin(); it != list.rend(); ++it)
            revive(*it);
    }

    void select(int c)
    {
        for (int u : quads_[static_cast<std::size_t>(c)])
            kill_vertex(u);
    }

    void unselect(int c)
    {
        const auto &q = quads_[static_cast<std::size_t>(c)];
        for (auto it = q.rbegin(); it != q.rend(); ++it)
            revive_vertex(*it);
    }

    std::vector<Quad> quads_;
    std::vector<VertexSet> masks_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> count_;
    std::vector<int> kills_;
    std::vector<int> chosen_;
    std::vector<int> best_;
    std::unordered_set<VertexSet, VertexSetHash> failed_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

} // namespace

FactorResult find_factor(const Hypergraph3 &h, Pattern4 p, std::uint64_t node_budget)
{
    return find_factor(h, p, h.vertices(), node_budget);
}

FactorResult find_factor(const Hypergraph3 &h, Pattern4 p, const VertexSet &within, std::uint64_t node_budget)
{
    FactorResult r;
    const VertexSet target = within & h.vertices();
    if (target.size() % 4 != 0) {
        r.status = FactorStatus::NO_FACTOR;
        r.uncovered = target;
        return r;
    }
    CoverEngine engine(h, p, target, node_budget);
    const bool found = engine.exact_cover(target);
    r.nodes_explored = engine.nodes();
    if (found) {
        r.status = FactorStatus::FACTOR_FOUND;
        r.tiles = engine.tiles(engine.chosen());
    } else {
        r.status = FactorStatus::NO_FACTOR;
        r.uncovered = target;
    }
    return r;
}

bool has_factor(const Hypergraph3 &h, Pattern4 p, const VertexSet &within, std::uint64_t node_budget)
{
    return find_factor(h, p, within, node_budget).status == FactorStatus::FACTOR_FOUND;
}

FactorResult max_tiling(const Hypergraph3 &h, Pattern4 p, int target, std::uint64_t node_budget)
{
    if (target < 0 || target > h.n() / 4)
        throw Error(ErrorCode::OutOfRange, "tiling target must lie in 0..n/4");
    CoverEngine engine(h, p, h.vertices(), node_budget);
    engine.pack(h.vertices(), target);

    FactorResult r;
    r.nodes_explored = engine.nodes();
    r.tiles = engine.tiles(engine.best());
    r.optimal = static_cast<int>(r.tiles.size()) < target || static_cast<int>(r.tiles.size()) == h.n() / 4;
    VertexSet covered;
    for (const auto &q : r.tiles)
        covered |= to_set(q);
    r.uncovered = h.vertices() - covered;
    r.status = r.uncovered.empty() ? FactorStatus::FACTOR_FOUND : FactorStatus::TILING_ONLY;
    return r;
}

bool verify_tiling(const Hypergraph3 &h, Pattern4 p, const std::vector<Quad> &tiles)
{
    std::vector<char> used(static_cast<std::size_t>(h.n()), 0);
    for (const auto &q : tiles) {
        for (int v : q) {
            if (v < 0 || v >= h.n() || used[static_cast<std::size_t>(v)])
                return false;
            used[static_cast<std::size_t>(v)] = 1;
        }
        int edges = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    edges += h.has_edge(make_triple(q[i], q[j], q[k])) ? 1 : 0;
        if (edges < edge_count(p))
            return false;
    }
    return true;
}

int brute_force_threshold(int n, Pattern4 p)
{
    if (n > 4)
        throw Error(ErrorCode::TooLarge, "full enumeration is only supported for n = 4");
    if (n < 4)
        throw Error(ErrorCode::TooSmall, "n must be 4");

    std::vector<Triple> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                all.push_back({u, v, w});

    // all_factor[d] stays true while every graph with δ₂ >= d has a factor.
    const int max_codegree = n - 2;
    std::vector<bool> all_factor(static_cast<std::size_t>(max_codegree) + 2, true);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
        std::vector<Triple> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1U)
                edges.push_back(all[i]);
        const auto h = Hypergraph3::from_edge_list(n, edges);
        if (find_factor(h, p).status == FactorStatus::FACTOR_FOUND)
            continue;
        const int delta = min_codegree(h);
        for (int d = 0; d <= delta; ++d)
            all_factor[static_cast<std::size_t>(d)] = false;
    }
    for (int d = 0; d <= max_codegree + 1; ++d)
        if (all_factor[static_cast<std::size_t>(d)])
            return d;
    return max_codegree + 1;
}

} // namespace hypertile

#include "hypertile/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace hypertile {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnlabelledVertex: return "UnlabelledVertex";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::BadL: return "BadL";
    case ErrorCode::IncompleteOrientation: return "IncompleteOrientation";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidTiling: return "InvalidTiling";
    case ErrorCode::SamplingBudgetZero: return "SamplingBudgetZero";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::SampleCountZero: return "SampleCountZero";
    case ErrorCode::NoAbsorberLeft: return "NoAbsorberLeft";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Triple make_triple(int a, int b, int c)
{
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

Quad make_quad(int a, int b, int c, int d)
{
    Quad q{a, b, c, d};
    std::sort(q.begin(), q.end());
    return q;
}

int edge_count(Pattern4 p) { return static_cast<int>(p); }

std::vector<Triple> pattern_triples(Pattern4 p)
{
    const std::vector<Triple> all{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return {all.begin(), all.begin() + edge_count(p)};
}

std::string pattern_name(Pattern4 p)
{
    switch (p) {
    case Pattern4::K4: return "k4";
    case Pattern4::K4MinusE: return "k4m";
    case Pattern4::K4Minus2E: return "k4m2e";
    case Pattern4::K4Minus3E: return "k4m3e";
    }
    return "?";
}

Pattern4 parse_pattern(const std::string &name)
{
    if (name == "k4")
        return Pattern4::K4;
    if (name == "k4m" || name == "k4me")
        return Pattern4::K4MinusE;
    if (name == "k4m2e")
        return Pattern4::K4Minus2E;
    if (name == "k4m3e")
        return Pattern4::K4Minus3E;
    throw Error(ErrorCode::ParseError, "unknown pattern '" + name + "'");
}

Hypergraph3 Hypergraph3::from_edge_list(int n, std::span<const Triple> triples)
{
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::OutOfRange,
                    "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));

    Hypergraph3 h;
    h.n_ = n;
    h.pair_nbhd_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), VertexSet{});
    h.edges_.reserve(triples.size());

    for (const auto &raw : triples) {
        for (int v : raw)
            if (v < 0 || v >= n)
                throw Error(ErrorCode::OutOfRange,
                            "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
        Triple t = make_triple(raw[0], raw[1], raw[2]);
        if (t[0] == t[1] || t[1] == t[2])
            throw Error(ErrorCode::DegenerateTriple, "repeated vertex in triple");
        if (h.pair_nbhd_[h.index(t[0], t[1])].contains(t[2]))
            throw Error(ErrorCode::DuplicateEdge, "triple {" + std::to_string(t[0]) + "," +
                                                      std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                                      "} listed twice");
        auto link = [&](int a, int b, int c) {
            h.pair_nbhd_[h.index(a, b)].insert(c);
            h.pair_nbhd_[h.index(b, a)].insert(c);
        };
        link(t[0], t[1], t[2]);
        link(t[0], t[2], t[1]);
        link(t[1], t[2], t[0]);
        h.edges_.push_back(t);
    }
    std::sort(h.edges_.begin(), h.edges_.end());
    return h;
}

int Hypergraph3::edges_in(const Quad &q) const { return edges_in(q[0], q[1], q[2], q[3]); }

Hypergraph3 Hypergraph3::induced(const VertexSet &keep) const
{
    std::vector<int> relabel(static_cast<std::size_t>(n_), -1);
    int next = 0;
    keep.for_each([&](int v) {
        if (v < n_)
            relabel[static_cast<std::size_t>(v)] = next++;
    });
    std::vector<Triple> kept;
    for (const auto &e : edges_) {
        if (keep.contains(e[0]) && keep.contains(e[1]) && keep.contains(e[2]))
            kept.push_back({relabel[static_cast<std::size_t>(e[0])], relabel[static_cast<std::size_t>(e[1])],
                            relabel[static_cast<std::size_t>(e[2])]});
    }
    return from_edge_list(std::max(next, 1), kept);
}

int min_codegree(const Hypergraph3 &h)
{
    int best = std::numeric_limits<int>::max();
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            best = std::min(best, h.codegree(u, v));
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

VertexSet link_L(const Hypergraph3 &h, const Triple &raw)
{
    Triple t = make_triple(raw[0], raw[1], raw[2]);
    if (t[0] == t[1] || t[1] == t[2])
        throw Error(ErrorCode::DegenerateTriple, "link of a degenerate triple");
    for (int v : t)
        if (v < 0 || v >= h.n())
            throw Error(ErrorCode::OutOfRange, "link triple vertex out of range");

    const VertexSet &ab = h.nbhd(t[0], t[1]);
    const VertexSet &ac = h.nbhd(t[0], t[2]);
    const VertexSet &bc = h.nbhd(t[1], t[2]);
    VertexSet out;
    if (h.has_edge(t))
        out = (ab & ac) | (ab & bc) | (ac & bc);
    else
        out = ab & ac & bc;
    out -= to_set(t);
    return out;
}

std::vector<Quad> pattern_copies(const Hypergraph3 &h, Pattern4 p)
{
    return pattern_copies(h, p, h.vertices());
}

std::vector<Quad> pattern_copies(const Hypergraph3 &h, Pattern4 p, const VertexSet &within)
{
    const auto vs = (within & h.vertices()).to_vector();
    const int need = edge_count(p);
    const auto m = vs.size();
    std::vector<Quad> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const int a = vs[i], b = vs[j];
            for (std::size_t k = j + 1; k < m; ++k) {
                const int c = vs[k];
                const int abc = int(h.has_edge(a, b, c));
                for (std::size_t l = k + 1; l < m; ++l) {
                    const int d = vs[l];
                    const int cnt = abc + int(h.has_edge(a, b, d)) + int(h.has_edge(a, c, d)) +
                                    int(h.has_edge(b, c, d));
                    if (cnt >= need)
                        out.push_back({a, b, c, d});
                }
            }
        }
    return out;
}

EdgeExtensionResult edge_extension_check(const Hypergraph3 &h)
{
    EdgeExtensionResult r;
    if (h.n() < 2)
        return r;
    const int delta = min_codegree(h);
    const double bound = (3.0 * delta - h.n()) / 2.0;
    int worst = std::numeric_limits<int>::max();
    for (const auto &e : h.edges()) {
        const int size = link_L(h, e).size();
        if (size < worst) {
            worst = size;
            r.worst_edge = e;
        }
    }
    if (h.edges().empty())
        return r;
    r.has_edges = true;
    r.worst_link_size = worst;
    r.slack = worst - bound;
    r.holds = r.slack >= 0.0;
    return r;
}

PartitionStats partition_stats(const Hypergraph3 &h, std::span<const int> labels)
{
    if (labels.size() < static_cast<std::size_t>(h.n()))
        throw Error(ErrorCode::UnlabelledVertex,
                    "vertex " + std::to_string(labels.size()) + " has no class label");
    for (int v = 0; v < h.n(); ++v) {
        const int l = labels[static_cast<std::size_t>(v)];
        if (l < 0)
            throw Error(ErrorCode::UnlabelledVertex, "vertex " + std::to_string(v) + " has no class label");
        if (l > 2)
            throw Error(ErrorCode::OutOfRange, "at most three classes are supported");
    }

    PartitionStats s;
    s.labels.assign(labels.begin(), labels.begin() + h.n());
    auto type_of = [&](auto... vs) {
        std::string key;
        (key.push_back(static_cast<char>('A' + s.labels[static_cast<std::size_t>(vs)])), ...);
        std::sort(key.begin(), key.end());
        return key;
    };
    // Every multiset of the labels in use starts at zero.
    const int classes = s.labels.empty() ? 0 : *std::max_element(s.labels.begin(), s.labels.end()) + 1;
    for (int size : {3, 4}) {
        auto &counts = size == 3 ? s.edge_counts : s.pattern_counts;
        std::string key(static_cast<std::size_t>(size), 'A');
        while (true) {
            counts[key] = 0;
            int i = size - 1;
            while (i >= 0 && key[static_cast<std::size_t>(i)] == 'A' + classes - 1)
                --i;
            if (i < 0)
                break;
            const char next = static_cast<char>(key[static_cast<std::size_t>(i)] + 1);
            for (int j = i; j < size; ++j)
                key[static_cast<std::size_t>(j)] = next;
        }
    }
    for (const auto &e : h.edges())
        ++s.edge_counts[type_of(e[0], e[1], e[2])];
    for (const auto &q : pattern_copies(h, Pattern4::K4MinusE))
        ++s.pattern_counts[type_of(q[0], q[1], q[2], q[3])];
    return s;
}

} // namespace hypertile

#include "hypertile/constructions.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "hypertile/rng.hpp"

namespace hypertile {

Hypergraph3 h_ab(int a, int b)
{
    if (a < 0 || b < 0 || a + b < 3)
        throw Error(ErrorCode::TooSmall, "h_ab needs a, b >= 0 and a + b >= 3");
    const int n = a + b;
    std::vector<Triple> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const int in_b = int(u >= a) + int(v >= a) + int(w >= a);
                if (in_b % 2 == 1)
                    edges.push_back({u, v, w});
            }
    return Hypergraph3::from_edge_list(n, edges);
}

Hypergraph3 h_l(int n, int l)
{
    if (n < 16 || n % 4 != 0 || n % 3 != 1)
        throw Error(ErrorCode::BadModulus, "h_l needs n >= 16, 4 | n and n = 1 (mod 3); got n = " +
                                               std::to_string(n));
    const int half = n / 2;
    if (l < 1 || l > half)
        throw Error(ErrorCode::BadL, "h_l needs 1 <= l <= n/2; got l = " + std::to_string(l));

    // E1: inside A ∪ B (vertices 0..n-2), odd number of B-vertices.
    const int first_b = half - 1;
    std::vector<Triple> edges;
    for (int u = 0; u < n - 1; ++u)
        for (int v = u + 1; v < n - 1; ++v)
            for (int w = v + 1; w < n - 1; ++w) {
                const int in_b = int(u >= first_b) + int(v >= first_b) + int(w >= first_b);
                if (in_b % 2 == 1)
                    edges.push_back({u, v, w});
            }

    const int z = h_l_z(n);
    // E2: z v_i v_j and z w_i w_j for i < min{j, l}.
    for (int j = 1; j <= half - 1; ++j)
        for (int i = 1; i < std::min(j, l); ++i)
            edges.push_back(make_triple(z, h_l_v(n, i), h_l_v(n, j)));
    for (int j = 1; j <= half; ++j)
        for (int i = 1; i < std::min(j, l); ++i)
            edges.push_back(make_triple(z, h_l_w(n, i), h_l_w(n, j)));
    // E3: z v_i w_j for l <= min{i, j}.
    for (int i = l; i <= half - 1; ++i)
        for (int j = l; j <= half; ++j)
            edges.push_back(make_triple(z, h_l_v(n, i), h_l_w(n, j)));

    return Hypergraph3::from_edge_list(n, edges);
}

Orientation random_orientation(int n, std::uint64_t seed)
{
    Rng rng(seed);
    Orientation o(static_cast<std::size_t>(n), std::vector<std::int8_t>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool forward = (rng.next_u64() >> 63) != 0;
            o[u][v] = forward ? 1 : 0;
            o[v][u] = forward ? 0 : 1;
        }
    return o;
}

Hypergraph3 tournament_triangles(int n, const Orientation &winner)
{
    if (static_cast<int>(winner.size()) < n)
        throw Error(ErrorCode::IncompleteOrientation, "orientation has fewer than n rows");
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(winner[u].size()) < n)
            throw Error(ErrorCode::IncompleteOrientation, "orientation row " + std::to_string(u) + " too short");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto uv = winner[u][v], vu = winner[v][u];
            if (uv < 0 || vu < 0 || uv == vu)
                throw Error(ErrorCode::IncompleteOrientation,
                            "pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not oriented");
        }

    std::vector<Triple> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const bool cw = winner[u][v] && winner[v][w] && winner[w][u];
                const bool ccw = winner[v][u] && winner[w][v] && winner[u][w];
                if (cw || ccw)
                    edges.push_back({u, v, w});
            }
    return Hypergraph3::from_edge_list(n, edges);
}

Hypergraph3 random_3graph(int n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::OutOfRange, "edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Triple> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (rng.bernoulli(p))
                    edges.push_back({u, v, w});
    return Hypergraph3::from_edge_list(n, edges);
}

Hypergraph3 complete_3graph(int n) { return random_3graph(n, 1.0, 0); }

namespace {

std::map<std::string, std::string> parse_params(const std::string &text)
{
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::ParseError, "expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

long long as_int(const std::map<std::string, std::string> &params, const std::string &key)
{
    const auto it = params.find(key);
    if (it == params.end())
        throw Error(ErrorCode::ParseError, "missing parameter '" + key + "'");
    long long value = 0;
    const auto &s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError, "parameter '" + key + "' is not an integer");
    return value;
}

double as_double(const std::map<std::string, std::string> &params, const std::string &key)
{
    const auto it = params.find(key);
    if (it == params.end())
        throw Error(ErrorCode::ParseError, "missing parameter '" + key + "'");
    try {
        std::size_t used = 0;
        const double value = std::stod(it->second, &used);
        if (used != it->second.size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception &) {
        throw Error(ErrorCode::ParseError, "parameter '" + key + "' is not a number");
    }
}

} // namespace

ConstructionSpec ConstructionSpec::parse(const std::string &text, std::optional<std::uint64_t> default_seed)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::ParseError, "construction spec needs 'kind:params', got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const auto params = parse_params(text.substr(colon + 1));

    ConstructionSpec spec;
    auto seed = [&] {
        if (default_seed && params.find("seed") == params.end())
            return *default_seed;
        return static_cast<std::uint64_t>(as_int(params, "seed"));
    };
    if (kind == "hab") {
        spec.kind = Kind::HAB;
        spec.a = static_cast<int>(as_int(params, "a"));
        spec.b = static_cast<int>(as_int(params, "b"));
    } else if (kind == "hl") {
        spec.kind = Kind::HL;
        spec.n = static_cast<int>(as_int(params, "n"));
        spec.l = static_cast<int>(as_int(params, "l"));
    } else if (kind == "tour") {
        spec.kind = Kind::TOURNAMENT_TRIANGLES;
        spec.n = static_cast<int>(as_int(params, "n"));
        spec.seed = seed();
    } else if (kind == "rand") {
        spec.kind = Kind::RANDOM;
        spec.n = static_cast<int>(as_int(params, "n"));
        spec.p = as_double(params, "p");
        spec.seed = seed();
    } else if (kind == "complete") {
        spec.kind = Kind::COMPLETE;
        spec.n = static_cast<int>(as_int(params, "n"));
    } else {
        throw Error(ErrorCode::ParseError, "unknown construction '" + kind + "'");
    }
    return spec;
}

Hypergraph3 ConstructionSpec::build() const
{
    switch (kind) {
    case Kind::HAB: return h_ab(a, b);
    case Kind::HL: return h_l(n, l);
    case Kind::TOURNAMENT_TRIANGLES: return tournament_triangles(n, random_orientation(n, seed));
    case Kind::RANDOM: return random_3graph(n, p, seed);
    case Kind::COMPLETE: return complete_3graph(n);
    }
    throw Error(ErrorCode::ParseError, "unknown construction kind");
}

std::string ConstructionSpec::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::HAB: os << "hab:a=" << a << ",b=" << b; break;
    case Kind::HL: os << "hl:n=" << n << ",l=" << l; break;
    case Kind::TOURNAMENT_TRIANGLES: os << "tour:n=" << n << ",seed=" << seed; break;
    case Kind::RANDOM: os << "rand:n=" << n << ",p=" << p << ",seed=" << seed; break;
    case Kind::COMPLETE: os << "complete:n=" << n; break;
    }
    return os.str();
}

} // namespace hypertile

#include "hypertile/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace hypertile {

Hypergraph3 read_text(std::istream &in)
{
    long long n = 0, m = 0;
    if (!(in >> n >> m))
        throw Error(ErrorCode::ParseError, "expected header 'n m'");
    if (m < 0)
        throw Error(ErrorCode::ParseError, "negative edge count");
    std::vector<Triple> triples;
    triples.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0, w = 0;
        if (!(in >> u >> v >> w))
            throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " triples, got " +
                                                   std::to_string(i));
        auto narrow = [](long long x) {
            if (x < 0 || x > kMaxVertices)
                throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(x) + " out of range");
            return static_cast<int>(x);
        };
        triples.push_back({narrow(u), narrow(v), narrow(w)});
    }
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::OutOfRange, "vertex count " + std::to_string(n) + " unsupported");
    return Hypergraph3::from_edge_list(static_cast<int>(n), triples);
}

void write_text(std::ostream &out, const Hypergraph3 &h)
{
    out << h.n() << ' ' << h.edge_count() << '\n';
    for (const auto &e : h.edges())
        out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

std::string to_text(const Hypergraph3 &h)
{
    std::ostringstream os;
    write_text(os, h);
    return os.str();
}

Hypergraph3 from_json(const nlohmann::json &j)
{
    try {
        const int n = j.at("n").get<int>();
        std::vector<Triple> triples;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw Error(ErrorCode::ParseError, "edge must be an array of three vertices");
            triples.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        }
        return Hypergraph3::from_edge_list(n, triples);
    } catch (const nlohmann::json::exception &ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

nlohmann::json to_json(const Hypergraph3 &h)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &e : h.edges())
        edges.push_back({e[0], e[1], e[2]});
    return {{"n", h.n()}, {"edges", std::move(edges)}};
}

} // namespace hypertile

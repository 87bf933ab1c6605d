#pragma once

#include <cstdint>
#include <optional>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hypertile/hypergraph.hpp"

namespace hypertile {

// Vertex numbering conventions, fixed so isomorphism checks are relabellings:
//   h_ab:  A = 0..a-1, B = a..a+b-1.
//   h_l:   A = v_1..v_{n/2-1} -> 0..n/2-2, B = w_1..w_{n/2} -> n/2-1..n-2, z -> n-1.

/// Every triple with an odd number of vertices in B (types AAB and BBB).
Hypergraph3 h_ab(int a, int b);

/// The n ≡ 1 (mod 3) family on A ∪ B ∪ {z}: E1 ∪ E2 ∪ E3 with threshold index l.
Hypergraph3 h_l(int n, int l);

/// Vertex index of v_i (1-based i) in h_l(n, ·).
inline int h_l_v(int n, int i) { (void)n; return i - 1; }
/// Vertex index of w_j (1-based j) in h_l(n, ·).
inline int h_l_w(int n, int j) { return n / 2 - 1 + j - 1; }
inline int h_l_z(int n) { return n - 1; }

/// Orientation of the complete graph: winner[u][v] == true iff u -> v.
/// Entries for u == v are ignored; winner[u][v] must equal !winner[v][u].
using Orientation = std::vector<std::vector<std::int8_t>>;

/// Uniformly random orientation from a seed (-1 entries mean "missing" in hand-built ones).
Orientation random_orientation(int n, std::uint64_t seed);

/// Triples whose three arcs form a directed 3-cycle.
Hypergraph3 tournament_triangles(int n, const Orientation &winner);

/// Each of the C(n,3) triples independently with probability p.
Hypergraph3 random_3graph(int n, double p, std::uint64_t seed);

Hypergraph3 complete_3graph(int n);

/// Construction spec strings: "hab:a=4,b=4", "hl:n=16,l=3", "tour:n=20,seed=7",
/// "rand:n=30,p=0.75,seed=1", "complete:n=8".
struct ConstructionSpec
{
    enum class Kind
    {
        HAB,
        HL,
        TOURNAMENT_TRIANGLES,
        RANDOM,
        COMPLETE
    };
    Kind kind = Kind::COMPLETE;
    int a = 0, b = 0, n = 0, l = 0;
    double p = 0.0;
    std::uint64_t seed = 0;

    /// `default_seed` fills in a missing seed for tour and rand.
    static ConstructionSpec parse(const std::string &text, std::optional<std::uint64_t> default_seed = std::nullopt);
    [[nodiscard]] Hypergraph3 build() const;
    [[nodiscard]] std::string to_string() const;
};

} // namespace hypertile

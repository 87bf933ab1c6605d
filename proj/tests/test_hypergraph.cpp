#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hypertile/constructions.hpp"
#include "hypertile/hypergraph.hpp"
#include "hypertile/io.hpp"
#include "naive.hpp"

using namespace hypertile;

namespace {

Hypergraph3 graph(int n, std::vector<Triple> edges) { return Hypergraph3::from_edge_list(n, edges); }

ErrorCode code_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ParseError;
}

} // namespace

TEST_SUITE("hypergraph")
{
    TEST_CASE("from_edge_list builds K4-e and rejects bad input")
    {
        const auto h = graph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
        CHECK(h.edge_count() == 3);
        CHECK(h.spans({0, 1, 2, 3}, Pattern4::K4MinusE));
        CHECK_FALSE(h.spans({0, 1, 2, 3}, Pattern4::K4));

        CHECK(code_of([] { graph(4, {{0, 1, 2}, {0, 1, 2}}); }) == ErrorCode::DuplicateEdge);
        CHECK(code_of([] { graph(4, {{2, 1, 0}, {0, 2, 1}}); }) == ErrorCode::DuplicateEdge);
        CHECK(code_of([] { graph(5, {{0, 1, 5}}); }) == ErrorCode::OutOfRange);
        CHECK(code_of([] { graph(5, {{0, 1, -1}}); }) == ErrorCode::OutOfRange);
        CHECK(code_of([] { graph(5, {{0, 1, 1}}); }) == ErrorCode::DegenerateTriple);
        CHECK(code_of([] { graph(129, {}); }) == ErrorCode::OutOfRange);
    }

    TEST_CASE("edges are stored sorted")
    {
        const auto h = graph(5, {{4, 2, 0}, {3, 1, 0}});
        CHECK(h.edges() == std::vector<Triple>{{0, 1, 3}, {0, 2, 4}});
        CHECK(h.has_edge(4, 0, 2));
        CHECK(h.codegree(2, 0) == 1);
    }

    TEST_CASE("min_codegree")
    {
        CHECK(min_codegree(complete_3graph(6)) == 4);
        CHECK(min_codegree(h_ab(4, 4)) == 2);
        CHECK(min_codegree(h_ab(5, 7)) == 4);
        CHECK(min_codegree(graph(4, {})) == 0);
    }

    TEST_CASE("link_L on h_ab and complete graphs")
    {
        const int a = 5, b = 6;
        const auto h = h_ab(a, b);
        const VertexSet A = VertexSet::range(a);
        const VertexSet B = VertexSet::range(a + b) - A;
        for (const auto &e : h.edges()) {
            const VertexSet es = to_set(e);
            const auto link = link_L(h, e);
            if ((es & A).empty()) {
                CHECK(link == B - es);
                CHECK(link.size() == b - 3);
            } else {
                CHECK(link == A - es);
                CHECK(link.size() == a - 2);
            }
        }
        const auto k = complete_3graph(9);
        CHECK(link_L(k, {1, 4, 7}).size() == 6);
        CHECK_THROWS_AS(link_L(k, {1, 1, 7}), Error);
    }

    TEST_CASE("link_L agrees with counting edges in each 4-set")
    {
        for (std::uint64_t s = 1; s <= 10; ++s) {
            const auto h = random_3graph(14, 0.5, s);
            const naive::EdgeSet es(h);
            for (int a = 0; a < 14; ++a)
                for (int b = a + 1; b < 14; ++b)
                    for (int c = b + 1; c < 14; ++c) {
                        VertexSet brute;
                        for (int v = 0; v < 14; ++v)
                            if (v != a && v != b && v != c) {
                                if (es.count4(a, b, c, v) >= 3)
                                    brute.insert(v);
                            }
                        CHECK(link_L(h, {a, b, c}) == brute);
                    }
        }
    }

    TEST_CASE("pattern_copies")
    {
        CHECK(pattern_copies(h_ab(4, 4), Pattern4::K4MinusE).size() == 17);
        CHECK(pattern_copies(graph(4, {{0, 1, 2}, {0, 1, 3}}), Pattern4::K4MinusE).empty());
        CHECK(pattern_copies(complete_3graph(5), Pattern4::K4).size() == 5);
        const auto copies = pattern_copies(complete_3graph(6), Pattern4::K4);
        CHECK(std::is_sorted(copies.begin(), copies.end()));
        CHECK(pattern_copies(complete_3graph(8), Pattern4::K4, VertexSet::range(5)).size() == 5);
    }

    TEST_CASE("pattern containment chain")
    {
        for (std::uint64_t s = 1; s <= 20; ++s) {
            const auto h = random_3graph(10, 0.4, s);
            const auto k4 = pattern_copies(h, Pattern4::K4);
            const auto k4m = pattern_copies(h, Pattern4::K4MinusE);
            const auto k4m2 = pattern_copies(h, Pattern4::K4Minus2E);
            const auto k4m3 = pattern_copies(h, Pattern4::K4Minus3E);
            CHECK(std::includes(k4m.begin(), k4m.end(), k4.begin(), k4.end()));
            CHECK(std::includes(k4m2.begin(), k4m2.end(), k4m.begin(), k4m.end()));
            CHECK(std::includes(k4m3.begin(), k4m3.end(), k4m2.begin(), k4m2.end()));
        }
    }

    TEST_CASE("edge_extension_check")
    {
        CHECK(edge_extension_check(h_ab(6, 6)).holds);
        const auto k = edge_extension_check(complete_3graph(8));
        CHECK(k.holds);
        CHECK(k.worst_link_size == 5);
        CHECK(k.slack == doctest::Approx(0.0));
        for (std::uint64_t s = 1; s <= 30; ++s)
            CHECK(edge_extension_check(random_3graph(12 + int(s % 10), 0.2 + 0.025 * double(s), s)).holds);
        for (std::uint64_t s = 1; s <= 10; ++s)
            CHECK(edge_extension_check(tournament_triangles(16, random_orientation(16, s))).holds);
    }

    TEST_CASE("partition_stats on h_ab(4,4)")
    {
        const std::vector<int> labels{0, 0, 0, 0, 1, 1, 1, 1};
        const auto s = partition_stats(h_ab(4, 4), labels);
        CHECK(s.edge_counts.size() == 4);
        CHECK(s.pattern_counts.size() == 5);
        CHECK(s.edge_counts.at("AAB") == 24);
        CHECK(s.edge_counts.at("BBB") == 4);
        CHECK(s.edge_counts.at("AAA") == 0);
        CHECK(s.edge_counts.at("ABB") == 0);
        CHECK(s.pattern_counts.at("AAAB") == 16);
        CHECK(s.pattern_counts.at("BBBB") == 1);
        std::int64_t other = 0;
        for (const auto &[type, count] : s.pattern_counts)
            if (type != "AAAB" && type != "BBBB")
                other += count;
        CHECK(other == 0);

        const std::vector<int> one(8, 0);
        const auto t = partition_stats(h_ab(4, 4), one);
        CHECK(t.edge_counts.at("AAA") == 28);
        CHECK(t.pattern_counts.at("AAAA") == 17);

        const std::vector<int> short_labels{0, 0, 0};
        CHECK_THROWS_AS(partition_stats(h_ab(4, 4), short_labels), Error);
    }

    TEST_CASE("rebuild from edges reproduces the hypergraph")
    {
        for (std::uint64_t s = 1; s <= 10; ++s) {
            const auto h = random_3graph(20, 0.3, s);
            CHECK(Hypergraph3::from_edge_list(h.n(), h.edges()) == h);
            const auto keep = VertexSet::range(20) - VertexSet::of({3, 7, 11});
            const auto sub = h.induced(keep);
            CHECK(sub.n() == 17);
            const auto idx = keep.to_vector();
            for (const auto &e : sub.edges())
                CHECK(h.has_edge(idx[std::size_t(e[0])], idx[std::size_t(e[1])], idx[std::size_t(e[2])]));
        }
    }

    TEST_CASE("text and JSON formats round-trip")
    {
        const auto h = random_3graph(15, 0.3, 9);
        const auto text = to_text(h);
        std::istringstream in(text);
        CHECK(read_text(in) == h);
        CHECK(from_json(to_json(h)) == h);
        std::istringstream messy("4 2\n2 1 0\n 3 0   1\n");
        const auto m = read_text(messy);
        CHECK(to_text(m) == "4 2\n0 1 2\n0 1 3\n");
        std::istringstream bad("4 2\n0 1 2\n");
        CHECK_THROWS_AS(read_text(bad), Error);
    }

    TEST_CASE("naive codegree agrees with the bitset codegree")
    {
        for (std::uint64_t s = 1; s <= 10; ++s) {
            const auto h = random_3graph(13, 0.6, s);
            CHECK(naive::min_codegree(naive::EdgeSet(h)) == min_codegree(h));
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "armatch/core.hpp"
#include "armatch/prng.hpp"

using namespace armatch;

TEST_CASE("profiles sort part sizes and keep the input permutation") {
    const PartProfile p = make_profile({2, 2, 2});
    CHECK(p.part_count() == 3);
    CHECK(p.sizes() == std::vector<int>{2, 2, 2});

    const PartProfile q = make_profile({5, 3});
    CHECK(q.sizes() == std::vector<int>{3, 5});
    CHECK(q.input_order() == std::vector<int>{2, 1});
    CHECK(q.to_string() == "3x5");

    CHECK_THROWS_WITH_AS(make_profile({3}), "arity too small", std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_profile({3, 0}), "invalid part size", std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_profile({100000, 100000, 100000}), "profile too large",
                         std::invalid_argument);
}

TEST_CASE("profile strings round-trip") {
    CHECK(parse_profile("2x2x3").to_string() == "2x2x3");
    CHECK(parse_profile("4x2").to_string() == "2x4");
    CHECK_THROWS_AS(parse_profile("2x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("x2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("2xax3"), std::invalid_argument);
}

TEST_CASE("edge ranking follows the mixed-radix formula") {
    const PartProfile p = make_profile({2, 2, 2});
    CHECK(edge_rank(p, Edge{{1, 1, 1}}).rank == 0);
    CHECK(edge_rank(p, Edge{{2, 2, 2}}).rank == 7);
    CHECK(edge_rank(p, Edge{{1, 2, 1}}).rank == 2);
    CHECK_THROWS_WITH_AS(edge_rank(p, Edge{{3, 1, 1}}), "invalid edge", std::invalid_argument);
    CHECK_THROWS_WITH_AS(edge_rank(p, Edge{{1, 1}}), "invalid edge", std::invalid_argument);
}

TEST_CASE("rank and unrank are inverse over full hosts") {
    for (const auto& sizes :
         {std::vector<int>{2, 2, 2}, {3, 5}, {2, 3, 4}, {4, 4, 4, 4}, {10, 10, 10, 10}}) {
        const PartProfile p = make_profile(sizes);
        REQUIRE(p.edge_count() <= 100000);
        for (std::uint32_t r = 0; r < p.edge_count(); ++r) {
            const Edge e = edge_unrank(p, EdgeId{r});
            CHECK(edge_rank(p, e).rank == r);
            for (int s = 1; s <= p.part_count(); ++s)
                CHECK(coord_of(p, EdgeId{r}, s) == e.coords[static_cast<std::size_t>(s - 1)]);
        }
    }
}

TEST_CASE("edge text form round-trips") {
    const PartProfile p = make_profile({3, 4, 5});
    for (std::uint32_t r = 0; r < p.edge_count(); ++r) {
        const Edge e = edge_unrank(p, EdgeId{r});
        CHECK(edge_from_string(edge_to_string(e)) == e);
    }
    CHECK(edge_to_string(Edge{{1, 2, 1}}) == "(1,2,1)");
    CHECK_THROWS_AS(edge_from_string("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(edge_from_string("(1,,2)"), std::invalid_argument);
}

namespace {

SubHypergraph random_sub(const PartProfile& p, std::uint64_t seed) {
    EdgeSet members(p.edge_count());
    for (std::uint32_t r = 0; r < p.edge_count(); ++r)
        if (rng_u64(seed, 7, r) & 1) members.set(r);
    return SubHypergraph(p, std::move(members));
}

} // namespace

TEST_CASE("degrees and co-degrees on the complete host") {
    const PartProfile p = make_profile({2, 2, 2});
    const SubHypergraph host = SubHypergraph::complete(p);
    for (int part = 1; part <= 3; ++part)
        for (int idx = 1; idx <= 2; ++idx) CHECK(degree(host, Vertex{part, idx}) == 4);
    CHECK(codegree(host, Vertex{1, 1}, Vertex{2, 1}) == 2);
    CHECK(codegree(host, Vertex{1, 1}, Vertex{1, 2}) == 0);
    CHECK(codegree(host, Vertex{1, 1}, Vertex{1, 1}) == 0);
    CHECK_THROWS_WITH_AS(degree(host, Vertex{4, 1}), "invalid vertex", std::invalid_argument);
    CHECK_THROWS_WITH_AS(degree(host, Vertex{1, 3}), "invalid vertex", std::invalid_argument);
}

TEST_CASE("degree sums per part equal the edge count") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const PartProfile p = make_profile({2, 3, 4});
        const SubHypergraph sub = random_sub(p, seed);
        for (int part = 1; part <= p.part_count(); ++part) {
            std::uint64_t sum = 0;
            for (int idx = 1; idx <= p.size_of(part); ++idx) sum += degree(sub, Vertex{part, idx});
            CHECK(sum == sub.edge_count());
        }
        for (int idx = 1; idx <= p.size_of(2); ++idx) {
            const auto cd = codegree(sub, Vertex{1, 1}, Vertex{2, idx});
            CHECK(cd <= degree(sub, Vertex{1, 1}));
            CHECK(cd <= degree(sub, Vertex{2, idx}));
        }
    }
}

TEST_CASE("vertex removal drops exactly the incident edges") {
    const PartProfile p = make_profile({2, 2, 2});
    const SubHypergraph host = SubHypergraph::complete(p);
    const SubHypergraph rest = remove_vertex(host, Vertex{3, 1});
    CHECK(rest.edge_count() == 4);

    const SubHypergraph sub = random_sub(p, 9);
    const Vertex v{2, 2};
    CHECK(sub.edge_count() - remove_vertex(sub, v).edge_count() == degree(sub, v));

    // removing a degree-0 vertex keeps the member set
    SubHypergraph star = SubHypergraph::of_ranks(p, {0, 1});
    CHECK(remove_vertex(star, Vertex{1, 2}).members() == star.members());
}

TEST_CASE("edge disjointness") {
    CHECK(is_disjoint(Edge{{1, 1, 1}}, Edge{{2, 2, 2}}));
    CHECK_FALSE(is_disjoint(Edge{{1, 1, 1}}, Edge{{1, 2, 2}}));
    CHECK_FALSE(is_disjoint(Edge{{1, 1, 1}}, Edge{{1, 1, 1}}));
}

TEST_CASE("complete host has the product edge count") {
    CHECK(SubHypergraph::complete(make_profile({2, 3, 4})).edge_count() == 24);
    CHECK(SubHypergraph::complete(make_profile({5, 5})).edge_count() == 25);
}

TEST_CASE("edge sets behave as sets") {
    EdgeSet a(130), b(130);
    for (std::uint32_t i = 0; i < 130; i += 3) a.set(i);
    for (std::uint32_t i = 0; i < 130; i += 2) b.set(i);
    EdgeSet both = a;
    both &= b;
    both.for_each([&](std::uint32_t i) { CHECK(i % 6 == 0); });
    CHECK(both.count() == a.count_and(b));
    CHECK(both.is_subset_of(a));
    CHECK(both.is_subset_of(b));
    CHECK(a.intersects(b));
    EdgeSet odd = b;
    odd.and_not(a);
    CHECK_FALSE(odd.intersects(a));
    CHECK(a.next(0) == 0);
    CHECK(a.next(1) == 3);
    CHECK(EdgeSet(64).next(0) == -1);
}

TEST_CASE("colorings validate totality and surjectivity") {
    const PartProfile p = make_profile({2, 2});
    CHECK_THROWS_AS(EdgeColoring(SubHypergraph::complete(p), {1, 1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring(SubHypergraph::complete(p), {1, 1, 1, 3}), std::invalid_argument);
    const EdgeColoring c(SubHypergraph::complete(p), {1, 2, 2, 1});
    CHECK(c.color_count() == 2);
    CHECK(c.color_class(1).count() == 2);
    CHECK(c.color_of(EdgeId{1}) == 2);
}

TEST_CASE("matchings reject overlapping edges") {
    const PartProfile p = make_profile({2, 2});
    CHECK_THROWS_AS(Matching(p, {EdgeId{0}, EdgeId{1}}), std::invalid_argument);
    const Matching m(p, {EdgeId{0}, EdgeId{3}});
    CHECK(m.size() == 2);
    CHECK(m.edges()[0] == Edge{{1, 1}});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "armatch/constructions.hpp"
#include "armatch/matching.hpp"
#include "armatch/prng.hpp"
#include "armatch/rainbow.hpp"
#include "test_util.hpp"

using namespace armatch;

namespace {

SubHypergraph random_sub(const PartProfile& p, std::uint64_t seed, int keep_percent = 50) {
    EdgeSet members(p.edge_count());
    for (std::uint32_t r = 0; r < p.edge_count(); ++r)
        if (rng_below(seed, 11, r, 100) < static_cast<std::uint64_t>(keep_percent)) members.set(r);
    return SubHypergraph(p, std::move(members));
}

} // namespace

TEST_CASE("maximum matching on small hosts") {
    const auto c222 = SubHypergraph::complete(make_profile({2, 2, 2}));
    const auto res = max_matching(c222);
    CHECK(res.best.size() == 2);
    CHECK(res.optimal);

    // Turan construction on 2x3x3 for k=3 caps out at 2 disjoint edges.
    const auto turan = build_turan_extremal(make_profile({2, 3, 3}), 3);
    CHECK(max_matching(turan).best.size() == 2);
    CHECK(testutil::brute_has_k_matching(turan, 2));
    CHECK_FALSE(testutil::brute_has_k_matching(turan, 3));

    const auto empty = SubHypergraph::empty(make_profile({2, 2}));
    const auto none = max_matching(empty);
    CHECK(none.best.size() == 0);
    CHECK(none.optimal);
}

TEST_CASE("maximum matching equals subset brute force on random hosts") {
    for (const auto& sizes : testutil::small_profiles(4, 16, 1)) {
        const PartProfile p = make_profile(sizes);
        for (std::uint64_t seed : {1, 2}) {
            const SubHypergraph sub = random_sub(p, seed);
            const auto res = max_matching(sub);
            REQUIRE(res.optimal);
            CHECK(res.best.size() == testutil::brute_max_matching(sub));
            CHECK(res.best.size() <= static_cast<std::size_t>(p.size_of(1)));
        }
    }
}

TEST_CASE("k-matching witnesses and nonexistence proofs") {
    const PartProfile p33 = make_profile({3, 3});
    const auto turan = build_turan_extremal(p33, 3);
    CHECK(has_k_matching(turan, 3).status == WitnessStatus::absent);

    const auto host = SubHypergraph::complete(p33);
    const auto found = has_k_matching(host, 3);
    REQUIRE(found.status == WitnessStatus::found);
    CHECK(found.witness->size() == 3); // Matching construction re-validates disjointness

    const auto one = has_k_matching(turan, 1);
    REQUIRE(one.status == WitnessStatus::found);
    CHECK(one.witness->edge_ids().front().rank == 0);

    CHECK_THROWS_AS(has_k_matching(host, 0), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported, never silent") {
    const auto host = SubHypergraph::complete(make_profile({4, 4, 4}));
    SearchBudget tiny;
    tiny.node_cap = 3;
    const auto res = max_matching(host, tiny);
    CHECK_FALSE(res.optimal);
    CHECK_FALSE(res.stats.completed);

    const auto k = has_k_matching(host, 4, tiny);
    CHECK(k.status == WitnessStatus::indeterminate);

    SearchBudget zero;
    zero.node_cap = 0;
    CHECK_THROWS_AS(max_matching(host, zero), std::invalid_argument);

    SearchBudget negative;
    negative.time_cap_ms = -5;
    CHECK_THROWS_AS(max_matching(host, negative), std::invalid_argument);

    SearchBudget roomy;
    roomy.time_cap_ms = 60000;
    CHECK(max_matching(SubHypergraph::complete(make_profile({2, 2})), roomy).optimal);
}

TEST_CASE("disjointness components of complete hosts") {
    CHECK(disjointness_components(SubHypergraph::complete(make_profile({3, 3, 3}))).classes.size() == 1);
    CHECK(disjointness_components(SubHypergraph::complete(make_profile({2, 2, 2}))).classes.size() == 4);
    CHECK(disjointness_components(SubHypergraph::complete(make_profile({2, 3, 3}))).classes.size() == 1);
}

TEST_CASE("components partition the members and close under disjointness") {
    for (const auto& sizes : testutil::small_profiles(4, 24)) {
        const PartProfile p = make_profile(sizes);
        const SubHypergraph sub = random_sub(p, 5, 70);
        const auto parts = disjointness_components(sub);

        // partition property
        EdgeSet seen(p.edge_count());
        std::size_t total = 0;
        for (const auto& cls : parts.classes) {
            for (auto r : cls) {
                CHECK_FALSE(seen.test(r));
                seen.set(r);
                CHECK(sub.members().test(r));
            }
            total += cls.size();
        }
        CHECK(total == sub.edge_count());

        // independent connectivity check: BFS on the naive adjacency
        const auto ranks = sub.members().to_vector();
        std::vector<int> comp(ranks.size(), -1);
        int next_comp = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            if (comp[i] >= 0) continue;
            std::vector<std::size_t> queue{i};
            comp[i] = next_comp;
            while (!queue.empty()) {
                const std::size_t u = queue.back();
                queue.pop_back();
                for (std::size_t v = 0; v < ranks.size(); ++v) {
                    if (comp[v] >= 0) continue;
                    if (testutil::edges_pairwise_disjoint({edge_unrank(p, EdgeId{ranks[u]}),
                                                           edge_unrank(p, EdgeId{ranks[v]})})) {
                        comp[v] = next_comp;
                        queue.push_back(v);
                    }
                }
            }
            ++next_comp;
        }
        CHECK(parts.classes.size() == static_cast<std::size_t>(next_comp));
        // classes agree with BFS components as sets
        for (const auto& cls : parts.classes) {
            const auto first = std::find(ranks.begin(), ranks.end(), cls.front()) - ranks.begin();
            for (auto r : cls) {
                const auto i = std::find(ranks.begin(), ranks.end(), r) - ranks.begin();
                CHECK(comp[static_cast<std::size_t>(i)] == comp[static_cast<std::size_t>(first)]);
            }
        }
    }
}

TEST_CASE("component-constant colorings have no rainbow 2-matching, refined ones do") {
    for (const auto& sizes : testutil::small_profiles(5, 32)) {
        const PartProfile p = make_profile(sizes);
        const SubHypergraph host = SubHypergraph::complete(p);
        const auto parts = disjointness_components(host);

        std::vector<int> colors(p.edge_count(), 0);
        for (std::size_t c = 0; c < parts.classes.size(); ++c)
            for (auto r : parts.classes[c]) colors[r] = static_cast<int>(c) + 1;
        const EdgeColoring constant(host, colors);
        CHECK(find_rainbow_k(constant, 2).status == WitnessStatus::absent);

        // split one multi-edge component into two colors: a rainbow pair appears
        for (std::size_t c = 0; c < parts.classes.size(); ++c) {
            if (parts.classes[c].size() < 2) continue;
            auto split = colors;
            split[parts.classes[c].front()] = static_cast<int>(parts.classes.size()) + 1;
            const EdgeColoring refined(host, split);
            CHECK(find_rainbow_k(refined, 2).status == WitnessStatus::found);
            break;
        }
    }
}

#include "doctest.h"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/matching.hpp"

using namespace ramsey;
using namespace ramsey::constructions;

TEST_CASE("regular graphs with bounded components") {
    Graph g = regular_bounded_components(7, 3);
    for (int v = 0; v < 7; ++v) CHECK(g.degree(v) == 2);
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 4);

    CHECK(regular_bounded_components(6, 1).edge_count() == 0);

    g = regular_bounded_components(10, 5);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
    for (const auto& comp : g.components()) CHECK(comp.size() == 5);

    CHECK_THROWS_AS(regular_bounded_components(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(regular_bounded_components(5, 4), std::invalid_argument);  // odd n, odd k-1
    CHECK_THROWS_AS(regular_bounded_components(3, 4), std::invalid_argument);  // n < k

    for (int n = 0; n <= 25; ++n)
        for (int k = 1; k <= n + 1; ++k) {
            if (!regular_bounded_components_feasible(n, k)) continue;
            Graph r = regular_bounded_components(n, k);
            for (int v = 0; v < n; ++v) CHECK(r.degree(v) == k - 1);
            for (const auto& comp : r.components())
                CHECK(static_cast<int>(comp.size()) <= 2 * k - 1);
        }
}

TEST_CASE("star-wheel witness") {
    auto rep = witness_star_wheel(4, 3);
    CHECK(rep.coloring.size() == 11);
    CHECK(rep.claimed_bound == 11);
    CHECK(rep.certify());

    rep = witness_star_wheel(4, 4);  // both even: one vertex fewer
    CHECK(rep.coloring.size() == 10);
    CHECK(rep.claimed_bound == 11);
    CHECK(rep.certify());

    rep = witness_star_wheel(6, 3);  // m = 2n: the 5n - (1+(-1)^n)/2 case
    CHECK(rep.claimed_bound == 15);
    CHECK(rep.certify());

    CHECK_THROWS_AS(witness_star_wheel(2, 3), std::invalid_argument);
}

TEST_CASE("minimum-degree wheel witness") {
    Graph g = witness_mindegree_wheel(20, 3);
    CHECK(g.size() == 20);
    CHECK(degree_stats(g).min_degree == 11);
    CHECK(mindegree_wheel_expected_delta(20, 3) == 11);
    CHECK(detectors::contains_family(g, FamilySpec(FamilyKind::Wheel, 6)).status ==
          detectors::Status::Absent);

    // Second parity case: k-1 odd and floor((n+k)/2) odd.
    CHECK(((4 - 1) % 2 == 1 && ((22 + 4) / 2) % 2 == 1));
    g = witness_mindegree_wheel(22, 4);
    CHECK(degree_stats(g).min_degree == mindegree_wheel_expected_delta(22, 4));
    CHECK(mindegree_wheel_expected_delta(22, 4) == (22 + 4) / 2 - 1);
    CHECK(detectors::contains_family(g, FamilySpec(FamilyKind::Wheel, 8)).status ==
          detectors::Status::Absent);

    g = witness_mindegree_wheel(21, 4);
    CHECK(degree_stats(g).min_degree == mindegree_wheel_expected_delta(21, 4));
    CHECK(detectors::contains_family(g, FamilySpec(FamilyKind::Wheel, 8)).status ==
          detectors::Status::Absent);

    CHECK_THROWS_AS(witness_mindegree_wheel(9, 3), std::invalid_argument);
}

TEST_CASE("two-clique cycle-wheel witness") {
    auto rep = witness_cycle_wheel_two_cliques(3, 2);
    CHECK(rep.coloring.size() == 10);
    CHECK(rep.claimed_bound == 11);
    CHECK(rep.certify());

    rep = witness_cycle_wheel_two_cliques(2, 2);
    CHECK(rep.coloring.size() == 6);
    CHECK(rep.claimed_bound == 7);
    CHECK(rep.certify());

    CHECK(witness_cycle_wheel_two_cliques(4, 3).certify());
}

TEST_CASE("three-clique cycle-fan witness") {
    auto rep = witness_cycle_fan_three_cliques(3, 4);
    CHECK(rep.coloring.size() == 11);
    CHECK(rep.claimed_bound == 12);
    CHECK(rep.certify());

    rep = witness_cycle_fan_three_cliques(2, 3);
    CHECK(rep.coloring.size() == 7);
    CHECK(rep.claimed_bound == 8);
    CHECK(rep.certify());

    CHECK_THROWS_AS(witness_cycle_fan_three_cliques(5, 4), std::invalid_argument);
}

TEST_CASE("q-clique cycle-star witness") {
    auto rep = witness_cycle_star_cliques(3, 7);  // q = 3, sub-case 2, r = 1
    CHECK(rep.claimed_bound == 18);
    CHECK(rep.coloring.size() == 18);
    CHECK(degree_stats(rep.coloring.blue()).max_degree <= 13);
    CHECK(detectors::contains_family(rep.coloring.red(), FamilySpec(FamilyKind::Cycle, 6)).status ==
          detectors::Status::Absent);
    CHECK(rep.certify());

    rep = witness_cycle_star_cliques(4, 8);  // q = 3, sub-case 1
    CHECK(rep.claimed_bound == 22);
    CHECK(rep.coloring.size() == 21);
    CHECK(rep.certify());

    rep = witness_cycle_star_cliques(4, 7);  // q = 2, sub-case 2
    CHECK(rep.claimed_bound == 20);
    CHECK(rep.certify());

    CHECK_THROWS_AS(witness_cycle_star_cliques(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(witness_cycle_star_cliques(8, 7), std::invalid_argument);
}

TEST_CASE("matching-fan witness") {
    auto rep = witness_matching_fan(2);
    CHECK(rep.coloring.size() == 5);
    CHECK(rep.claimed_bound == 6);
    CHECK(rep.certify());

    rep = witness_matching_fan(3);
    CHECK(rep.coloring.size() == 8);
    CHECK(rep.claimed_bound == 9);
    CHECK(matching::maximum_matching(rep.coloring.red()) == 2);
    CHECK(rep.certify());
}

TEST_CASE("complete multipartite builders") {
    CHECK(multipartite_complete({3, 3}) == Graph::complete_bipartite(3, 3));
    Graph g = multipartite_complete({1, 1, 2});
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 5);  // K_4 minus one edge
    g = multipartite_complete({2, 2, 2});
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);  // octahedron
}

TEST_CASE("multipartite spectra match the three-case rule on a sample") {
    // t = 2: even cycles up to twice the smaller part, nothing else.
    auto spec = detectors::cycle_spectrum(multipartite_complete({2, 5}), 7);
    CHECK(spec.present == std::vector<int>{4});
    // t >= 3 with no dominant part: pancyclic.
    spec = detectors::cycle_spectrum(multipartite_complete({2, 2, 3}), 7);
    CHECK(spec.pancyclic(7));
    // t >= 3 with a dominant part: all lengths up to 2(N - max part).
    spec = detectors::cycle_spectrum(multipartite_complete({1, 2, 8}), 11);
    for (int len = 3; len <= 6; ++len) CHECK(spec.has(len));
}

TEST_CASE("witness headers carry generator metadata") {
    auto rep = witness_cycle_wheel_two_cliques(3, 2);
    auto comments = rep.header_comments();
    REQUIRE(comments.size() == 5);
    CHECK(comments[0] == "generator: cycle-wheel");
    CHECK(comments[1] == "params: m=3 n=2");
    CHECK(comments[2] == "claimed-bound: 11");
    CHECK(comments[3] == "avoids-red: C6");
    CHECK(comments[4] == "avoids-blue: W4");
}

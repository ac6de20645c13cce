#include <functional>
#include <random>

#include "doctest.h"
#include "ramsey/decompositions.hpp"
#include "ramsey/detectors.hpp"

using namespace ramsey;
using namespace ramsey::decompositions;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Brute-force p: maximum coverage by disjoint edges and odd cycles, found by
// trying every role for the lowest remaining vertex. Used up to n = 9.
int brute_p(const Graph& g, std::uint32_t mask) {
    if (!mask) return 0;
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    int best = brute_p(g, rest);
    g.neighbors(v).for_each([&](int u) {
        if ((mask >> u) & 1u) best = std::max(best, 2 + brute_p(g, rest & ~(1u << u)));
    });
    std::vector<int> path{v};
    std::function<void(int, std::uint32_t)> walk = [&](int last, std::uint32_t used) {
        g.neighbors(last).for_each([&](int w) {
            if (!((mask >> w) & 1u) || ((used >> w) & 1u)) return;
            path.push_back(w);
            if (path.size() >= 3 && path.size() % 2 == 1 && g.has_edge(w, v))
                best = std::max(best, static_cast<int>(path.size()) +
                                          brute_p(g, mask & ~(used | (1u << w))));
            walk(w, used | (1u << w));
            path.pop_back();
        });
    };
    walk(v, 1u << v);
    return best;
}

int brute_p(const Graph& g) {
    return brute_p(g, g.size() >= 32 ? ~0u : (1u << g.size()) - 1);
}

Graph two_cliques_shared_vertex() {
    Graph g(9);  // two K_5's sharing vertex 4
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (int u = 4; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("two_connect_reduce leaves 2-connected graphs alone") {
    CHECK(two_connect_reduce(Graph::cycle(8), 4).empty());
    CHECK(two_connect_reduce(Graph::complete(6), 3).empty());
    CHECK(two_connect_reduce(Graph(5), 2).empty());       // isolated vertices are fine
    CHECK(two_connect_reduce(Graph::path(2), 2).empty()); // a single edge is fine
}

TEST_CASE("two_connect_reduce deletes the shared cut vertex") {
    auto x = two_connect_reduce(two_cliques_shared_vertex(), 5);
    CHECK(x == std::vector<int>{4});
}

TEST_CASE("two_connect_reduce respects the k-2 bound under the degree hypothesis") {
    std::mt19937 rng(808);
    const int k = 5;
    int tested = 0;
    for (int iter = 0; iter < 60; ++iter) {
        int n = 12 + static_cast<int>(rng() % 29);
        Graph g = random_graph(rng, n, 0.3);
        for (;;) {  // ensure k*deg >= n + k^2, i.e. deg >= n/k + k
            int worst = -1;
            for (int v = 0; v < n; ++v)
                if (k * g.degree(v) < n + k * k && (worst == -1 || g.degree(v) < g.degree(worst)))
                    worst = v;
            if (worst == -1) break;
            for (int u = 0; u < n; ++u)
                if (u != worst && !g.has_edge(worst, u)) {
                    g.add_edge(worst, u);
                    break;
                }
        }
        ++tested;
        auto x = two_connect_reduce(g, k);
        CHECK(static_cast<int>(x.size()) <= k - 2);
        Bitset alive(n);
        alive.set_all();
        for (int v : x) alive.reset(v);
        Induced rest = induced_subgraph(g, alive);
        for (const auto& comp : rest.graph.components()) {
            if (comp.size() <= 2) continue;
            CHECK(detectors::is_two_connected(induced_subgraph(rest.graph, comp).graph));
        }
        CHECK(two_connect_reduce(rest.graph, k).empty());  // idempotent
    }
    CHECK(tested == 60);
}

TEST_CASE("fractional matching fixed examples") {
    auto fm = max_fractional_matching(Graph::complete(3));
    CHECK(fm.covered == 3);
    CHECK(fm.odd_cycles.size() == 1);
    CHECK(fm.valid(Graph::complete(3)));

    fm = max_fractional_matching(Graph::cycle(4));
    CHECK(fm.covered == 4);
    CHECK(fm.edges.size() == 2);
    CHECK(fm.odd_cycles.empty());

    fm = max_fractional_matching(Graph::star(3));
    CHECK(fm.covered == 2);

    CHECK(fractional_cover_count(Graph::cycle(5)) == 5);
    CHECK(fractional_cover_count(Graph(6)) == 0);
}

TEST_CASE("double-cover p equals the exhaustive count") {
    std::mt19937 rng(909);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 0.18 + 0.12 * (iter % 5));
        int p = fractional_cover_count(g);
        CHECK(p == brute_p(g));
        auto fm = max_fractional_matching(g);
        CHECK(fm.covered == p);
        CHECK(fm.valid(g));
    }
}

TEST_CASE("deleting a vertex moves p by at most 2") {
    std::mt19937 rng(910);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, 0.35);
        int p = fractional_cover_count(g);
        for (int v = 0; v < n; ++v) {
            std::vector<int> rest;
            for (int u = 0; u < n; ++u)
                if (u != v) rest.push_back(u);
            int pv = fractional_cover_count(induced_subgraph(g, rest).graph);
            CHECK(pv <= p);
            CHECK(pv >= p - 2);
        }
    }
}

TEST_CASE("Pulleyblank decomposition fixed examples") {
    // Perfect fractional matching: everything sits in C.
    auto dec = pulleyblank_decomposition(Graph::cycle(5));
    CHECK(dec.covered == 5);
    CHECK(dec.a.empty());
    CHECK(dec.d.empty());
    CHECK(dec.c.size() == 5);

    // Star K_{1,3}: the three leaves are exposable, the center separates.
    dec = pulleyblank_decomposition(Graph::star(3));
    CHECK(dec.covered == 2);
    CHECK(dec.d == std::vector<int>{1, 2, 3});
    CHECK(dec.a == std::vector<int>{0});
    CHECK(dec.c.empty());
}

TEST_CASE("Pulleyblank invariants on random graphs") {
    std::mt19937 rng(911);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, 0.3);
        auto dec = pulleyblank_decomposition(g);
        long long a = static_cast<long long>(dec.a.size());
        long long c = static_cast<long long>(dec.c.size());
        long long d = static_cast<long long>(dec.d.size());
        CHECK(d == a + n - dec.covered);
        CHECK(2 * a + c == dec.covered);
        for (std::size_t i = 0; i < dec.d.size(); ++i)
            for (std::size_t j = i + 1; j < dec.d.size(); ++j)
                CHECK_FALSE(g.has_edge(dec.d[i], dec.d[j]));
        for (int x : dec.c)
            for (int y : dec.d) CHECK_FALSE(g.has_edge(x, y));
        if (!dec.d.empty()) CHECK(a >= degree_stats(g).min_degree);
    }
}

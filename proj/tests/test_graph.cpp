#include <random>
#include <sstream>

#include "doctest.h"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/witness_io.hpp"

using namespace ramsey;

namespace {

Graph wheel_graph(int rim) {
    Graph g(rim + 1);
    for (int i = 1; i <= rim; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % rim + 1);
    }
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("color classes of a two-coloring") {
    Graph red(3);
    red.add_edge(0, 1);
    TwoColoring c(red);
    Graph blue = c.color_class(Color::Blue);
    CHECK(blue.has_edge(0, 2));
    CHECK(blue.has_edge(1, 2));
    CHECK_FALSE(blue.has_edge(0, 1));

    TwoColoring empty(Graph(2));
    CHECK(empty.color_class(Color::Red).edge_count() == 0);

    TwoColoring full(Graph::complete(5));
    CHECK(full.color_class(Color::Blue).edge_count() == 0);
}

TEST_CASE("neighborhood subgraphs") {
    Induced nb = neighborhood_subgraph(Graph::complete(4), 0);
    CHECK(nb.graph.size() == 3);
    CHECK(nb.graph.edge_count() == 3);

    nb = neighborhood_subgraph(Graph::cycle(5), 0);
    CHECK(nb.graph.size() == 2);
    CHECK(nb.graph.edge_count() == 0);

    nb = neighborhood_subgraph(wheel_graph(6), 0);
    CHECK(nb.graph.size() == 6);
    for (int v = 0; v < 6; ++v) CHECK(nb.graph.degree(v) == 2);
    CHECK(nb.graph.connected());
}

TEST_CASE("degree stats") {
    DegreeStats s = degree_stats(Graph::cycle(6));
    CHECK(s.min_degree == 2);
    CHECK(s.max_degree == 2);
    CHECK(s.sequence == std::vector<int>{2, 2, 2, 2, 2, 2});

    s = degree_stats(Graph::star(4));
    CHECK(s.min_degree == 1);
    CHECK(s.max_degree == 4);
    CHECK(s.sequence == std::vector<int>{1, 1, 1, 1, 4});

    s = degree_stats(wheel_graph(4));
    CHECK(s.min_degree == 3);
    CHECK(s.max_degree == 4);
    CHECK(s.sequence == std::vector<int>{3, 3, 3, 3, 4});
}

TEST_CASE("red and blue degrees partition K_n") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 20);
        TwoColoring c(random_graph(rng, n, 0.4));
        Graph blue = c.blue();
        for (int v = 0; v < n; ++v) CHECK(c.red().degree(v) + blue.degree(v) == n - 1);
    }
}

TEST_CASE("complement round-trips") {
    std::mt19937 rng(11);
    for (int n = 0; n <= 64; n += (n < 8 ? 1 : 7)) {
        Graph g = random_graph(rng, n, 0.5);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("neighborhood order equals degree") {
    std::mt19937 rng(13);
    Graph g = random_graph(rng, 17, 0.3);
    for (int v = 0; v < g.size(); ++v)
        CHECK(neighborhood_subgraph(g, v).graph.size() == g.degree(v));
}

TEST_CASE("family DSL round-trips and vertex counts") {
    CHECK(FamilySpec::parse("C6") == FamilySpec(FamilyKind::Cycle, 6));
    CHECK(FamilySpec::parse("W4").vertex_count() == 5);
    CHECK(FamilySpec::parse("W1").vertex_count() == 2);
    CHECK(FamilySpec::parse("W2").vertex_count() == 3);
    CHECK(FamilySpec::parse("F3").vertex_count() == 7);
    CHECK(FamilySpec::parse("S5").vertex_count() == 6);
    CHECK(FamilySpec::parse("M4").vertex_count() == 8);
    CHECK(FamilySpec::parse("K7").vertex_count() == 7);
    CHECK(FamilySpec::parse("M12").to_string() == "M12");

    CHECK_THROWS_AS(FamilySpec::parse("C2"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("X3"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("W"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("W3x"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("K0"), std::invalid_argument);
}

TEST_CASE("witness files round-trip byte-exactly") {
    Graph red(5);
    red.add_edge(0, 3);
    red.add_edge(1, 2);
    TwoColoring c(red);

    std::ostringstream out;
    write_witness(out, c, {"generator: test"});
    std::string text = out.str();
    CHECK(text == "ramsey-witness v1\nvertices 5\n# generator: test\nred 0 3\nred 1 2\n");

    std::istringstream in(text);
    TwoColoring back = read_witness(in);
    CHECK(back.red() == c.red());
}

TEST_CASE("witness parser rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_witness(in);
    };
    CHECK_THROWS_AS(parse("nope\nvertices 3\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nvertices 3\nred 0 0\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nvertices 3\nred 0 3\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nvertices 3\nred 1 0\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nvertices 3\nred 0 1\nred 0 1\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nvertices 3\nred 0 1 9\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nvertices 3\nblah 1 2\n"), WitnessParseError);
    CHECK_THROWS_AS(parse("ramsey-witness v1\nred 0 1\nvertices 3\n"), WitnessParseError);
}

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"

namespace ramsey {

/// Simple undirected graph on vertices 0..n-1 with dense bitset adjacency.
/// No self-loops; the adjacency relation is kept symmetric by construction.
/// Operations elsewhere treat graphs as immutable values; mutation is only
/// meaningful while a graph is being built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int size() const { return n_; }

    bool has_edge(int u, int v) const { return u != v && rows_[u].test(v); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

    const Bitset& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    long long edge_count() const {
        long long total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            rows_[u].for_each([&](int v) {
                if (v > u) e.emplace_back(u, v);
            });
        return e;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    std::vector<std::vector<int>> components() const;
    bool connected() const;

    // ---- builders ----
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph star(int leaves);  // K_{1,leaves}; center is vertex 0
    static Graph complete_bipartite(int a, int b);
    static Graph complete_multipartite(const std::vector<int>& parts);
    // Circulant on n vertices with offsets {1..half_span} and optionally the
    // antipodal chord n/2 (n must be even for that).
    static Graph circulant(int n, int half_span, bool antipodal);
    static Graph disjoint_union(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<Bitset> rows_;
};

/// Induced subgraph together with the map from its vertex indices back to
/// the host graph, so witnesses can be reported in original labels.
struct Induced {
    Graph graph;
    std::vector<int> orig;  // orig[i] = host-graph label of vertex i

    std::vector<int> map_back(const std::vector<int>& vs) const {
        std::vector<int> out;
        out.reserve(vs.size());
        for (int v : vs) out.push_back(orig[v]);
        return out;
    }
};

Induced induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Induced induced_subgraph(const Graph& g, const Bitset& vertices);

/// Induced subgraph on the neighborhood of v.
Induced neighborhood_subgraph(const Graph& g, int v);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence;  // nondecreasing
};

DegreeStats degree_stats(const Graph& g);

enum class Color { Red, Blue };

/// Red/blue edge 2-coloring of a complete graph: red is stored, blue is the
/// complement of red within K_n.
class TwoColoring {
public:
    TwoColoring() = default;
    explicit TwoColoring(Graph red) : red_(std::move(red)) {}
    explicit TwoColoring(int n) : red_(n) {}

    int size() const { return red_.size(); }
    const Graph& red() const { return red_; }
    Graph blue() const { return red_.complement(); }

    Color color_of(int u, int v) const { return red_.has_edge(u, v) ? Color::Red : Color::Blue; }
    void set_red(int u, int v) { red_.add_edge(u, v); }

    Graph color_class(Color c) const { return c == Color::Red ? red_ : blue(); }

private:
    Graph red_;
};

}  // namespace ramsey

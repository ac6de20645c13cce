#include "ramsey/graph.hpp"

#include <algorithm>

namespace ramsey {

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    Bitset seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            rows_[comp[head]].for_each([&](int v) {
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("complete_multipartite: part size < 1");
        n += p;
    }
    Graph g(n);
    std::vector<int> part_of(n);
    int base = 0, idx = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) part_of[base + i] = idx;
        base += p;
        ++idx;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph Graph::circulant(int n, int half_span, bool antipodal) {
    Graph g(n);
    if (antipodal && n % 2 != 0)
        throw std::invalid_argument("circulant: antipodal chord needs even n");
    for (int v = 0; v < n; ++v) {
        for (int d = 1; d <= half_span; ++d) g.add_edge(v, (v + d) % n);
        if (antipodal) g.add_edge(v, (v + n / 2) % n);
    }
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.size() + b.size());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
    return g;
}

Induced induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Induced sub;
    sub.orig = vertices;
    sub.graph = Graph(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j]))
                sub.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

Induced induced_subgraph(const Graph& g, const Bitset& vertices) {
    return induced_subgraph(g, vertices.to_vector());
}

Induced neighborhood_subgraph(const Graph& g, int v) {
    return induced_subgraph(g, g.neighbors(v));
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.sequence.reserve(g.size());
    for (int v = 0; v < g.size(); ++v) s.sequence.push_back(g.degree(v));
    std::sort(s.sequence.begin(), s.sequence.end());
    if (!s.sequence.empty()) {
        s.min_degree = s.sequence.front();
        s.max_degree = s.sequence.back();
    }
    return s;
}

}  // namespace ramsey

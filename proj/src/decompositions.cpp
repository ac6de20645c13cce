#include "ramsey/decompositions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/detectors.hpp"
#include "ramsey/matching.hpp"

namespace ramsey::decompositions {

namespace {

std::vector<std::vector<int>> components_within(const Graph& g, const Bitset& alive) {
    std::vector<std::vector<int>> comps;
    Bitset seen(g.size());
    for (int s = alive.next(); s != -1; s = alive.next(s + 1)) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            Bitset nbrs = g.neighbors(comp[head]) & alive;
            nbrs.for_each([&](int v) {
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

}  // namespace

std::vector<int> two_connect_reduce(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("two_connect_reduce: k must be >= 2");
    Bitset alive(g.size());
    alive.set_all();
    std::vector<int> deleted;

    for (;;) {
        int best = -1, best_min_piece = -1;
        for (const auto& comp : components_within(g, alive)) {
            if (comp.size() <= 2) continue;  // single vertices/edges are acceptable leftovers
            Induced sub = induced_subgraph(g, comp);
            auto decomposition = detectors::blocks(sub.graph);
            for (int local_cut : decomposition.cut_vertices) {
                int cut = sub.orig[local_cut];
                int min_piece = g.size() + 1;
                // Only the pieces of this component matter; other components
                // are untouched by the deletion.
                Bitset comp_rest(g.size());
                for (int v : comp)
                    if (v != cut) comp_rest.set(v);
                for (const auto& piece : components_within(g, comp_rest))
                    min_piece = std::min(min_piece, static_cast<int>(piece.size()));
                if (min_piece > best_min_piece ||
                    (min_piece == best_min_piece && cut < best)) {
                    best_min_piece = min_piece;
                    best = cut;
                }
            }
        }
        if (best == -1) break;
        alive.reset(best);
        deleted.push_back(best);
    }
    return deleted;
}

bool FractionalMatching::valid(const Graph& g) const {
    Bitset touched(g.size());
    auto touch = [&](int v) {
        if (v < 0 || v >= g.size() || touched.test(v)) return false;
        touched.set(v);
        return true;
    };
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v)) return false;
        if (!touch(u) || !touch(v)) return false;
    }
    for (const auto& cyc : odd_cycles) {
        if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
            if (!touch(cyc[i])) return false;
        }
    }
    return touched.count() == covered;
}

namespace {

int double_cover_matching(const Graph& g, std::vector<int>* l_mate, std::vector<int>* r_mate) {
    std::vector<std::vector<int>> adj(g.size());
    for (int u = 0; u < g.size(); ++u) adj[u] = g.neighbors(u).to_vector();
    return matching::bipartite_matching(g.size(), g.size(), adj, l_mate, r_mate);
}

}  // namespace

int fractional_cover_count(const Graph& g) { return double_cover_matching(g, nullptr, nullptr); }

FractionalMatching max_fractional_matching(const Graph& g) {
    const int n = g.size();
    std::vector<int> l_mate;
    int p = double_cover_matching(g, &l_mate, nullptr);

    FractionalMatching out;
    out.covered = p;

    // Multiplicity of edge uv in the double-cover matching: 2 = a committed
    // edge, 1 = a half edge. Half edges form disjoint paths and cycles; a
    // maximum matching admits no odd path (it could be rounded up).
    std::vector<std::vector<int>> half(n);
    Bitset done(n);
    for (int u = 0; u < n; ++u) {
        int v = l_mate[u];
        if (v == -1) continue;
        if (l_mate[v] == u) {
            if (u < v) out.edges.emplace_back(u, v);
            done.set(u);
        } else {
            half[u].push_back(v);
            half[v].push_back(u);
        }
    }

    Bitset seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s) || done.test(s) || half[s].empty()) continue;
        // Find the component's start: an endpoint (degree 1) if this is a
        // path, else the lowest-index cycle vertex.
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int v : half[comp[head]])
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        int start = -1;
        for (int v : comp)
            if (half[v].size() == 1) {
                start = v;
                break;
            }
        bool is_cycle = (start == -1);
        if (is_cycle) start = comp.front();

        // Walk the path/cycle; from the start prefer the lower-indexed
        // neighbor so the resolution is deterministic.
        std::vector<int> walk{start};
        int prev = -1, cur = start;
        for (;;) {
            int next = -1;
            for (int v : half[cur])
                if (v != prev && (next == -1 || v < next)) next = v;
            if (next == -1 || (is_cycle && next == start && walk.size() > 2)) break;
            if (!is_cycle && next == -1) break;
            walk.push_back(next);
            prev = cur;
            cur = next;
            if (is_cycle && static_cast<int>(walk.size()) == static_cast<int>(comp.size())) break;
        }

        if (is_cycle) {
            if (comp.size() % 2 == 1) {
                out.odd_cycles.push_back(walk);
            } else {
                for (std::size_t i = 0; i + 1 < walk.size(); i += 2)
                    out.edges.emplace_back(std::min(walk[i], walk[i + 1]),
                                           std::max(walk[i], walk[i + 1]));
            }
        } else {
            // Path with e edges covers e vertices fractionally; e is even at
            // a maximum, and alternate edges cover the same count integrally.
            std::size_t edge_count = walk.size() - 1;
            if (edge_count % 2 != 0)
                throw std::logic_error("max_fractional_matching: odd half-edge path");
            for (std::size_t i = 0; i + 1 < walk.size() - 1; i += 2)
                out.edges.emplace_back(std::min(walk[i], walk[i + 1]),
                                       std::max(walk[i], walk[i + 1]));
        }
    }

    std::sort(out.edges.begin(), out.edges.end());
    if (!out.valid(g)) throw std::logic_error("max_fractional_matching: invalid resolution");
    return out;
}

PulleyblankDecomposition pulleyblank_decomposition(const Graph& g) {
    const int n = g.size();
    PulleyblankDecomposition out;
    out.covered = fractional_cover_count(g);

    Bitset in_d(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        // v is exposable by some maximum fractional matching iff deleting it
        // keeps p unchanged.
        if (fractional_cover_count(induced_subgraph(g, rest).graph) == out.covered) {
            in_d.set(v);
            out.d.push_back(v);
        }
    }
    Bitset in_a(n);
    for (int v : out.d) {
        Bitset nbrs = g.neighbors(v);
        nbrs -= in_d;
        in_a |= nbrs;
    }
    out.a = in_a.to_vector();
    for (int v = 0; v < n; ++v)
        if (!in_d.test(v) && !in_a.test(v)) out.c.push_back(v);
    return out;
}

}  // namespace ramsey::decompositions

#pragma once

#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey::decompositions {

/// Deletes cut vertices one per round until every component of g - X is
/// 2-connected (components on <= 2 vertices are vacuously acceptable).
/// Each round removes the cut vertex whose smallest split-off piece is
/// largest, ties broken by lowest index. When delta(g) >= n/k + k the
/// returned set satisfies |X| <= k - 2.
std::vector<int> two_connect_reduce(const Graph& g, int k);

/// A fractional matching (2-matching): an edge set whose induced components
/// are single edges or odd cycles, all vertex-disjoint.
struct FractionalMatching {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> odd_cycles;  // each in cycle order
    int covered = 0;                           // vertices touched

    bool valid(const Graph& g) const;
};

/// Number of vertices covered by a maximum fractional matching, computed as
/// the maximum matching size of the bipartite double cover (vertex v splits
/// into vL/vR; edge uv yields uL-vR and vL-uR), which equals p exactly.
int fractional_cover_count(const Graph& g);

/// A maximum fractional matching witness: resolved from a maximum
/// double-cover matching into edges and odd cycles, lowest-index-first ties.
FractionalMatching max_fractional_matching(const Graph& g);

/// The (A, C, D) vertex partition associated with maximum fractional
/// matchings: D = vertices missed by some maximum fractional matching
/// (equivalently p(g - v) = p(g)), A = N(D) \ D, C = the rest. Satisfies
/// |D| = |A| + |V| - p, 2|A| + |C| = p, D independent with no C-D edges,
/// and |A| >= delta(g) whenever D is nonempty.
struct PulleyblankDecomposition {
    std::vector<int> a, c, d;  // sorted
    int covered = 0;           // p
};

PulleyblankDecomposition pulleyblank_decomposition(const Graph& g);

}  // namespace ramsey::decompositions

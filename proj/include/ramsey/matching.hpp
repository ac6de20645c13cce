#pragma once

#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey::matching {

/// Exact maximum matching in a general graph (augmenting paths with blossom
/// contraction). Deterministic: vertices and neighbors are scanned in index
/// order. Optionally returns the mate array (-1 for exposed vertices).
int maximum_matching(const Graph& g, std::vector<int>* mate = nullptr);

/// Maximum matching of a bipartite graph given left-side adjacency lists.
/// Deterministic augmenting in index order.
int bipartite_matching(int n_left, int n_right, const std::vector<std::vector<int>>& adj,
                       std::vector<int>* left_mate = nullptr,
                       std::vector<int>* right_mate = nullptr);

}  // namespace ramsey::matching

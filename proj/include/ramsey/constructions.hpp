#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ramsey/detectors.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::constructions {

/// A generated lower-bound coloring: a 2-coloring of K_N avoiding
/// `avoided_red` in red and `avoided_blue` in blue, which witnesses
/// R(avoided_red, avoided_blue) >= claimed_bound.
struct WitnessReport {
    TwoColoring coloring;
    FamilySpec avoided_red;
    FamilySpec avoided_blue;
    long long claimed_bound = 0;
    std::string generator;
    std::vector<std::pair<std::string, long long>> params;

    bool certified = false;
    detectors::DetectionResult red_hit;   // populated on certification failure
    detectors::DetectionResult blue_hit;

    /// Runs both detectors; certified only if both families are provably
    /// absent (a budget-exhausted search does not certify).
    bool certify(detectors::Budget* budget = nullptr);

    std::vector<std::string> header_comments() const;
};

/// A (k-1)-regular graph on n vertices in which every component has at most
/// 2k-1 vertices. Components are cliques K_k plus one circulant remainder
/// block, laid out contiguously. Throws std::invalid_argument when no such
/// graph exists (k-1 > 0 requires n >= k and n or k-1 even).
Graph regular_bounded_components(int n, int k);

bool regular_bounded_components_feasible(int n, int k);

/// Parity-split coloring avoiding a red K_{1,m} and a blue W_{2n}:
/// red clique Y of size m, blue join X-Y, blue (n-1)-regular inside X with
/// small components. Witnesses R(K_{1,m}, W_{2n}) >= 2m+n-1 (m, n both even)
/// or >= 2m+n (otherwise). Requires m >= n >= 2.
WitnessReport witness_star_wheel(int m, int n);

/// Graph on n vertices with the extremal minimum degree and no W_{2k}:
/// complete join X-Y with a (k-1)-regular small-component graph inside X.
/// Requires 2 <= k < n/3.
Graph witness_mindegree_wheel(int n, int k);

/// delta of the graph witness_mindegree_wheel(n, k) produces.
int mindegree_wheel_expected_delta(int n, int k);

/// Two disjoint red cliques K_{2m-1}: witnesses R(C_{2m}, W_{2n}) >= 4m-1
/// for m >= n >= 2 (blue is bipartite, wheels and fans need chromatic
/// number 3).
WitnessReport witness_cycle_wheel_two_cliques(int m, int n);

/// Red cliques of sizes 2m-1, n-1, n-1: witnesses
/// R(C_{2m}, F_n) >= 2m+2n-2 for n/2 <= m < n.
WitnessReport witness_cycle_fan_three_cliques(int m, int n);

/// The q-regime construction with q the unique integer such that
/// (2n-1)/q < 2m-1 <= (2n-1)/(q-1): either q red cliques K_{2m-1} (bound
/// q(2m-1)+1) or q+1 nearly equal red cliques plus a red apex joined to the
/// smaller ones (bound (q+1)*ceil((2n-1)/q) - (q-r)). Avoids a red C_{2m}
/// and a blue K_{1,2n}. Aimed at 2 <= m < n/2 (q >= 3) but well-defined and
/// certifiable for all 2 <= m <= n.
WitnessReport witness_cycle_star_cliques(int m, int n);

/// Red complete bipartite K_{n-1,2n}: witnesses
/// R(nK_2, F_n) >= 3n for n >= 2.
WitnessReport witness_matching_fan(int n);

/// Complete multipartite graph with the given part sizes.
Graph multipartite_complete(const std::vector<int>& part_sizes);

}  // namespace ramsey::constructions

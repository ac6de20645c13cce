#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/detectors.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::exact_search {

struct SearchStats {
    std::uint64_t nodes = 0;   // backtracking nodes (edge assignments + check recursion)
    std::uint64_t pruned = 0;  // assignments rejected because a forbidden copy closed
};

struct Options {
    std::uint64_t node_budget = 1'000'000'000;
    int threads = 1;  // > 1 splits the tree at a fixed depth; results match threads = 1
};

/// Budget from RAMSEY_NODE_BUDGET when set, else the default 10^9.
std::uint64_t default_node_budget();

enum class ColoringStatus { Found, None, Exhausted };

/// Result of the good-coloring search at one fixed N.
struct ColoringResult {
    ColoringStatus status = ColoringStatus::None;
    std::optional<TwoColoring> coloring;
    SearchStats stats;
};

/// Searches for a 2-coloring of K_n with no red copy of `red` and no blue
/// copy of `blue` (a "good coloring"), by vertex-by-vertex extension:
/// vertex v's edges to 0..v-1 are colored in order, and a branch dies the
/// moment a forbidden monochromatic copy closes (any new copy contains the
/// newest edge). Symmetry pruning forces vertex 0's red neighborhood to be
/// an index prefix. Deterministic, red tried before blue.
ColoringResult exists_good_coloring(const FamilySpec& red, const FamilySpec& blue, int n,
                                    const Options& opts = {});

enum class OutcomeStatus { RamseyValue, LowerBoundOnly, ExhaustedBudget };

struct SearchOutcome {
    OutcomeStatus status = OutcomeStatus::LowerBoundOnly;
    int value = 0;  // R(red, blue) if RamseyValue; else the largest N with a good coloring
    std::optional<TwoColoring> witness;  // good coloring on value-1 (resp. value) vertices
    SearchStats stats;
    std::vector<std::string> transcript;  // lines "N=<k> status=<found|none> nodes=<count>"
};

/// Smallest N <= n_max such that no good coloring of K_N exists, with the
/// witness from N-1; or LowerBoundOnly when colorings survive through n_max.
SearchOutcome ramsey_number(const FamilySpec& red, const FamilySpec& blue, int n_max,
                            const Options& opts = {});

struct VerifyReport {
    bool pass = false;
    detectors::DetectionResult red_hit;
    detectors::DetectionResult blue_hit;
};

/// Certifies a coloring against both families with the full detectors.
VerifyReport verify_witness(const TwoColoring& c, const FamilySpec& red, const FamilySpec& blue,
                            detectors::Budget* budget = nullptr);

}  // namespace ramsey::exact_search

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::detectors {

/// Per-call node budget for the backtracking searches. Exhaustion is a
/// distinct outcome, never silently reported as absence.
struct Budget {
    std::uint64_t limit = 100'000'000;
    std::uint64_t used = 0;
    bool tick() { return ++used <= limit; }
    bool exhausted() const { return used > limit; }
};

enum class Status { Found, Absent, Exhausted };

/// Witness layout by family: vertices in cycle order for cycles; hub first
/// then rim in cycle order for wheels; hub then matched endpoints pairwise
/// for fans; center then leaves for stars; endpoints pairwise for matchings;
/// plain vertex list for cliques.
struct DetectionResult {
    Status status = Status::Absent;
    std::vector<int> witness;

    bool found() const { return status == Status::Found; }

    static DetectionResult absent() { return {}; }
    static DetectionResult exhausted() { return {Status::Exhausted, {}}; }
    static DetectionResult hit(std::vector<int> w) { return {Status::Found, std::move(w)}; }
};

/// Does g contain a simple cycle on exactly `len` vertices?
/// Backtracking DFS over partial paths anchored at the minimum-index vertex
/// of the candidate cycle, pruned by 2-core restriction, BFS distance back
/// to the anchor, and bitset candidate intersection. len > n is Absent.
DetectionResult has_cycle_of_length(const Graph& g, int len, Budget* budget = nullptr);

/// Family dispatch: cycles via has_cycle_of_length; wheel W_k via a k-cycle
/// in some neighborhood; fan F_k via a k-matching in some neighborhood; star
/// via max degree; matching via blossom; clique via pivoted clique search.
DetectionResult contains_family(const Graph& g, const FamilySpec& f, Budget* budget = nullptr);

/// Exact maximum matching size (general graphs).
int max_matching(const Graph& g);

struct CycleSpectrum {
    std::vector<int> present;  // sorted lengths in {3..l_max} realized in g
    std::optional<int> girth;
    std::optional<int> circumference;
    std::optional<int> longest_even;  // ec(G), restricted to <= l_max
    std::optional<int> longest_odd;   // oc(G), restricted to <= l_max
    bool complete = true;             // false if some length search exhausted its budget

    bool has(int len) const;
    bool pancyclic(int n) const;  // present == {3..n}
};

/// Which cycle lengths in 3..l_max occur. With l_max = n the girth and
/// circumference fields are the true values and empty `present` means
/// acyclic; with a smaller window everything is relative to the window.
CycleSpectrum cycle_spectrum(const Graph& g, int l_max, Budget* budget = nullptr);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // each sorted; isolated vertices give singletons
    std::vector<int> cut_vertices;         // sorted
};

BlockDecomposition blocks(const Graph& g);

/// n >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

struct BipartitionResult {
    bool bipartite = false;
    std::vector<int> side;       // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // vertices in cycle order when not
};

BipartitionResult is_bipartite(const Graph& g);

/// Re-verifies that `witness` (in the DetectionResult layout) embeds f in g.
bool verify_embedding(const Graph& g, const FamilySpec& f, const std::vector<int>& witness);

}  // namespace ramsey::detectors

#include "ramsey/exact_search.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ramsey::exact_search {

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("RAMSEY_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000ULL;
}

namespace {

constexpr int kMaxN = 30;
using Adj = std::array<std::uint32_t, kMaxN>;

struct BudgetExceeded {};

// Shared, possibly cross-thread node counter. Single-threaded runs pay one
// relaxed atomic increment per node.
struct Counter {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t limit;
    explicit Counter(std::uint64_t lim) : limit(lim) {}
    void tick() {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > limit) throw BudgetExceeded{};
    }
};

int popcount(std::uint32_t x) { return std::popcount(x); }

// ---- small detectors on mask graphs; every recursion ticks the counter ----

// Simple path from `from` to `to` with exactly `len` edges, avoiding `visited`.
bool path_exact(const Adj& adj, int n, int from, int to, int len, std::uint32_t visited,
                Counter& counter) {
    counter.tick();
    if (len == 1) return (adj[from] >> to) & 1u;
    std::uint32_t cand = adj[from] & ~visited & ~(1u << to);
    while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (path_exact(adj, n, w, to, len - 1, visited | (1u << w), counter)) return true;
    }
    return false;
}

// Cycle of exactly `len` edges through vertex v, inside `allowed`.
bool cycle_through_vertex(const Adj& adj, int n, int v, int len, std::uint32_t allowed,
                          Counter& counter) {
    if (len < 3 || popcount(allowed) < len || !((allowed >> v) & 1u)) return false;
    std::uint32_t nbrs = adj[v] & allowed;
    // First step to each neighbor, then a path of len-1 edges back to v.
    while (nbrs) {
        int w = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        Adj sub{};
        for (int i = 0; i < n; ++i) sub[i] = adj[i] & allowed;
        if (path_exact(sub, n, w, v, len - 1, (1u << v) | (1u << w), counter)) return true;
    }
    return false;
}

// Cycle of exactly `len` edges through edge (a,b) inside `allowed`.
bool cycle_through_edge(const Adj& adj, int n, int a, int b, int len, std::uint32_t allowed,
                        Counter& counter) {
    if (len < 3 || popcount(allowed) < len) return false;
    if (!((allowed >> a) & 1u) || !((allowed >> b) & 1u)) return false;
    Adj sub{};
    for (int i = 0; i < n; ++i) sub[i] = adj[i] & allowed;
    return path_exact(sub, n, a, b, len - 1, (1u << a) | (1u << b), counter);
}

// k disjoint edges inside `avail`.
bool has_matching(const Adj& adj, int k, std::uint32_t avail, Counter& counter) {
    counter.tick();
    if (k == 0) return true;
    // Lowest available vertex with an available neighbor anchors the branch.
    std::uint32_t rest = avail;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint32_t nbrs = adj[v] & avail;
        if (!nbrs) continue;
        // Either v is matched to one of its neighbors, or v is unused.
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (has_matching(adj, k - 1, avail & ~(1u << v) & ~(1u << u), counter)) return true;
        }
        return has_matching(adj, k, avail & ~(1u << v), counter);
    }
    return false;
}

bool has_clique(const Adj& adj, int k, std::uint32_t cand, Counter& counter) {
    counter.tick();
    if (k == 0) return true;
    if (popcount(cand) < k) return false;
    std::uint32_t rest = cand;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (has_clique(adj, k - 1, cand & adj[v] & rest, counter)) return true;
        cand &= ~(1u << v);
    }
    return false;
}

// Does coloring edge (u,v) in this color class close a copy of f? All edges
// of the class are in `adj`; any new copy must use (u,v).
bool closes_copy(const Adj& adj, int n, const FamilySpec& f, int u, int v, Counter& counter) {
    const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
    switch (f.kind) {
        case FamilyKind::Cycle:
            return cycle_through_edge(adj, n, u, v, f.param, all, counter);
        case FamilyKind::Wheel: {
            const int k = f.param;
            if (k == 1) return true;  // W_1 = K_2: the new edge itself
            if (k == 2) return (adj[u] & adj[v]) != 0;  // W_2 = K_3
            if (cycle_through_vertex(adj, n, v, k, adj[u], counter)) return true;  // hub u
            if (cycle_through_vertex(adj, n, u, k, adj[v], counter)) return true;  // hub v
            std::uint32_t hubs = adj[u] & adj[v];  // (u,v) on the rim
            while (hubs) {
                int h = std::countr_zero(hubs);
                hubs &= hubs - 1;
                if (cycle_through_edge(adj, n, u, v, k, adj[h], counter)) return true;
            }
            return false;
        }
        case FamilyKind::Fan: {
            // The new edge is a spoke (hub u or v) or a matching edge (hub
            // adjacent to both ends).
            if (has_matching(adj, f.param, adj[u], counter)) return true;
            if (has_matching(adj, f.param, adj[v], counter)) return true;
            std::uint32_t hubs = adj[u] & adj[v];
            while (hubs) {
                int h = std::countr_zero(hubs);
                hubs &= hubs - 1;
                if (has_matching(adj, f.param, adj[h], counter)) return true;
            }
            return false;
        }
        case FamilyKind::Star:
            return popcount(adj[u]) >= f.param || popcount(adj[v]) >= f.param;
        case FamilyKind::Matching:
            return has_matching(adj, f.param, all, counter);
        case FamilyKind::Clique:
            if (f.param <= 2) return true;  // K_1, K_2 close with any edge
            return has_clique(adj, f.param - 2, adj[u] & adj[v], counter);
    }
    return false;
}

// A family contained in the edgeless graph defeats every coloring.
bool contained_in_edgeless(const FamilySpec& f, int n) {
    return f.kind == FamilyKind::Clique && f.param == 1 && n >= 1;
}

struct State {
    Adj red{};
    Adj blue{};
};

class Searcher {
public:
    Searcher(const FamilySpec& red, const FamilySpec& blue, int n, Counter& counter)
        : red_(red), blue_(blue), n_(n), counter_(counter) {}

    // Extends from `state` where vertices 0..start_v-1 are fully colored.
    // Returns true when a good coloring on all n vertices is reached (left
    // in state_), false when the subtree is exhausted.
    bool search(const State& state, int start_v) {
        state_ = state;
        return extend_vertex(start_v);
    }

    // Enumerates all consistent states with vertices 0..v_limit-1 colored.
    std::vector<State> prefixes(int v_limit) {
        std::vector<State> out;
        state_ = State{};
        collect_ = &out;
        collect_limit_ = v_limit;
        extend_vertex(0);
        collect_ = nullptr;
        return out;
    }

    const State& state() const { return state_; }
    std::uint64_t pruned() const { return pruned_; }

private:
    bool extend_vertex(int v) {
        if (collect_ && v == collect_limit_) {
            collect_->push_back(state_);
            return false;  // keep enumerating siblings
        }
        if (v == n_) return true;
        return extend_edge(v, 0);
    }

    bool extend_edge(int v, int u) {
        if (u == v) return extend_vertex(v + 1);
        for (int color = 0; color < 2; ++color) {
            const bool red = color == 0;
            // Vertex 0's red neighborhood is forced to be an index prefix:
            // once (0, j) is blue, every (0, j') with j' > j is blue too.
            if (red && u == 0 && v >= 2 && !((state_.red[0] >> (v - 1)) & 1u)) continue;
            counter_.tick();
            Adj& adj = red ? state_.red : state_.blue;
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
            const FamilySpec& f = red ? red_ : blue_;
            if (closes_copy(adj, v + 1, f, u, v, counter_)) {
                ++pruned_;
            } else if (extend_edge(v, u + 1)) {
                return true;
            }
            adj[u] &= ~(1u << v);
            adj[v] &= ~(1u << u);
        }
        return false;
    }

    FamilySpec red_, blue_;
    int n_;
    Counter& counter_;
    State state_;
    std::uint64_t pruned_ = 0;
    std::vector<State>* collect_ = nullptr;
    int collect_limit_ = 0;
};

TwoColoring to_coloring(const State& s, int n) {
    Graph red(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((s.red[u] >> v) & 1u) red.add_edge(u, v);
    return TwoColoring(std::move(red));
}

ColoringResult search_parallel(const FamilySpec& red, const FamilySpec& blue, int n,
                               const Options& opts, Counter& counter) {
    const int split_v = std::min(n, 4);
    Searcher enumerator(red, blue, n, counter);
    std::vector<State> prefixes = enumerator.prefixes(split_v);
    std::uint64_t prefix_pruned = enumerator.pruned();

    struct Slot {
        ColoringStatus status = ColoringStatus::None;
        State state;
        std::uint64_t pruned = 0;
    };
    std::vector<Slot> slots(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_found{prefixes.size()};

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            // Subtrees after an already-found earlier index cannot change
            // the (deterministic) result; skip them.
            if (first_found.load() < i) {
                slots[i].status = ColoringStatus::None;
                continue;
            }
            Searcher s(red, blue, n, counter);
            try {
                if (s.search(prefixes[i], split_v)) {
                    slots[i].status = ColoringStatus::Found;
                    slots[i].state = s.state();
                    std::size_t cur = first_found.load();
                    while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
                    }
                } else {
                    slots[i].status = ColoringStatus::None;
                }
            } catch (const BudgetExceeded&) {
                slots[i].status = ColoringStatus::Exhausted;
            }
            slots[i].pruned = s.pruned();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    ColoringResult out;
    out.stats.nodes = counter.nodes.load();
    out.stats.pruned = prefix_pruned;
    for (const auto& s : slots) out.stats.pruned += s.pruned;
    for (const auto& s : slots) {
        if (s.status == ColoringStatus::Found) {
            out.status = ColoringStatus::Found;
            out.coloring = to_coloring(s.state, n);
            return out;
        }
        if (s.status == ColoringStatus::Exhausted) {
            out.status = ColoringStatus::Exhausted;
            return out;
        }
    }
    out.status = ColoringStatus::None;
    return out;
}

}  // namespace

ColoringResult exists_good_coloring(const FamilySpec& red, const FamilySpec& blue, int n,
                                    const Options& opts) {
    if (n < 1) throw std::invalid_argument("exists_good_coloring: need n >= 1");
    if (n > kMaxN) throw std::invalid_argument("exists_good_coloring: n > 30 is not supported");

    ColoringResult out;
    if (contained_in_edgeless(red, n) || contained_in_edgeless(blue, n)) {
        out.status = ColoringStatus::None;  // K_1 is a copy in any coloring
        return out;
    }

    Counter counter(opts.node_budget);
    if (opts.threads > 1 && n > 4) {
        try {
            out = search_parallel(red, blue, n, opts, counter);
        } catch (const BudgetExceeded&) {  // prefix enumeration itself ran out
            out.status = ColoringStatus::Exhausted;
            out.stats.nodes = counter.nodes.load();
        }
    } else {
        Searcher s(red, blue, n, counter);
        try {
            if (s.search(State{}, 0)) {
                out.status = ColoringStatus::Found;
                out.coloring = to_coloring(s.state(), n);
            } else {
                out.status = ColoringStatus::None;
            }
        } catch (const BudgetExceeded&) {
            out.status = ColoringStatus::Exhausted;
        }
        out.stats.nodes = counter.nodes.load();
        out.stats.pruned = s.pruned();
    }

    if (out.status == ColoringStatus::Found) {
        // The mask-level incremental checks and the full detectors are
        // independent implementations; a found witness must satisfy both.
        VerifyReport check = verify_witness(*out.coloring, red, blue);
        if (!check.pass) throw std::logic_error("exists_good_coloring: witness failed recheck");
    }
    return out;
}

SearchOutcome ramsey_number(const FamilySpec& red, const FamilySpec& blue, int n_max,
                            const Options& opts) {
    if (n_max < 1) throw std::invalid_argument("ramsey_number: need n_max >= 1");
    SearchOutcome out;
    for (int n = 1; n <= n_max; ++n) {
        ColoringResult r = exists_good_coloring(red, blue, n, opts);
        out.stats.nodes += r.stats.nodes;
        out.stats.pruned += r.stats.pruned;
        const char* status = r.status == ColoringStatus::Found  ? "found"
                             : r.status == ColoringStatus::None ? "none"
                                                                : "exhausted";
        out.transcript.push_back("N=" + std::to_string(n) + " status=" + status +
                                 " nodes=" + std::to_string(r.stats.nodes));
        if (r.status == ColoringStatus::Exhausted) {
            out.status = OutcomeStatus::ExhaustedBudget;
            out.value = n - 1;
            return out;
        }
        if (r.status == ColoringStatus::None) {
            out.status = OutcomeStatus::RamseyValue;
            out.value = n;
            return out;
        }
        out.witness = r.coloring;
    }
    out.status = OutcomeStatus::LowerBoundOnly;
    out.value = n_max;
    return out;
}

VerifyReport verify_witness(const TwoColoring& c, const FamilySpec& red, const FamilySpec& blue,
                            detectors::Budget* budget) {
    VerifyReport r;
    r.red_hit = detectors::contains_family(c.red(), red, budget);
    r.blue_hit = detectors::contains_family(c.blue(), blue, budget);
    r.pass = r.red_hit.status == detectors::Status::Absent &&
             r.blue_hit.status == detectors::Status::Absent;
    return r;
}

}  // namespace ramsey::exact_search

#include "ramsey/detectors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ramsey/matching.hpp"

namespace ramsey::detectors {

namespace {

// Vertices of degree < 2 within `allowed` can't lie on a cycle; strip them
// until the remainder is a 2-core.
Bitset two_core(const Graph& g, Bitset allowed) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = allowed.next(); v != -1; v = allowed.next(v + 1)) {
            if (g.neighbors(v).intersection_count(allowed) < 2) {
                allowed.reset(v);
                changed = true;
            }
        }
    }
    return allowed;
}

// BFS distances from src within `allowed`; unreachable = large sentinel.
std::vector<int> bfs_dist(const Graph& g, int src, const Bitset& allowed) {
    std::vector<int> dist(g.size(), g.size() + 1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        Bitset nbrs = g.neighbors(u) & allowed;
        nbrs.for_each([&](int v) {
            if (dist[v] > dist[u] + 1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

class CycleSearch {
public:
    CycleSearch(const Graph& g, int len, Budget& budget) : g_(g), len_(len), budget_(budget) {}

    DetectionResult run() {
        const int n = g_.size();
        Bitset core(n);
        core.set_all();
        core = two_core(g_, core);
        if (core.count() < len_) return DetectionResult::absent();

        if (len_ % 2 == 1) {
            // Odd cycles only live in non-bipartite components.
            if (is_bipartite(g_).bipartite) return DetectionResult::absent();
        }

        for (int anchor = core.next(); anchor != -1; anchor = core.next(anchor + 1)) {
            // Cycles whose minimum vertex is `anchor` use vertices >= anchor only.
            Bitset allowed = core;
            for (int v = 0; v < anchor; ++v) allowed.reset(v);
            allowed = two_core(g_, allowed);
            if (!allowed.test(anchor)) continue;
            dist_ = bfs_dist(g_, anchor, allowed);
            int reachable = 0;
            allowed.for_each([&](int v) {
                if (dist_[v] <= n) ++reachable;
            });
            if (reachable < len_) continue;
            allowed_ = allowed;
            used_ = Bitset(n);
            used_.set(anchor);
            path_.assign(1, anchor);
            if (dfs(anchor, 1)) return DetectionResult::hit(path_);
            if (exhausted_) return DetectionResult::exhausted();
        }
        return DetectionResult::absent();
    }

private:
    bool dfs(int u, int depth) {
        if (!budget_.tick()) {
            exhausted_ = true;
            return false;
        }
        if (depth == len_) return g_.has_edge(u, path_[0]);
        Bitset cand = g_.neighbors(u) & allowed_;
        cand -= used_;
        bool found = false;
        cand.for_each([&](int v) {
            if (found || exhausted_) return;
            if (dist_[v] > len_ - depth) return;  // cannot close back to the anchor in time
            used_.set(v);
            path_.push_back(v);
            if (dfs(v, depth + 1)) {
                found = true;
            } else {
                path_.pop_back();
                used_.reset(v);
            }
        });
        return found;
    }

    const Graph& g_;
    int len_;
    Budget& budget_;
    Bitset allowed_, used_;
    std::vector<int> dist_, path_;
    bool exhausted_ = false;
};

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int k, Budget& budget) : g_(g), k_(k), budget_(budget) {}

    DetectionResult run() {
        if (k_ > g_.size()) return DetectionResult::absent();
        if (k_ == 0) return DetectionResult::hit({});
        Bitset cand(g_.size());
        cand.set_all();
        if (expand(cand)) return DetectionResult::hit(stack_);
        return exhausted_ ? DetectionResult::exhausted() : DetectionResult::absent();
    }

private:
    bool expand(const Bitset& cand) {
        if (!budget_.tick()) {
            exhausted_ = true;
            return false;
        }
        if (static_cast<int>(stack_.size()) == k_) return true;
        if (static_cast<int>(stack_.size()) + cand.count() < k_) return false;
        // Pivot on the candidate with the most candidate neighbors; only
        // branches outside its neighborhood need exploring.
        int pivot = -1, best = -1;
        cand.for_each([&](int u) {
            int d = g_.neighbors(u).intersection_count(cand);
            if (d > best) {
                best = d;
                pivot = u;
            }
        });
        Bitset branch = cand;
        branch -= g_.neighbors(pivot);
        Bitset rest = cand;
        bool found = false;
        branch.for_each([&](int v) {
            if (found || exhausted_) return;
            stack_.push_back(v);
            if (expand(rest & g_.neighbors(v))) {
                found = true;
                return;
            }
            stack_.pop_back();
            rest.reset(v);
        });
        return found;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> stack_;
    bool exhausted_ = false;
};

DetectionResult find_wheel(const Graph& g, int k, Budget& budget) {
    if (k == 1) {  // W_1 = K_2
        for (int u = 0; u < g.size(); ++u) {
            int v = g.neighbors(u).next();
            if (v != -1) return DetectionResult::hit({u, v});
        }
        return DetectionResult::absent();
    }
    if (k == 2) return CliqueSearch(g, 3, budget).run();  // W_2 = K_3

    // Hubs in decreasing degree order; a hub needs k rim neighbors.
    std::vector<int> hubs(g.size());
    std::iota(hubs.begin(), hubs.end(), 0);
    std::stable_sort(hubs.begin(), hubs.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    bool exhausted = false;
    for (int hub : hubs) {
        if (g.degree(hub) < k) break;
        Induced nbhd = neighborhood_subgraph(g, hub);
        DetectionResult rim = CycleSearch(nbhd.graph, k, budget).run();
        if (rim.found()) {
            std::vector<int> w{hub};
            for (int v : nbhd.map_back(rim.witness)) w.push_back(v);
            return DetectionResult::hit(std::move(w));
        }
        if (rim.status == Status::Exhausted) exhausted = true;
    }
    return exhausted ? DetectionResult::exhausted() : DetectionResult::absent();
}

DetectionResult find_fan(const Graph& g, int k, Budget& budget) {
    (void)budget;  // matching is polynomial; no budget needed
    std::vector<int> hubs(g.size());
    std::iota(hubs.begin(), hubs.end(), 0);
    std::stable_sort(hubs.begin(), hubs.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int hub : hubs) {
        if (g.degree(hub) < 2 * k) break;
        Induced nbhd = neighborhood_subgraph(g, hub);
        std::vector<int> mate;
        if (matching::maximum_matching(nbhd.graph, &mate) >= k) {
            std::vector<int> w{hub};
            int picked = 0;
            for (int u = 0; u < nbhd.graph.size() && picked < k; ++u) {
                if (mate[u] > u) {
                    w.push_back(nbhd.orig[u]);
                    w.push_back(nbhd.orig[mate[u]]);
                    ++picked;
                }
            }
            return DetectionResult::hit(std::move(w));
        }
    }
    return DetectionResult::absent();
}

DetectionResult find_star(const Graph& g, int m) {
    for (int v = 0; v < g.size(); ++v) {
        if (g.degree(v) >= m) {
            std::vector<int> w{v};
            g.neighbors(v).for_each([&](int u) {
                if (static_cast<int>(w.size()) <= m) w.push_back(u);
            });
            w.resize(m + 1);
            return DetectionResult::hit(std::move(w));
        }
    }
    return DetectionResult::absent();
}

DetectionResult find_matching(const Graph& g, int k) {
    std::vector<int> mate;
    if (matching::maximum_matching(g, &mate) < k) return DetectionResult::absent();
    std::vector<int> w;
    int picked = 0;
    for (int u = 0; u < g.size() && picked < k; ++u) {
        if (mate[u] > u) {
            w.push_back(u);
            w.push_back(mate[u]);
            ++picked;
        }
    }
    return DetectionResult::hit(std::move(w));
}

}  // namespace

DetectionResult has_cycle_of_length(const Graph& g, int len, Budget* budget) {
    if (len < 3) throw std::invalid_argument("has_cycle_of_length: len must be >= 3");
    if (len > g.size()) return DetectionResult::absent();
    Budget local;
    return CycleSearch(g, len, budget ? *budget : local).run();
}

DetectionResult contains_family(const Graph& g, const FamilySpec& f, Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;
    switch (f.kind) {
        case FamilyKind::Cycle: return has_cycle_of_length(g, f.param, &b);
        case FamilyKind::Wheel: return find_wheel(g, f.param, b);
        case FamilyKind::Fan: return find_fan(g, f.param, b);
        case FamilyKind::Star: return find_star(g, f.param);
        case FamilyKind::Matching: return find_matching(g, f.param);
        case FamilyKind::Clique: return CliqueSearch(g, f.param, b).run();
    }
    return DetectionResult::absent();
}

int max_matching(const Graph& g) { return matching::maximum_matching(g); }

bool CycleSpectrum::has(int len) const {
    return std::binary_search(present.begin(), present.end(), len);
}

bool CycleSpectrum::pancyclic(int n) const {
    return static_cast<int>(present.size()) == std::max(0, n - 2) && !present.empty() &&
           present.front() == 3 && present.back() == n;
}

CycleSpectrum cycle_spectrum(const Graph& g, int l_max, Budget* budget) {
    if (l_max > g.size()) throw std::invalid_argument("cycle_spectrum: l_max exceeds vertex count");
    Budget local{.limit = 100'000'000 * static_cast<std::uint64_t>(std::max(1, l_max))};
    Budget& b = budget ? *budget : local;
    CycleSpectrum s;
    for (int len = 3; len <= l_max; ++len) {
        DetectionResult r = has_cycle_of_length(g, len, &b);
        if (r.found())
            s.present.push_back(len);
        else if (r.status == Status::Exhausted)
            s.complete = false;
    }
    if (!s.present.empty()) {
        s.girth = s.present.front();
        s.circumference = s.present.back();
    }
    for (int len : s.present) {
        if (len % 2 == 0)
            s.longest_even = len;
        else
            s.longest_odd = len;
    }
    return s;
}

namespace {

// Hopcroft-Tarjan lowpoint DFS with an edge stack.
class BlockFinder {
public:
    explicit BlockFinder(const Graph& g)
        : g_(g), num_(g.size(), -1), low_(g.size(), 0), is_cut_(g.size(), false) {}

    BlockDecomposition run() {
        for (int v = 0; v < g_.size(); ++v) {
            if (num_[v] == -1) {
                if (g_.degree(v) == 0) {
                    num_[v] = timer_++;
                    out_.blocks.push_back({v});
                } else {
                    dfs(v, -1);
                }
            }
        }
        for (int v = 0; v < g_.size(); ++v)
            if (is_cut_[v]) out_.cut_vertices.push_back(v);
        return std::move(out_);
    }

private:
    void dfs(int u, int parent) {
        num_[u] = low_[u] = timer_++;
        int children = 0;
        g_.neighbors(u).for_each([&](int v) {
            if (v == parent) return;
            if (num_[v] == -1) {
                stack_.emplace_back(u, v);
                ++children;
                dfs(v, u);
                low_[u] = std::min(low_[u], low_[v]);
                if ((parent == -1 && children > 1) || (parent != -1 && low_[v] >= num_[u])) {
                    is_cut_[u] = true;
                }
                if (low_[v] >= num_[u]) pop_block(u, v);
            } else if (num_[v] < num_[u]) {
                stack_.emplace_back(u, v);
                low_[u] = std::min(low_[u], num_[v]);
            }
        });
    }

    void pop_block(int u, int v) {
        std::vector<int> verts;
        auto add = [&](int x) {
            if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
        };
        while (!stack_.empty()) {
            auto [a, b] = stack_.back();
            if (a == u && b == v) break;
            stack_.pop_back();
            add(a);
            add(b);
        }
        if (!stack_.empty()) stack_.pop_back();
        add(u);
        add(v);
        std::sort(verts.begin(), verts.end());
        out_.blocks.push_back(std::move(verts));
    }

    const Graph& g_;
    std::vector<int> num_, low_;
    std::vector<bool> is_cut_;
    std::vector<std::pair<int, int>> stack_;
    int timer_ = 0;
    BlockDecomposition out_;
};

}  // namespace

BlockDecomposition blocks(const Graph& g) { return BlockFinder(g).run(); }

bool is_two_connected(const Graph& g) {
    if (g.size() < 3) return false;
    if (!g.connected()) return false;
    return blocks(g).cut_vertices.empty();
}

BipartitionResult is_bipartite(const Graph& g) {
    const int n = g.size();
    BipartitionResult r;
    r.side.assign(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (r.side[root] != -1) continue;
        r.side[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            int bad = -1;
            g.neighbors(u).for_each([&](int v) {
                if (bad != -1) return;
                if (r.side[v] == -1) {
                    r.side[v] = 1 - r.side[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (r.side[v] == r.side[u]) {
                    bad = v;
                }
            });
            if (bad != -1) {
                // Walk both endpoints up to their lowest common ancestor in
                // the BFS forest; the joined paths plus edge (u,bad) form an
                // odd cycle.
                std::vector<int> pu{u}, pv{bad};
                auto depth = [&](int x) {
                    int d = 0;
                    while (parent[x] != -1) {
                        x = parent[x];
                        ++d;
                    }
                    return d;
                };
                int du = depth(u), dv = depth(bad);
                int a = u, bvert = bad;
                while (du > dv) {
                    a = parent[a];
                    pu.push_back(a);
                    --du;
                }
                while (dv > du) {
                    bvert = parent[bvert];
                    pv.push_back(bvert);
                    --dv;
                }
                while (a != bvert) {
                    a = parent[a];
                    bvert = parent[bvert];
                    pu.push_back(a);
                    pv.push_back(bvert);
                }
                // pu ends at the LCA; append pv reversed, dropping its LCA.
                r.odd_cycle = pu;
                for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) r.odd_cycle.push_back(*it);
                r.bipartite = false;
                return r;
            }
        }
    }
    r.bipartite = true;
    return r;
}

bool verify_embedding(const Graph& g, const FamilySpec& f, const std::vector<int>& w) {
    auto all_distinct = [&]() {
        std::vector<int> s = w;
        std::sort(s.begin(), s.end());
        if (!s.empty() && (s.front() < 0 || s.back() >= g.size())) return false;
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!all_distinct()) return false;
    auto cycle_ok = [&](const std::vector<int>& cyc) {
        if (cyc.size() < 3) return false;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
        return true;
    };
    switch (f.kind) {
        case FamilyKind::Cycle:
            return static_cast<int>(w.size()) == f.param && cycle_ok(w);
        case FamilyKind::Wheel: {
            if (f.param == 1) return w.size() == 2 && g.has_edge(w[0], w[1]);
            if (f.param == 2)
                return w.size() == 3 && g.has_edge(w[0], w[1]) && g.has_edge(w[0], w[2]) &&
                       g.has_edge(w[1], w[2]);
            if (static_cast<int>(w.size()) != f.param + 1) return false;
            std::vector<int> rim(w.begin() + 1, w.end());
            if (!cycle_ok(rim)) return false;
            for (int v : rim)
                if (!g.has_edge(w[0], v)) return false;
            return true;
        }
        case FamilyKind::Fan: {
            if (static_cast<int>(w.size()) != 2 * f.param + 1) return false;
            for (std::size_t i = 1; i < w.size(); ++i)
                if (!g.has_edge(w[0], w[i])) return false;
            for (int i = 0; i < f.param; ++i)
                if (!g.has_edge(w[1 + 2 * i], w[2 + 2 * i])) return false;
            return true;
        }
        case FamilyKind::Star: {
            if (static_cast<int>(w.size()) != f.param + 1) return false;
            for (std::size_t i = 1; i < w.size(); ++i)
                if (!g.has_edge(w[0], w[i])) return false;
            return true;
        }
        case FamilyKind::Matching: {
            if (static_cast<int>(w.size()) != 2 * f.param) return false;
            for (int i = 0; i < f.param; ++i)
                if (!g.has_edge(w[2 * i], w[2 * i + 1])) return false;
            return true;
        }
        case FamilyKind::Clique: {
            if (static_cast<int>(w.size()) != f.param) return false;
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j)
                    if (!g.has_edge(w[i], w[j])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace ramsey::detectors

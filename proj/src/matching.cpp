#include "ramsey/matching.hpp"

#include <algorithm>
#include <queue>

namespace ramsey::matching {

namespace {

// Blossom-contraction matcher. `base[v]` is the representative of the
// contracted blossom containing v; alternating trees are grown by BFS from
// each exposed root in turn.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.size()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    int run(std::vector<int>* mate_out) {
        // Greedy seed matching shrinks the number of augmenting phases.
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            int u = -1;
            g_.neighbors(v).for_each([&](int w) {
                if (u == -1 && mate_[w] == -1) u = w;
            });
            if (u != -1) {
                mate_[v] = u;
                mate_[u] = v;
            }
        }
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (mate_[v] != -1) ++size;
        size /= 2;
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1 && try_augment(v)) ++size;
        if (mate_out) *mate_out = mate_;
        return size;
    }

private:
    bool try_augment(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            bool augmented = false;
            g_.neighbors(v).for_each([&](int to) {
                if (augmented) return;
                if (base_[v] == base_[to] || mate_[v] == to) return;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    contract(v, to, q);
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) {
                        augment_along(to);
                        augmented = true;
                    } else {
                        used_[mate_[to]] = true;
                        q.push(mate_[to]);
                    }
                }
            });
            if (augmented) return true;
        }
        return false;
    }

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract(int v, int to, std::queue<int>& q) {
        int b = lowest_common_base(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_path(v, b, to);
        mark_path(to, b, v);
        for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
                base_[i] = b;
                if (!used_[i]) {
                    used_[i] = true;
                    q.push(i);
                }
            }
        }
    }

    void augment_along(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

}  // namespace

int maximum_matching(const Graph& g, std::vector<int>* mate) {
    return Blossom(g).run(mate);
}

namespace {

bool kuhn_try(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& left,
              std::vector<int>& right, std::vector<bool>& visited) {
    for (int v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (right[v] == -1 || kuhn_try(right[v], adj, left, right, visited)) {
            left[u] = v;
            right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

int bipartite_matching(int n_left, int n_right, const std::vector<std::vector<int>>& adj,
                       std::vector<int>* left_mate, std::vector<int>* right_mate) {
    std::vector<int> left(n_left, -1), right(n_right, -1);
    int size = 0;
    for (int u = 0; u < n_left; ++u) {
        std::vector<bool> visited(n_right, false);
        if (kuhn_try(u, adj, left, right, visited)) ++size;
    }
    if (left_mate) *left_mate = left;
    if (right_mate) *right_mate = right;
    return size;
}

}  // namespace ramsey::matching

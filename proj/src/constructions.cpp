#include "ramsey/constructions.hpp"

#include <stdexcept>

namespace ramsey::constructions {

bool WitnessReport::certify(detectors::Budget* budget) {
    red_hit = detectors::contains_family(coloring.red(), avoided_red, budget);
    blue_hit = detectors::contains_family(coloring.blue(), avoided_blue, budget);
    certified = red_hit.status == detectors::Status::Absent &&
                blue_hit.status == detectors::Status::Absent;
    return certified;
}

std::vector<std::string> WitnessReport::header_comments() const {
    std::string p;
    for (const auto& [name, value] : params) {
        if (!p.empty()) p += " ";
        p += name + "=" + std::to_string(value);
    }
    return {
        "generator: " + generator,
        "params: " + p,
        "claimed-bound: " + std::to_string(claimed_bound),
        "avoids-red: " + avoided_red.to_string(),
        "avoids-blue: " + avoided_blue.to_string(),
    };
}

bool regular_bounded_components_feasible(int n, int k) {
    if (n < 0 || k < 1) return false;
    int d = k - 1;
    if (d == 0) return true;  // edgeless graph, any n
    if (n < k) return false;  // a d-regular component needs d+1 vertices
    return d % 2 == 0 || n % 2 == 0;
}

namespace {

// d-regular circulant on s vertices: offsets {1..floor(d/2)} plus the
// antipodal chord when d is odd (s must then be even).
Graph regular_block(int s, int d) {
    return Graph::circulant(s, d / 2, d % 2 == 1);
}

}  // namespace

Graph regular_bounded_components(int n, int k) {
    if (!regular_bounded_components_feasible(n, k))
        throw std::invalid_argument(
            "regular_bounded_components: infeasible (n=" + std::to_string(n) +
            ", k=" + std::to_string(k) + "); need k >= 1 and, for k > 1, n >= k and n or k-1 even");
    int d = k - 1;
    if (d == 0) return Graph(n);

    // Greedy split: as many K_k blocks as fit, remainder merged into the
    // last block (size k..2k-1; even when d is odd since then n and k are).
    int blocks = n / k;
    int rem = n % k;
    std::vector<int> sizes(blocks, k);
    if (rem > 0) sizes.back() = k + rem;

    Graph g(n);
    int base = 0;
    for (int s : sizes) {
        Graph block = regular_block(s, d);
        for (auto [u, v] : block.edges()) g.add_edge(base + u, base + v);
        base += s;
    }
    return g;
}

WitnessReport witness_star_wheel(int m, int n) {
    if (n < 2 || m < n)
        throw std::invalid_argument("witness_star_wheel: need m >= n >= 2");
    const bool both_even = (m % 2 == 0) && (n % 2 == 0);
    const int size_x = n + m - 1 - (both_even ? 1 : 0);
    const int size_y = m;
    const int total = size_x + size_y;

    // Blue inside X is (n-1)-regular with components of order <= 2n-1; the
    // parity split above makes that feasible.
    Graph blue_x = regular_bounded_components(size_x, n);

    Graph red(total);
    for (int u = 0; u < size_x; ++u)
        for (int v = u + 1; v < size_x; ++v)
            if (!blue_x.has_edge(u, v)) red.add_edge(u, v);
    for (int u = size_x; u < total; ++u)
        for (int v = u + 1; v < total; ++v) red.add_edge(u, v);
    // X-Y pairs stay blue.

    WitnessReport r{TwoColoring(std::move(red)),
                    FamilySpec(FamilyKind::Star, m),
                    FamilySpec(FamilyKind::Wheel, 2 * n)};
    r.claimed_bound = 2LL * m + n - (both_even ? 1 : 0);
    r.generator = "star-wheel";
    r.params = {{"m", m}, {"n", n}};
    return r;
}

Graph witness_mindegree_wheel(int n, int k) {
    if (k < 2 || 3 * k >= n)
        throw std::invalid_argument("witness_mindegree_wheel: need 2 <= k < n/3");
    const bool case_a = (k - 1) % 2 == 0 || ((n + k) / 2) % 2 == 0;
    const int size_x = (n + k) / 2 - (case_a ? 0 : 1);
    const int size_y = n - size_x;

    Graph inner = regular_bounded_components(size_x, k);
    Graph g(n);
    for (auto [u, v] : inner.edges()) g.add_edge(u, v);
    for (int u = 0; u < size_x; ++u)
        for (int v = size_x; v < n; ++v) g.add_edge(u, v);
    (void)size_y;
    return g;
}

int mindegree_wheel_expected_delta(int n, int k) {
    const bool case_a = (k - 1) % 2 == 0 || ((n + k) / 2) % 2 == 0;
    return case_a ? (n + k + 1) / 2 - 1 : (n + k) / 2 - 1;
}

namespace {

Graph red_cliques(const std::vector<int>& sizes, int extra_vertices = 0) {
    int total = extra_vertices;
    for (int s : sizes) total += s;
    Graph g(total);
    int base = 0;
    for (int s : sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
        base += s;
    }
    return g;
}

}  // namespace

WitnessReport witness_cycle_wheel_two_cliques(int m, int n) {
    if (n < 2 || m < n)
        throw std::invalid_argument("witness_cycle_wheel_two_cliques: need m >= n >= 2");
    WitnessReport r{TwoColoring(red_cliques({2 * m - 1, 2 * m - 1})),
                    FamilySpec(FamilyKind::Cycle, 2 * m),
                    FamilySpec(FamilyKind::Wheel, 2 * n)};
    r.claimed_bound = 4LL * m - 1;
    r.generator = "cycle-wheel";
    r.params = {{"m", m}, {"n", n}};
    return r;
}

WitnessReport witness_cycle_fan_three_cliques(int m, int n) {
    if (m < 2 || 2 * m < n || m >= n)
        throw std::invalid_argument("witness_cycle_fan_three_cliques: need n/2 <= m < n, m >= 2");
    WitnessReport r{TwoColoring(red_cliques({2 * m - 1, n - 1, n - 1})),
                    FamilySpec(FamilyKind::Cycle, 2 * m),
                    FamilySpec(FamilyKind::Fan, n)};
    r.claimed_bound = 2LL * m + 2 * n - 2;
    r.generator = "cycle-fan";
    r.params = {{"m", m}, {"n", n}};
    return r;
}

WitnessReport witness_cycle_star_cliques(int m, int n) {
    if (m < 2 || m > n)
        throw std::invalid_argument("witness_cycle_star_cliques: need 2 <= m <= n");
    const long long s = 2LL * n - 1;  // blue degree cap
    const long long w = 2LL * m - 1;  // red clique cap
    const long long q = s / w + 1;    // unique q with s/q < w <= s/(q-1)
    long long r_residue = s % q;
    if (r_residue == 0) r_residue = q;
    const long long ell = (s - r_residue) / q;  // s = q*ell + r, 1 <= r <= q

    WitnessReport rep{TwoColoring(0), FamilySpec(FamilyKind::Cycle, 2 * m),
                      FamilySpec(FamilyKind::Star, 2 * n)};
    rep.generator = "cycle-star";
    rep.params = {{"m", m}, {"n", n}, {"q", q}};

    if ((q + 1) * s < w * q * q) {
        // Sub-case 1: q disjoint red cliques of size 2m-1.
        std::vector<int> sizes(q, static_cast<int>(w));
        rep.coloring = TwoColoring(red_cliques(sizes));
        rep.claimed_bound = q * w + 1;
    } else {
        // Sub-case 2: r cliques of size ell+1, then q-r+1 cliques of size
        // ell, then a red apex joined to the smaller cliques.
        std::vector<int> sizes;
        for (long long i = 0; i < r_residue; ++i) sizes.push_back(static_cast<int>(ell + 1));
        for (long long i = 0; i < q - r_residue + 1; ++i) sizes.push_back(static_cast<int>(ell));
        Graph red = red_cliques(sizes, 1);
        const int apex = red.size() - 1;
        const int small_base = static_cast<int>(r_residue * (ell + 1));
        for (int v = small_base; v < apex; ++v) red.add_edge(apex, v);
        rep.coloring = TwoColoring(std::move(red));
        rep.claimed_bound = (q + 1) * (ell + 1) - (q - r_residue);
    }
    return rep;
}

WitnessReport witness_matching_fan(int n) {
    if (n < 2) throw std::invalid_argument("witness_matching_fan: need n >= 2");
    const int size_x = n - 1;
    const int total = 3 * n - 1;
    Graph red(total);
    for (int u = 0; u < size_x; ++u)
        for (int v = size_x; v < total; ++v) red.add_edge(u, v);
    WitnessReport r{TwoColoring(std::move(red)), FamilySpec(FamilyKind::Matching, n),
                    FamilySpec(FamilyKind::Fan, n)};
    r.claimed_bound = 3LL * n;
    r.generator = "matching-fan";
    r.params = {{"n", n}};
    return r;
}

Graph multipartite_complete(const std::vector<int>& part_sizes) {
    return Graph::complete_multipartite(part_sizes);
}

}  // namespace ramsey::constructions

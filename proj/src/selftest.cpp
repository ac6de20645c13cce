#include "ramsey/selftest.hpp"

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "ramsey/constructions.hpp"
#include "ramsey/decompositions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/exact_search.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::selftest {

namespace {

struct Check {
    bool pass = true;
    long long count = 0;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        ++count;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
};

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::string describe(const std::string& label, const std::vector<long long>& params) {
    std::string s = label + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(params[i]);
    }
    return s + ")";
}

// ---- criterion 1: every generator output certifies on the full grid ----

CriterionResult criterion_witnesses() {
    CriterionResult res{1, "witness-certification"};
    Check c;
    auto check_report = [&](constructions::WitnessReport rep, const std::vector<long long>& ps) {
        c.require(rep.certify(), describe(rep.generator, ps));
    };

    for (int n = 2; n <= 8; ++n)
        for (int m = n; m <= 12; ++m) {
            check_report(constructions::witness_star_wheel(m, n), {m, n});
            check_report(constructions::witness_cycle_wheel_two_cliques(m, n), {m, n});
        }
    for (int n = 3; n <= 8; ++n)
        for (int m = 2; m < n; ++m)
            if (2 * m >= n) check_report(constructions::witness_cycle_fan_three_cliques(m, n), {m, n});
    for (int n = 2; n <= 8; ++n)
        for (int m = 2; m <= n; ++m)
            check_report(constructions::witness_cycle_star_cliques(m, n), {m, n});
    for (int n = 2; n <= 8; ++n) check_report(constructions::witness_matching_fan(n), {n});

    // Minimum-degree witnesses certify as plain graphs: exact delta, no wheel.
    for (int k = 2; k <= 8; ++k)
        for (int n = 3 * k + 1; n <= 30; ++n) {
            Graph g = constructions::witness_mindegree_wheel(n, k);
            DegreeStats ds = degree_stats(g);
            bool ok = ds.min_degree == constructions::mindegree_wheel_expected_delta(n, k);
            auto hit = detectors::contains_family(g, FamilySpec(FamilyKind::Wheel, 2 * k));
            ok = ok && hit.status == detectors::Status::Absent;
            c.require(ok, describe("mindeg-wheel", {n, k}));
        }

    res.pass = c.pass;
    res.detail = std::to_string(c.count) + " instances";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 2: oracle agrees with the published exact values ----

CriterionResult criterion_oracle_values() {
    CriterionResult res{2, "oracle-exact-values"};
    struct Pair {
        const char* red;
        const char* blue;
        int expected;
    };
    const Pair pairs[] = {
        {"C6", "C4", 7}, {"C6", "C6", 8}, {"C4", "C4", 6},
        {"M2", "F2", 6}, {"M3", "F3", 9}, {"S2", "W6", 7},
    };
    Check c;
    std::uint64_t nodes = 0;
    exact_search::Options opts;
    opts.node_budget = exact_search::default_node_budget();
    for (const auto& p : pairs) {
        auto out = exact_search::ramsey_number(FamilySpec::parse(p.red), FamilySpec::parse(p.blue),
                                               p.expected, opts);
        nodes += out.stats.nodes;
        c.require(out.status == exact_search::OutcomeStatus::RamseyValue && out.value == p.expected,
                  std::string("R(") + p.red + "," + p.blue + ") != " + std::to_string(p.expected));
        // The stored witness on value-1 vertices must itself certify.
        if (out.witness) {
            auto v = exact_search::verify_witness(*out.witness, FamilySpec::parse(p.red),
                                                  FamilySpec::parse(p.blue));
            c.require(v.pass, std::string("witness recheck ") + p.red + "," + p.blue);
        }
    }
    res.pass = c.pass;
    res.detail = "6 values, " + std::to_string(nodes) + " nodes";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 3: regular small-component graphs on the full feasible grid ----

CriterionResult criterion_regular_components() {
    CriterionResult res{3, "regular-components"};
    Check c;
    for (int n = 0; n <= 60; ++n)
        for (int k = 1; k <= n + 2; ++k) {
            if (!constructions::regular_bounded_components_feasible(n, k)) {
                bool threw = false;
                try {
                    constructions::regular_bounded_components(n, k);
                } catch (const std::invalid_argument&) {
                    threw = true;
                }
                c.require(threw, describe("infeasible-not-rejected", {n, k}));
                continue;
            }
            Graph g = constructions::regular_bounded_components(n, k);
            bool ok = g.size() == n;
            for (int v = 0; v < n; ++v) ok = ok && g.degree(v) == k - 1;
            for (const auto& comp : g.components())
                ok = ok && static_cast<int>(comp.size()) <= 2 * k - 1;
            c.require(ok, describe("regular", {n, k}));
        }
    res.pass = c.pass;
    res.detail = std::to_string(c.count) + " parameter pairs";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 4: multipartite cycle spectra ----

void partitions_of(int total, int min_part, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        emit(cur);
        return;
    }
    for (int part = min_part; part <= total; ++part) {
        cur.push_back(part);
        partitions_of(total - part, part, cur, emit);
        cur.pop_back();
    }
}

CriterionResult criterion_multipartite_spectrum() {
    CriterionResult res{4, "multipartite-spectrum"};
    Check c;
    for (int total = 2; total <= 14; ++total) {
        std::vector<int> cur;
        partitions_of(total, 1, cur, [&](const std::vector<int>& parts) {
            if (parts.size() < 2) return;
            const int t = static_cast<int>(parts.size());
            const int max_part = parts.back();
            const int min_part = parts.front();
            Graph g = constructions::multipartite_complete(parts);
            auto spec = detectors::cycle_spectrum(g, total);
            if (!spec.complete) {
                c.require(false, "budget exhausted");
                return;
            }
            std::vector<long long> ps(parts.begin(), parts.end());
            if (t == 2) {
                std::vector<int> expected;
                for (int len = 4; len <= 2 * min_part; len += 2) expected.push_back(len);
                c.require(spec.present == expected, describe("bipartite", ps));
            } else if (2 * max_part <= total) {
                c.require(spec.pancyclic(total), describe("pancyclic", ps));
            } else {
                bool ok = true;
                for (int len = 3; len <= 2 * (total - max_part); ++len)
                    ok = ok && spec.has(len);
                c.require(ok, describe("dominant-part", ps));
            }
        });
    }
    res.pass = c.pass;
    res.detail = std::to_string(c.count) + " part vectors";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 5: Pulleyblank decomposition invariants + exhaustive p ----

// Independent oracle: maximum vertices coverable by disjoint edges and odd
// cycles, by direct enumeration over the lowest uncovered vertex.
class FractionalOracle {
public:
    explicit FractionalOracle(const Graph& g) : g_(g) {}

    int run() {
        std::uint32_t all = g_.size() >= 32 ? ~0u : ((1u << g_.size()) - 1);
        return best(all);
    }

private:
    int best(std::uint32_t mask) {
        if (!mask) return 0;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(1u << v);
        int out = best(rest);  // v left uncovered
        g_.neighbors(v).for_each([&](int u) {
            if ((mask >> u) & 1u) out = std::max(out, 2 + best(rest & ~(1u << u)));
        });
        // v on an odd cycle inside mask (v is the cycle's lowest vertex).
        std::vector<int> path{v};
        cycles(v, mask, 1u << v, path, out);
        memo_[mask] = out;
        return out;
    }

    void cycles(int last, std::uint32_t mask, std::uint32_t used, std::vector<int>& path,
                int& out) {
        g_.neighbors(last).for_each([&](int w) {
            if (!((mask >> w) & 1u) || ((used >> w) & 1u)) return;
            path.push_back(w);
            if (path.size() >= 3 && path.size() % 2 == 1 && g_.has_edge(w, path[0])) {
                out = std::max(out,
                               static_cast<int>(path.size()) + best(mask & ~(used | (1u << w))));
            }
            cycles(w, mask, used | (1u << w), path, out);
            path.pop_back();
        });
    }

    const Graph& g_;
    std::unordered_map<std::uint32_t, int> memo_;
};

CriterionResult criterion_pulleyblank() {
    CriterionResult res{5, "pulleyblank"};
    Check c;
    std::mt19937 rng(20250810);
    const double densities[] = {0.15, 0.3, 0.5, 0.75};
    int oracle_checks = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, densities[iter % 4]);
        auto dec = decompositions::pulleyblank_decomposition(g);
        const long long a = static_cast<long long>(dec.a.size());
        const long long cc = static_cast<long long>(dec.c.size());
        const long long d = static_cast<long long>(dec.d.size());
        c.require(d == a + n - dec.covered, "covered-count identity");
        c.require(2 * a + cc == dec.covered, "2|A|+|C| identity");
        bool independent = true;
        for (std::size_t i = 0; i < dec.d.size(); ++i)
            for (std::size_t j = i + 1; j < dec.d.size(); ++j)
                independent = independent && !g.has_edge(dec.d[i], dec.d[j]);
        c.require(independent, "D independent");
        bool no_cd = true;
        for (int x : dec.c)
            for (int y : dec.d) no_cd = no_cd && !g.has_edge(x, y);
        c.require(no_cd, "no C-D edges");
        if (!dec.d.empty())
            c.require(a >= degree_stats(g).min_degree, "|A| >= delta when D nonempty");
        auto fm = decompositions::max_fractional_matching(g);
        c.require(fm.covered == dec.covered && fm.valid(g), "witness covers p");
        if (n <= 10) {
            ++oracle_checks;
            c.require(FractionalOracle(g).run() == dec.covered, "exhaustive p oracle");
        }
    }
    res.pass = c.pass;
    res.detail = "1000 graphs, " + std::to_string(oracle_checks) + " oracle cross-checks";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 6: cut-vertex deletion repair ----

CriterionResult criterion_two_connect() {
    CriterionResult res{6, "two-connect-reduce"};
    Check c;
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 500; ++iter) {
        const int k = 3 + iter % 3;
        const int n_min = k == 3 ? 8 : k == 4 ? 10 : 12;
        const int n = n_min + static_cast<int>(rng() % (41 - n_min));
        Graph g = random_graph(rng, n, 0.25 + 0.05 * (iter % 5));
        // Patch up to the hypothesis delta >= n/k + k, i.e. k*deg >= n + k^2.
        for (;;) {
            int worst = -1;
            for (int v = 0; v < n; ++v)
                if (static_cast<long long>(k) * g.degree(v) < n + k * k &&
                    (worst == -1 || g.degree(v) < g.degree(worst)))
                    worst = v;
            if (worst == -1) break;
            int pick = -1;
            for (int u = 0; u < n; ++u)
                if (u != worst && !g.has_edge(worst, u) && (pick == -1 || g.degree(u) < g.degree(pick)))
                    pick = u;
            g.add_edge(worst, pick);
        }
        auto x = decompositions::two_connect_reduce(g, k);
        c.require(static_cast<int>(x.size()) <= k - 2, describe("|X|<=k-2", {n, k}));
        Bitset alive(n);
        alive.set_all();
        for (int v : x) alive.reset(v);
        Induced rest = induced_subgraph(g, alive);
        bool comps_ok = true;
        for (const auto& comp : rest.graph.components()) {
            if (comp.size() <= 2) continue;
            std::vector<int> local(comp.begin(), comp.end());
            comps_ok = comps_ok && detectors::is_two_connected(induced_subgraph(rest.graph, local).graph);
        }
        c.require(comps_ok, describe("residual 2-connected", {n, k}));
        c.require(decompositions::two_connect_reduce(rest.graph, k).empty(),
                  describe("idempotent", {n, k}));
    }
    res.pass = c.pass;
    res.detail = "500 graphs, k in {3,4,5}";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 7: piecewise-curve continuity and staircase shape ----

CriterionResult criterion_figures() {
    CriterionResult res{7, "figure-continuity"};
    Check c;
    for (long long q = 2; q <= 50; ++q) {
        // Rising piece meets the flat piece at mu = (q+1)/q^2 ...
        c.require(Rational(2 * q) * Rational(q + 1, q * q) == Rational(2) + Rational(2, q),
                  "inner boundary q=" + std::to_string(q));
        // ... and the q-band meets the (q-1)-band at mu = 1/(q-1).
        c.require(Rational(2 * q) * Rational(1, q - 1) == Rational(2) + Rational(2, q - 1),
                  "band boundary q=" + std::to_string(q));
        for (int fig : {1, 2}) {
            if (fig == 1 && q == 2) continue;  // figure 1 leaves the staircase at mu = 1/2
            Rational inner(q + 1, q * q);
            c.require(formulas::figure_coefficient(fig, inner) == Rational(2) + Rational(2, q),
                      "figure value at inner boundary");
        }
    }
    // The n = 5040 sweep: a monotone staircase converging to coefficient 2.
    const long long n = 5040;
    Rational prev(0);
    bool monotone = true, has_flat_step = false;
    for (long long m = 1; m <= 5 * n / 4; ++m) {
        Rational coeff = formulas::figure_coefficient(1, Rational(m, n));
        if (coeff < prev) monotone = false;
        if (m > 1 && coeff == prev) has_flat_step = true;
        prev = coeff;
    }
    c.require(monotone, "coefficient nondecreasing in m");
    c.require(has_flat_step, "staircase has flat steps");
    c.require(formulas::figure_coefficient(1, Rational(1, n)) == Rational(2) + Rational(2, n),
              "converges to 2 as m -> 0");
    c.require(formulas::figure_coefficient(1, Rational(5 * n / 4, n)) == Rational(5),
              "reaches 5n at m = 5n/4");
    res.pass = c.pass;
    res.detail = "q = 2..50 exact, n = 5040 sweep";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 8: sandwich and chain inequalities on the grid ----

CriterionResult criterion_consistency() {
    CriterionResult res{8, "bound-consistency"};
    Check c;
    for (long long n = 2; n <= 10000; ++n) {
        auto star = formulas::star_wheel_value(2 * n, n);
        auto diag = formulas::even_wheel_diag_bounds(n);
        auto cw = formulas::cycle_wheel_bounds(n, n);
        c.require(star.lower && diag.upper && *star.lower <= *diag.upper,
                  "sandwich lower n=" + std::to_string(n));
        c.require(cw.upper && *diag.upper <= 2 * *cw.upper,
                  "sandwich upper n=" + std::to_string(n));
    }
    for (long long m = 2; m <= 100; ++m)
        for (long long n = 2; n <= 100; ++n) {
            auto cs = formulas::cycle_star_value(m, n);
            auto cw = formulas::cycle_wheel_bounds(m, n);
            if (cs.lower && cw.lower)
                c.require(*cs.lower <= *cw.lower,
                          describe("chain lower", {m, n}));
            if (cs.exactness == Exactness::Exact && cw.exactness == Exactness::Exact)
                c.require(*cs.lower <= *cw.lower, describe("chain exact", {m, n}));
            c.require(cs.exactness != Exactness::Exact || *cs.lower == *cs.upper,
                      "exact means lower == upper");
        }
    res.pass = c.pass;
    res.detail = "sandwich n <= 10000, chain grid 100x100";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

// ---- criterion 9: star-wheel duality by exhaustion over all graphs ----

// Wheel containment on tiny mask graphs (N <= 7), used inside the loop over
// all 2^21 graphs; validated against the full detectors on a sample.
bool mask_cycle_search(const std::array<std::uint8_t, 7>& adj, std::uint8_t allowed, int len,
                       int anchor, int last, std::uint8_t used, int depth) {
    if (depth == len) return (adj[last] >> anchor) & 1u;
    std::uint8_t cand = adj[last] & allowed & ~used;
    while (cand) {
        int v = std::countr_zero(static_cast<unsigned>(cand));
        cand &= cand - 1;
        if (mask_cycle_search(adj, allowed, len, anchor, v, used | (1u << v), depth + 1))
            return true;
    }
    return false;
}

bool mask_has_cycle(const std::array<std::uint8_t, 7>& adj, std::uint8_t allowed, int len) {
    if (std::popcount(static_cast<unsigned>(allowed)) < len) return false;
    std::uint8_t rest = allowed;
    while (rest) {
        int a = std::countr_zero(static_cast<unsigned>(rest));
        rest &= rest - 1;
        if (mask_cycle_search(adj, allowed, len, a, a, 1u << a, 1)) return true;
        allowed &= ~(1u << a);
    }
    return false;
}

bool mask_has_wheel(const std::array<std::uint8_t, 7>& adj, int n_vertices, int rim) {
    if (rim == 2) {  // W_2 = K_3
        for (int u = 0; u < n_vertices; ++u)
            for (int v = u + 1; v < n_vertices; ++v)
                if (((adj[u] >> v) & 1u) && (adj[u] & adj[v])) return true;
        return false;
    }
    for (int hub = 0; hub < n_vertices; ++hub)
        if (mask_has_cycle(adj, adj[hub], rim)) return true;
    return false;
}

CriterionResult criterion_duality() {
    CriterionResult res{9, "dirac-duality"};
    Check c;

    // max delta over W_{2n}-free graphs on N vertices, for n = 1..3, N = 2..7.
    int max_delta_free[4][8];
    for (auto& row : max_delta_free)
        for (auto& v : row) v = -1;

    std::mt19937 rng(99);
    int sample_validations = 0;
    for (int n_vertices = 2; n_vertices <= 7; ++n_vertices) {
        const int bits = n_vertices * (n_vertices - 1) / 2;
        std::array<std::pair<int, int>, 21> idx{};
        int t = 0;
        for (int u = 0; u < n_vertices; ++u)
            for (int v = u + 1; v < n_vertices; ++v) idx[t++] = {u, v};
        for (std::uint32_t code = 0; code < (1u << bits); ++code) {
            std::array<std::uint8_t, 7> adj{};
            for (int b = 0; b < bits; ++b)
                if ((code >> b) & 1u) {
                    adj[idx[b].first] |= 1u << idx[b].second;
                    adj[idx[b].second] |= 1u << idx[b].first;
                }
            int delta = 8;
            for (int v = 0; v < n_vertices; ++v)
                delta = std::min(delta, std::popcount(static_cast<unsigned>(adj[v])));
            bool sampled = (rng() & 0x3ffff) == 0;
            for (int n = 1; n <= 3; ++n) {
                if (delta <= max_delta_free[n][n_vertices] && !sampled) continue;
                bool has = mask_has_wheel(adj, n_vertices, 2 * n);
                if (sampled) {
                    // Cross-check the mask detector against the module one.
                    Graph g(n_vertices);
                    for (int b = 0; b < bits; ++b)
                        if ((code >> b) & 1u) g.add_edge(idx[b].first, idx[b].second);
                    bool ref = detectors::contains_family(g, FamilySpec(FamilyKind::Wheel, 2 * n))
                                   .found();
                    c.require(has == ref, "mask wheel detector mismatch");
                    ++sample_validations;
                }
                if (!has && delta > max_delta_free[n][n_vertices])
                    max_delta_free[n][n_vertices] = delta;
            }
        }
    }

    exact_search::Options opts;
    opts.node_budget = exact_search::default_node_budget();
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 8; ++m) {
            auto out = exact_search::ramsey_number(FamilySpec(FamilyKind::Star, m),
                                                   FamilySpec(FamilyKind::Wheel, 2 * n), 8, opts);
            const bool have_value = out.status == exact_search::OutcomeStatus::RamseyValue;
            c.require(out.status != exact_search::OutcomeStatus::ExhaustedBudget,
                      describe("oracle exhausted", {m, n}));
            for (int cap = 2; cap <= 7; ++cap) {
                const bool rhs = have_value && out.value <= cap;
                const bool lhs = cap - m > max_delta_free[n][cap];
                c.require(lhs == rhs, describe("duality", {m, n, cap}));
            }
        }

    res.pass = c.pass;
    res.detail = "all graphs N <= 7, m <= 8, n <= 3 (" +
                 std::to_string(sample_validations) + " detector cross-checks)";
    if (!c.pass) res.detail += "; first failure: " + c.first_failure;
    return res;
}

}  // namespace

std::string CriterionResult::line() const {
    std::ostringstream ss;
    ss << "criterion " << id << " (" << name << "): " << (pass ? "PASS" : "FAIL") << " - "
       << detail << " [" << static_cast<long long>(seconds * 1000) << " ms]";
    return ss.str();
}

int criterion_count() { return 9; }

CriterionResult run_criterion(int id) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    switch (id) {
        case 1: res = criterion_witnesses(); break;
        case 2: res = criterion_oracle_values(); break;
        case 3: res = criterion_regular_components(); break;
        case 4: res = criterion_multipartite_spectrum(); break;
        case 5: res = criterion_pulleyblank(); break;
        case 6: res = criterion_two_connect(); break;
        case 7: res = criterion_figures(); break;
        case 8: res = criterion_consistency(); break;
        case 9: res = criterion_duality(); break;
        default: throw std::invalid_argument("run_criterion: id must be 1..9");
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<CriterionResult> run_all(std::ostream* progress) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count(); ++id) {
        out.push_back(run_criterion(id));
        if (progress) *progress << out.back().line() << std::endl;
    }
    return out;
}

}  // namespace ramsey::selftest

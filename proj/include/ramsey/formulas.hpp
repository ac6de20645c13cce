#pragma once

#include <optional>
#include <stdexcept>

#include "ramsey/bounds.hpp"
#include "ramsey/rational.hpp"

namespace ramsey::formulas {

/// A parameter pair the formulas deliberately exclude (the value is known
/// to break the pattern and must come from the exact-search oracle).
struct ExcludedCase : std::domain_error {
    using std::domain_error::domain_error;
};

/// R(K_{1,m}, W_{2n}) for n >= 2:
///   m <= n                    exact m + 2n - (1 if m even else 0)
///   n < m, n >= 3, within the exact range (m <= 2n-2 or m <= 3n-1000)
///                             exact 2m + n - (1 if m, n both even else 0)
///   m = 2n-1 otherwise        interval [5n-2, 5n-1]
///   otherwise                 asymptotic (2+o(1))m + n, lower from the
///                             parity-split construction
/// n = 2 with m > n is flagged in the provenance: K_{1,m} vs W_4 is known
/// to behave differently and only the construction lower bound is reported.
BoundValue star_wheel_value(long long m, long long n);

/// R(C_{2m}, C_{2n}) = 2m+n-1 for m >= n else m+2n-1; throws ExcludedCase
/// for (2,2), where the true value is 6.
BoundValue even_cycle_ramsey(long long m, long long n);

/// R(C_{2m}, W_{2n}) for m, n >= 2, piecewise in m/n:
///   m >= n        interval [4m-1, max(4m+332-floor(333c/251), 4m-1)], c = m-n;
///                 collapses to exact 4m-1 once m >= n+251
///   n/2 <= m < n  interval [2m+2n-2, 2m+2n+C] with C = 3*75*10^4*6^5
///   m < n/2       asymptotic with exact rational leading term: (2q+o(1))m
///                 for (q+1)n/q^2 <= m, else (2+2/q+o(1))n, q = ceil(n/m);
///                 lower bound from the q-clique construction
BoundValue cycle_wheel_bounds(long long m, long long n);

/// R(C_{2m}, K_{1,2n}): exact 2m for m >= 2n (Dirac), exact 4n for
/// n < m < 2n, and for m <= n the piecewise q-formula, reported asymptotic
/// unless m >= assume_large_from (the published exactness holds for all
/// sufficiently large parameters with no explicit cutoff).
BoundValue cycle_star_value(long long m, long long n,
                            std::optional<long long> assume_large_from = std::nullopt);

/// Construction lower bound for R(C_{2m}, K_{1,2n}), 2 <= m <= n: disjoint
/// red cliques, q(2m-1)+1 or (q+1)ceil((2n-1)/q)-(q-r).
long long cycle_star_lower(long long m, long long n);

/// R(W_{2n}): interval [5n - (1 if n even else 0), 8n+664] with the known
/// exact overrides R(W_4) = 15 and R(W_6) = 19.
BoundValue even_wheel_diag_bounds(long long n);

/// R(W_{2n+1}): interval [6n+4, 10n+O(1)]; the additive constant in the
/// upper bound is not pinned down.
BoundValue odd_wheel_diag_bounds(long long n);

/// R(K_{1,m}, W_{2n+1}) = m+2n+1 for m <= n else 3m+1 (exact, all m,n >= 1).
BoundValue odd_star_wheel_value(long long m, long long n);

/// R(C_{2m+1}, W_{2n+1}) = 6m+1 for m > 2n/3 else 4n+3 (exact); throws
/// ExcludedCase for (1,1).
BoundValue odd_cycle_wheel_value(long long m, long long n);

/// R(nK_2, F_n) = R(nK_2, W_{2n}) = 3n (exact, n >= 1).
BoundValue matching_fan_value(long long n);

/// Minimum-degree threshold forcing W_{2k} in an n-vertex graph,
/// 2 <= k < n/2: main term (n+k)/2 with o(n) slack for k < n/3, exactly 2k
/// (for large n) when n/3 <= k. For 3 <= k < n/3 the conjectured exact
/// threshold (the parity-adjusted (n+k)/2) rides along with conjecture
/// provenance.
BoundValue mindegree_wheel_threshold(long long n, long long k);

/// Which piece of the R(C_{2m}, W_{2n}) formula applies, with q and the
/// sub-case boundary (q+1)n/q^2 resolved in exact rational arithmetic.
RegimeTag regime_classify(long long m, long long n);

/// Leading coefficient over n of the piecewise curve at mu = m/n:
/// figure 1 = cycles vs wheels, figure 2 = cycles vs stars.
Rational figure_coefficient(int figure, const Rational& mu);

/// The additive constant in the n/2 <= m < n cycle-wheel upper bound.
inline constexpr long long kCycleWheelMidConstant = 3LL * 750000LL * 7776LL;

}  // namespace ramsey::formulas

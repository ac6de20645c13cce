#include "ramsey/formulas.hpp"

#include <algorithm>

namespace ramsey {

std::string to_string(Exactness e) {
    switch (e) {
        case Exactness::Exact: return "exact";
        case Exactness::Interval: return "interval";
        case Exactness::Asymptotic: return "asymptotic";
    }
    return "?";
}

std::string to_string(ErrorClass e) {
    switch (e) {
        case ErrorClass::None: return "none";
        case ErrorClass::AdditiveConstant: return "additive_constant";
        case ErrorClass::LittleO: return "little_o";
    }
    return "?";
}

std::string BoundValue::render() const {
    std::string s;
    auto leading = [&]() {
        std::string t = "(" + leading_coeff.to_string() + ")";
        if (leading_basis == 'm' || leading_basis == 'n') t += leading_basis;
        return t;
    };
    switch (exactness) {
        case Exactness::Exact:
            s = "exact " + std::to_string(*lower);
            break;
        case Exactness::Interval:
            if (upper)
                s = "interval [" + std::to_string(*lower) + ", " + std::to_string(*upper) + "]";
            else
                s = "interval [" + std::to_string(*lower) + ", " + leading() + "+O(1)]";
            break;
        case Exactness::Asymptotic:
            s = "asymptotic " + leading();
            if (error_class == ErrorClass::LittleO) s += " + o(" + std::string("n") + ")";
            if (lower) s += ", lower " + std::to_string(*lower);
            if (upper) s += ", upper " + std::to_string(*upper);
            break;
    }
    if (conjectured) s += ", conjectured exact " + std::to_string(*conjectured);
    return s;
}

namespace formulas {

namespace {

int theta(long long m, long long n) { return (m % 2 == 0 && n % 2 == 0) ? 1 : 0; }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BoundValue star_wheel_value(long long m, long long n) {
    require(m >= 1 && n >= 2, "star_wheel_value: need m >= 1, n >= 2");
    BoundValue b;
    b.regime.pair_id = "star-wheel";
    b.regime.theta = theta(m, n);

    if (m <= n) {
        b = BoundValue::exact(m + 2 * n - (m % 2 == 0 ? 1 : 0));
        b.regime.pair_id = "star-wheel";
        b.regime.case_label = "m<=n";
        b.provenance = "known exact value for stars below the wheel size";
        return b;
    }

    const long long ls = 2 * m + n - theta(m, n);  // parity-split construction bound
    if (n >= 3 && (m <= 2 * n - 2 || m <= 3 * n - 1000)) {
        b = BoundValue::exact(ls);
        b.regime.case_label = m <= 2 * n - 2 ? "n<m<=2n-2" : "2n-1<=m<=3n-1000";
        b.regime.theta = theta(m, n);
        b.provenance = m <= 2 * n - 2 ? "Li-Schiermeyer exact range"
                                      : "exact extension up to m = 3n-1000";
        return b;
    }
    if (n >= 3 && m == 2 * n - 1) {
        b = BoundValue::interval(5 * n - 2, 5 * n - 1);
        b.regime.case_label = "m=2n-1";
        b.provenance = "known two-point bracket for m = 2n-1";
        b.error_class = ErrorClass::AdditiveConstant;
        return b;
    }

    b.lower = ls;
    b.exactness = Exactness::Asymptotic;
    b.error_class = ErrorClass::LittleO;
    b.leading_coeff = Rational(2);
    b.leading_basis = 'm';
    b.regime.case_label = "m>n asymptotic (2+o(1))m+n";
    b.provenance = n == 2 ? "construction lower bound only; K_{1,m} vs W_4 behaves differently"
                          : "asymptotically (2+o(1))m+n";
    return b;
}

BoundValue even_cycle_ramsey(long long m, long long n) {
    require(m >= 2 && n >= 2, "even_cycle_ramsey: need m, n >= 2");
    if (m == 2 && n == 2)
        throw ExcludedCase("R(C_4, C_4) is excluded from the formula; the oracle gives 6");
    BoundValue b = BoundValue::exact(m >= n ? 2 * m + n - 1 : m + 2 * n - 1);
    b.regime.pair_id = "cycle-cycle";
    b.regime.case_label = m >= n ? "m>=n" : "m<n";
    b.provenance = "Faudree-Schelp / Rosta even-cycle Ramsey numbers";
    return b;
}

BoundValue cycle_wheel_bounds(long long m, long long n) {
    require(m >= 2 && n >= 2, "cycle_wheel_bounds: need m, n >= 2");
    BoundValue b;
    b.regime = regime_classify(m, n);

    if (m >= n) {
        const long long c = m - n;
        const long long upper = std::max(4 * m + 332 - (333 * c) / 251, 4 * m - 1);
        b = BoundValue::interval(4 * m - 1, upper);
        b.regime = regime_classify(m, n);
        if (b.exactness == Exactness::Interval) b.error_class = ErrorClass::AdditiveConstant;
        b.provenance = m >= n + 251 ? "Zhang-Broersma-Chen exact value"
                                    : "two-clique lower bound; constant-error upper bound";
        return b;
    }
    if (2 * m >= n) {
        b = BoundValue::interval(2 * m + 2 * n - 2, 2 * m + 2 * n + kCycleWheelMidConstant);
        b.regime = regime_classify(m, n);
        b.error_class = ErrorClass::AdditiveConstant;
        b.provenance = "three-clique lower bound; constant-error upper bound for large m";
        return b;
    }

    b.lower = cycle_star_lower(m, n);
    b.exactness = Exactness::Asymptotic;
    b.error_class = ErrorClass::LittleO;
    const long long q = *b.regime.q;
    if (b.regime.case_label == "2qm") {
        b.leading_coeff = Rational(2 * q);
        b.leading_basis = 'm';
    } else {
        b.leading_coeff = Rational(2 * q + 2, q);
        b.leading_basis = 'n';
    }
    b.provenance = "q-regime asymptotics, tight up to o(1)";
    return b;
}

long long cycle_star_lower(long long m, long long n) {
    require(m >= 2 && m <= n, "cycle_star_lower: need 2 <= m <= n");
    const long long s = 2 * n - 1;
    const long long w = 2 * m - 1;
    const long long q = s / w + 1;  // unique q with s/q < w <= s/(q-1)
    if ((q + 1) * s < w * q * q) return q * w + 1;
    long long r = s % q;
    if (r == 0) r = q;
    const long long ell = (s - r) / q;
    return (q + 1) * (ell + 1) - (q - r);
}

BoundValue cycle_star_value(long long m, long long n, std::optional<long long> assume_large_from) {
    require(m >= 2 && n >= 1, "cycle_star_value: need m >= 2, n >= 1");
    BoundValue b;
    b.regime.pair_id = "cycle-star";

    if (m >= 2 * n) {
        b = BoundValue::exact(2 * m);
        b.regime.pair_id = "cycle-star";
        b.regime.case_label = "m>=2n";
        b.provenance = "Dirac: a graph with min degree half its order is Hamiltonian";
        return b;
    }
    if (m > n) {
        b = BoundValue::exact(4 * n);
        b.regime.pair_id = "cycle-star";
        b.regime.case_label = "n<m<2n";
        b.provenance = "Zhang-Broersma-Chen";
        return b;
    }

    const long long s = 2 * n - 1;
    const long long w = 2 * m - 1;
    const long long q = s / w + 1;
    const bool rising = (q + 1) * s < w * q * q;
    const long long formula = rising ? 2 * q * m - (q - 1) : 2 * n + s / q + 1;
    b.regime.q = q;
    b.regime.case_label = rising ? "2qm-(q-1)" : "2n+floor((2n-1)/q)+1";

    if (assume_large_from && m >= *assume_large_from) {
        b.lower = b.upper = formula;
        b.exactness = Exactness::Exact;
        b.provenance = "piecewise q-formula (exactness assumed at this size)";
        return b;
    }
    b.lower = cycle_star_lower(m, n);
    b.exactness = Exactness::Asymptotic;
    b.error_class = ErrorClass::LittleO;
    if (rising) {
        b.leading_coeff = Rational(2 * q);
        b.leading_basis = 'm';
    } else {
        b.leading_coeff = Rational(2 * q + 2, q);
        b.leading_basis = 'n';
    }
    b.upper.reset();
    b.provenance =
        "piecewise q-formula, exact only for sufficiently large parameters; formula value " +
        std::to_string(formula);
    return b;
}

BoundValue even_wheel_diag_bounds(long long n) {
    require(n >= 2, "even_wheel_diag_bounds: need n >= 2");
    if (n == 2) {
        BoundValue b = BoundValue::exact(15);
        b.regime.pair_id = "wheel-diag";
        b.provenance = "known exact value R(W_4) = 15";
        return b;
    }
    if (n == 3) {
        BoundValue b = BoundValue::exact(19);
        b.regime.pair_id = "wheel-diag";
        b.provenance = "known exact value R(W_6) = 19";
        return b;
    }
    BoundValue b = BoundValue::interval(5 * n - (n % 2 == 0 ? 1 : 0), 8 * n + 664);
    b.regime.pair_id = "wheel-diag";
    b.error_class = ErrorClass::AdditiveConstant;
    b.provenance = "star construction lower bound; doubled cycle-wheel upper bound";
    return b;
}

BoundValue odd_wheel_diag_bounds(long long n) {
    require(n >= 1, "odd_wheel_diag_bounds: need n >= 1");
    BoundValue b;
    b.lower = 6 * n + 4;
    b.exactness = Exactness::Interval;
    b.error_class = ErrorClass::AdditiveConstant;
    b.unquantified = true;  // upper bound is 10n plus an unspecified constant
    b.leading_coeff = Rational(10);
    b.leading_basis = 'n';
    b.regime.pair_id = "odd-wheel-diag";
    b.provenance = "exact star bound below; 10n+O(1) refinement above";
    return b;
}

BoundValue odd_star_wheel_value(long long m, long long n) {
    require(m >= 1 && n >= 1, "odd_star_wheel_value: need m, n >= 1");
    BoundValue b = BoundValue::exact(m <= n ? m + 2 * n + 1 : 3 * m + 1);
    b.regime.pair_id = "odd-star-wheel";
    b.regime.case_label = m <= n ? "m<=n" : "m>n";
    b.provenance = "known exact value for stars vs odd wheels";
    return b;
}

BoundValue odd_cycle_wheel_value(long long m, long long n) {
    require(m >= 1 && n >= 1, "odd_cycle_wheel_value: need m, n >= 1");
    if (m == 1 && n == 1)
        throw ExcludedCase("R(C_3, W_3) is excluded from the odd cycle-wheel formula");
    BoundValue b = BoundValue::exact(3 * m > 2 * n ? 6 * m + 1 : 4 * n + 3);
    b.regime.pair_id = "odd-cycle-wheel";
    b.regime.case_label = 3 * m > 2 * n ? "m>2n/3" : "m<=2n/3";
    b.provenance = "known exact values for odd cycles vs odd wheels";
    return b;
}

BoundValue matching_fan_value(long long n) {
    require(n >= 1, "matching_fan_value: need n >= 1");
    BoundValue b = BoundValue::exact(3 * n);
    b.regime.pair_id = "matching-fan";
    b.provenance = "Lin-Li: R(nK_2, F_n) = R(nK_2, W_2n) = 3n";
    return b;
}

BoundValue mindegree_wheel_threshold(long long n, long long k) {
    require(k >= 2 && 2 * k < n, "mindegree_wheel_threshold: need 2 <= k < n/2");
    BoundValue b;
    b.regime.pair_id = "mindeg-wheel";
    if (3 * k < n) {
        b.exactness = Exactness::Asymptotic;
        b.error_class = ErrorClass::LittleO;
        b.leading_coeff = Rational(n + k, 2);
        b.leading_basis = '#';  // the leading term is the value itself
        b.regime.case_label = "(n+k)/2+eps*n";
        const long long floor_half = (n + k) / 2;
        if (k >= 3) {
            const bool parity_case = (k - 1) % 2 == 1 && floor_half % 2 == 1;
            b.conjectured = parity_case ? floor_half : (n + k + 1) / 2;
            // The extremal construction is one below the conjectured value.
            b.lower = *b.conjectured;
        }
        b.provenance = "degree threshold (n+k)/2 + eps*n for k < n/3; conjectured tight";
    } else {
        b.exactness = Exactness::Asymptotic;
        b.error_class = ErrorClass::None;
        b.leading_coeff = Rational(2 * k);
        b.leading_basis = '#';
        b.regime.case_label = "2k";
        b.provenance = "degree threshold 2k for n/3 <= k < n/2 (large n)";
    }
    return b;
}

RegimeTag regime_classify(long long m, long long n) {
    require(m >= 2 && n >= 2, "regime_classify: need m, n >= 2");
    RegimeTag tag;
    tag.pair_id = "cycle-wheel";
    tag.theta = theta(m, n);
    if (m >= n) {
        tag.case_label = "m>=n";
        tag.c = m - n;
        return tag;
    }
    if (2 * m >= n) {
        tag.case_label = "n/2<=m<n";
        return tag;
    }
    const long long q = (n + m - 1) / m;  // ceil(n/m); satisfies n/q <= m < n/(q-1)
    tag.q = q;
    // Sub-case boundary (q+1)n/q^2, compared exactly: m >= (q+1)n/q^2.
    tag.case_label = m * q * q >= (q + 1) * n ? "2qm" : "(2+2/q)n";
    return tag;
}

Rational figure_coefficient(int figure, const Rational& mu) {
    if (mu <= Rational(0)) throw std::invalid_argument("figure_coefficient: mu must be positive");
    if (figure == 1) {
        if (mu >= Rational(1)) return Rational(4) * mu;
        if (mu >= Rational(1, 2)) return Rational(2) + Rational(2) * mu;
        const long long q = (Rational(1) / mu).ceil();
        if (mu >= Rational(q + 1, q * q)) return Rational(2 * q) * mu;
        return Rational(2 * q + 2, q);
    }
    if (figure == 2) {
        if (mu >= Rational(2)) return Rational(2) * mu;
        if (mu >= Rational(1)) return Rational(4);
        const long long q = (Rational(1) / mu).floor() + 1;  // 1/q < mu <= 1/(q-1)
        if (mu > Rational(q + 1, q * q)) return Rational(2 * q) * mu;
        return Rational(2 * q + 2, q);
    }
    throw std::invalid_argument("figure_coefficient: figure must be 1 or 2");
}

}  // namespace formulas
}  // namespace ramsey

#pragma once

#include <optional>
#include <string>

#include "ramsey/rational.hpp"

namespace ramsey {

enum class Exactness { Exact, Interval, Asymptotic };
enum class ErrorClass { None, AdditiveConstant, LittleO };

std::string to_string(Exactness e);
std::string to_string(ErrorClass e);

/// Which piece of a piecewise formula applies, with the parameters the piece
/// is keyed on: q = ceil(n/m) in the small-m regimes, c = m-n in the large-m
/// regime, theta = 1 iff m and n are both even.
struct RegimeTag {
    std::string pair_id;     // e.g. "cycle-wheel"
    std::string case_label;  // e.g. "m>=n", "n/2<=m<n", "(2+2/q)n"
    std::optional<long long> q;
    std::optional<long long> c;
    std::optional<int> theta;
};

/// A Ramsey value or bound: an exact integer, a [lower, upper] interval, or
/// an asymptotic leading term (exact rational coefficient times m or n) with
/// whatever concrete bounds are known alongside it.
struct BoundValue {
    std::optional<long long> lower;
    std::optional<long long> upper;
    Exactness exactness = Exactness::Exact;
    ErrorClass error_class = ErrorClass::None;

    Rational leading_coeff;     // meaningful when exactness == Asymptotic
    char leading_basis = ' ';   // 'm' or 'n'
    bool unquantified = false;  // an upper bound exists but its constant is not pinned down

    RegimeTag regime;
    std::string provenance;

    // Conjectured exact value, reported alongside the proven content with
    // conjecture provenance (used by the minimum-degree threshold).
    std::optional<long long> conjectured;

    static BoundValue exact(long long v) {
        BoundValue b;
        b.lower = b.upper = v;
        return b;
    }
    static BoundValue interval(long long lo, long long hi) {
        BoundValue b;
        b.lower = lo;
        b.upper = hi;
        b.exactness = lo == hi ? Exactness::Exact : Exactness::Interval;
        return b;
    }

    std::string render() const;  // e.g. "exact 7", "interval [15, 348]", "asymptotic (8/3)n"
};

}  // namespace ramsey

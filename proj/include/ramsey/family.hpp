#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

enum class FamilyKind { Cycle, Wheel, Fan, Star, Matching, Clique };

/// Symbolic target graph family.
///
/// DSL (CLI and file headers): C<k>, W<k>, F<k>, S<m> (= K_{1,m}),
/// M<n> (= n disjoint edges), K<n>.
///
/// Wheel convention: W_k has k+1 vertices (hub joined to a k-cycle), with
/// the degenerate cases W_1 = K_2 and W_2 = K_3. Some texts use W_k for the
/// graph on k vertices instead; this library does not.
struct FamilySpec {
    FamilyKind kind;
    int param;

    FamilySpec(FamilyKind k, int p) : kind(k), param(p) { validate(); }

    void validate() const {
        if (kind == FamilyKind::Cycle && param < 3)
            throw std::invalid_argument("FamilySpec: cycle length must be >= 3");
        if (kind != FamilyKind::Cycle && param < 1)
            throw std::invalid_argument("FamilySpec: parameter must be >= 1");
    }

    /// Vertices of one copy of the family.
    int vertex_count() const {
        switch (kind) {
            case FamilyKind::Cycle: return param;
            case FamilyKind::Wheel: return param == 1 ? 2 : param + 1;
            case FamilyKind::Fan: return 2 * param + 1;
            case FamilyKind::Star: return param + 1;
            case FamilyKind::Matching: return 2 * param;
            case FamilyKind::Clique: return param;
        }
        return 0;
    }

    std::string to_string() const {
        char c = ' ';
        switch (kind) {
            case FamilyKind::Cycle: c = 'C'; break;
            case FamilyKind::Wheel: c = 'W'; break;
            case FamilyKind::Fan: c = 'F'; break;
            case FamilyKind::Star: c = 'S'; break;
            case FamilyKind::Matching: c = 'M'; break;
            case FamilyKind::Clique: c = 'K'; break;
        }
        return c + std::to_string(param);
    }

    bool operator==(const FamilySpec& o) const = default;

    static FamilySpec parse(const std::string& text);
};

inline FamilySpec FamilySpec::parse(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("FamilySpec: cannot parse '" + text + "'");
    FamilyKind kind;
    switch (text[0]) {
        case 'C': kind = FamilyKind::Cycle; break;
        case 'W': kind = FamilyKind::Wheel; break;
        case 'F': kind = FamilyKind::Fan; break;
        case 'S': kind = FamilyKind::Star; break;
        case 'M': kind = FamilyKind::Matching; break;
        case 'K': kind = FamilyKind::Clique; break;
        default: throw std::invalid_argument("FamilySpec: unknown family '" + text + "'");
    }
    std::size_t pos = 0;
    int param;
    try {
        param = std::stoi(text.substr(1), &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("FamilySpec: bad parameter in '" + text + "'");
    }
    if (pos + 1 != text.size())
        throw std::invalid_argument("FamilySpec: trailing junk in '" + text + "'");
    return FamilySpec(kind, param);
}

}  // namespace ramsey

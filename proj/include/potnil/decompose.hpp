#ifndef POTNIL_DECOMPOSE_HPP
#define POTNIL_DECOMPOSE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potnil/companion.hpp"

namespace potnil {

/// Re-verified postconditions of a decomposition.
struct Certificate {
    std::vector<bool> checked_p_potency;
    bool checked_nilpotency = false;
    bool checked_sum = false;
    /// Smallest e >= 1 with N^e = 0 (0 when N is not nilpotent).
    std::size_t nilpotency_witness = 0;

    bool all_passed() const noexcept;
    /// `key: value` lines.
    std::string to_string() const;
};

/// Computes the certificate of `potents + nilpotent == target` from scratch.
Certificate certify(const Matrix& target, const std::vector<Matrix>& potents, const Matrix& nilpotent);

/// target = sum(potents) + nilpotent, each potent E with E^p = E, nilpotent N.
struct Decomposition {
    std::vector<Matrix> potents;
    Matrix nilpotent;
    Certificate certificate;

    /// The single p-potent part; throws InvalidArgument when m != 1.
    const Matrix& potent() const;
};

/// Trace criterion: the trace lies in the prime subfield.
bool can_decompose(const CompanionMatrix& c);

struct Admissible {
    std::uint64_t k;
    FieldElement a;
};

/**
 * Smallest k in {1..n-1} with k != 0 mod p, k*1 != t and a = t/k - 1 in
 * {1..p-2}, where t = -c_{n-1}. Absent when no k qualifies (e.g. n = 2,
 * t = 1). Requires n >= 2 and t a nonzero prime-subfield element, otherwise
 * throws InvalidArgument.
 */
std::optional<Admissible> corollary_admissible(const CompanionMatrix& c);

/// Explicit constructions for trace-zero companions. Throws NonzeroTrace.
Decomposition decompose_traceless(const CompanionMatrix& c);

/// Constructive decomposition E + N. Throws CriterionFailed when the trace
/// is not an integer multiple of unity.
Decomposition decompose_companion(const CompanionMatrix& c);

/// m p-potents plus a nilpotent, m >= 1. Throws CriterionFailed.
Decomposition decompose_m_potents(const CompanionMatrix& c, std::size_t m);

/// Arrow construction parameter: smallest integer a >= 1 with n*a != t.
std::uint64_t arrow_parameter(std::uint64_t p, std::size_t n, Code t);

/// Target for the prescribed characteristic polynomial search:
/// D = companion(d) + diag(a, ..., a [k times], 0, ...) and
/// chi_{D - E} = X^n + (k + d_{n-1}) X^{n-1} + g.
struct PrescribedTarget {
    Polynomial g;
    std::size_t k;
    std::uint64_t a;
    std::vector<Code> d;

    ModifiedCompanion modified_companion(const FieldPtr& field) const;
    Polynomial target_charpoly(const FieldPtr& field) const;
};

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/**
 * Exhaustive desk-scale search over all n x n matrices E of a prime field in
 * row-major lexicographic order; returns the first E with E^p = E and
 * charpoly(D - E) equal to the target. nullopt means NotFound after the full
 * enumeration. Throws BudgetExceeded when p^{n^2} > budget and
 * InvalidArgument when D and the target disagree.
 */
std::optional<Matrix> prescribed_charpoly_search(const ModifiedCompanion& d, const PrescribedTarget& target,
                                                 std::uint64_t budget = kDefaultBudget, unsigned jobs = 1);

}  // namespace potnil

#endif  // POTNIL_DECOMPOSE_HPP

#ifndef POTNIL_COMPANION_HPP
#define POTNIL_COMPANION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "potnil/matrix.hpp"

namespace potnil {

/**
 * Companion matrix of the monic polynomial q = X^n + c_{n-1} X^{n-1} + ... + c_0.
 *
 * The realization has ones on the subdiagonal and last column
 * (-c_0, ..., -c_{n-1}), so it maps e_i to e_{i+1} and its trace is -c_{n-1}.
 */
class CompanionMatrix {
public:
    /// coeffs = (c_0, ..., c_{n-1}); n >= 1.
    CompanionMatrix(FieldPtr field, std::vector<Code> coeffs);
    /// Throws NotMonic unless q is monic of degree >= 1.
    static CompanionMatrix from_poly(const Polynomial& q);
    /// Recognizes a matrix of companion shape; nullopt otherwise.
    static std::optional<CompanionMatrix> recognize(const Matrix& m);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return coeffs_.size(); }
    const std::vector<Code>& coeffs() const noexcept { return coeffs_; }
    Polynomial poly() const;
    /// -c_{n-1}
    FieldElement trace() const;
    Matrix realize() const;

    friend bool operator==(const CompanionMatrix& a, const CompanionMatrix& b) {
        return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    FieldPtr field_;
    std::vector<Code> coeffs_;
};

inline CompanionMatrix companion_from_poly(const Polynomial& q) { return CompanionMatrix::from_poly(q); }

/// base + diag(a_1, ..., a_k, 0, ..., 0), 0 <= k <= n.
class ModifiedCompanion {
public:
    ModifiedCompanion(CompanionMatrix base, std::vector<Code> prefix);

    const CompanionMatrix& base() const noexcept { return base_; }
    const std::vector<Code>& prefix() const noexcept { return prefix_; }
    std::size_t dim() const noexcept { return base_.dim(); }
    Matrix realize() const;

private:
    CompanionMatrix base_;
    std::vector<Code> prefix_;
};

/// C = W.P * D * W.P^-1.
struct SimilarityResult {
    ModifiedCompanion modified;
    SimilarityWitness witness;
};

struct UniformShiftResult {
    CompanionMatrix shifted;  // companion of q(X + a)
    SimilarityWitness witness;
};

/**
 * Change of basis f_1 = e_1, f_i = C f_{i-1} - a_{i-1} f_{i-1} for i <= k+1,
 * f_i = C f_{i-1} beyond. P = (f_1 | ... | f_n) is unit upper triangular and
 * P^-1 C P = diag(a_1, ..., a_k, 0, ..., 0) + C' for a companion C'.
 * Throws PrefixTooLong when k > n - 1.
 */
SimilarityResult shift_similarity(const CompanionMatrix& c, std::span<const Code> prefix);

/// C = P (a I + C1) P^-1 with C1 = companion(q(X + a)) and P the Krylov
/// matrix of e_1 under C - aI.
UniformShiftResult uniform_shift_similarity(const CompanionMatrix& c, Code a);

/// The k = n case: uniform shift by a_n, then shift_similarity with the
/// differences a_i - a_n. Throws BadPrefixLength unless len(prefix) = n.
SimilarityResult full_shift_similarity(const CompanionMatrix& c, std::span<const Code> prefix);

}  // namespace potnil

#endif  // POTNIL_COMPANION_HPP

#ifndef POTNIL_RCF_HPP
#define POTNIL_RCF_HPP

#include <cstddef>
#include <vector>

#include "potnil/decompose.hpp"

namespace potnil {

/// Rational canonical form A = P * blockdiag(companion(q_1), ..., companion(q_s)) * P^-1
/// with q_1 | q_2 | ... | q_s.
struct FrobeniusForm {
    std::vector<Polynomial> invariant_factors;
    SimilarityWitness witness;

    std::vector<CompanionMatrix> blocks() const;
    Matrix block_diagonal() const;
};

/**
 * Cyclic decomposition: pick a vector whose annihilator is the minimal
 * polynomial (standard basis first, then seeded pseudo-random combinations),
 * split off its cyclic subspace with an invariant complement cut out by a
 * dual functional, and recurse on the complement.
 */
FrobeniusForm frobenius_form(const Matrix& a);

/**
 * Decomposes every Frobenius block into m p-potents plus a nilpotent and
 * conjugates the block-diagonal assembly back. Throws BlockCriterionFailed
 * for the first block whose trace leaves the prime subfield.
 */
Decomposition decompose_matrix(const Matrix& a, std::size_t m = 1);

}  // namespace potnil

#endif  // POTNIL_RCF_HPP

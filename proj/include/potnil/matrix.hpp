#ifndef POTNIL_MATRIX_HPP
#define POTNIL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "potnil/field.hpp"
#include "potnil/polynomial.hpp"

namespace potnil {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries);
    /// Convenience for tests and literals: rows of integers reduced mod p.
    Matrix(FieldPtr field, std::initializer_list<std::initializer_list<long long>> rows);

    static Matrix identity(const FieldPtr& field, std::size_t n);
    static Matrix zero(const FieldPtr& field, std::size_t n) { return {field, n, n}; }
    static Matrix diag(const FieldPtr& field, std::span<const Code> values);
    static Matrix diag(const std::vector<FieldElement>& values);
    /// Block-diagonal direct sum. All blocks square, same field.
    static Matrix block_diag(const FieldPtr& field, std::span<const Matrix> blocks);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Code>& entries() const noexcept { return entries_; }

    Code operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Code& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    FieldElement at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& value);

    std::vector<Code> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Code> values);
    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    Matrix transpose() const;

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;
    bool is_upper_triangular() const noexcept;
    bool is_unit_upper_triangular() const noexcept;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;
    Matrix scaled(Code c) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::vector<Code> apply(std::span<const Code> v) const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Code> entries_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Repeated squaring; A^0 = I.
Matrix mat_pow(const Matrix& a, std::uint64_t e);
/// Gauss-Jordan; throws Singular.
Matrix mat_inv(const Matrix& a);
/// Inverse of a unit upper triangular matrix by back substitution.
Matrix unit_upper_inverse(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis of {v : A v = 0} as the columns of the result (cols may be 0).
Matrix kernel(const Matrix& a);
/// Some x with A x = b, or nullopt if inconsistent.
std::optional<std::vector<Code>> solve(const Matrix& a, std::span<const Code> b);

FieldElement trace(const Matrix& a);
/// det(XI - A) via Hessenberg reduction and the Hessenberg determinant recurrence.
Polynomial charpoly(const Matrix& a);
/// Monic annihilator of v under A: least-degree monic f with f(A) v = 0.
Polynomial local_minpoly(const Matrix& a, std::span<const Code> v);
/// lcm of local minimal polynomials of the standard basis vectors.
Polynomial minpoly(const Matrix& a);
/// f(A) by Horner.
Matrix eval_at(const Polynomial& f, const Matrix& a);

bool is_nilpotent(const Matrix& a);
/// Smallest e >= 1 with A^e = 0, or nullopt if A is not nilpotent.
std::optional<std::size_t> nilpotency_index(const Matrix& a);
bool is_p_potent(const Matrix& a);

/// Invertible P together with its inverse. Construction checks P * P_inv = I.
class SimilarityWitness {
public:
    SimilarityWitness(Matrix p, Matrix p_inv);
    static SimilarityWitness identity(const FieldPtr& field, std::size_t n);
    /// Computes the inverse (back substitution when P is unit upper triangular).
    static SimilarityWitness from(Matrix p);

    const Matrix& p() const noexcept { return p_; }
    const Matrix& p_inv() const noexcept { return p_inv_; }
    std::size_t dim() const noexcept { return p_.rows(); }

    /// Witness of the composite similarity: this.P * inner.P.
    SimilarityWitness compose(const SimilarityWitness& inner) const;

private:
    Matrix p_;
    Matrix p_inv_;
};

/// P * D * P^-1.
Matrix conjugate(const Matrix& d, const SimilarityWitness& w);

}  // namespace potnil

#endif  // POTNIL_MATRIX_HPP

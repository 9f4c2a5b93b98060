#ifndef POTNIL_FIELD_HPP
#define POTNIL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace potnil {

/// Packed element representation: the coefficient vector (c_0, ..., c_{m-1})
/// of an element of GF(p^m) stored as the base-p integer sum c_i p^i.
/// Ordering codes numerically is the canonical enumeration order.
using Code = std::uint64_t;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/**
 * The finite field GF(p^m) = Z_p[x] / (modulus), p an odd prime.
 *
 * Elements travel as Codes through the hot paths (matrix products, brute-force
 * enumeration); FieldElement wraps a Code together with its field for the
 * public surface. For fields with at most kTableOrder elements the addition,
 * multiplication and inversion tables are precomputed at construction.
 */
class FieldSpec {
public:
    static constexpr std::uint64_t kTableOrder = 256;

    /// Z_p. Throws InvalidArgument unless p is an odd prime below 2^31.
    static FieldPtr prime(std::uint64_t p);

    /// GF(p^m) presented by the lexicographically smallest monic irreducible
    /// of degree m (see find_irreducible).
    static FieldPtr extension(std::uint64_t p, unsigned degree);

    /// GF(p^m) with an explicit modulus, ascending coefficients, monic.
    /// Throws InvalidArgument if the modulus is not monic irreducible.
    static FieldPtr with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return degree_; }
    std::uint64_t order() const noexcept { return order_; }
    bool is_prime_field() const noexcept { return degree_ == 1; }

    /// Ascending coefficients including the leading 1. For prime fields this
    /// is the formal modulus X, i.e. {0, 1}.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    bool operator==(const FieldSpec& other) const noexcept {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    // Code-level arithmetic. Arguments must be valid codes (< order()).
    Code add(Code x, Code y) const;
    Code sub(Code x, Code y) const;
    Code neg(Code x) const;
    Code mul(Code x, Code y) const;
    Code inv(Code x) const;  // throws ZeroInverse
    Code pow(Code x, std::uint64_t e) const;
    Code from_int(long long t) const;
    bool in_prime_subfield(Code x) const noexcept { return x < p_; }

    std::vector<std::uint64_t> digits(Code x) const;
    Code from_digits(const std::vector<std::uint64_t>& digits) const;

    /// Canonical element token: `c` for constants, otherwise monomials in
    /// `x` by descending degree joined with `+`, e.g. `x^2+2x+1`.
    std::string format(Code x) const;
    /// Inverse of format, accepting non-canonical spellings (`1x^1`, `-1`).
    /// Throws InvalidArgument on malformed tokens.
    Code parse(std::string_view token) const;

    /// Human-readable presentation, e.g. `GF(3^2) mod x^2+1`.
    std::string describe() const;

private:
    FieldSpec(std::uint64_t p, std::vector<std::uint64_t> modulus);

    Code mul_slow(Code x, Code y) const;
    Code inv_slow(Code x) const;

    std::uint64_t p_;
    unsigned degree_;
    std::uint64_t order_;
    std::vector<std::uint64_t> modulus_;
    std::vector<Code> add_table_;
    std::vector<Code> mul_table_;
    std::vector<Code> inv_table_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a FieldSpec. Binary operations between elements of
/// different fields throw SpecMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Code code);

    static FieldElement zero(const FieldPtr& field) { return {field, 0}; }
    static FieldElement one(const FieldPtr& field) { return {field, 1}; }
    /// t * 1, reduced mod p.
    static FieldElement from_int(const FieldPtr& field, long long t) { return {field, field->from_int(t)}; }

    const FieldPtr& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    std::vector<std::uint64_t> coeffs() const { return field_->digits(code_); }

    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    /// Frobenius fixed point test: x^p == x.
    bool in_prime_subfield() const;

    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    FieldElement operator-() const { return {field_, field_->neg(code_)}; }
    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
    friend bool operator==(const FieldElement& x, const FieldElement& y);

    std::string to_string() const { return field_->format(code_); }

private:
    FieldPtr field_;
    Code code_;
};

void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace potnil

#endif  // POTNIL_FIELD_HPP

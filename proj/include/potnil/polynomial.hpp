#ifndef POTNIL_POLYNOMIAL_HPP
#define POTNIL_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "potnil/field.hpp"

namespace potnil {

/// Univariate polynomial over a finite field. Coefficients are ascending and
/// normalized: no trailing zeros, the zero polynomial is the empty vector.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<Code> coeffs);
    Polynomial(FieldPtr field, std::initializer_list<long long> ints);

    static Polynomial monomial(const FieldPtr& field, std::size_t degree, Code coeff = 1);
    static Polynomial constant(const FieldPtr& field, Code c);
    /// X - a
    static Polynomial linear_root(const FieldPtr& field, Code a);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Code>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Code coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Code leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Polynomial monic() const;

    Code eval(Code x) const;
    FieldElement eval(const FieldElement& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(Code c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Euclidean division: (quotient, remainder) with deg r < deg b.
    /// Throws DivisionByZeroPoly.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
    bool divides(const Polynomial& other) const;

    /// q(X + a).
    Polynomial shift_argument(Code a) const;

    /// Canonical text in X, descending, e.g. `X^3+2X+1`.
    std::string to_string() const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<Code> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
FieldElement poly_eval(const Polynomial& q, const FieldElement& x);
Polynomial poly_shift_argument(const Polynomial& q, const FieldElement& a);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
/// Monic lcm; lcm with zero is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// base^e mod modulus by square-and-multiply.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// Rabin-style test over a prime field: no factor of degree <= m/2,
/// checked by gcd(X^{p^k} - X mod f, f) = 1 for k = 1..m/2.
bool is_irreducible(const Polynomial& f);

/// Smallest monic irreducible of degree m over Z_p, where lower
/// coefficients are compared as the base-p integer sum c_i p^i.
/// For m = 1 returns the formal modulus X.
Polynomial find_irreducible(std::uint64_t p, unsigned m);

}  // namespace potnil

#endif  // POTNIL_POLYNOMIAL_HPP

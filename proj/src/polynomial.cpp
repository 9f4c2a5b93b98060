#include "potnil/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "potnil/error.hpp"

namespace potnil {

Polynomial::Polynomial(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (c >= field_->order()) throw Error(ErrorCode::InvalidArgument, "polynomial coefficient out of range");
    }
    normalize();
}

Polynomial::Polynomial(FieldPtr field, std::initializer_list<long long> ints) : field_(std::move(field)) {
    coeffs_.reserve(ints.size());
    for (auto t : ints) coeffs_.push_back(field_->from_int(t));
    normalize();
}

Polynomial Polynomial::monomial(const FieldPtr& field, std::size_t degree, Code coeff) {
    std::vector<Code> c(degree + 1, 0);
    c[degree] = coeff;
    return {field, std::move(c)};
}

Polynomial Polynomial::constant(const FieldPtr& field, Code c) { return {field, std::vector<Code>{c}}; }

Polynomial Polynomial::linear_root(const FieldPtr& field, Code a) { return {field, std::vector<Code>{field->neg(a), 1}}; }

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_->inv(leading()));
}

Polynomial Polynomial::scaled(Code c) const {
    std::vector<Code> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return {field_, std::move(out)};
}

Code Polynomial::eval(Code x) const {
    Code acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    require_same_field(*field_, *x.field());
    return {field_, eval(x.code())};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(*a.field_, *b.field_);
    const auto& f = *a.field_;
    std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return {a.field_, std::move(out)};
}

Polynomial Polynomial::operator-() const {
    std::vector<Code> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->neg(coeffs_[i]);
    return {field_, std::move(out)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(*a.field_, *b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const auto& f = *a.field_;
    std::vector<Code> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return {a.field_, std::move(out)};
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_field(*a.field_, *b.field_);
    return a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    require_same_field(*field_, *divisor.field_);
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "polynomial division by zero");
    const auto& f = *field_;
    std::vector<Code> rem = coeffs_;
    const std::size_t db = divisor.coeffs_.size();
    if (rem.size() < db) return {Polynomial(field_), *this};
    std::vector<Code> quot(rem.size() - db + 1, 0);
    const Code lead_inv = f.inv(divisor.leading());
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const Code c = f.mul(rem[shift + db - 1], lead_inv);
        quot[shift] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < db; ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, divisor.coeffs_[i]));
    }
    rem.resize(db - 1);
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

bool Polynomial::divides(const Polynomial& other) const { return (other % *this).is_zero(); }

Polynomial Polynomial::shift_argument(Code a) const {
    // Horner in the ring: q(X+a) = (...(c_n (X+a) + c_{n-1})(X+a) + ...) + c_0
    Polynomial result(field_);
    const Polynomial x_plus_a(field_, std::vector<Code>{a, 1});
    for (std::size_t i = coeffs_.size(); i-- > 0;) result = result * x_plus_a + constant(field_, coeffs_[i]);
    return result;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Code c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        std::string cs = field_->format(c);
        if (field_->degree() > 1 && c >= field_->characteristic() && i > 0) cs = "(" + cs + ")";
        if (i == 0 || c != 1) out += cs;
        if (i >= 1) out += 'X';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) { return a.divmod(b); }
FieldElement poly_eval(const Polynomial& q, const FieldElement& x) { return q.eval(x); }

Polynomial poly_shift_argument(const Polynomial& q, const FieldElement& a) {
    require_same_field(*q.field(), *a.field());
    return q.shift_argument(a.code());
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
    return (a * b).divmod(gcd(a, b)).first.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
    Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
    Polynomial b = base % modulus;
    while (e > 0) {
        if (e & 1) result = (result * b) % modulus;
        b = (b * b) % modulus;
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Polynomial& f) {
    const auto& field = f.field();
    if (!field->is_prime_field()) throw Error(ErrorCode::InvalidArgument, "irreducibility test needs a prime field");
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto p = field->characteristic();
    const Polynomial x = Polynomial::monomial(field, 1);
    Polynomial frob = x;  // X^{p^k} mod f
    for (long k = 1; 2 * k <= f.degree(); ++k) {
        frob = powmod(frob, p, f);
        if (gcd(frob - x, f).degree() != 0) return false;
    }
    return true;
}

Polynomial find_irreducible(std::uint64_t p, unsigned m) {
    const FieldPtr field = FieldSpec::prime(p);
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    if (m == 1) return Polynomial::monomial(field, 1);
    std::vector<Code> c(m + 1, 0);
    c[m] = 1;
    while (true) {
        Polynomial f(field, c);
        if (is_irreducible(f)) return f;
        // next lower-coefficient vector in base-p order, c_0 least significant
        std::size_t i = 0;
        while (i < m && ++c[i] == p) c[i++] = 0;
        if (i == m) throw Error(ErrorCode::Internal, "no irreducible polynomial found");
    }
}

}  // namespace potnil

#include "potnil/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "potnil/error.hpp"
#include "potnil/polynomial.hpp"

namespace potnil {

namespace {

using Digits = std::vector<std::uint64_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
void reduce_mod(Digits& a, const Digits& m, std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * m[i] % p) % p;
        }
        a.pop_back();
        trim(a);
    }
}

Digits mul_digits(const Digits& a, const Digits& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), degree_(static_cast<unsigned>(modulus.size() - 1)), order_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < degree_; ++i) {
        if (order_ > std::numeric_limits<std::uint64_t>::max() / 2 / p_) {
            throw Error(ErrorCode::InvalidArgument, "field order p^m does not fit in 63 bits");
        }
        order_ *= p_;
    }
    if (order_ <= kTableOrder) {
        const std::size_t q = order_;
        add_table_.resize(q * q);
        mul_table_.resize(q * q);
        inv_table_.assign(q, 0);
        for (Code x = 0; x < q; ++x) {
            const auto dx = digits(x);
            for (Code y = 0; y < q; ++y) {
                const auto dy = digits(y);
                Digits s(degree_);
                for (unsigned i = 0; i < degree_; ++i) s[i] = (dx[i] + dy[i]) % p_;
                add_table_[x * q + y] = from_digits(s);
                mul_table_[x * q + y] = mul_slow(x, y);
            }
            if (x != 0) inv_table_[x] = inv_slow(x);
        }
    }
}

FieldPtr FieldSpec::prime(std::uint64_t p) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) {
        throw Error(ErrorCode::InvalidArgument, "characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    }
    return FieldPtr(new FieldSpec(p, {0, 1}));
}

FieldPtr FieldSpec::extension(std::uint64_t p, unsigned degree) {
    if (degree == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
    if (degree == 1) return prime(p);
    prime(p);  // validates p
    const Polynomial f = find_irreducible(p, degree);
    return FieldPtr(new FieldSpec(p, Digits(f.coeffs().begin(), f.coeffs().end())));
}

FieldPtr FieldSpec::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    const FieldPtr base = prime(p);
    if (modulus.size() < 2 || modulus.back() != 1) {
        throw Error(ErrorCode::InvalidArgument, "modulus must be monic of positive degree");
    }
    for (auto c : modulus) {
        if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    }
    if (modulus.size() == 2) {
        if (modulus[0] != 0) throw Error(ErrorCode::InvalidArgument, "the modulus of a prime field is X");
        return base;
    }
    const Polynomial f(base, std::vector<Code>(modulus.begin(), modulus.end()));
    if (!is_irreducible(f)) throw Error(ErrorCode::InvalidArgument, "modulus " + f.to_string() + " is reducible");
    return FieldPtr(new FieldSpec(p, std::move(modulus)));
}

std::vector<std::uint64_t> FieldSpec::digits(Code x) const {
    Digits d(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Code FieldSpec::from_digits(const std::vector<std::uint64_t>& digits) const {
    Code x = 0;
    for (std::size_t i = digits.size(); i-- > 0;) x = x * p_ + digits[i] % p_;
    return x;
}

Code FieldSpec::add(Code x, Code y) const {
    if (!add_table_.empty()) return add_table_[x * order_ + y];
    if (degree_ == 1) return (x + y) % p_;
    auto dx = digits(x);
    const auto dy = digits(y);
    for (unsigned i = 0; i < degree_; ++i) dx[i] = (dx[i] + dy[i]) % p_;
    return from_digits(dx);
}

Code FieldSpec::neg(Code x) const {
    if (degree_ == 1) return x == 0 ? 0 : p_ - x;
    auto dx = digits(x);
    for (auto& c : dx) c = c == 0 ? 0 : p_ - c;
    return from_digits(dx);
}

Code FieldSpec::sub(Code x, Code y) const { return add(x, neg(y)); }

Code FieldSpec::mul(Code x, Code y) const {
    if (!mul_table_.empty()) return mul_table_[x * order_ + y];
    return mul_slow(x, y);
}

Code FieldSpec::mul_slow(Code x, Code y) const {
    if (degree_ == 1) return x * y % p_;
    auto prod = mul_digits(digits(x), digits(y), p_);
    reduce_mod(prod, modulus_, p_);
    return from_digits(prod);
}

Code FieldSpec::inv(Code x) const {
    if (x == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[x];
    return inv_slow(x);
}

// Extended Euclid on the coefficient polynomial of x and the modulus.
Code FieldSpec::inv_slow(Code x) const {
    if (degree_ == 1) return inv_mod(x, p_);
    Digits r0 = modulus_, r1 = digits(x);
    trim(r1);
    Digits s0, s1{1};
    while (!r1.empty()) {
        // (q, r) = divmod(r0, r1)
        Digits q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
        Digits r = r0;
        const std::uint64_t lead_inv = inv_mod(r1.back(), p_);
        while (r.size() >= r1.size() && !r.empty()) {
            const std::size_t shift = r.size() - r1.size();
            const std::uint64_t c = r.back() * lead_inv % p_;
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                r[shift + i] = (r[shift + i] + (p_ - c) * r1[i]) % p_;
            }
            trim(r);
        }
        // s_next = s0 - q * s1
        Digits qs = mul_digits(q, s1, p_);
        Digits s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            const std::uint64_t a = i < s0.size() ? s0[i] : 0;
            const std::uint64_t b = i < qs.size() ? qs[i] : 0;
            s2[i] = (a + p_ - b) % p_;
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    const std::uint64_t scale = inv_mod(r0[0], p_);
    for (auto& c : s0) c = c * scale % p_;
    reduce_mod(s0, modulus_, p_);
    s0.resize(degree_, 0);
    return from_digits(s0);
}

Code FieldSpec::pow(Code x, std::uint64_t e) const {
    Code result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

Code FieldSpec::from_int(long long t) const {
    const auto p = static_cast<long long>(p_);
    return static_cast<Code>(((t % p) + p) % p);
}

std::string FieldSpec::format(Code x) const {
    if (x < p_) return std::to_string(x);
    const auto d = digits(x);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

Code FieldSpec::parse(std::string_view token) const {
    auto fail = [&](const char* why) -> Error {
        return Error(ErrorCode::InvalidArgument, "bad element '" + std::string(token) + "': " + why);
    };
    if (token.empty()) throw fail("empty token");
    Digits acc(degree_, 0);
    std::size_t pos = 0;
    auto read_uint = [&](std::uint64_t modulo, bool& any) {
        std::uint64_t v = 0;
        any = false;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(token[pos] - '0');
            v = modulo == 0 ? v * 10 + digit : (v * 10 + digit) % modulo;
            if (modulo == 0 && v > (1u << 20)) throw fail("exponent too large");
            any = true;
            ++pos;
        }
        return v;
    };
    while (true) {
        bool negative = false;
        if (pos < token.size() && token[pos] == '-') {
            negative = true;
            ++pos;
        }
        bool has_coeff = false;
        std::uint64_t coeff = read_uint(p_, has_coeff);
        std::uint64_t power = 0;
        if (pos < token.size() && token[pos] == 'x') {
            ++pos;
            if (!has_coeff) coeff = 1;
            power = 1;
            if (pos < token.size() && token[pos] == '^') {
                ++pos;
                bool any = false;
                power = read_uint(0, any);
                if (!any) throw fail("missing exponent");
            }
        } else if (!has_coeff) {
            throw fail("expected integer or x-monomial");
        }
        if (negative) coeff = (p_ - coeff) % p_;
        if (power > 0 && degree_ == 1) throw fail("prime field elements are integers");
        // reduce x^power modulo the modulus
        Digits mono(power + 1, 0);
        mono[power] = coeff;
        if (degree_ > 1) reduce_mod(mono, modulus_, p_);
        else mono.resize(1);
        for (std::size_t i = 0; i < mono.size() && i < acc.size(); ++i) acc[i] = (acc[i] + mono[i]) % p_;
        if (pos == token.size()) break;
        if (token[pos] != '+') throw fail("unexpected character");
        ++pos;
        if (pos == token.size()) throw fail("dangling '+'");
    }
    return from_digits(acc);
}

std::string FieldSpec::describe() const {
    if (degree_ == 1) return "GF(" + std::to_string(p_) + ")";
    const Polynomial m(FieldSpec::prime(p_), std::vector<Code>(modulus_.begin(), modulus_.end()));
    std::string text = m.to_string();
    std::replace(text.begin(), text.end(), 'X', 'x');
    return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ") mod " + text;
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (&a != &b && !(a == b)) {
        throw Error(ErrorCode::SpecMismatch, "operands live in different fields: " + a.describe() + " vs " + b.describe());
    }
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (code_ >= field_->order()) throw Error(ErrorCode::InvalidArgument, "element code out of range");
}

bool FieldElement::in_prime_subfield() const { return field_->pow(code_, field_->characteristic()) == code_; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->add(x.code_, y.code_)};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->sub(x.code_, y.code_)};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->mul(x.code_, y.code_)};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->mul(x.code_, x.field_->inv(y.code_))};
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return x.code_ == y.code_;
}

}  // namespace potnil

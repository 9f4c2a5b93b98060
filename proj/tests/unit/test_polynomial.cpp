#include <doctest.h>

#include <random>

#include "../support/naive.hpp"
#include "potnil/error.hpp"
#include "potnil/polynomial.hpp"

using namespace potnil;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<Code> c) { return Polynomial(f, std::move(c)); }

Polynomial random_poly(const FieldPtr& f, std::size_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg(0, max_deg);
    return poly(f, naive::random_codes(f, deg(rng) + 1, rng));
}

}  // namespace

TEST_CASE("basic polynomial identities") {
    const auto f3 = FieldSpec::prime(3);
    const auto f5 = FieldSpec::prime(5);
    CHECK(poly(f3, {1, 1}) * poly(f3, {2, 1}) == poly(f3, {2, 0, 1}));
    CHECK(poly(f5, {0, 0, 1}).shift_argument(1) == poly(f5, {1, 2, 1}));
    CHECK(poly(f5, {1, 0, 1}).eval(Code{2}) == 0);
    CHECK(poly(f5, {1, 0, 1}).shift_argument(2) == poly(f5, {0, 4, 1}));
    CHECK(Polynomial(f5).degree() == -1);
    CHECK(poly(f5, {3, 0, 0}).degree() == 0);
    CHECK(Polynomial::linear_root(f5, 2) == poly(f5, {3, 1}));
    CHECK(poly(f3, {2, 0, 1}).to_string() == "X^2+2");
    CHECK(poly(f3, {1, 2, 1}).to_string() == "X^2+2X+1");
    CHECK(Polynomial(f3).to_string() == "0");
}

TEST_CASE("polynomial text over an extension field brackets compound coefficients") {
    const auto f9 = FieldSpec::extension(3, 2);
    const Code x = f9->parse("x"), x1 = f9->parse("x+1");
    CHECK(poly(f9, {x, x1, 1}).to_string() == "X^2+(x+1)X+x");
}

TEST_CASE("divmod roundtrip and errors") {
    std::mt19937_64 rng(3);
    for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(7), FieldSpec::extension(3, 2)}) {
        for (int i = 0; i < 500; ++i) {
            const Polynomial a = random_poly(f, 9, rng);
            Polynomial b = random_poly(f, 5, rng);
            if (b.is_zero()) b = Polynomial::constant(f, 1);
            const auto [q, r] = a.divmod(b);
            REQUIRE(q * b + r == a);
            REQUIRE(r.degree() < b.degree());
        }
        CHECK_THROWS_AS(poly(f, {1, 1}).divmod(Polynomial(f)), Error);
    }
}

TEST_CASE("gcd, lcm and powmod") {
    const auto f = FieldSpec::prime(5);
    const auto a = poly(f, {1, 1}) * poly(f, {2, 1});
    const auto b = poly(f, {1, 1}) * poly(f, {3, 1});
    CHECK(gcd(a, b) == poly(f, {1, 1}));
    CHECK(lcm(a, b) == poly(f, {1, 1}) * poly(f, {2, 1}) * poly(f, {3, 1}));
    CHECK(gcd(Polynomial(f), Polynomial(f)).is_zero());
    CHECK(gcd(a.scaled(3), Polynomial(f)) == a);
    // X^5 = X mod (X^2 - X) in F_5 via Fermat on both roots
    const auto m = poly(f, {0, 4, 1});
    CHECK(powmod(poly(f, {0, 1}), 5, m) == poly(f, {0, 1}));
}

TEST_CASE("irreducibility and the deterministic modulus choice") {
    CHECK(find_irreducible(3, 1) == poly(FieldSpec::prime(3), {0, 1}));
    CHECK(find_irreducible(3, 2) == poly(FieldSpec::prime(3), {1, 0, 1}));
    CHECK(find_irreducible(5, 2) == poly(FieldSpec::prime(5), {2, 0, 1}));
    // root check oracle for the quadratic choices
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        const auto q = find_irreducible(p, 2);
        const auto f = FieldSpec::prime(p);
        for (Code x = 0; x < p; ++x) CHECK(q.eval(x) != 0);
        // nothing smaller in the documented order is irreducible
        const std::uint64_t rank = q.coeff(0) + p * q.coeff(1);
        for (std::uint64_t r = 0; r < rank; ++r) {
            const auto cand = poly(f, {r % p, r / p, 1});
            bool has_root = false;
            for (Code x = 0; x < p; ++x) has_root |= cand.eval(x) == 0;
            CHECK(has_root);
        }
    }
    const auto f3 = FieldSpec::prime(3);
    CHECK(is_irreducible(poly(f3, {1, 2, 0, 1})));       // X^3+2X+1
    CHECK_FALSE(is_irreducible(poly(f3, {0, 1, 0, 1})));  // X(X^2+1)
    CHECK_FALSE(is_irreducible(poly(f3, {1, 0, 2, 0, 1})));  // (X^2+1)^2 has no root
}

TEST_CASE("argument shift agrees with evaluation") {
    std::mt19937_64 rng(9);
    const auto f = FieldSpec::extension(5, 2);
    for (int i = 0; i < 200; ++i) {
        const Polynomial q = random_poly(f, 7, rng);
        const FieldElement a(f, naive::random_codes(f, 1, rng)[0]);
        const Polynomial s = poly_shift_argument(q, a);
        for (Code x = 0; x < f->order(); x += 3) {
            const FieldElement xe(f, x);
            REQUIRE(poly_eval(s, xe) == poly_eval(q, xe + a));
        }
    }
}

#include <doctest.h>

#include <random>

#include "../support/naive.hpp"
#include "potnil/companion.hpp"
#include "potnil/error.hpp"
#include "potnil/matrix.hpp"

using namespace potnil;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<Code> c) { return Polynomial(f, std::move(c)); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("products, powers and inverses on small examples") {
    const auto f3 = FieldSpec::prime(3);
    const Matrix a(f3, {{0, 0}, {1, 1}});
    CHECK(Matrix::identity(f3, 2) * a == a);
    CHECK(a * a == a);
    CHECK(mat_pow(a, 5) == a);
    CHECK(mat_pow(a, 0).is_identity());
    CHECK(Matrix::diag(f3, std::vector<Code>{1, 0}) == Matrix(f3, {{1, 0}, {0, 0}}));
    CHECK(mat_inv(Matrix::identity(f3, 3)).is_identity());
    CHECK(mat_inv(Matrix(f3, {{1, 2}, {0, 1}})) == Matrix(f3, {{1, 1}, {0, 1}}));
    CHECK(unit_upper_inverse(Matrix(f3, {{1, 2}, {0, 1}})) == Matrix(f3, {{1, 1}, {0, 1}}));
    CHECK(code_of([&] { (void)mat_inv(Matrix(f3, {{1, 1}, {1, 1}})); }) == ErrorCode::Singular);
    CHECK(code_of([&] { (void)(a * Matrix(f3, 3, 3)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { (void)(a + Matrix(FieldSpec::prime(5), 2, 2)); }) == ErrorCode::SpecMismatch);
}

TEST_CASE("trace") {
    const auto f3 = FieldSpec::prime(3);
    const auto f5 = FieldSpec::prime(5);
    CHECK(trace(CompanionMatrix(f3, {1, 1}).realize()).code() == 2);
    CHECK(trace(Matrix::zero(f5, 4)).is_zero());
    CHECK(trace(Matrix::diag(f5, std::vector<Code>{1, 2, 2})).is_zero());
}

TEST_CASE("characteristic polynomial") {
    const auto f5 = FieldSpec::prime(5);
    const auto q = poly(f5, {1, 2, 0, 1});
    CHECK(charpoly(CompanionMatrix::from_poly(q).realize()) == q);
    CHECK(charpoly(Matrix::zero(f5, 4)) == Polynomial::monomial(f5, 4));
    CHECK(charpoly(Matrix::diag(f5, std::vector<Code>{1, 2, 4})) ==
          Polynomial::linear_root(f5, 1) * Polynomial::linear_root(f5, 2) * Polynomial::linear_root(f5, 4));
}

TEST_CASE("charpoly agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(21);
    for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(7), FieldSpec::extension(3, 2)}) {
        for (int i = 0; i < 150; ++i) {
            const std::size_t n = 1 + i % 6;
            const Matrix a = naive::random_matrix(f, n, n, rng);
            REQUIRE(charpoly(a).coeffs() == naive::charpoly(*f, naive::grid(a)));
        }
    }
}

TEST_CASE("charpoly of a companion matrix recovers its polynomial") {
    std::mt19937_64 rng(8);
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto f = FieldSpec::prime(p);
        for (int i = 0; i < 300; ++i) {
            const std::size_t n = 1 + i % 12;
            const CompanionMatrix c(f, naive::random_codes(f, n, rng));
            REQUIRE(charpoly(c.realize()) == c.poly());
        }
    }
}

TEST_CASE("minimal polynomial") {
    const auto f3 = FieldSpec::prime(3);
    CHECK(minpoly(Matrix::identity(f3, 4)) == Polynomial::linear_root(f3, 1));
    Matrix shift(f3, 3, 3);
    shift(1, 0) = shift(2, 1) = 1;
    CHECK(minpoly(shift) == Polynomial::monomial(f3, 3));
    CHECK(minpoly(Matrix::diag(f3, std::vector<Code>{1, 1, 2})) ==
          Polynomial::linear_root(f3, 1) * Polynomial::linear_root(f3, 2));
    CHECK(minpoly(Matrix::zero(f3, 2)) == Polynomial::monomial(f3, 1));
}

TEST_CASE("minpoly annihilates and divides charpoly") {
    std::mt19937_64 rng(4);
    for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::extension(3, 2)}) {
        for (int i = 0; i < 150; ++i) {
            const std::size_t n = 1 + i % 8;
            // mix generic and structured (repeated-block) matrices
            Matrix a = naive::random_matrix(f, n, n, rng);
            if (i % 3 == 0) {
                const Matrix b = naive::random_matrix(f, 2, 2, rng);
                const std::vector<Matrix> blocks{b, b, Matrix::identity(f, 1)};
                const Matrix bd = Matrix::block_diag(f, blocks);
                const Matrix p = naive::random_invertible(f, 5, rng);
                a = p * bd * mat_inv(p);
            }
            const Polynomial m = minpoly(a), c = charpoly(a);
            REQUIRE(m.is_monic());
            REQUIRE(c.is_monic());
            REQUIRE(m.divides(c));
            REQUIRE(eval_at(m, a).is_zero());
            // no proper monic divisor of lower degree annihilates: check m / (X - r) for roots r
            for (Code r = 0; r < f->order(); ++r) {
                if (m.eval(r) == 0) {
                    const auto reduced = m.divmod(Polynomial::linear_root(f, r)).first;
                    REQUIRE_FALSE(eval_at(reduced, a).is_zero());
                }
            }
        }
    }
}

TEST_CASE("nilpotency and p-potency predicates") {
    const auto f3 = FieldSpec::prime(3);
    Matrix shift(f3, 4, 4);
    for (std::size_t i = 0; i + 1 < 4; ++i) shift(i + 1, i) = 1;
    CHECK(is_nilpotent(shift));
    CHECK(nilpotency_index(shift) == 4u);
    CHECK_FALSE(is_nilpotent(Matrix::identity(f3, 3)));
    CHECK_FALSE(nilpotency_index(Matrix::identity(f3, 3)).has_value());
    CHECK(is_nilpotent(Matrix(f3, {{2, 2}, {1, 1}})));
    CHECK(is_p_potent(Matrix::diag(f3, std::vector<Code>{0, 1, 2})));
    CHECK(is_p_potent(Matrix(f3, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_p_potent(shift));
    const auto f9 = FieldSpec::extension(3, 2);
    CHECK_FALSE(is_p_potent(Matrix::diag(f9, std::vector<Code>{f9->parse("x")})));
}

TEST_CASE("p-potent iff minpoly divides X^p - X, all 2x2 over F_3") {
    const auto f = FieldSpec::prime(3);
    const Polynomial xp_minus_x = Polynomial::monomial(f, 3) - Polynomial::monomial(f, 1);
    int potent = 0;
    for (Code idx = 0; idx < 81; ++idx) {
        Matrix a(f, 2, 2);
        Code t = idx;
        for (std::size_t k = 4; k-- > 0;) {
            a(k / 2, k % 2) = t % 3;
            t /= 3;
        }
        const bool lhs = is_p_potent(a);
        REQUIRE(lhs == minpoly(a).divides(xp_minus_x));
        REQUIRE(lhs == naive::p_potent(*f, naive::grid(a)));
        REQUIRE(is_nilpotent(a) == naive::nilpotent(*f, naive::grid(a)));
        potent += lhs;
    }
    // diagonalizable over F_3: conjugacy classes of diag(a,b) counted by orbit sizes
    // 3 scalar + 3 pairs with 12 conjugates each = 39
    CHECK(potent == 39);
}

TEST_CASE("rank, kernel and solve") {
    const auto f5 = FieldSpec::prime(5);
    const Matrix a(f5, {{1, 2, 3}, {0, 1, 4}, {1, 3, 2}});  // row 3 = row 1 + row 2
    CHECK(rank(a) == 2);
    const Matrix k = kernel(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    const std::vector<Code> b{1, 2, 3};
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
    CHECK_FALSE(solve(a, std::vector<Code>{1, 0, 0}).has_value());
    CHECK(kernel(Matrix::identity(f5, 3)).cols() == 0);
}

TEST_CASE("conjugation preserves similarity invariants") {
    std::mt19937_64 rng(77);
    for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::extension(3, 2)}) {
        for (int i = 0; i < 170; ++i) {
            const std::size_t n = 1 + i % 5;
            Matrix a = naive::random_matrix(f, n, n, rng);
            if (i % 4 == 1) a = Matrix::diag(f, std::vector<Code>(n, 1));  // p-potent
            if (i % 4 == 2) {                                               // nilpotent
                a = Matrix(f, n, n);
                for (std::size_t j = 0; j + 1 < n; ++j) a(j + 1, j) = 1;
            }
            const SimilarityWitness w = SimilarityWitness::from(naive::random_invertible(f, n, rng));
            const Matrix b = conjugate(a, w);
            REQUIRE(b == w.p() * a * w.p_inv());
            REQUIRE(trace(b) == trace(a));
            REQUIRE(charpoly(b) == charpoly(a));
            REQUIRE(is_p_potent(b) == is_p_potent(a));
            REQUIRE(is_nilpotent(b) == is_nilpotent(a));
        }
    }
    const auto f3 = FieldSpec::prime(3);
    const Matrix d(f3, {{1, 2}, {0, 1}});
    CHECK(conjugate(d, SimilarityWitness::identity(f3, 2)) == d);
    CHECK_THROWS_AS(SimilarityWitness(Matrix::identity(f3, 2), Matrix(f3, {{1, 1}, {0, 1}})), Error);
    CHECK(code_of([&] { (void)conjugate(Matrix::identity(f3, 3), SimilarityWitness::identity(f3, 2)); }) ==
          ErrorCode::DimensionMismatch);
}

TEST_CASE("block helpers") {
    const auto f = FieldSpec::prime(7);
    const std::vector<Matrix> blocks{Matrix(f, {{1, 2}, {3, 4}}), Matrix(f, {{5}})};
    const Matrix bd = Matrix::block_diag(f, blocks);
    CHECK(bd == Matrix(f, {{1, 2, 0}, {3, 4, 0}, {0, 0, 5}}));
    CHECK(bd.block(0, 0, 2, 2) == blocks[0]);
    CHECK(bd.transpose()(0, 1) == 3);
    CHECK(bd.column(2) == std::vector<Code>{0, 0, 5});
    CHECK(Matrix(f, {{1, 2}, {0, 1}}).is_unit_upper_triangular());
    CHECK_FALSE(Matrix(f, {{2, 2}, {0, 1}}).is_unit_upper_triangular());
    CHECK(Matrix(f, {{1, 2}, {3, 4}}).to_string() == "1 2\n3 4\n");
}

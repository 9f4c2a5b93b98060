#include <doctest.h>

#include <random>

#include "../support/naive.hpp"
#include "potnil/error.hpp"
#include "potnil/text_format.hpp"

using namespace potnil;

TEST_CASE("parse prime-field document") {
    const Matrix m = parse_matrix("field p=3 d=1\nmatrix 2 2\n0 0\n1 1\n");
    CHECK(m.field()->characteristic() == 3);
    CHECK(m.field()->is_prime_field());
    CHECK(m == Matrix(FieldSpec::prime(3), {{0, 0}, {1, 1}}));
}

TEST_CASE("parse extension-field document") {
    const Matrix m = parse_matrix("field p=3 d=2 mod=1,0,1\nmatrix 1 1\nx+2\n");
    CHECK(m.field()->order() == 9);
    CHECK(m(0, 0) == m.field()->parse("x+2"));
    // default modulus when omitted
    const Matrix n = parse_matrix("field p=5 d=2\nmatrix 1 2\nx 4x+1\n");
    CHECK(n.field()->modulus() == std::vector<std::uint64_t>{2, 0, 1});
}

TEST_CASE("comments, free whitespace and non-canonical tokens") {
    const Matrix m = parse_matrix("# leading comment\nfield p=5 d=1   # trailing\n\nmatrix 2 2\n 7 -1 # wraps\n1x^0\n 0\n");
    CHECK(m == Matrix(FieldSpec::prime(5), {{2, 4}, {1, 0}}));
    CHECK(serialize(m) == "field p=5 d=1\nmatrix 2 2\n2 4\n1 0\n");
}

TEST_CASE("parse errors carry positions") {
    auto position = [](const char* text) {
        try {
            (void)parse_matrix(text);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(position("field p=3 d=1\nmatrix 1 2\n0 y\n") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(position("field p=4 d=1\nmatrix 1 1\n0\n").first == 1);
    CHECK(position("feld p=3 d=1\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("field p=3 d=1\nmatrix 2 2\n0 0\n1\n").first == 4);
    CHECK(position("field p=3 d=1\nmatrix 1 1\n0\n1\n") == std::pair<std::size_t, std::size_t>{4, 1});
    CHECK(position("field p=3 d=2 mod=2,0,1\nmatrix 1 1\n0\n").first == 1);
    CHECK(position("field p=3 d=1\nmatrix 0 1\n").first == 2);
    CHECK(position("field p=3 d=x\n").first == 1);
    CHECK(position("") == std::pair<std::size_t, std::size_t>{1, 1});
    try {
        (void)parse_matrix("field p=3 d=1\nmatrix 1 1\ny\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 3, column 1") != std::string::npos);
    }
}

TEST_CASE("several documents") {
    const auto ms = parse_matrices("field p=3 d=1\nmatrix 1 1\n1\nfield p=3 d=1\nmatrix 1 1\n2\n");
    REQUIRE(ms.size() == 2);
    CHECK(ms[1](0, 0) == 2);
    CHECK_THROWS_AS(parse_matrices(""), ParseError);
}

TEST_CASE("serialize and parse roundtrip byte for byte") {
    std::mt19937_64 rng(1);
    for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(7), FieldSpec::extension(3, 2),
                          FieldSpec::extension(5, 3), FieldSpec::with_modulus(3, {2, 1, 1})}) {
        for (int rep = 0; rep < 30; ++rep) {
            const Matrix m = naive::random_matrix(f, 1 + rep % 5, 1 + rep % 3, rng);
            const std::string text = serialize(m);
            const Matrix back = parse_matrix(text);
            REQUIRE(back == m);
            REQUIRE(serialize(back) == text);
        }
    }
    CHECK(serialize_field(*FieldSpec::extension(3, 2)) == "field p=3 d=2 mod=1,0,1");
    CHECK(serialize(Matrix(FieldSpec::prime(3), {{0, 1}})) == "field p=3 d=1\nmatrix 1 2\n0 1\n");
}

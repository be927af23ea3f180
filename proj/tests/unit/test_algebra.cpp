#include "doctest.h"
#include "helpers.hpp"
#include "hyparr/int_polynomial.hpp"
#include "hyparr/matrix.hpp"
#include "hyparr/multi_poly.hpp"
#include "hyparr/rational.hpp"

using namespace hyparr;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("2/5") == Rational(2, 5));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("123456789012345678901234567890") == Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "1/0", "abc", "1.5", "2/", "/3", "1/2/3", "--1"}) {
        CAPTURE(bad);
        CHECK_ERROR_CODE(parse_rational(bad), ErrorCode::ParseError);
    }
}

TEST_CASE("primitive_integer_vector clears denominators and fixes the sign") {
    RationalVector v{Rational(-1, 2), Rational(1, 3), 0};
    CHECK(primitive_integer_vector(v) == std::vector<Integer>{3, -2, 0});
}

TEST_CASE("primitive_integer_vector of zero is empty") {
    CHECK(primitive_integer_vector(RationalVector{0, 0}).empty());
}

TEST_CASE("row echelon, rank, nullspace, determinant") {
    const Matrix m = Matrix::from_rows({test::vec({1, 2, 3}), test::vec({2, 4, 6}), test::vec({1, 0, 1})}, 3);
    const Echelon e = row_echelon(m);
    CHECK(e.rank() == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.contains(test::vec({3, 2, 5})));
    CHECK_FALSE(e.contains(test::vec({0, 0, 1})));
    CHECK(rank(m) == 2);

    const Matrix ns = nullspace(m);
    REQUIRE(ns.rows() == 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational dot = 0;
        for (std::size_t c = 0; c < 3; ++c) dot += m(r, c) * ns(0, c);
        CHECK(dot == 0);
    }
    CHECK(determinant(m) == 0);
    CHECK(determinant(Matrix::from_rows({test::vec({2, 1}), test::vec({1, 3})}, 2)) == 5);
    CHECK(determinant(Matrix(0, 0)) == 1);
}

TEST_CASE("Echelon::insert keeps the reduced form") {
    Echelon e;
    e.reduced = Matrix(0, 3);
    CHECK(e.insert(test::vec({0, 2, 2})));
    CHECK(e.insert(test::vec({1, 1, 0})));
    CHECK_FALSE(e.insert(test::vec({1, 3, 2})));
    CHECK(e.reduced == row_echelon(Matrix::from_rows({test::vec({1, 1, 0}), test::vec({0, 1, 1})}, 3)).reduced);
}

TEST_CASE("IntPolynomial arithmetic and printing") {
    const IntPolynomial p{-3, 6, -4, 1};
    CHECK(p.to_string() == "t^3 - 4*t^2 + 6*t - 3");
    CHECK(p.degree() == 3);
    CHECK(p.evaluate(7) == 186);
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{0, 0}.is_zero());

    const auto d = divide_by_linear(p, 1);
    CHECK(d.remainder == 0);
    CHECK(d.quotient == IntPolynomial{3, -3, 1});
    CHECK(divide_by_linear(p, 2).remainder == p.evaluate(2));

    const int roots[] = {1, 2, 3};
    CHECK(IntPolynomial::from_roots(roots) == IntPolynomial{-6, 11, -6, 1});
    CHECK(IntPolynomial{-1, 1} * IntPolynomial{-1, 1} == IntPolynomial{1, -2, 1});
    CHECK(IntPolynomial{1, 1} - IntPolynomial{1, 1} == IntPolynomial{});
}

TEST_CASE("MultiPoly arithmetic") {
    const MultiPoly x = test::x(2, 0);
    const MultiPoly y = test::x(2, 1);
    const MultiPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK_FALSE((x + MultiPoly::constant(2, 1)).is_homogeneous());
    CHECK((x + y).pow(3).coefficient({1, 2}) == 3);
    const RationalVector pt{2, 3};
    CHECK(p.evaluate(pt) == -5);
    CHECK(p.to_string() == "x1^2 - x2^2");
    CHECK(monomials_of_degree(2, 2) == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomials_of_degree(3, 0) == std::vector<Exponent>{{0, 0, 0}});
}

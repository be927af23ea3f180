#include "doctest.h"
#include "helpers.hpp"
#include "hyparr/derivations.hpp"

using namespace hyparr;
using test::arr;
using test::x;

namespace {

Multiarrangement multi(CentralArrangement a, std::vector<int> m) {
    return Multiarrangement(std::move(a), std::move(m));
}

const Multiarrangement three_lines = Multiarrangement::simple(arr(2, {{1, 0}, {0, 1}, {1, 1}}));

}  // namespace

TEST_CASE("derivation membership") {
    CHECK(derivation_membership(PolyVectorField::euler(2), three_lines));

    const auto just_x = multi(arr(1, {{1}}), {2});
    CHECK(derivation_membership(PolyVectorField({x(1, 0) * x(1, 0)}), just_x));
    CHECK_FALSE(derivation_membership(PolyVectorField({x(1, 0)}), just_x));

    const auto four = Multiarrangement::simple(arr(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}));
    const PolyVectorField theta({x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1), MultiPoly(2)});
    CHECK_FALSE(derivation_membership(theta, four));

    CHECK_ERROR_CODE(derivation_membership(PolyVectorField::euler(3), three_lines), ErrorCode::DimensionMismatch);
}

TEST_CASE("PolyVectorField requires homogeneous components of one degree") {
    CHECK_ERROR_CODE(PolyVectorField({x(2, 0), x(2, 1) * x(2, 1)}), ErrorCode::DimensionMismatch);
    CHECK(PolyVectorField({x(2, 0), MultiPoly(2)}).degree() == 1);
    CHECK(PolyVectorField::euler(2).to_string() == "[x1, x2]");
}

TEST_CASE("graded dimensions of D(A, m)") {
    const auto boolean2 = Multiarrangement::simple(test::boolean(2));
    CHECK(derivation_space_dim(boolean2, 1) == 2);
    CHECK(derivation_space_dim(three_lines, 1) == 1);
    CHECK(derivation_space_dim(three_lines, 0) == 0);
    CHECK(derivation_space_dim(Multiarrangement::simple(test::braid3()), 0) == 0);
    for (const auto& theta : derivation_space_basis(three_lines, 2)) CHECK(derivation_membership(theta, three_lines));
}

TEST_CASE("Saito criterion") {
    const auto b3 = Multiarrangement::simple(test::boolean(3));
    std::vector<PolyVectorField> basis;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<MultiPoly> c(3, MultiPoly(3));
        c[i] = x(3, i);
        basis.emplace_back(c);
    }
    CHECK(saito_check(basis, b3));
    CHECK(coefficient_determinant(basis) == defining_polynomial(b3));

    // ({x}, 2) in the plane with basis x^2 d/dx, d/dy
    const auto xx = multi(arr(2, {{1, 0}}), {2});
    const std::vector<PolyVectorField> b2{PolyVectorField({x(2, 0) * x(2, 0), MultiPoly(2)}),
                                          PolyVectorField({MultiPoly(2), MultiPoly::constant(2, 1)})};
    CHECK(saito_check(b2, xx));
    CHECK(coefficient_determinant(b2) == x(2, 0) * x(2, 0));

    // degrees (1, 1) cannot match |m| = 3
    const std::vector<PolyVectorField> wrong{PolyVectorField::euler(2), PolyVectorField::euler(2)};
    CHECK_FALSE(saito_check(wrong, three_lines));

    const std::vector<PolyVectorField> outside{PolyVectorField({x(2, 1), MultiPoly(2)}), PolyVectorField::euler(2)};
    CHECK_ERROR_CODE(saito_check(outside, three_lines), ErrorCode::NotADerivation);
}

TEST_CASE("rank-2 exponents") {
    const auto e11 = rank2_exponents(Multiarrangement::simple(test::boolean(2)));
    CHECK(e11.exponents == Exponents{1, 1});
    const auto e12 = rank2_exponents(three_lines);
    CHECK(e12.exponents == Exponents{1, 2});
    CHECK(saito_check(e12.basis, three_lines));
    const auto m221 = multi(arr(2, {{1, 0}, {0, 1}, {1, 1}}), {2, 2, 1});
    const auto e23 = rank2_exponents(m221);
    CHECK(e23.exponents == Exponents{2, 3});
    CHECK(saito_check(e23.basis, m221));
    CHECK_ERROR_CODE(rank2_exponents(multi(test::boolean(2), {0, 0})), ErrorCode::EmptyMultiarrangement);
    CHECK_ERROR_CODE(rank2_exponents(Multiarrangement::simple(test::braid3())), ErrorCode::WrongRank);
}

TEST_CASE("find_free_basis") {
    const auto b3 = find_free_basis(Multiarrangement::simple(test::boolean(3)), 3);
    CHECK(b3.status == FreenessStatus::Free);
    CHECK(b3.exponents == Exponents{1, 1, 1});

    const auto br = find_free_basis(Multiarrangement::simple(test::braid3()), 4);
    CHECK(br.status == FreenessStatus::Free);
    CHECK(br.exponents == Exponents{1, 2, 3});
    CHECK(saito_check(br.basis, Multiarrangement::simple(test::braid3())));

    const auto g = find_free_basis(Multiarrangement::simple(test::generic34()), 6);
    CHECK(g.status == FreenessStatus::NotFree);
    CHECK_FALSE(g.witness.empty());

    // too small a bound cannot decide
    const auto u = find_free_basis(Multiarrangement::simple(test::braid3()), 2);
    CHECK(u.status == FreenessStatus::Unknown);
}

TEST_CASE("free exponents factor the characteristic polynomial") {
    CHECK(multi_char_poly_free({1, 1}) == IntPolynomial{1, -2, 1});
    CHECK(multi_char_poly_free({2, 3}) == IntPolynomial{6, -5, 1});
    CHECK(multi_char_poly_free({1, 2}) == IntPolynomial{2, -3, 1});
    CHECK(multi_char_poly_free({}) == IntPolynomial{1});
}

std::vector<std::optional<std::int64_t>> values(const std::vector<SigmaStatus>& s) {
    std::vector<std::optional<std::int64_t>> out;
    for (const auto& x : s) out.push_back(x.value);
    return out;
}

TEST_CASE("sigma coefficients of Ziegler restrictions") {
    using V = std::vector<std::optional<std::int64_t>>;
    CHECK(values(sigma_coefficients(ziegler_restriction(test::boolean(3), 2), 2)) == V{1, 2, 1});
    CHECK(values(sigma_coefficients(ziegler_restriction(test::braid3(), 3), 5)) == V{1, 5, 6});
    CHECK(values(sigma_coefficients(ziegler_restriction(test::generic34(), 3), 3)) == V{1, 3, 2});
}

TEST_CASE("sigma methods") {
    const auto s = sigma_coefficients(Multiarrangement::simple(test::braid3()), 6);
    REQUIRE(s.size() == 4);
    CHECK(s[2].method == SigmaMethod::UpToRank2);
    CHECK(s[3].method == SigmaMethod::FreeFactorization);
    CHECK(s[3].value == 6);
}

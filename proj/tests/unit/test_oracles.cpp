#include "doctest.h"
#include "helpers.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/oracles.hpp"

using namespace hyparr;
using test::arr;

TEST_CASE("complement point counts") {
    CHECK(oracles::complement_point_count(test::boolean(2), 5) == 16);
    CHECK(oracles::complement_point_count(test::generic34(), 7) == 186);
}

TEST_CASE("finite-field interpolation") {
    const std::vector<std::int64_t> primes{5, 7, 11, 13};
    const auto r = oracles::finite_field_char_poly(test::boolean(3), primes);
    CHECK(r.poly == IntPolynomial{-1, 3, -3, 1});
    CHECK(r.witnesses.size() == 4);
    CHECK(oracles::finite_field_char_poly(test::braid3()).poly == char_poly(test::braid3()));
    CHECK(oracles::finite_field_char_poly(test::generic34()).poly == char_poly(test::generic34()));
}

TEST_CASE("bad prime guard") {
    const auto a = arr(2, {{1, 0}, {0, 1}, {1, 3}});
    CHECK(oracles::bad_prime_bound(a) == 3);
    const auto primes = oracles::guarded_primes(a, 3);
    CHECK(primes == std::vector<std::int64_t>{5, 7, 11});
    CHECK_ERROR_CODE(oracles::finite_field_char_poly(a, std::vector<std::int64_t>{3, 5, 7}), ErrorCode::BadPrime);
    CHECK_ERROR_CODE(oracles::finite_field_char_poly(a, std::vector<std::int64_t>{5, 9, 7}), ErrorCode::BadPrime);
    CHECK_ERROR_CODE(oracles::finite_field_char_poly(a, std::vector<std::int64_t>{5, 5, 7}), ErrorCode::BadPrime);
    CHECK_ERROR_CODE(oracles::finite_field_char_poly(a, std::vector<std::int64_t>{5, 7}), ErrorCode::BadPrime);
    CHECK(oracles::finite_field_char_poly(a, primes).poly == IntPolynomial{2, -3, 1});
}

TEST_CASE("point budget") {
    const auto a = arr(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 100}});
    CHECK_ERROR_CODE(oracles::finite_field_char_poly(a), ErrorCode::InstanceTooLarge);
    CHECK_ERROR_CODE(oracles::complement_point_count(a, 101), ErrorCode::InstanceTooLarge);
}

TEST_CASE("region recursion") {
    CHECK(oracles::region_count_recursion(CentralArrangement(4, {})) == 1);
    CHECK(oracles::region_count_recursion(decone(test::generic34(), 0)) == 7);
    CHECK(oracles::region_count_recursion(test::braid3()) == 24);
    // two parallel lines and a transversal: 6 regions
    const AffineArrangement par(2, {AffineHyperplane::from_rationals({1, 0}, 0),
                                    AffineHyperplane::from_rationals({1, 0}, 1),
                                    AffineHyperplane::from_rationals({0, 1}, 0)});
    CHECK(oracles::region_count_recursion(par) == 6);
    CHECK(chamber_count(par) == 6);
}

TEST_CASE("brute-force Moebius") {
    const auto b2 = test::boolean(2);
    const auto l = intersection_lattice(b2);
    CHECK(oracles::moebius_bruteforce(b2, l.flat(0)) == 1);
    CHECK(oracles::moebius_bruteforce(b2, l.flat(3)) == 1);

    const auto br = intersection_lattice(test::braid3());
    const auto [lo, hi] = br.level(2);
    for (std::size_t i = lo; i < hi; ++i) {
        if (br.flat(i).hyperplanes.size() == 3) CHECK(oracles::moebius_bruteforce(test::braid3(), br.flat(i)) == 2);
    }
    for (std::size_t i = 0; i < br.size(); ++i) {
        CHECK(oracles::moebius_bruteforce(test::braid3(), br.flat(i)) == br.moebius(i));
    }

    const auto d = decone(test::braid3(), 0);
    const auto dl = intersection_lattice(d);
    for (std::size_t i = 0; i < dl.size(); ++i) CHECK(oracles::moebius_bruteforce(d, dl.flat(i)) == dl.moebius(i));

    Flat bogus;
    bogus.equations = Matrix::from_rows({test::vec({1, 2})}, 2);
    bogus.codim = 1;
    CHECK_ERROR_CODE(oracles::moebius_bruteforce(b2, bogus), ErrorCode::FlatNotInLattice);
}

#include <algorithm>
#include <random>

#include "../common/random_arrangement.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "hyparr/criteria.hpp"
#include "hyparr/oracles.hpp"

using namespace hyparr;

namespace {

bool alternates(const IntPolynomial& chi, std::size_t l) {
    for (std::size_t k = 0; k <= l; ++k) {
        const std::int64_t c = chi.coefficient(l - k);
        if ((k % 2 == 0 ? c : -c) < 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("random arrangements: characteristic polynomial structure") {
    std::mt19937 rng(20240611);
    int oracle_runs = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const auto a = test::random_arrangement(rng, dim, 7);
        CAPTURE(a.size());
        const auto chi = char_poly(a);
        CHECK(chi.degree() == static_cast<int>(dim));
        CHECK(chi.leading() == 1);
        CHECK(alternates(chi, dim));
        CHECK(divide_by_linear(chi, 1).remainder == 0);
        CHECK(oracles::region_count_recursion(a) == chamber_count(a));
        // keep the point counts small
        if (oracles::bad_prime_bound(a) <= 60) {
            ++oracle_runs;
            CHECK(oracles::finite_field_char_poly(a).poly == chi);
        }
    }
    CHECK(oracle_runs >= 20);
}

TEST_CASE("random arrangements: deconing, rho and the b split") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = test::random_arrangement(rng, 3, 7);
        const auto chi0 = reduced_char_poly(a);
        for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
            const DeconeRestriction dr(a, h0);
            CHECK(char_poly(dr.decone()) == chi0);
            const auto& dl = dr.decone_lattice();
            const auto& rl = dr.restriction_lattice();
            const auto fibers = ziegler_fibers(a, h0);
            for (std::size_t y = 0; y < dl.size(); ++y) {
                CHECK(rl.flat(dr.rho(y)).codim == dl.flat(y).codim);
                // hyperplanes of dA through Y restrict to hyperplanes through rho(Y)
                const auto& through = rl.flat(dr.rho(y)).hyperplanes;
                for (auto h : dl.flat(y).hyperplanes) {
                    const auto image = fibers[dr.decone().source[h]];
                    CHECK(std::find(through.begin(), through.end(), image) != through.end());
                }
                for (std::size_t z = 0; z < dl.size(); ++z) {
                    if (dl.contains(y, z)) CHECK(rl.contains(dr.rho(y), dr.rho(z)));
                }
            }
            const auto b = b_coefficients(dr, a);
            std::vector<std::int64_t> sums(b.b.size(), 0);
            for (std::size_t x = 0; x < rl.size(); ++x) sums[rl.flat(x).codim] += b.per_flat[x];
            CHECK(sums == b.b);
        }
    }
}

TEST_CASE("random arrangements: brute-force Moebius agrees with the lattice") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = test::random_arrangement(rng, 3, 6);
        const auto l = intersection_lattice(a);
        for (std::size_t i = 0; i < l.size(); ++i) CHECK(oracles::moebius_bruteforce(a, l.flat(i)) == l.moebius(i));
    }
}

TEST_CASE("random rank-3 arrangements: criteria agree and the inequality holds") {
    std::mt19937 rng(31337);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = test::random_arrangement(rng, 3, 6);
        if (a.rank() != 3) continue;
        ++checked;
        const auto direct = find_free_basis(Multiarrangement::simple(a), static_cast<int>(a.size()));
        REQUIRE(direct.status != FreenessStatus::Unknown);
        const auto y = yoshinaga_3d(a, 0);
        CHECK(y.status == direct.status);
        const auto r = compare_coefficients(a, 0, std::nullopt);
        for (std::size_t i = 0; i < r.table.b.size(); ++i) {
            REQUIRE(r.table.sigma[i].exact());
            CHECK(r.table.b[i] >= *r.table.sigma[i].value);
            CHECK(*r.table.sigma[i].value >= 0);
        }
        if (direct.is_free()) {
            CHECK(r.mca == true);
            CHECK(y.exponents == direct.exponents);
        }
    }
    CHECK(checked > 10);
}

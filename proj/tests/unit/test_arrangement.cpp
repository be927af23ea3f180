#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "hyparr/lattice.hpp"

using namespace hyparr;
using test::arr;

TEST_CASE("canonicalize normalizes scaling and keeps order") {
    const auto a = arr(2, {{2, 0}, {0, 3}});
    CHECK(a.form(0).to_string() == "x1");
    CHECK(a.form(1).to_string() == "x2");
    const auto b = canonicalize({{Rational(-1, 2), Rational(3, 4)}}, 2);
    CHECK(b.form(0).coefficients() == std::vector<Integer>{2, -3});
    CHECK(test::generic34().size() == 4);
    CHECK(test::generic34().form(0).to_string() == "x1 + x2 + x3");
}

TEST_CASE("canonicalize errors") {
    CHECK_ERROR_CODE(arr(2, {{1, 0}, {-1, 0}}), ErrorCode::DuplicateHyperplane);
    CHECK_ERROR_CODE(arr(2, {{1, 0}, {0, 0}}), ErrorCode::ZeroForm);
    CHECK_ERROR_CODE(arr(2, {{1, 0, 0}}), ErrorCode::DimensionMismatch);
    try {
        arr(2, {{1, 1}, {0, 1}, {2, 2}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("0 and 2") != std::string::npos);
    }
}

TEST_CASE("labels default to the form") {
    const auto a = arr(2, {{1, 0}});
    CHECK(a.label(0) == "x1");
    CHECK(canonicalize({{1, 0}}, 2, {"x"}).label(0) == "x");
}

TEST_CASE("intersection lattice level sizes") {
    const auto b2 = intersection_lattice(test::boolean(2));
    CHECK(b2.size() == 4);
    CHECK(b2.level_size(0) == 1);
    CHECK(b2.level_size(1) == 2);
    CHECK(b2.level_size(2) == 1);

    const auto g = intersection_lattice(test::generic34());
    CHECK(g.level_size(1) == 4);
    CHECK(g.level_size(2) == 6);
    CHECK(g.level_size(3) == 1);

    const auto br = intersection_lattice(test::braid3());
    REQUIRE(br.level_size(2) == 7);
    std::size_t triples = 0, doubles = 0;
    const auto [lo, hi] = br.level(2);
    for (std::size_t i = lo; i < hi; ++i) {
        const auto n = br.flat(i).hyperplanes.size();
        triples += n == 3;
        doubles += n == 2;
    }
    CHECK(triples == 4);
    CHECK(doubles == 3);
}

TEST_CASE("lattice ordering is by codimension then echelon form") {
    const auto l = intersection_lattice(test::braid3());
    for (std::size_t i = 1; i < l.size(); ++i) {
        const auto& a = l.flat(i - 1);
        const auto& b = l.flat(i);
        CHECK((a.codim < b.codim || (a.codim == b.codim && a.equations < b.equations)));
    }
    CHECK(l.moebius(0) == 1);
}

TEST_CASE("empty arrangement") {
    const CentralArrangement e(3, {});
    const auto l = intersection_lattice(e);
    CHECK(l.size() == 1);
    CHECK(l.rank() == 0);
    CHECK(char_poly(e) == IntPolynomial::monomial(3));
    CHECK(chamber_count(e) == 1);
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(test::boolean(3)) == IntPolynomial{-1, 3, -3, 1});
    CHECK(char_poly(test::generic34()) == IntPolynomial{-3, 6, -4, 1});
    CHECK(char_poly(test::braid3()) == IntPolynomial{-6, 11, -6, 1});
    CHECK(reduced_char_poly(test::boolean(3)) == IntPolynomial{1, -2, 1});
    CHECK(reduced_char_poly(test::generic34()) == IntPolynomial{3, -3, 1});
    CHECK(reduced_char_poly(test::braid3()) == IntPolynomial{6, -5, 1});
}

TEST_CASE("non-essential arrangements keep the center factor") {
    // x1, x2, x1 - x2 in dimension 3: center is the x3 axis
    const auto a = arr(3, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}});
    CHECK(a.rank() == 2);
    CHECK(char_poly(a) == IntPolynomial{0, 2, -3, 1});
    CHECK(chamber_count(a) == 6);
    CHECK(char_poly(essentialize(Multiarrangement::simple(a)).base) == IntPolynomial{2, -3, 1});
}

TEST_CASE("chamber counts") {
    CHECK(chamber_count(arr(1, {{1}})) == 2);
    CHECK(chamber_count(decone(test::generic34(), 0)) == 7);
    CHECK(chamber_count(test::braid3()) == 24);
}

TEST_CASE("decone coordinates") {
    const auto d = decone(test::boolean(3), 2);
    REQUIRE(d.size() == 2);
    CHECK(d.dim() == 2);
    CHECK(d.hyperplane(0) == AffineHyperplane{{1, 0}, 0});
    CHECK(d.hyperplane(1) == AffineHyperplane{{0, 1}, 0});
    CHECK(d.source == std::vector<std::size_t>{0, 1});

    // x = 1 - y - z after slicing at x + y + z = 1
    const auto g = decone(test::generic34(), 0);
    REQUIRE(g.size() == 3);
    CHECK(g.hyperplane(0) == AffineHyperplane{{1, 1}, 1});
    CHECK(char_poly(g) == IntPolynomial{3, -3, 1});

    for (std::size_t h0 = 0; h0 < 6; ++h0) {
        const auto b = decone(test::braid3(), h0);
        CHECK(b.size() == 5);
        CHECK(char_poly(b) == IntPolynomial{6, -5, 1});
    }
    CHECK_ERROR_CODE(decone(test::braid3(), 6), ErrorCode::IndexOutOfRange);
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

TEST_CASE("Ziegler restrictions") {
    const auto b = ziegler_restriction(test::boolean(3), 2);
    CHECK(b.base == arr(2, {{1, 0}, {0, 1}}));
    CHECK(b.mult == std::vector<int>{1, 1});
    CHECK(b.total() == 2);

    const auto br = ziegler_restriction(test::braid3(), 3);  // y1 - y2
    CHECK(br.base.size() == 3);
    CHECK(sorted(br.mult) == std::vector<int>{1, 2, 2});
    CHECK(br.total() == 5);

    const auto g = ziegler_restriction(test::generic34(), 3);  // z
    CHECK(g.base == arr(2, {{1, 1}, {1, 0}, {0, 1}}));
    CHECK(g.mult == std::vector<int>{1, 1, 1});

    const auto fibers = ziegler_fibers(test::braid3(), 3);
    CHECK(fibers[3] == static_cast<std::size_t>(-1));
    CHECK(fibers[0] == fibers[1]);
    CHECK(fibers[4] == fibers[5]);
    CHECK_ERROR_CODE(ziegler_restriction(test::braid3(), 9), ErrorCode::IndexOutOfRange);
    CHECK_ERROR_CODE(ziegler_restriction(arr(1, {{1}}), 0), ErrorCode::DimensionMismatch);
}

TEST_CASE("localize_and_essentialize") {
    const auto m = Multiarrangement::simple(test::braid3());
    const auto l = intersection_lattice(m.base);

    const auto v = localize_and_essentialize(m, l.flat(0));
    CHECK(v.dim() == 0);
    CHECK(v.base.empty());

    const auto [lo, hi] = l.level(2);
    for (std::size_t i = lo; i < hi; ++i) {
        const auto loc = localize_and_essentialize(m, l.flat(i));
        CHECK(loc.dim() == 2);
        CHECK(loc.base.rank() == 2);
        CHECK(loc.base.size() == l.flat(i).hyperplanes.size());
    }

    const auto z = ziegler_restriction(test::braid3(), 3);
    const auto lz = intersection_lattice(z.base);
    const auto top = localize_and_essentialize(z, lz.flat(lz.size() - 1));
    CHECK(top.mult == z.mult);
    CHECK(top.base.size() == z.base.size());

    Flat bogus;
    bogus.equations = Matrix::from_rows({test::vec({1, 2, 3})}, 3);
    bogus.codim = 1;
    CHECK_ERROR_CODE(localize_and_essentialize(m, bogus), ErrorCode::FlatNotInLattice);
}

TEST_CASE("rho on a deconing") {
    const DeconeRestriction dr(test::generic34(), 3);
    CHECK(dr.rho(std::size_t{0}) == 0);

    // the point x = y = 0 of dA maps to the origin of A''
    const auto& dl = dr.decone_lattice();
    const auto& source = dr.decone().source;
    std::optional<std::size_t> point;
    const auto [lo, hi] = dl.level(2);
    for (std::size_t i = lo; i < hi; ++i) {
        std::vector<std::size_t> src;
        for (auto h : dl.flat(i).hyperplanes) src.push_back(source[h]);
        std::sort(src.begin(), src.end());
        if (src == std::vector<std::size_t>{1, 2}) point = i;
    }
    REQUIRE(point);
    const auto& rl = dr.restriction_lattice();
    const Flat& image = rl.flat(dr.rho(*point));
    CHECK(image.codim == 2);
    CHECK(image.hyperplanes.size() == 3);
    CHECK(rho(test::generic34(), 3, dl.flat(*point)) == image);

    Flat bogus;
    bogus.equations = Matrix::from_rows({test::vec({1, 0, 5})}, 3);
    bogus.codim = 1;
    CHECK_ERROR_CODE(dr.rho(bogus), ErrorCode::FlatNotInLattice);
}

TEST_CASE("rho on braid-ess3 triple points carries the weighted flat") {
    const auto a = test::braid3();
    const DeconeRestriction dr(a, 3);
    const auto& dl = dr.decone_lattice();
    const auto [lo, hi] = dl.level(2);
    bool saw_triple = false;
    for (std::size_t i = lo; i < hi; ++i) {
        if (dl.flat(i).hyperplanes.size() != 3) continue;
        saw_triple = true;
        const auto& image = dr.restriction_lattice().flat(dr.rho(i));
        CHECK(image.codim == 2);
        int weight = 0;
        for (auto h : image.hyperplanes) weight += dr.restriction().mult[h];
        CHECK(weight == 5);
    }
    CHECK(saw_triple);
}

TEST_CASE("b coefficients") {
    CHECK(b_coefficients(test::boolean(3), 0).b == std::vector<std::int64_t>{1, 2, 1});
    CHECK(b_coefficients(test::generic34(), 3).b == std::vector<std::int64_t>{1, 3, 3});
    const auto br = b_coefficients(test::braid3(), 0);
    CHECK(br.b == std::vector<std::int64_t>{1, 5, 6});
    const DeconeRestriction dr(test::braid3(), 0);
    std::vector<std::int64_t> sums(3, 0);
    for (std::size_t x = 0; x < br.per_flat.size(); ++x) {
        sums[dr.restriction_lattice().flat(x).codim] += br.per_flat[x];
    }
    CHECK(sums == br.b);
}

#include "doctest.h"
#include "helpers.hpp"
#include "hyparr/criteria.hpp"

using namespace hyparr;
using test::arr;

namespace {

CentralArrangement generic46() {
    return arr(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 3, 4}});
}

CentralArrangement braid4() {
    return arr(4, {{1, 0, 0, 0},
                   {0, 1, 0, 0},
                   {0, 0, 1, 0},
                   {0, 0, 0, 1},
                   {1, -1, 0, 0},
                   {1, 0, -1, 0},
                   {1, 0, 0, -1},
                   {0, 1, -1, 0},
                   {0, 1, 0, -1},
                   {0, 0, 1, -1}});
}

std::vector<std::optional<std::int64_t>> values(const std::vector<SigmaStatus>& s) {
    std::vector<std::optional<std::int64_t>> out;
    for (const auto& x : s) out.push_back(x.value);
    return out;
}

using Values = std::vector<std::optional<std::int64_t>>;
using Ints = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("tameness classification") {
    const auto rank2 = Multiarrangement(arr(2, {{1, 0}, {0, 1}, {1, 1}}), {2, 2, 1});
    CHECK(tameness_classify(rank2, std::nullopt) == TamenessTag{TameStatus::Tame, TameReason::RankAtMost3});
    CHECK(tameness_classify(test::boolean(4), std::nullopt) ==
          TamenessTag{TameStatus::Tame, TameReason::VerifiedFree});
    CHECK(tameness_classify(generic46(), std::nullopt) == TamenessTag{});
    CHECK(tameness_classify(generic46(), std::nullopt, true) ==
          TamenessTag{TameStatus::Tame, TameReason::UserAsserted});
}

TEST_CASE("compare_coefficients on Boolean3") {
    for (std::size_t h0 = 0; h0 < 3; ++h0) {
        const auto r = compare_coefficients(test::boolean(3), h0, std::nullopt);
        CHECK(r.table.b == Ints{1, 2, 1});
        CHECK(values(r.table.sigma) == Values{1, 2, 1});
        CHECK(r.chambers_decone == 4);
        CHECK(r.chambers_restriction == 4);
        CHECK(r.mca == true);
    }
}

TEST_CASE("compare_coefficients on generic(3,4) is strict at i = 2") {
    const auto r = compare_coefficients(test::generic34(), 3, std::nullopt);
    CHECK(r.table.b == Ints{1, 3, 3});
    CHECK(values(r.table.sigma) == Values{1, 3, 2});
    CHECK(r.inequality_holds == std::vector<std::optional<bool>>{true, true, true});
    CHECK(r.chambers_decone == 7);
    CHECK(r.chambers_restriction == 6);
    CHECK(r.mca == false);
    CHECK(r.tame_arrangement.reason == TameReason::RankAtMost3);
    CHECK(r.restriction_multiplicities == std::vector<int>{1, 1, 1});
}

TEST_CASE("compare_coefficients on braid-ess3 at every h0") {
    for (std::size_t h0 = 0; h0 < 6; ++h0) {
        CAPTURE(h0);
        const auto r = compare_coefficients(test::braid3(), h0, std::nullopt);
        CHECK(r.table.b == Ints{1, 5, 6});
        CHECK(values(r.table.sigma) == Values{1, 5, 6});
        CHECK(r.chambers_decone == 12);
        CHECK(r.mca == true);
    }
}

TEST_CASE("per-flat rows add up") {
    const auto r = compare_coefficients(test::braid3(), 3, std::nullopt);
    std::vector<std::int64_t> b(3, 0), s(3, 0);
    for (const auto& f : r.table.per_flat) {
        b[f.codim] += f.b;
        REQUIRE(f.sigma);
        s[f.codim] += *f.sigma;
        CHECK(f.b >= *f.sigma);
    }
    CHECK(b == r.table.b);
    CHECK(s == Ints{1, 5, 6});
}

TEST_CASE("user assertion is recorded in the report") {
    const auto r = compare_coefficients(generic46(), 5, std::nullopt, true);
    CHECK(r.tame_arrangement.reason == TameReason::UserAsserted);
    CHECK(r.table.b[0] == 1);
    CHECK(r.table.b[1] == 5);
}

TEST_CASE("mca_check") {
    CHECK(mca_check(test::braid3(), 0, std::nullopt) == true);
    CHECK(mca_check(test::generic34(), 3, std::nullopt) == false);
    CHECK(mca_check(test::boolean(3), 1, std::nullopt) == true);
}

TEST_CASE("rank-3 chamber criterion") {
    const auto br = yoshinaga_3d(test::braid3(), 0);
    CHECK(br.status == FreenessStatus::Free);
    CHECK(br.exponents == Exponents{1, 2, 3});
    const auto g = yoshinaga_3d(test::generic34(), 3);
    CHECK(g.status == FreenessStatus::NotFree);
    CHECK(g.witness.find("7") != std::string::npos);
    const auto b = yoshinaga_3d(test::boolean(3), 2);
    CHECK(b.status == FreenessStatus::Free);
    CHECK(b.exponents == Exponents{1, 1, 1});
    CHECK_ERROR_CODE(yoshinaga_3d(test::boolean(4), 0), ErrorCode::WrongRank);
    CHECK_ERROR_CODE(yoshinaga_3d(arr(3, {{1, 0, 0}, {0, 1, 0}}), 0), ErrorCode::WrongRank);
}

TEST_CASE("restriction plus b_2 = sigma_2 criterion") {
    for (std::size_t h0 = 0; h0 < 4; ++h0) {
        const auto v = abe_yoshinaga_free_check(test::boolean(4), h0, std::nullopt);
        CHECK(v.status == FreenessStatus::Free);
        CHECK(v.exponents == Exponents{1, 1, 1, 1});
    }
    const auto br = abe_yoshinaga_free_check(braid4(), 4, std::nullopt);
    CHECK(br.status == FreenessStatus::Free);
    CHECK(br.exponents == Exponents{1, 2, 3, 4});

    const auto g = abe_yoshinaga_free_check(test::generic34(), 3, std::nullopt);
    CHECK(g.status == FreenessStatus::NotFree);
    CHECK(g.witness == "b_2 = 3 != sigma_2 = 2");
}

TEST_CASE("braid-ess4 restriction and coefficients") {
    const auto z = ziegler_restriction(braid4(), 4);
    const auto v = find_free_basis(z, z.total());
    CHECK(v.status == FreenessStatus::Free);
    CHECK(v.exponents == Exponents{2, 3, 4});
    const auto r = compare_coefficients(braid4(), 4, std::nullopt);
    CHECK(r.table.b == Ints{1, 9, 26, 24});
    CHECK(values(r.table.sigma) == Values{1, 9, 26, 24});
    CHECK(r.tame_arrangement.reason == TameReason::VerifiedFree);
}

#include "hyparr/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

int bound_or_default(std::optional<int> bound, const Multiarrangement& m) {
    return bound.value_or(m.support().total());
}

std::int64_t sum(const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::optional<std::int64_t> exact_sum(const std::vector<SigmaStatus>& sigma) {
    std::int64_t s = 0;
    for (const auto& x : sigma) {
        if (!x.exact()) return std::nullopt;
        s += *x.value;
    }
    return s;
}

void require_dim(const CentralArrangement& a) {
    if (a.dim() < 2) throw Error(ErrorCode::DimensionMismatch, "need an arrangement of dimension >= 2");
}

}  // namespace

std::string_view to_string(TameStatus s) noexcept {
    return s == TameStatus::Tame ? "Tame" : "Unknown";
}

std::string_view to_string(TameReason r) noexcept {
    switch (r) {
        case TameReason::None: return "none";
        case TameReason::RankAtMost3: return "rank<=3";
        case TameReason::VerifiedFree: return "verified-free";
        case TameReason::UserAsserted: return "user-asserted";
    }
    return "none";
}

TamenessTag tameness_classify(const Multiarrangement& m, std::optional<int> degree_bound, bool user_asserted) {
    const Multiarrangement s = m.support();
    if (s.base.rank() <= 3) return {TameStatus::Tame, TameReason::RankAtMost3};
    if (find_free_basis(s, bound_or_default(degree_bound, s)).is_free()) {
        return {TameStatus::Tame, TameReason::VerifiedFree};
    }
    if (user_asserted) return {TameStatus::Tame, TameReason::UserAsserted};
    return {};
}

TamenessTag tameness_classify(const CentralArrangement& a, std::optional<int> degree_bound, bool user_asserted) {
    return tameness_classify(Multiarrangement::simple(a), degree_bound, user_asserted);
}

ComparisonReport compare_coefficients(const CentralArrangement& a, std::size_t h0, std::optional<int> degree_bound,
                                      bool assert_tame) {
    require_dim(a);
    const DeconeRestriction dr(a, h0);
    const Multiarrangement& restriction = dr.restriction();
    const BCoefficients bside = b_coefficients(dr, a);
    const SigmaDecomposition sside = sigma_decomposition(restriction, bound_or_default(degree_bound, restriction));

    const auto& lattice = dr.restriction_lattice();
    if (sside.lattice.size() != lattice.size()) {
        throw Error(ErrorCode::InternalInconsistency, "restriction lattices disagree");
    }

    ComparisonReport r;
    r.dim = a.dim();
    r.h0 = h0;
    r.hyperplanes = a.size();
    r.restriction_multiplicities = restriction.mult;
    r.table.b = bside.b;
    r.table.sigma = sside.sigma;
    // chi(A'', m, t) has degree l - 1: sigma_0 .. sigma_{l-1}
    r.table.sigma.resize(a.dim(), SigmaStatus{0, SigmaMethod::UpToRank2});
    for (std::size_t x = 0; x < lattice.size(); ++x) {
        const Flat& f = lattice.flat(x);
        r.table.per_flat.push_back({x, f.codim, f.hyperplanes, bside.per_flat[x], sside.per_flat[x]});
    }

    r.tame_arrangement = tameness_classify(a, degree_bound, assert_tame);
    r.tame_restriction = tameness_classify(restriction, degree_bound, assert_tame);

    for (std::size_t i = 0; i < r.table.b.size(); ++i) {
        const auto& s = r.table.sigma[i];
        if (s.exact()) {
            r.inequality_holds.emplace_back(r.table.b[i] >= *s.value && *s.value >= 0);
        } else {
            r.inequality_holds.emplace_back(std::nullopt);
        }
    }
    r.chambers_decone = sum(r.table.b);
    r.chambers_restriction = exact_sum(r.table.sigma);
    if (r.chambers_restriction) r.mca = r.chambers_decone == *r.chambers_restriction;

    if (r.table.b.size() > 2 && r.table.sigma[2].exact() && *r.table.sigma[2].value > r.table.b[2]) {
        throw Error(ErrorCode::TheoremViolation, "sigma_2 = " + std::to_string(*r.table.sigma[2].value) +
                                                     " exceeds b_2 = " + std::to_string(r.table.b[2]));
    }
    if (r.tame_arrangement.is_tame() && r.tame_restriction.is_tame()) {
        for (std::size_t i = 0; i < r.inequality_holds.size(); ++i) {
            if (r.inequality_holds[i] == false) {
                throw Error(ErrorCode::TheoremViolation,
                            "b_" + std::to_string(i) + " = " + std::to_string(r.table.b[i]) + ", sigma_" +
                                std::to_string(i) + " = " + std::to_string(*r.table.sigma[i].value) +
                                " on a tame pair");
            }
        }
    }
    return r;
}

std::optional<bool> mca_check(const CentralArrangement& a, std::size_t h0, std::optional<int> degree_bound) {
    require_dim(a);
    const DeconeRestriction dr(a, h0);
    const BCoefficients bside = b_coefficients(dr, a);
    const auto sigma = sigma_decomposition(dr.restriction(), bound_or_default(degree_bound, dr.restriction())).sigma;
    const auto s = exact_sum(sigma);
    if (!s) return std::nullopt;
    return sum(bside.b) == *s;
}

FreenessVerdict yoshinaga_3d(const CentralArrangement& a, std::size_t h0) {
    if (a.dim() != 3 || a.rank() != 3) {
        throw Error(ErrorCode::WrongRank, "expected an essential arrangement of rank 3, got dimension " +
                                              std::to_string(a.dim()) + " and rank " + std::to_string(a.rank()));
    }
    const DeconeRestriction dr(a, h0);
    const FreeBasis local = rank2_exponents(dr.restriction());
    const int d1 = local.exponents[0];
    const int d2 = local.exponents[1];
    const std::int64_t chambers = sum(b_coefficients(dr, a).b);
    const std::int64_t bound = std::int64_t{1 + d1} * (1 + d2);

    FreenessVerdict v;
    v.method = "yoshinaga";
    if (chambers == bound) {
        v.status = FreenessStatus::Free;
        v.exponents = {1, d1, d2};
        std::sort(v.exponents.begin(), v.exponents.end());
    } else {
        v.status = FreenessStatus::NotFree;
        v.witness = "chambers of the deconing " + std::to_string(chambers) + " != (1+" + std::to_string(d1) +
                    ")(1+" + std::to_string(d2) + ") = " + std::to_string(bound);
    }
    return v;
}

FreenessVerdict abe_yoshinaga_free_check(const CentralArrangement& a, std::size_t h0,
                                         std::optional<int> degree_bound) {
    require_dim(a);
    const DeconeRestriction dr(a, h0);
    const Multiarrangement& restriction = dr.restriction();
    const int bound = bound_or_default(degree_bound, restriction);
    const FreenessVerdict local = find_free_basis(restriction, bound);

    FreenessVerdict v;
    v.method = "abe-yoshinaga";
    v.bound = bound;
    if (local.status == FreenessStatus::Unknown) {
        v.status = FreenessStatus::Unknown;
        return v;
    }
    if (local.status == FreenessStatus::NotFree) {
        v.status = FreenessStatus::NotFree;
        v.witness = "Ziegler restriction is not free: " + local.witness;
        return v;
    }
    const BCoefficients bside = b_coefficients(dr, a);
    const auto sigma = sigma_decomposition(restriction, bound, 2).sigma;
    const std::int64_t b2 = bside.b.size() > 2 ? bside.b[2] : 0;
    const std::int64_t s2 = sigma.size() > 2 ? *sigma[2].value : 0;
    if (b2 == s2) {
        v.status = FreenessStatus::Free;
        v.exponents = local.exponents;
        v.exponents.push_back(1);
        std::sort(v.exponents.begin(), v.exponents.end());
    } else {
        v.status = FreenessStatus::NotFree;
        v.witness = "b_2 = " + std::to_string(b2) + " != sigma_2 = " + std::to_string(s2);
    }
    return v;
}

}  // namespace hyparr

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/derivations.hpp"
#include "hyparr/lattice.hpp"

namespace hyparr {

enum class TameStatus { Tame, Unknown };
enum class TameReason { None, RankAtMost3, VerifiedFree, UserAsserted };

std::string_view to_string(TameStatus s) noexcept;
std::string_view to_string(TameReason r) noexcept;

struct TamenessTag {
    TameStatus status = TameStatus::Unknown;
    TameReason reason = TameReason::None;

    bool is_tame() const noexcept { return status == TameStatus::Tame; }
    friend bool operator==(const TamenessTag&, const TamenessTag&) = default;
};

/// Tame when the essential rank is at most 3 or a free basis is found within the
/// bound (default |m|); otherwise Tame only if the caller asserts it.
TamenessTag tameness_classify(const Multiarrangement& m, std::optional<int> degree_bound,
                              bool user_asserted = false);
TamenessTag tameness_classify(const CentralArrangement& a, std::optional<int> degree_bound,
                              bool user_asserted = false);

struct FlatCoefficients {
    std::size_t flat = 0;  // index in the lattice of the Ziegler restriction
    std::size_t codim = 0;
    std::vector<std::size_t> hyperplanes;
    std::int64_t b = 0;
    std::optional<std::int64_t> sigma;

    friend bool operator==(const FlatCoefficients&, const FlatCoefficients&) = default;
};

struct CoefficientTable {
    std::vector<std::int64_t> b;
    std::vector<SigmaStatus> sigma;
    std::vector<FlatCoefficients> per_flat;

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

struct ComparisonReport {
    std::size_t dim = 0;
    std::size_t h0 = 0;
    std::size_t hyperplanes = 0;
    std::vector<int> restriction_multiplicities;
    CoefficientTable table;
    TamenessTag tame_arrangement;
    TamenessTag tame_restriction;
    /// b_i >= sigma_i >= 0, defined where sigma_i is exact.
    std::vector<std::optional<bool>> inequality_holds;
    /// (-1)^{l-1} chi_0(A, -1), the number of chambers of dA.
    std::int64_t chambers_decone = 0;
    /// (-1)^{l-1} chi(A'', m, -1) when every sigma_i is exact.
    std::optional<std::int64_t> chambers_restriction;
    std::optional<bool> mca;

    friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

/// Assembles b and sigma for (A, H0), the per-index inequality and the chamber
/// bound. Throws TheoremViolation when both tags are Tame and an exact sigma_i
/// breaks b_i >= sigma_i >= 0, or when an exact sigma_2 exceeds b_2.
ComparisonReport compare_coefficients(const CentralArrangement& a, std::size_t h0,
                                      std::optional<int> degree_bound, bool assert_tame = false);

/// Equality of the two chamber counts; nullopt when sigma is not fully exact.
std::optional<bool> mca_check(const CentralArrangement& a, std::size_t h0, std::optional<int> degree_bound);

/// Rank-3 criterion: free iff |C(dA)| = (1 + d1)(1 + d2) for the Ziegler
/// exponents (d1, d2). Throws WrongRank unless A is essential of rank 3.
FreenessVerdict yoshinaga_3d(const CentralArrangement& a, std::size_t h0);

/// Free iff the Ziegler restriction is free and b_2 = sigma_2.
FreenessVerdict abe_yoshinaga_free_check(const CentralArrangement& a, std::size_t h0,
                                         std::optional<int> degree_bound);

}  // namespace hyparr

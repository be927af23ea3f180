#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/int_polynomial.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/multi_poly.hpp"

namespace hyparr {

/// Homogeneous polynomial vector field sum_i f_i d/dx_i.
class PolyVectorField {
public:
    PolyVectorField() = default;
    /// Throws DimensionMismatch unless all components are homogeneous of one degree
    /// (zero components are allowed). `degree` is used when every component is zero.
    explicit PolyVectorField(std::vector<MultiPoly> components, int degree = 0);

    static PolyVectorField euler(std::size_t dim);

    std::size_t dim() const noexcept { return components_.size(); }
    int degree() const noexcept { return degree_; }
    const std::vector<MultiPoly>& components() const noexcept { return components_; }
    const MultiPoly& component(std::size_t i) const { return components_.at(i); }
    bool is_zero() const;

    /// theta(alpha) = sum_i f_i * alpha_i.
    MultiPoly apply(const LinearForm& alpha) const;

    std::string to_string() const;

    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

private:
    std::vector<MultiPoly> components_;
    int degree_ = 0;
};

using Exponents = std::vector<int>;

/// Q(A, m) = prod alpha_H^{m(H)}.
MultiPoly defining_polynomial(const Multiarrangement& m);

/// True iff alpha_H^{m(H)} divides theta(alpha_H) for every H with m(H) >= 1.
bool derivation_membership(const PolyVectorField& theta, const Multiarrangement& m);

/// Basis of the degree-d piece of D(A, m), from the exact nullspace of the
/// divisibility constraints on monomial coefficients.
std::vector<PolyVectorField> derivation_space_basis(const Multiarrangement& m, int degree);
std::size_t derivation_space_dim(const Multiarrangement& m, int degree);

/// det(theta_i(x_j)).
MultiPoly coefficient_determinant(std::span<const PolyVectorField> basis);

/// Saito criterion: `basis` (dim-many derivations) is a basis of D(A, m) iff the
/// coefficient determinant is a nonzero multiple of Q(A, m). Throws
/// NotADerivation naming the first element outside D(A, m).
bool saito_check(std::span<const PolyVectorField> basis, const Multiarrangement& m);

enum class FreenessStatus { Free, NotFree, Unknown };

std::string_view to_string(FreenessStatus s) noexcept;

struct FreenessVerdict {
    FreenessStatus status = FreenessStatus::Unknown;
    Exponents exponents;                 // Free
    std::vector<PolyVectorField> basis;  // Free, when produced by the basis search
    int bound = 0;                       // degree bound searched
    std::string witness;                 // NotFree
    std::string method;

    bool is_free() const noexcept { return status == FreenessStatus::Free; }
};

/// Graded search for a minimal homogeneous generating set of D(A, m), degree by
/// degree up to `degree_bound`. Free once dim-many generators pass the Saito
/// criterion; NotFree only on sound obstructions (too many minimal generators,
/// dim-many generators failing Saito, graded dimensions matching no exponent
/// vector, or exponent sum exceeding |m|); Unknown otherwise.
FreenessVerdict find_free_basis(const Multiarrangement& m, int degree_bound);

struct FreeBasis {
    Exponents exponents;
    std::vector<PolyVectorField> basis;
};

/// Exponents (d1 <= d2) of a rank-2 multiarrangement in two variables.
/// Throws EmptyMultiarrangement when |m| = 0, WrongRank unless essential of rank 2.
FreeBasis rank2_exponents(const Multiarrangement& m);

/// prod (t - e_i).
IntPolynomial multi_char_poly_free(const Exponents& e);

enum class SigmaMethod { UpToRank2, FreeFactorization, LocalToGlobal };

std::string_view to_string(SigmaMethod m) noexcept;

struct SigmaStatus {
    std::optional<std::int64_t> value;
    SigmaMethod method = SigmaMethod::UpToRank2;

    bool exact() const noexcept { return value.has_value(); }
    friend bool operator==(const SigmaStatus&, const SigmaStatus&) = default;
};

struct SigmaDecomposition {
    std::vector<SigmaStatus> sigma;
    /// sigma_{codim X}^X per flat of the lattice of the support of m.
    std::vector<std::optional<std::int64_t>> per_flat;
    IntersectionLattice lattice;
};

/// sigma_k = sum over X in L_k of the product of exponents of the essentialized
/// localization at X. Codimensions above `max_codim` are left out.
SigmaDecomposition sigma_decomposition(const Multiarrangement& m, int degree_bound,
                                       std::size_t max_codim = std::numeric_limits<std::size_t>::max());

/// sigma_0 .. sigma_dim for a multiarrangement.
std::vector<SigmaStatus> sigma_coefficients(const Multiarrangement& m, int degree_bound);

}  // namespace hyparr

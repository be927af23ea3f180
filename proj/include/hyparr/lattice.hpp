#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/int_polynomial.hpp"
#include "hyparr/matrix.hpp"

namespace hyparr {

/// Element of an intersection lattice. `equations` is the reduced echelon form of
/// the defining equations; for affine lattices the last column holds the offsets.
struct Flat {
    Matrix equations;
    std::size_t codim = 0;
    std::vector<std::size_t> hyperplanes;

    friend bool operator==(const Flat&, const Flat&) = default;
};

/// Ranked poset of flats under reverse inclusion, with Möbius values.
/// Flats are ordered by codimension, then lexicographically by echelon form.
class IntersectionLattice {
public:
    /// Level-by-level construction: codim k+1 flats are intersections of codim k
    /// flats with hyperplanes not containing them. Each row is a hyperplane; for
    /// affine input it has dim+1 entries (normal, offset).
    static IntersectionLattice build(const std::vector<RationalVector>& rows, std::size_t dim, bool affine);

    std::size_t dim() const noexcept { return dim_; }
    bool affine() const noexcept { return affine_; }
    std::size_t hyperplane_count() const noexcept { return hyperplane_count_; }

    std::size_t size() const noexcept { return flats_.size(); }
    const Flat& flat(std::size_t i) const { return flats_.at(i); }
    const std::vector<Flat>& flats() const noexcept { return flats_; }
    std::int64_t moebius(std::size_t i) const { return moebius_.at(i); }

    /// Largest codimension present.
    std::size_t rank() const noexcept { return level_start_.size() - 2; }
    /// Half-open index range of the flats of codimension k (empty beyond rank).
    std::pair<std::size_t, std::size_t> level(std::size_t k) const;
    std::size_t level_size(std::size_t k) const;

    /// True when flat i contains flat j as a subspace (i <= j in the lattice).
    bool contains(std::size_t i, std::size_t j) const;

    std::optional<std::size_t> find(const Matrix& equations) const;

    /// Sum of mu(X) t^{dim X}.
    IntPolynomial characteristic_polynomial() const;

private:
    std::size_t dim_ = 0;
    bool affine_ = false;
    std::size_t hyperplane_count_ = 0;
    std::vector<Flat> flats_;
    std::vector<std::int64_t> moebius_;
    std::vector<std::size_t> level_start_;
};

std::vector<RationalVector> hyperplane_rows(const CentralArrangement& a);
std::vector<RationalVector> hyperplane_rows(const AffineArrangement& a);

IntersectionLattice intersection_lattice(const CentralArrangement& a);
IntersectionLattice intersection_lattice(const AffineArrangement& a);

IntPolynomial char_poly(const CentralArrangement& a);
IntPolynomial char_poly(const AffineArrangement& a);

/// chi(A, t) / (t - 1); throws NonzeroRemainder if the division is not exact.
IntPolynomial reduced_char_poly(const CentralArrangement& a);

/// Number of chambers of the real complement, (-1)^dim chi(A, -1).
std::int64_t chamber_count(const CentralArrangement& a);
std::int64_t chamber_count(const AffineArrangement& a);

/// Localization (A_X, m_X) written in coordinates of V / X. The result has
/// codim X variables; the coordinates are the pivot entries of X's equations.
/// Throws FlatNotInLattice.
Multiarrangement localize_and_essentialize(const Multiarrangement& m, const Flat& x);

/// Localization at the center.
Multiarrangement essentialize(const Multiarrangement& m);

/// The deconing dA, the Ziegler restriction A'' and the map rho: L(dA) -> L(A'')
/// sending an affine flat to the flat cut out by its direction space.
class DeconeRestriction {
public:
    DeconeRestriction(const CentralArrangement& a, std::size_t h0);

    std::size_t h0() const noexcept { return h0_; }
    const AffineArrangement& decone() const noexcept { return decone_; }
    const Multiarrangement& restriction() const noexcept { return restriction_; }
    const IntersectionLattice& decone_lattice() const noexcept { return decone_lattice_; }
    const IntersectionLattice& restriction_lattice() const noexcept { return restriction_lattice_; }

    /// rho on lattice indices.
    std::size_t rho(std::size_t decone_flat) const { return rho_.at(decone_flat); }
    /// rho on an arbitrary flat; throws FlatNotInLattice if y is not a flat of dA.
    std::size_t rho(const Flat& y) const;

private:
    std::size_t h0_;
    AffineArrangement decone_;
    Multiarrangement restriction_;
    IntersectionLattice decone_lattice_;
    IntersectionLattice restriction_lattice_;
    std::vector<std::size_t> rho_;
};

/// rho(Y) as a flat of the Ziegler restriction.
Flat rho(const CentralArrangement& a, std::size_t h0, const Flat& y);

/// Combinatorial side of the coefficient comparison: b_i from chi_0(A, t), and
/// the split b_i = sum_X b_i^X over X in L_i(A'').
struct BCoefficients {
    std::vector<std::int64_t> b;
    /// b_{codim X}^X, indexed like the restriction lattice.
    std::vector<std::int64_t> per_flat;
};

BCoefficients b_coefficients(const CentralArrangement& a, std::size_t h0);
BCoefficients b_coefficients(const DeconeRestriction& dr, const CentralArrangement& a);

}  // namespace hyparr

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

/// Defining form of a linear hyperplane, kept as the primitive integer vector
/// whose first nonzero entry is positive.
class LinearForm {
public:
    LinearForm() = default;

    /// Throws ZeroForm for the zero vector.
    static LinearForm from_rationals(const RationalVector& coefficients);
    static LinearForm from_integers(const std::vector<Integer>& coefficients);

    std::size_t dim() const noexcept { return coeffs_.size(); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    RationalVector as_rationals() const { return to_rationals(coeffs_); }

    /// "x1 - 2*x3"
    std::string to_string() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

private:
    std::vector<Integer> coeffs_;
};

/// Simple central arrangement: pairwise non-proportional forms in `dim` variables.
class CentralArrangement {
public:
    CentralArrangement() = default;
    /// Validates dimensions and distinctness (DimensionMismatch, DuplicateHyperplane).
    CentralArrangement(std::size_t dim, std::vector<LinearForm> forms, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return forms_.size(); }
    bool empty() const noexcept { return forms_.empty(); }
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    const LinearForm& form(std::size_t i) const { return forms_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(std::size_t i) const;

    /// Rank of the span of the defining forms (codimension of the center).
    std::size_t rank() const;
    bool is_essential() const { return rank() == dim_; }

    friend bool operator==(const CentralArrangement&, const CentralArrangement&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<LinearForm> forms_;
    std::vector<std::string> labels_;
};

/// Affine hyperplane {x : normal . x = offset}; (normal, offset) is primitive
/// integer with the first nonzero entry of `normal` positive.
struct AffineHyperplane {
    std::vector<Integer> normal;
    Integer offset;

    static AffineHyperplane from_rationals(const RationalVector& normal, const Rational& offset);
    std::string to_string() const;

    friend bool operator==(const AffineHyperplane&, const AffineHyperplane&) = default;
};

class AffineArrangement {
public:
    AffineArrangement() = default;
    AffineArrangement(std::size_t dim, std::vector<AffineHyperplane> hyperplanes,
                      std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    const std::vector<AffineHyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    const AffineHyperplane& hyperplane(std::size_t i) const { return hyperplanes_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(std::size_t i) const;

    /// For a deconing: index in the original central arrangement of hyperplane i.
    std::vector<std::size_t> source;

private:
    std::size_t dim_ = 0;
    std::vector<AffineHyperplane> hyperplanes_;
    std::vector<std::string> labels_;
};

/// Arrangement with a nonnegative multiplicity per hyperplane. Zero
/// multiplicities stay in `base` but contribute nothing to Q(A, m).
struct Multiarrangement {
    CentralArrangement base;
    std::vector<int> mult;

    Multiarrangement() = default;
    Multiarrangement(CentralArrangement base, std::vector<int> mult);
    static Multiarrangement simple(CentralArrangement base);

    std::size_t dim() const noexcept { return base.dim(); }
    int total() const;
    bool is_simple() const;
    /// The sub-multiarrangement of hyperplanes with positive multiplicity.
    Multiarrangement support() const;
};

/// Parses raw rational vectors into a canonical arrangement, preserving order.
/// Errors: DimensionMismatch, ZeroForm, DuplicateHyperplane.
CentralArrangement canonicalize(const std::vector<RationalVector>& raw, std::size_t dim,
                                std::vector<std::string> labels = {});

/// Affine slice {alpha_{h0} = 1}. Coordinates: with j the first nonzero index of
/// alpha_{h0}, the new coordinates are x_k (k != j) in increasing order, and
/// alpha_{h0} is the last coordinate, fixed to 1. Throws IndexOutOfRange.
AffineArrangement decone(const CentralArrangement& a, std::size_t h0);

/// Restriction onto H0 weighted by fiber sizes, in the same coordinates as the
/// deconing (x_k, k != j). Hyperplanes appear in order of first occurrence.
/// Throws IndexOutOfRange, DimensionMismatch when dim < 2.
Multiarrangement ziegler_restriction(const CentralArrangement& a, std::size_t h0);

/// For each hyperplane of `a` other than h0 (indexed as in `a`, h0 mapping to
/// npos), the index of its restriction in ziegler_restriction(a, h0).
std::vector<std::size_t> ziegler_fibers(const CentralArrangement& a, std::size_t h0);

}  // namespace hyparr

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hyparr {

/// Dense univariate integer polynomial in t; coefficient i multiplies t^i.
/// The coefficient vector never carries trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);
    IntPolynomial(std::initializer_list<std::int64_t> coefficients)
        : IntPolynomial(std::vector<std::int64_t>(coefficients)) {}

    static IntPolynomial monomial(std::size_t degree, std::int64_t coefficient = 1);
    /// Product of (t - root) over the given roots.
    static IntPolynomial from_roots(std::span<const int> roots);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coefficient(std::size_t power) const noexcept {
        return power < coeffs_.size() ? coeffs_[power] : 0;
    }
    std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

    std::int64_t evaluate(std::int64_t t) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "t^3 - 4*t^2 + 6*t - 3"
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

struct LinearDivision {
    IntPolynomial quotient;
    std::int64_t remainder = 0;
};

/// Synthetic division by (t - root).
LinearDivision divide_by_linear(const IntPolynomial& p, std::int64_t root);

}  // namespace hyparr

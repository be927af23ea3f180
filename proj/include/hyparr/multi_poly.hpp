#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

using Exponent = std::vector<int>;

/// All exponent vectors of total degree `degree` in `vars` variables, in
/// lexicographically decreasing order (x_1^d first).
std::vector<Exponent> monomials_of_degree(std::size_t vars, int degree);

/// Sparse multivariate polynomial with rational coefficients.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t vars) : vars_(vars) {}

    static MultiPoly constant(std::size_t vars, const Rational& c);
    static MultiPoly variable(std::size_t vars, std::size_t index);
    static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
    static MultiPoly linear(std::span<const Rational> coefficients);

    std::size_t vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Total degree, or -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;
    /// Coefficient of the lexicographically largest term; zero for the zero polynomial.
    Rational leading_coefficient() const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly pow(int k) const;

    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string to_string() const;

private:
    std::size_t vars_ = 0;
    Terms terms_;
};

}  // namespace hyparr

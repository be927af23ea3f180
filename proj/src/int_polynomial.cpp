#include "hyparr/int_polynomial.hpp"

#include <cstdlib>

namespace hyparr {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, std::int64_t coefficient) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_roots(std::span<const int> roots) {
    IntPolynomial p{1};
    for (int r : roots) p = p * IntPolynomial{-static_cast<std::int64_t>(r), 1};
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const std::int64_t c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const std::int64_t mag = std::llabs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (d == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "t";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out;
}

LinearDivision divide_by_linear(const IntPolynomial& p, std::int64_t root) {
    const auto& c = p.coefficients();
    if (c.empty()) return {};
    std::vector<std::int64_t> q(c.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const std::int64_t v = c[i] + carry * root;
        if (i == 0) return {IntPolynomial(std::move(q)), v};
        q[i - 1] = v;
        carry = v;
    }
    return {};
}

}  // namespace hyparr

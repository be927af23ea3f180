#include "hyparr/multi_poly.hpp"

#include <numeric>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

void fill_monomials(std::size_t vars, std::size_t index, int remaining, Exponent& current,
                    std::vector<Exponent>& out) {
    if (index + 1 == vars) {
        current[index] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[index] = k;
        fill_monomials(vars, index + 1, remaining - k, current, out);
    }
}

void check_vars(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch, "polynomials in " + std::to_string(a) + " and " +
                                                      std::to_string(b) + " variables");
    }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t vars, int degree) {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    if (vars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent current(vars, 0);
    fill_monomials(vars, 0, degree, current, out);
    return out;
}

MultiPoly MultiPoly::constant(std::size_t vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t vars, std::size_t index) {
    Exponent e(vars, 0);
    e.at(index) = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coefficients) {
    MultiPoly p(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Exponent e(coefficients.size(), 0);
        e[i] = 1;
        p.add_term(e, coefficients[i]);
    }
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    const int d = degree();
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    }
    return true;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    check_vars(vars_, e.size());
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_vars(vars_, other.vars_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_vars(vars_, other.vars_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_vars(a.vars_, b.vars_);
    MultiPoly out(a.vars_);
    Exponent e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    check_vars(vars_, point.size());
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace hyparr

#include "hyparr/rational.hpp"

#include <cctype>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s) {
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s)) {
            throw Error(ErrorCode::ParseError, "cannot parse '" + std::string(text) + "' as a rational");
        }
        return Rational(parse_integer(s));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw Error(ErrorCode::ParseError, "cannot parse '" + std::string(text) + "' as a rational");
    }
    Integer d = parse_integer(den);
    if (d == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_string(const Integer& value) {
    return value.get_str();
}

std::vector<Integer> primitive_integer_vector(const RationalVector& v) {
    return primitive_integer_vector(v, v.size());
}

std::vector<Integer> primitive_integer_vector(const RationalVector& v, std::size_t sign_prefix) {
    Integer lcm_den = 1;
    bool any = false;
    for (const auto& q : v) {
        if (q != 0) any = true;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
    if (!any) return {};

    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = q.get_num() * (lcm_den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    int sign = 0;
    for (std::size_t i = 0; i < sign_prefix && i < out.size() && sign == 0; ++i) sign = sgn(out[i]);
    if (sign == 0) {
        for (const auto& z : out) {
            if (sign == 0) sign = sgn(z);
        }
    }
    if (sign < 0) g = -g;
    for (auto& z : out) z /= g;
    return out;
}

RationalVector to_rationals(const std::vector<Integer>& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

}  // namespace hyparr

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hyparr {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "7", "-3", "2/5" or "-4/6" into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Scales a nonzero rational vector to the primitive integer vector with a positive
/// leading nonzero entry. Returns an empty vector when the input is zero.
std::vector<Integer> primitive_integer_vector(const RationalVector& v);

/// Primitive normalization for a hyperplane given with an extra constant column:
/// the whole tuple is made primitive integer and the sign fixed by the first
/// nonzero entry among the leading `sign_prefix` coordinates.
std::vector<Integer> primitive_integer_vector(const RationalVector& v, std::size_t sign_prefix);

RationalVector to_rationals(const std::vector<Integer>& v);

}  // namespace hyparr

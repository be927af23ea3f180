#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/int_polynomial.hpp"
#include "hyparr/lattice.hpp"

namespace hyparr::oracles {

/// Largest point set the finite-field oracle will enumerate.
inline constexpr std::int64_t max_points = 10'000'000;

struct PrimeWitness {
    std::int64_t prime = 0;
    std::int64_t point_count = 0;
    bool accepted = false;
};

/// Largest absolute value over all square minors of the coefficient matrix.
/// Reduction modulo any prime above it keeps every rank, hence the lattice.
Integer bad_prime_bound(const CentralArrangement& a);

/// The `count` smallest primes above the bad-prime bound. Throws
/// InstanceTooLarge if they would need more than max_points points.
std::vector<std::int64_t> guarded_primes(const CentralArrangement& a, std::size_t count);

/// Points of F_q^dim on no hyperplane.
std::int64_t complement_point_count(const CentralArrangement& a, std::int64_t q);

struct FiniteFieldResult {
    IntPolynomial poly;
    std::vector<PrimeWitness> witnesses;
};

/// Interpolates chi(A, t) through the complement point counts over F_q. Needs at
/// least dim+1 guarded primes; extra primes are checked against the result.
/// Errors: BadPrime, InconsistentCounts, InstanceTooLarge.
FiniteFieldResult finite_field_char_poly(const CentralArrangement& a, std::span<const std::int64_t> primes);

/// Same, with dim+2 primes chosen by guarded_primes.
FiniteFieldResult finite_field_char_poly(const CentralArrangement& a);

/// Deletion-restriction count of real regions, r(A) = r(A - H) + r(A^H).
std::int64_t region_count_recursion(const CentralArrangement& a);
std::int64_t region_count_recursion(const AffineArrangement& a);

/// mu(V, X) by direct recursion over the flats found by subset enumeration.
/// Throws FlatNotInLattice.
std::int64_t moebius_bruteforce(const CentralArrangement& a, const Flat& x);
std::int64_t moebius_bruteforce(const AffineArrangement& a, const Flat& x);

}  // namespace hyparr::oracles

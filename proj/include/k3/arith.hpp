#pragma once

// Machine-integer number theory shared by every module, plus the exact
// big-number scalars used wherever coefficients can grow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// Euler's totient. Throws std::invalid_argument for n < 1.
std::int64_t euler_phi(std::int64_t n);

/// Moebius function. Throws std::invalid_argument for n < 1.
int mobius(std::int64_t n);

/// Nonnegative gcd; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Multiplicative order of the class of `exponent` in Z/order, i.e. the order
/// of zeta^exponent for a primitive order-th root of unity zeta.
std::int64_t root_order(std::int64_t exponent, std::int64_t order);

std::string to_string(const Rational& q);

/// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

}  // namespace k3

#pragma once

// Roots of unity handled at the level of full Galois orbits.
//
// An orbit of order d stands for all phi(d) primitive d-th roots of unity at
// once; -1 is the orbit of order 2. Integrality of characteristic polynomials
// means an eigenvalue list of finite order is always a union of such orbits,
// so individual roots never need a representation.

#include "k3/arith.hpp"
#include "k3/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace k3 {

/// Sum of all primitive n-th roots of unity: 0 if n has a square factor,
/// (-1)^t if n is a product of t distinct primes.
int primitive_root_sum(std::int64_t n);

/// Sum of zeta^a over all primitive n-th roots zeta (the Ramanujan sum c_n(a)).
std::int64_t ramanujan_sum(std::int64_t n, std::int64_t a);

/// The cyclotomic polynomial Phi_n.
IntPoly cyclotomic_polynomial(std::int64_t n);

/// Multiset of Galois orbits of roots of unity: order d -> multiplicity r.
class OrbitProfile {
public:
    OrbitProfile() = default;

    /// Entries with the same order are merged; zero multiplicities dropped.
    explicit OrbitProfile(const std::map<std::int64_t, std::int64_t>& orbits);

    /// Parses the `d^r d^r ...` text form. Tokens may come in any order and
    /// repeat; the result is canonical. Throws std::invalid_argument on a
    /// malformed token.
    static OrbitProfile parse(const std::string& text);

    /// The identity profile 1^dim.
    static OrbitProfile identity(std::int64_t dim);

    OrbitProfile& add(std::int64_t order, std::int64_t multiplicity = 1);

    /// Canonical text: `d^r` tokens ascending in d, joined by single spaces.
    std::string str() const;

    /// Sum of r * phi(d).
    std::int64_t dimension() const;

    std::int64_t multiplicity(std::int64_t order) const;
    bool contains(std::int64_t order) const { return multiplicity(order) > 0; }

    const std::map<std::int64_t, std::int64_t>& orbits() const { return orbits_; }

    /// Least common multiple of the orders present.
    std::int64_t exponent() const;

    friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;
    friend auto operator<=>(const OrbitProfile& a, const OrbitProfile& b) { return a.str() <=> b.str(); }

private:
    std::map<std::int64_t, std::int64_t> orbits_;
};

/// Eigenvalue profile of the a-th power: orbit (d, r) goes to
/// (d', r * phi(d) / phi(d')) with d' = d / gcd(d, a).
OrbitProfile profile_power(const OrbitProfile& profile, std::int64_t a);

/// Trace of the a-th power of any linear map with this eigenvalue multiset.
std::int64_t profile_trace(const OrbitProfile& profile, std::int64_t a);

/// Multiplicity of the eigenvalue 1 in the a-th power.
std::int64_t invariant_dim(const OrbitProfile& profile, std::int64_t a);

/// Product of Phi_d^r over the profile, expanded.
IntPoly char_poly(const OrbitProfile& profile);

}  // namespace k3

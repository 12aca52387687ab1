#pragma once

#include "k3/cyclotomic.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

/// Second Betti number of a K3 surface.
inline constexpr std::int64_t k3_b2 = 22;

/// ord(g) = m.n: g has order m*n, its symplectic kernel has order m and its
/// image in GL(H^0(Omega^2)) has order n.
struct OrderSignature {
    std::int64_t symplectic = 1;     // m
    std::int64_t nonsymplectic = 1;  // n

    std::int64_t order() const { return symplectic * nonsymplectic; }

    /// "m.n"
    std::string str() const;
    static OrderSignature parse(const std::string& text);

    friend bool operator==(const OrderSignature&, const OrderSignature&) = default;
};

/// A row of the table of tame symplectic automorphisms of K3 surfaces.
struct SymplecticDatum {
    std::int64_t order = 0;
    OrbitProfile profile;
    std::int64_t fixed_points = 0;
};

/// Thrown for symplectic orders outside [2, 8].
class UnsupportedOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Eigenvalues on H^2 and fixed-point count of a tame symplectic
/// automorphism of order m, 2 <= m <= 8.
SymplecticDatum symplectic_profile(std::int64_t m);

/// All canonical profiles of dimension `dim` whose orbit orders divide the
/// total order and which (a) contain the trivial orbit, (b) contain the
/// orbit of order n, (c) power to the symplectic profile at exponent n when
/// m > 1. Sorted by canonical text.
std::vector<OrbitProfile> enumerate_profiles(const OrderSignature& signature, std::int64_t dim = k3_b2);

/// Whether N can be a non-symplectic order in characteristic p (p = 0 for
/// characteristic zero): p does not divide N, N != 60 and phi(N) <= 20.
bool nonsymplectic_order_feasible(std::int64_t p, std::int64_t n);

}  // namespace k3

#pragma once

#include "k3/cyclotomic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace k3 {

/// Euler number of the K3 surface itself, e(X) = 24.
inline constexpr std::int64_t k3_euler = 24;

/// e(g^a) = 2 + Tr(g^a* | H^2): H^0 and H^4 contribute 1 each, H^1 = H^3 = 0.
///
/// The order of g is taken as the exponent of the profile (the action on H^2
/// of a K3 is faithful). Exponents a = 0 mod that order are rejected: the
/// identity fixes all of X and e(X) = 24 is not given by this formula in any
/// useful sense. Throws std::invalid_argument for that case or when the
/// profile does not have dimension 22.
std::int64_t lefschetz_euler(const OrbitProfile& profile, std::int64_t a);

enum class CurveRole { plain, rational_component, section, multisection };

struct FixedCurve {
    std::int64_t genus = 0;
    CurveRole role = CurveRole::plain;
    std::int64_t section_degree = 0;  // k for a k-section

    std::int64_t euler() const { return 2 - 2 * genus; }
    std::string str() const;

    friend bool operator==(const FixedCurve&, const FixedCurve&) = default;
};

/// Hypothesis for a fixed locus: isolated points plus smooth curves.
struct FixedLocusModel {
    std::int64_t points = 0;
    std::vector<FixedCurve> curves;  // ascending genus

    std::int64_t euler() const;
    std::int64_t rational_curves() const;
    /// Number of curves of genus >= 1.
    std::int64_t irrational_curves() const;
    std::string str() const;

    friend bool operator==(const FixedLocusModel&, const FixedLocusModel&) = default;
};

/// All fixed-locus models with Euler number e and at most max_curves curves.
///
/// With the involution axiom the locus is a disjoint union of smooth curves
/// with at most one of genus >= 1, and no isolated points; the genus of the
/// big curve is then forced by e. Without it, curves of genus up to
/// max_genus are allowed and points absorb the rest of the Euler number
/// (forbidden unless allow_points). Sorted by the model text.
std::vector<FixedLocusModel> decompose_fixed_locus(std::int64_t e, std::int64_t max_curves, bool allow_points,
    bool involution_axiom, std::int64_t max_genus = 10);

/// Riemann-Hurwitz for a cyclic action of prime order n on a curve of genus
/// g_top with f fixed points: is there an integer g' >= 0 with
/// 2 g_top - 2 = n (2 g' - 2) + f (n - 1)?
bool rh_feasible(std::int64_t n, std::int64_t g_top, std::int64_t f);

/// Multisets (ascending) of divisors of group_order summing to d, in
/// lexicographic order. d = 0 gives the single empty partition.
std::vector<std::vector<std::int64_t>> orbit_partitions(std::int64_t d, std::int64_t group_order);

}  // namespace k3

#pragma once

#include "k3/certificate.hpp"
#include "k3/cyclotomic.hpp"
#include "k3/profile_space.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace k3 {

/// Runs the elimination search on one profile.
///
/// Stages, each only where it applies:
///   symplectic powers: eigenvalues and fixed points of g^n against the
///     table, then 0 <= e(g^a) <= #Fix(g^n) for a | n;
///   the involution g^(N/2) when it is non-symplectic: fixed-locus models,
///     orbits of g on the rational components, order of g on the
///     irrational one;
///   for order 60 with [1, z60:16, z12:4, +-1]: the invariant elliptic
///     fibration and, for signature 1.60, the quotient by g^12.
/// Throws std::invalid_argument if the profile does not have dimension 22
/// or its exponent is not the order of the signature.
Certificate eliminate(const OrbitProfile& profile, const OrderSignature& signature);

/// Splits over enumerate_profiles(signature) and eliminates each.
Certificate eliminate_all(const OrderSignature& signature);

/// pinned for it.
/// the written argument quotes for it.
struct ClaimFamily {
    std::string id;
    std::vector<OrbitProfile> members;
    std::map<std::int64_t, std::int64_t> expected;      // a -> e(g^a), every member
    std::map<std::int64_t, std::int64_t> expected_max;  // a -> upper bound on e(g^a)
    std::map<std::string, std::map<std::int64_t, std::int64_t>> member_expected;
};

/// claim1 .. claim7 and the z12 family, all for signature 1.60.
const std::vector<ClaimFamily>& claim_families();

std::vector<std::string> replay_ids();

/// Deterministic scripted certificate. Throws std::invalid_argument for an
/// unknown id.
Certificate replay(const std::string& id);

struct CheckReport {
    bool ok = true;
    std::size_t steps = 0;
    std::vector<std::string> errors;
};

/// Re-executes every step from its recorded inputs and checks the tree:
/// recomputed values and verdicts, case counts of splits, branch order and
/// statuses.
CheckReport check_certificate(const Certificate& cert);

}  // namespace k3

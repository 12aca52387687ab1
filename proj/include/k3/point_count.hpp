#pragma once

// Point counts of X60 (through its elliptic fibration) and of the Fermat
// quartic over F_p and F_{p^2}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

/// F_q with q = p^ext; for ext = 2 it is F_p[s]/(s^2 - nu), nu the smallest
/// quadratic non-residue.
struct FieldSpec {
    std::uint32_t p = 0;
    int ext = 1;
    std::uint32_t nu = 0;  // 0 when ext = 1

    /// Throws std::invalid_argument unless p is an odd prime and ext is 1 or 2.
    static FieldSpec make(std::uint32_t p, int ext);
    std::uint64_t q() const { return ext == 1 ? p : std::uint64_t{p} * p; }
};

/// Arithmetic on F_q with elements encoded as a + b p in [0, q).
class FiniteField {
public:
    explicit FiniteField(const FieldSpec& spec);

    std::uint32_t size() const { return q_; }
    std::uint32_t add(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t neg(std::uint32_t u) const;
    std::uint32_t mul(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t pow(std::uint32_t u, std::uint64_t e) const;
    std::uint32_t from_int(long long v) const;
    std::string label(std::uint32_t u) const;  // "a" or "a+bs"

private:
    std::uint32_t p_, q_, nu_;
};

struct FiberCount {
    std::string t;  // base point, "inf" for t0 = 0
    std::uint64_t count = 0;
    std::string kind;  // smooth or cuspidal
};

struct ProbeCheck {
    std::string name;
    bool pass = false;
    bool asserted = true;  // false: reported expectation only
    std::string detail;
};

struct CountReport {
    std::string surface;
    FieldSpec field;
    std::uint64_t q = 0;
    std::int64_t n = 0;
    std::int64_t trace = 0;  // n - 1 - q^2
    std::vector<FiberCount> fibers;
    std::vector<ProbeCheck> checks;

    /// All asserted checks pass.
    bool ok() const;
};

/// X60 over F_q, summing y^2 = -x^3 - B(t) plus the section point over
/// t in P^1(F_q). Throws std::invalid_argument for p in {2, 3, 5}.
CountReport count_points(const FieldSpec& field);

/// x0^4 + x1^4 + x2^4 + x3^4 = 0 in P^3(F_q).
CountReport count_fermat_quartic(const FieldSpec& field);

struct ProbeReport {
    std::uint32_t p = 0;
    std::int64_t trace_p = 0;
    std::int64_t trace_p2 = 0;
    std::int64_t fermat_p2 = 0;
    std::int64_t x60_p2 = 0;
    std::vector<ProbeCheck> checks;

    bool ok() const;
};

/// Thrown when a probe is asked for outside its congruence class.
struct Refused : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Frobenius traces of X60 at p and p^2 for p = 11 mod 12. Throws Refused
/// for other p.
ProbeReport supersingular_probe(std::uint32_t p);

}  // namespace k3

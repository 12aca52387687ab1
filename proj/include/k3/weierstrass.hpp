#pragma once

// Weierstrass models y^2 + x^3 + A(t0,t1) x + B(t0,t1) = 0 with deg A = 8,
// deg B = 12: singular fibres, invariant forms under a diagonal cyclic
// action, and the order 60 model X60.

#include "k3/binary_form.hpp"
#include "k3/prime_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3 {

/// "Q" (p = 0) or "Fp:<p>".
struct BaseField {
    std::uint32_t p = 0;

    static BaseField parse(const std::string& text);
    std::string str() const;
};

struct FiberReport {
    std::string place;  // "t0", or the monic factor of Delta(1, t)
    std::int64_t place_degree = 1;
    std::int64_t multiplicity = 0;  // v(Delta)
    std::optional<std::int64_t> v_a, v_b;  // empty for the zero form
    std::string kodaira_type;  // I_n, II, III, IV or unsupported
    std::int64_t local_euler = 0;  // 0 when unsupported
};

struct FibrationReport {
    std::string field;
    std::vector<FiberReport> fibers;
    std::int64_t euler_sum = 0;  // sum of local_euler * place_degree
    std::int64_t degree_sum = 0;  // sum of multiplicity * place_degree
    std::int64_t geometric_fibers = 0;
    std::int64_t unsupported = 0;
};

/// Throws std::invalid_argument for Delta = 0, a non-minimal place or
/// wrong degrees.
FibrationReport classify_fibers(const BinaryForm<Rational>& a, const BinaryForm<Rational>& b);

/// Over F_p; coefficients are reduced mod p. Throws std::invalid_argument
/// for p in {2, 3} or p not prime, and as above.
FibrationReport classify_fibers(const BinaryForm<Fp>& a, const BinaryForm<Fp>& b, std::uint32_t p);

/// Exponents j in [0, degree] with weight_t1 * j = target mod order: the
/// monomials t0^(degree-j) t1^j spanning the equivariant forms.
std::vector<std::int64_t> invariant_form_space(std::int64_t degree, std::int64_t weight_t1, std::int64_t target,
    std::int64_t order);

struct Character {
    std::int64_t exponent = 0;
    std::int64_t order = 1;
};

/// Character of dx ^ dt / y under x -> z^wx x, y -> z^wy y, t -> z^wt t.
Character two_form_character(std::int64_t wx, std::int64_t wy, std::int64_t wt, std::int64_t order);

/// Diagonal action (t0, t1, x, y) -> (t0, z^t1 t1, z^x x, z^y y), z of order `order`.
struct ActionWeights {
    std::int64_t x = 2;
    std::int64_t y = 3;
    std::int64_t t1 = 6;
    std::int64_t order = 60;
};

/// The exponent c with F(g.p) = z^c F(p) for the Weierstrass polynomial F,
/// or nullopt if its monomials pick up different factors.
template <class Scalar>
std::optional<std::int64_t> equivariance_exponent(const BinaryForm<Scalar>& a, const BinaryForm<Scalar>& b,
    const ActionWeights& w)
{
    auto m = [&](std::int64_t e) { return ((e % w.order) + w.order) % w.order; };
    const std::int64_t c = m(2 * w.y);
    if (m(3 * w.x) != c) {
        return std::nullopt;
    }
    for (std::int64_t j = 0; j <= a.degree(); ++j) {
        if (!(a[static_cast<std::size_t>(j)] == Scalar(0)) && m(w.t1 * j + w.x) != c) {
            return std::nullopt;
        }
    }
    for (std::int64_t j = 0; j <= b.degree(); ++j) {
        if (!(b[static_cast<std::size_t>(j)] == Scalar(0)) && m(w.t1 * j) != c) {
            return std::nullopt;
        }
    }
    return c;
}

template <class Scalar>
struct X60Model {
    BinaryForm<Scalar> a;
    BinaryForm<Scalar> b;
    ActionWeights weights;
    std::int64_t equivariance = 0;
};

/// y^2 + x^3 + t0 t1^11 - t0^11 t1 = 0 with weights (2, 3, 6) mod 60.
X60Model<Rational> build_x60();

/// The same model over F_p. Throws std::invalid_argument for p in {2, 3, 5}
/// or p not prime.
X60Model<Fp> build_x60(std::uint32_t p);

/// Human-readable polynomial in `var`, descending powers.
template <class Scalar>
std::string polynomial_text(const Polynomial<Scalar>& f, const std::string& var = "t");

}  // namespace k3

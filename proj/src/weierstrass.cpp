#include "k3/weierstrass.hpp"

#include "k3/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3 {

namespace {

template <class Scalar>
bool negative(const Scalar& c)
{
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return c < 0;
    } else {
        return false;
    }
}

template <class Scalar>
std::optional<std::int64_t> place_valuation(const BinaryForm<Scalar>& f, const Polynomial<Scalar>* place)
{
    if (f.is_zero()) {
        return std::nullopt;
    }
    if (place == nullptr) {
        return f.order_at_infinity();
    }
    return valuation(f.dehomogenize(), *place);
}

bool at_least(const std::optional<std::int64_t>& v, std::int64_t k) { return !v || *v >= k; }

void classify_place(FiberReport& r)
{
    const auto& va = r.v_a;
    const auto& vb = r.v_b;
    if (at_least(va, 4) && at_least(vb, 6)) {
        throw std::invalid_argument("classify_fibers: non-minimal model at " + r.place);
    }
    if (va && *va == 0) {
        r.kodaira_type = "I_" + std::to_string(r.multiplicity);
        r.local_euler = r.multiplicity;
    } else if (at_least(va, 1) && vb && *vb == 1) {
        r.kodaira_type = "II";
        r.local_euler = 2;
    } else if (va && *va == 1 && at_least(vb, 2)) {
        r.kodaira_type = "III";
        r.local_euler = 3;
    } else if (at_least(va, 2) && vb && *vb == 2) {
        r.kodaira_type = "IV";
        r.local_euler = 4;
    } else {
        r.kodaira_type = "unsupported";
        r.local_euler = 0;
    }
}

template <class Scalar, class Factor>
FibrationReport classify(const BinaryForm<Scalar>& a, const BinaryForm<Scalar>& b, const std::string& field,
    Factor factor)
{
    const BinaryForm<Scalar> delta = form_discriminant(a, b);
    if (delta.is_zero()) {
        throw std::invalid_argument("classify_fibers: discriminant is zero");
    }
    FibrationReport rep;
    rep.field = field;

    auto add = [&](FiberReport r) {
        classify_place(r);
        rep.euler_sum += r.local_euler * r.place_degree;
        rep.degree_sum += r.multiplicity * r.place_degree;
        rep.geometric_fibers += r.place_degree;
        rep.unsupported += r.kodaira_type == "unsupported" ? 1 : 0;
        rep.fibers.push_back(std::move(r));
    };

    if (const std::int64_t v = delta.order_at_infinity(); v > 0) {
        FiberReport r;
        r.place = "t0";
        r.multiplicity = v;
        r.v_a = place_valuation<Scalar>(a, nullptr);
        r.v_b = place_valuation<Scalar>(b, nullptr);
        add(std::move(r));
    }
    const Polynomial<Scalar> affine = delta.dehomogenize();
    if (affine.degree() >= 1) {
        for (const auto& [phi, mult] : factor(affine)) {
            FiberReport r;
            r.place = polynomial_text(phi);
            r.place_degree = phi.degree();
            r.multiplicity = mult;
            r.v_a = place_valuation(a, &phi);
            r.v_b = place_valuation(b, &phi);
            add(std::move(r));
        }
    }
    return rep;
}

BinaryForm<Fp> bind(const BinaryForm<Fp>& f, std::uint32_t p)
{
    std::vector<Fp> c;
    for (const auto& x : f.coefficients()) {
        c.emplace_back(x.value(), p);
    }
    return BinaryForm<Fp>(f.degree(), std::move(c));
}

void require_prime(std::uint32_t p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("not a prime: " + std::to_string(p));
    }
}

}  // namespace

BaseField BaseField::parse(const std::string& text)
{
    if (text == "Q") {
        return {};
    }
    if (text.rfind("Fp:", 0) == 0) {
        std::size_t used = 0;
        long long p = -1;
        try {
            p = std::stoll(text.substr(3), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == text.size() - 3 && p >= 2 && p < (1LL << 31) && is_prime(p)) {
            return {static_cast<std::uint32_t>(p)};
        }
    }
    throw std::invalid_argument("field must be Q or Fp:<prime>, got '" + text + "'");
}

std::string BaseField::str() const { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }

FibrationReport classify_fibers(const BinaryForm<Rational>& a, const BinaryForm<Rational>& b)
{
    return classify(a, b, "Q", [](const RatPoly& f) { return factor_over_rationals(f); });
}

FibrationReport classify_fibers(const BinaryForm<Fp>& a, const BinaryForm<Fp>& b, std::uint32_t p)
{
    require_prime(p);
    if (p == 2 || p == 3) {
        throw std::invalid_argument("classify_fibers: characteristic " + std::to_string(p) + " not supported");
    }
    return classify(bind(a, p), bind(b, p), BaseField{p}.str(), [](const FpPoly& f) { return factor_over_fp(f); });
}

std::vector<std::int64_t> invariant_form_space(std::int64_t degree, std::int64_t weight_t1, std::int64_t target,
    std::int64_t order)
{
    if (order < 1 || degree < 0) {
        throw std::invalid_argument("invariant_form_space: need order >= 1 and degree >= 0");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t j = 0; j <= degree; ++j) {
        if (mod(weight_t1 * j - target, order) == 0) {
            out.push_back(j);
        }
    }
    return out;
}

Character two_form_character(std::int64_t wx, std::int64_t wy, std::int64_t wt, std::int64_t order)
{
    if (order < 1) {
        throw std::invalid_argument("two_form_character: order must be positive");
    }
    const std::int64_t e = mod(wx + wt - wy, order);
    return {e, root_order(e, order)};
}

X60Model<Rational> build_x60()
{
    X60Model<Rational> m;
    m.a = BinaryForm<Rational>(8);
    m.b = BinaryForm<Rational>(12);
    m.b[1] = -1;
    m.b[11] = 1;
    const auto c = equivariance_exponent(m.a, m.b, m.weights);
    if (!c) {
        throw std::logic_error("build_x60: model is not equivariant");
    }
    m.equivariance = *c;
    return m;
}

X60Model<Fp> build_x60(std::uint32_t p)
{
    require_prime(p);
    if (p == 2 || p == 3 || p == 5) {
        throw std::invalid_argument("build_x60: bad reduction in characteristic " + std::to_string(p));
    }
    X60Model<Fp> m;
    m.a = BinaryForm<Fp>(8, std::vector<Fp>(9, Fp(0, p)));
    m.b = BinaryForm<Fp>(12, std::vector<Fp>(13, Fp(0, p)));
    m.b[1] = Fp(-1, p);
    m.b[11] = Fp(1, p);
    const auto c = equivariance_exponent(m.a, m.b, m.weights);
    if (!c) {
        throw std::logic_error("build_x60: model is not equivariant");
    }
    m.equivariance = *c;
    return m;
}

template <class Scalar>
std::string polynomial_text(const Polynomial<Scalar>& f, const std::string& var)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string s;
    for (long k = f.degree(); k >= 0; --k) {
        Scalar c = f[static_cast<std::size_t>(k)];
        if (c == Scalar(0)) {
            continue;
        }
        const bool neg = negative(c);
        if (neg) {
            c = Scalar(0) - c;
        }
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const bool unit = c == Scalar(1);
        if (k == 0) {
            s += scalar_string(c);
            continue;
        }
        if (!unit) {
            s += scalar_string(c) + "*";
        }
        s += var;
        if (k > 1) {
            s += "^" + std::to_string(k);
        }
    }
    return s;
}

template std::string polynomial_text(const Polynomial<Rational>&, const std::string&);
template std::string polynomial_text(const Polynomial<Fp>&, const std::string&);

}  // namespace k3

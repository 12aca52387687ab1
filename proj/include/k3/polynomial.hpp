#pragma once

#include "k3/arith.hpp"
#include "k3/prime_field.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3 {

inline std::string scalar_string(const Integer& x) { return x.str(); }
inline std::string scalar_string(const Rational& x) { return to_string(x); }
inline std::string scalar_string(const Fp& x) { return to_string(x); }

/// Dense univariate polynomial, coefficient of t^i at index i.
/// Trailing zeros are never stored, so the zero polynomial is empty.
template <class Scalar>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Scalar& s) { return Polynomial(std::vector<Scalar>{s}); }

    /// s * t^k
    static Polynomial monomial(const Scalar& s, std::size_t k)
    {
        std::vector<Scalar> c(k + 1, s - s);
        c[k] = s;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<Scalar>& coefficients() const { return c_; }

    Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

    const Scalar& leading() const
    {
        if (c_.empty()) {
            throw std::domain_error("Polynomial: leading coefficient of zero");
        }
        return c_.back();
    }

    Scalar eval(const Scalar& t) const
    {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<Scalar> d;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d.push_back(c_[i] * Scalar(static_cast<long long>(i)));
        }
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), Scalar(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), Scalar(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Scalar& s)
    {
        for (auto& x : c_) {
            x *= s;
        }
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return Polynomial() - *this; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned e) const
    {
        Polynomial acc = constant(Scalar(1));
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1U) {
                acc *= base;
            }
            base *= base;
            e >>= 1U;
        }
        return acc;
    }

    /// Quotient and remainder. Over a field any nonzero divisor works; over
    /// the integers the division must be exact coefficient-wise or this throws.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero()) {
            throw std::domain_error("Polynomial: division by zero");
        }
        std::vector<Scalar> rem = c_;
        const std::size_t dn = d.c_.size();
        if (rem.size() < dn) {
            return {Polynomial(), *this};
        }
        std::vector<Scalar> quot(rem.size() - dn + 1, Scalar(0));
        const Scalar& lead = d.c_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            const Scalar top = rem[k + dn - 1];
            if (top == Scalar(0)) {
                continue;
            }
            const Scalar q = exact_quotient(top, lead);
            quot[k] = q;
            for (std::size_t i = 0; i < dn; ++i) {
                rem[k + i] -= q * d.c_[i];
            }
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

    /// Divide by the leading coefficient (fields only).
    Polynomial monic() const
    {
        if (is_zero()) {
            return {};
        }
        Polynomial out = *this;
        const Scalar inv = Scalar(1) / leading();
        for (auto& x : out.c_) {
            x *= inv;
        }
        return out;
    }

    /// "c0,c1,...,cn" ascending.
    std::string str() const
    {
        if (c_.empty()) {
            return "0";
        }
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i != 0) {
                s += ",";
            }
            s += scalar_string(c_[i]);
        }
        return s;
    }

private:
    static Scalar exact_quotient(const Scalar& a, const Scalar& b)
    {
        if constexpr (std::is_same_v<Scalar, Integer>) {
            if (a % b != 0) {
                throw std::domain_error("Polynomial: inexact integer division");
            }
            return a / b;
        } else {
            return a / b;
        }
    }

    void trim()
    {
        while (!c_.empty() && c_.back() == Scalar(0)) {
            c_.pop_back();
        }
    }

    std::vector<Scalar> c_;
};

/// Monic gcd over a field.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b)
{
    while (!b.is_zero()) {
        Polynomial<Scalar> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g monic.
template <class Scalar>
struct Bezout {
    Polynomial<Scalar> g, s, t;
};

template <class Scalar>
Bezout<Scalar> extended_gcd(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    using P = Polynomial<Scalar>;
    P r0 = a, r1 = b;
    P s0 = P::constant(Scalar(1)), s1;
    P t0, t1 = P::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        P s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        P t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {r0, s0, t0};
    }
    const Scalar inv = Scalar(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Multiplicity of `factor` (degree >= 1) in `f` (nonzero), over a field.
template <class Scalar>
int valuation(Polynomial<Scalar> f, const Polynomial<Scalar>& factor)
{
    if (f.is_zero()) {
        throw std::domain_error("valuation of the zero polynomial");
    }
    int v = 0;
    while (true) {
        auto [q, r] = f.divmod(factor);
        if (!r.is_zero()) {
            return v;
        }
        f = std::move(q);
        ++v;
    }
}

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

}  // namespace k3

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace k3 {

/// Element of the prime field F_p with the modulus carried by the value.
///
/// A value built from a bare integer has modulus 0 and acts as an integer
/// constant: it takes the modulus of the other operand in mixed arithmetic.
/// This lets generic code write `Scalar(0)` and `Scalar(1)`.
class Fp {
public:
    Fp() = default;
    Fp(long long v) : value_(v) {}  // NOLINT: implicit constants are intended
    Fp(long long v, std::uint32_t p) : value_(reduce(v, p)), modulus_(p)
    {
        if (p < 2) {
            throw std::invalid_argument("Fp: modulus must be at least 2");
        }
    }

    std::uint32_t modulus() const { return modulus_; }

    /// Canonical representative in [0, p), or the raw constant if unbound.
    long long value() const { return value_; }

    Fp inverse() const
    {
        if (modulus_ == 0) {
            if (value_ == 1 || value_ == -1) {
                return *this;
            }
            throw std::domain_error("Fp: inverse of an unbound constant");
        }
        if (value_ == 0) {
            throw std::domain_error("Fp: inverse of zero");
        }
        return pow(modulus_ - 2);
    }

    Fp pow(std::uint64_t e) const
    {
        Fp base = *this;
        Fp acc(1);
        while (e != 0) {
            if (e & 1U) {
                acc *= base;
            }
            base *= base;
            e >>= 1U;
        }
        return acc;
    }

    Fp& operator+=(const Fp& o) { return add(o, 1); }
    Fp& operator-=(const Fp& o) { return add(o, -1); }
    Fp& operator*=(const Fp& o)
    {
        const std::uint32_t m = common_modulus(o);
        if (m == 0) {
            value_ *= o.value_;
            return *this;
        }
        const __int128 prod = static_cast<__int128>(reduce(value_, m)) * reduce(o.value_, m);
        value_ = static_cast<long long>(prod % m);
        modulus_ = m;
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= bind(o, common_modulus(o)).inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return Fp(0) - *this; }

    friend bool operator==(const Fp& a, const Fp& b)
    {
        const std::uint32_t m = a.common_modulus(b);
        if (m == 0) {
            return a.value_ == b.value_;
        }
        return reduce(a.value_, m) == reduce(b.value_, m);
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

private:
    static long long reduce(long long v, std::uint32_t p)
    {
        const long long r = v % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    }

    static Fp bind(const Fp& x, std::uint32_t m)
    {
        if (m == 0 || x.modulus_ == m) {
            return x;
        }
        return Fp(x.value_, m);
    }

    std::uint32_t common_modulus(const Fp& o) const
    {
        if (modulus_ != 0 && o.modulus_ != 0 && modulus_ != o.modulus_) {
            throw std::invalid_argument("Fp: mixing different moduli");
        }
        return modulus_ != 0 ? modulus_ : o.modulus_;
    }

    Fp& add(const Fp& o, int sign)
    {
        const std::uint32_t m = common_modulus(o);
        if (m == 0) {
            value_ += sign * o.value_;
            return *this;
        }
        value_ = reduce(reduce(value_, m) + sign * reduce(o.value_, m), m);
        modulus_ = m;
        return *this;
    }

    long long value_ = 0;
    std::uint32_t modulus_ = 0;
};

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace k3

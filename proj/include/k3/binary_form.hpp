#pragma once

#include "k3/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

/// Homogeneous form of fixed degree in t0, t1; coefficient of
/// t0^(deg - j) t1^j at index j. The zero form keeps its degree.
template <class Scalar>
class BinaryForm {
public:
    BinaryForm() = default;
    explicit BinaryForm(std::int64_t degree) : coeffs_(static_cast<std::size_t>(degree + 1), Scalar(0))
    {
        if (degree < 0) {
            throw std::invalid_argument("BinaryForm: negative degree");
        }
    }
    BinaryForm(std::int64_t degree, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
    {
        if (degree < 0 || coeffs_.size() > static_cast<std::size_t>(degree + 1)) {
            throw std::invalid_argument("BinaryForm: " + std::to_string(coeffs_.size())
                + " coefficients for degree " + std::to_string(degree));
        }
        coeffs_.resize(static_cast<std::size_t>(degree + 1), Scalar(0));
    }

    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    const Scalar& operator[](std::size_t j) const { return coeffs_.at(j); }
    Scalar& operator[](std::size_t j) { return coeffs_.at(j); }

    bool is_zero() const
    {
        for (const auto& c : coeffs_) {
            if (!(c == Scalar(0))) {
                return false;
            }
        }
        return true;
    }

    /// F(1, t): the affine chart t0 = 1 with t = t1 / t0.
    Polynomial<Scalar> dehomogenize() const { return Polynomial<Scalar>(coeffs_); }

    /// Multiplicity of t0 as a factor; -1 for the zero form.
    std::int64_t order_at_infinity() const
    {
        for (std::int64_t j = degree(); j >= 0; --j) {
            if (!(coeffs_[static_cast<std::size_t>(j)] == Scalar(0))) {
                return degree() - j;
            }
        }
        return -1;
    }

    Scalar eval(const Scalar& t0, const Scalar& t1) const
    {
        Scalar acc(0);
        for (std::int64_t j = 0; j <= degree(); ++j) {
            Scalar term = coeffs_[static_cast<std::size_t>(j)];
            for (std::int64_t i = 0; i < degree() - j; ++i) {
                term *= t0;
            }
            for (std::int64_t i = 0; i < j; ++i) {
                term *= t1;
            }
            acc += term;
        }
        return acc;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b)
    {
        a.require_same_degree(b);
        BinaryForm out = a;
        for (std::size_t j = 0; j < out.coeffs_.size(); ++j) {
            out.coeffs_[j] += b.coeffs_[j];
        }
        return out;
    }

    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b * Scalar(-1); }

    friend BinaryForm operator*(const BinaryForm& a, const Scalar& s)
    {
        BinaryForm out = a;
        for (auto& c : out.coeffs_) {
            c *= s;
        }
        return out;
    }
    friend BinaryForm operator*(const Scalar& s, const BinaryForm& a) { return a * s; }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b)
    {
        BinaryForm out(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b)
    {
        return a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
    }

    /// "c0,c1,...,cdeg"
    std::string str() const
    {
        std::string s;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            s += (j ? "," : "") + scalar_string(coeffs_[j]);
        }
        return s;
    }

private:
    void require_same_degree(const BinaryForm& o) const
    {
        if (degree() != o.degree()) {
            throw std::invalid_argument("BinaryForm: degree mismatch");
        }
    }

    std::vector<Scalar> coeffs_;
};

/// -4 A^3 - 27 B^2 for A of degree 8 and B of degree 12.
template <class Scalar>
BinaryForm<Scalar> form_discriminant(const BinaryForm<Scalar>& a, const BinaryForm<Scalar>& b)
{
    if (a.degree() != 8 || b.degree() != 12) {
        throw std::invalid_argument("form_discriminant: need degrees 8 and 12, got " + std::to_string(a.degree())
            + " and " + std::to_string(b.degree()));
    }
    return a * a * a * Scalar(-4) + b * b * Scalar(-27);
}

}  // namespace k3

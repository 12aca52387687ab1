#include "k3/cyclotomic.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace k3 {

int primitive_root_sum(std::int64_t n)
{
    return mobius(n);
}

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t a)
{
    if (n < 1) {
        throw std::invalid_argument("ramanujan_sum: n must be positive");
    }
    const std::int64_t reduced = n / gcd(n, a);
    return euler_phi(n) / euler_phi(reduced) * primitive_root_sum(reduced);
}

IntPoly cyclotomic_polynomial(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    }
    // Phi_n = prod_{d | n} (t^d - 1)^mu(n/d); multiply the numerator factors
    // first, then divide out the denominator factors exactly.
    IntPoly num = IntPoly::constant(1);
    IntPoly den = IntPoly::constant(1);
    for (std::int64_t d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0) {
            continue;
        }
        const IntPoly f = IntPoly::monomial(1, static_cast<std::size_t>(d)) - IntPoly::constant(1);
        (mu > 0 ? num : den) *= f;
    }
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) {
        throw std::logic_error("cyclotomic_polynomial: inexact division");
    }
    return q;
}

OrbitProfile::OrbitProfile(const std::map<std::int64_t, std::int64_t>& orbits)
{
    for (auto [d, r] : orbits) {
        add(d, r);
    }
}

OrbitProfile OrbitProfile::identity(std::int64_t dim)
{
    OrbitProfile p;
    p.add(1, dim);
    return p;
}

OrbitProfile& OrbitProfile::add(std::int64_t order, std::int64_t multiplicity)
{
    if (order < 1) {
        throw std::invalid_argument("OrbitProfile: orbit order must be positive");
    }
    if (multiplicity < 0) {
        throw std::invalid_argument("OrbitProfile: negative multiplicity");
    }
    if (multiplicity > 0) {
        orbits_[order] += multiplicity;
    }
    return *this;
}

OrbitProfile OrbitProfile::parse(const std::string& text)
{
    OrbitProfile p;
    std::istringstream in(text);
    std::string token;
    auto positive = [&](const std::string& digits) {
        if (digits.empty() || digits.size() > 12) {
            throw std::invalid_argument("OrbitProfile: bad token '" + token + "'");
        }
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("OrbitProfile: bad token '" + token + "'");
            }
        }
        const std::int64_t v = std::stoll(digits);
        if (v < 1) {
            throw std::invalid_argument("OrbitProfile: bad token '" + token + "'");
        }
        return v;
    };
    while (in >> token) {
        const auto caret = token.find('^');
        if (caret == std::string::npos) {
            throw std::invalid_argument("OrbitProfile: bad token '" + token + "'");
        }
        p.add(positive(token.substr(0, caret)), positive(token.substr(caret + 1)));
    }
    return p;
}

std::string OrbitProfile::str() const
{
    std::string s;
    for (auto [d, r] : orbits_) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(d) + "^" + std::to_string(r);
    }
    return s;
}

std::int64_t OrbitProfile::dimension() const
{
    std::int64_t dim = 0;
    for (auto [d, r] : orbits_) {
        dim += r * euler_phi(d);
    }
    return dim;
}

std::int64_t OrbitProfile::multiplicity(std::int64_t order) const
{
    const auto it = orbits_.find(order);
    return it == orbits_.end() ? 0 : it->second;
}

std::int64_t OrbitProfile::exponent() const
{
    std::int64_t l = 1;
    for (auto [d, r] : orbits_) {
        l = l / gcd(l, d) * d;
    }
    return l;
}

OrbitProfile profile_power(const OrbitProfile& profile, std::int64_t a)
{
    OrbitProfile out;
    for (auto [d, r] : profile.orbits()) {
        const std::int64_t image = d / gcd(d, a);
        out.add(image, r * euler_phi(d) / euler_phi(image));
    }
    return out;
}

std::int64_t profile_trace(const OrbitProfile& profile, std::int64_t a)
{
    std::int64_t tr = 0;
    for (auto [d, r] : profile.orbits()) {
        tr += r * ramanujan_sum(d, a);
    }
    return tr;
}

std::int64_t invariant_dim(const OrbitProfile& profile, std::int64_t a)
{
    return profile_power(profile, a).multiplicity(1);
}

IntPoly char_poly(const OrbitProfile& profile)
{
    IntPoly out = IntPoly::constant(1);
    for (auto [d, r] : profile.orbits()) {
        out *= cyclotomic_polynomial(d).pow(static_cast<unsigned>(r));
    }
    return out;
}

}  // namespace k3

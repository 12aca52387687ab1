#include "k3/profile_space.hpp"

#include <algorithm>
#include <functional>

namespace k3 {

std::string OrderSignature::str() const
{
    return std::to_string(symplectic) + "." + std::to_string(nonsymplectic);
}

OrderSignature OrderSignature::parse(const std::string& text)
{
    const auto dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size()) {
        throw std::invalid_argument("signature must look like m.n: '" + text + "'");
    }
    OrderSignature sig;
    try {
        std::size_t used = 0;
        sig.symplectic = std::stoll(text.substr(0, dot), &used);
        if (used != dot) {
            throw std::invalid_argument("");
        }
        const std::string rest = text.substr(dot + 1);
        sig.nonsymplectic = std::stoll(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument("");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("signature must look like m.n: '" + text + "'");
    }
    if (sig.symplectic < 1 || sig.nonsymplectic < 1) {
        throw std::invalid_argument("signature entries must be positive: '" + text + "'");
    }
    return sig;
}

SymplecticDatum symplectic_profile(std::int64_t m)
{
    // Eigenvalues on H^2; the leading 1 is the invariant ample class.
    static const std::map<std::int64_t, std::pair<const char*, std::int64_t>> table = {
        {2, {"1^14 2^8", 8}},
        {3, {"1^10 3^6", 6}},
        {4, {"1^8 2^6 4^4", 4}},
        {5, {"1^6 5^4", 4}},
        {6, {"1^6 2^4 3^4 6^2", 2}},
        {7, {"1^4 7^3", 3}},
        {8, {"1^4 2^4 4^3 8^2", 2}},
    };
    const auto it = table.find(m);
    if (it == table.end()) {
        throw UnsupportedOrder("no tame symplectic automorphism of order " + std::to_string(m));
    }
    return {m, OrbitProfile::parse(it->second.first), it->second.second};
}

std::vector<OrbitProfile> enumerate_profiles(const OrderSignature& signature, std::int64_t dim)
{
    const std::int64_t m = signature.symplectic;
    const std::int64_t n = signature.nonsymplectic;
    if (m != 1 && (m < 2 || m > 8)) {
        throw UnsupportedOrder("no tame symplectic automorphism of order " + std::to_string(m));
    }
    const std::int64_t total = signature.order();
    const std::vector<std::int64_t> orders = divisors(total);

    OrbitProfile target;
    if (m > 1) {
        target = symplectic_profile(m).profile;
    }

    // Fix the mandatory orbits, then distribute what remains over all orders
    // dividing the total order.
    OrbitProfile base;
    base.add(1);
    if (n != 1) {
        base.add(n);
    }
    const std::int64_t rest = dim - base.dimension();

    std::vector<OrbitProfile> out;
    if (rest < 0) {
        return out;
    }
    OrbitProfile current = base;
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t idx, std::int64_t left) {
        if (left == 0) {
            if (m == 1 || profile_power(current, n) == target) {
                out.push_back(current);
            }
            return;
        }
        if (idx == orders.size()) {
            return;
        }
        const std::int64_t d = orders[idx];
        const std::int64_t w = euler_phi(d);
        for (std::int64_t k = 0; k * w <= left; ++k) {
            OrbitProfile saved = current;
            current.add(d, k);
            fill(idx + 1, left - k * w);
            current = std::move(saved);
        }
    };
    fill(0, rest);

    std::sort(out.begin(), out.end(), [](const OrbitProfile& a, const OrbitProfile& b) { return a.str() < b.str(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool nonsymplectic_order_feasible(std::int64_t p, std::int64_t n)
{
    if (n < 1) {
        return false;
    }
    if (p > 0 && n % p == 0) {
        return false;
    }
    return n != 60 && euler_phi(n) <= 20;
}

}  // namespace k3

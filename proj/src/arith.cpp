#include "k3/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace k3 {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("factorize: n must be positive");
    }
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::int64_t euler_phi(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("euler_phi: n must be positive");
    }
    std::int64_t phi = n;
    for (auto [p, e] : factorize(n)) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

int mobius(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("mobius: n must be positive");
    }
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) {
            return 0;
        }
        sign = -sign;
    }
    return sign;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t root_order(std::int64_t exponent, std::int64_t order)
{
    if (order < 1) {
        throw std::invalid_argument("root_order: order must be positive");
    }
    return order / gcd(mod(exponent, order), order);
}

std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

}  // namespace k3

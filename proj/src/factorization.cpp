#include "k3/factorization.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

namespace k3 {

namespace {

std::uint32_t modulus_of(const FpPoly& f)
{
    for (const auto& c : f.coefficients()) {
        if (c.modulus() != 0) {
            return c.modulus();
        }
    }
    throw std::invalid_argument("factor_over_fp: coefficients carry no modulus");
}

FpPoly variable(std::uint32_t p) { return FpPoly({Fp(0, p), Fp(1, p)}); }

FpPoly bind(const FpPoly& f, std::uint32_t p)
{
    std::vector<Fp> c;
    for (const auto& x : f.coefficients()) {
        c.emplace_back(x.value(), p);
    }
    return FpPoly(std::move(c));
}

/// g(t) with g^p = f; f has only exponents divisible by p.
FpPoly pth_root(const FpPoly& f, std::uint32_t p)
{
    std::vector<Fp> c;
    const auto& fc = f.coefficients();
    for (std::size_t i = 0; i < fc.size(); i += p) {
        c.push_back(fc[i]);  // a^(1/p) = a in F_p
    }
    return FpPoly(std::move(c));
}

template <class P>
bool degree_less(const std::pair<P, int>& x, const std::pair<P, int>& y)
{
    if (x.first.degree() != y.first.degree()) {
        return x.first.degree() < y.first.degree();
    }
    return x.first.str() < y.first.str();
}

std::vector<std::pair<FpPoly, long>> distinct_degree(FpPoly f, std::uint32_t p)
{
    std::vector<std::pair<FpPoly, long>> out;
    const FpPoly t = variable(p);
    FpPoly h = t % f;
    for (long d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, Integer(p), f);
        FpPoly g = gcd(f, h - t);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) {
        out.emplace_back(f.monic(), f.degree());
    }
    return out;
}

void equal_degree(const FpPoly& g, long d, std::uint32_t p, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    Integer e = 1;
    for (long i = 0; i < d; ++i) {
        e *= p;
    }
    e = (e - 1) / 2;
    std::uniform_int_distribution<long long> coeff(0, p - 1);
    while (true) {
        std::vector<Fp> c;
        for (long i = 0; i < g.degree(); ++i) {
            c.emplace_back(coeff(rng), p);
        }
        const FpPoly a(std::move(c));
        if (a.degree() < 1) {
            continue;
        }
        const FpPoly b = powmod(a, e, g) - FpPoly::constant(Fp(1, p));
        const FpPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, p, rng, out);
            equal_degree(g / h, d, p, rng, out);
            return;
        }
    }
}

// ---- integers ----

Integer abs_max(const IntPoly& f)
{
    Integer m = 0;
    for (const auto& c : f.coefficients()) {
        m = std::max(m, Integer(abs(c)));
    }
    return m;
}

Integer symmetric(const Integer& x, const Integer& m)
{
    Integer r = x % m;
    if (r < 0) {
        r += m;
    }
    if (2 * r > m) {
        r -= m;
    }
    return r;
}

IntPoly reduce(const IntPoly& f, const Integer& m)
{
    std::vector<Integer> c;
    for (const auto& x : f.coefficients()) {
        c.push_back(symmetric(x, m));
    }
    return IntPoly(std::move(c));
}

FpPoly to_fp(const IntPoly& f, std::uint32_t p)
{
    std::vector<Fp> c;
    for (const auto& x : f.coefficients()) {
        Integer r = x % p;
        c.emplace_back(static_cast<long long>(r), p);
    }
    return FpPoly(std::move(c));
}

IntPoly to_int(const FpPoly& f)
{
    std::vector<Integer> c;
    for (const auto& x : f.coefficients()) {
        c.emplace_back(x.value());
    }
    return IntPoly(std::move(c));
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b)
{
    try {
        auto [q, r] = a.divmod(b);
        if (!r.is_zero()) {
            return std::nullopt;
        }
        return q;
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

/// Lifts f = g*h mod p (g monic, coprime to h) to f = G*H mod p^k.
IntPoly hensel_lift(const IntPoly& f, const FpPoly& g_bar, std::uint32_t p, int k)
{
    const FpPoly f_bar = to_fp(f, p);
    const FpPoly h_bar = f_bar / g_bar;
    const Bezout<Fp> bz = extended_gcd(g_bar, h_bar);
    if (bz.g.degree() != 0) {
        throw std::logic_error("hensel_lift: factors not coprime mod p");
    }
    IntPoly g = to_int(g_bar);
    IntPoly h = to_int(h_bar);
    // keep the leading coefficient of h equal to that of f
    h = h + IntPoly::monomial(f.leading() - h.leading(), static_cast<std::size_t>(h.degree()));
    Integer m = p;
    for (int step = 1; step < k; ++step) {
        const IntPoly diff = f - g * h;
        std::vector<Integer> ec;
        for (const auto& c : diff.coefficients()) {
            ec.push_back(c / m);
        }
        const FpPoly e = to_fp(IntPoly(std::move(ec)), p);
        auto [q, sigma] = (bz.s * e).divmod(h_bar);
        const FpPoly tau = bz.t * e + q * g_bar;
        g = g + to_int(tau) * m;
        h = h + to_int(sigma) * m;
        m *= p;
    }
    return reduce(g, m);
}

std::vector<IntPoly> zassenhaus(const IntPoly& f)
{
    const long n = f.degree();
    if (n <= 1) {
        return {f};
    }
    // choose among a few good primes the one with the fewest modular factors
    std::uint32_t best_p = 0;
    std::vector<FpPoly> best;
    int tried = 0;
    for (std::uint32_t p = 3; tried < 6; p += 2) {
        if (!is_prime(p) || f.leading() % p == 0) {
            continue;
        }
        const FpPoly fb = to_fp(f, p);
        if (gcd(fb, fb.derivative()).degree() != 0) {
            continue;
        }
        ++tried;
        std::vector<FpPoly> fac;
        for (const auto& [g, m] : factor_over_fp(fb)) {
            fac.push_back(g);
        }
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
    }
    if (best.size() == 1) {
        return {f};
    }
    const std::uint32_t p = best_p;

    // any factor of f, scaled by lc(f), has coefficients below this
    Integer bound = abs(f.leading()) * abs_max(f) * (n + 1);
    bound <<= static_cast<unsigned>(n);
    int k = 1;
    Integer pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }
    std::vector<IntPoly> lifted;
    for (const auto& g : best) {
        lifted.push_back(hensel_lift(f, g, p, k));
    }

    std::vector<IntPoly> out;
    IntPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<bool> pick(lifted.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
        do {
            IntPoly cand = IntPoly::constant(rest.leading());
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                if (pick[i]) {
                    cand = reduce(cand * lifted[i], pk);
                }
            }
            const IntPoly g = primitive_part(cand);
            if (auto q = exact_divide(rest, g)) {
                out.push_back(g);
                rest = *q;
                std::vector<IntPoly> remaining;
                for (std::size_t i = 0; i < lifted.size(); ++i) {
                    if (!pick[i]) {
                        remaining.push_back(lifted[i]);
                    }
                }
                lifted = std::move(remaining);
                found = true;
                break;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        if (!found) {
            ++s;
        }
    }
    out.push_back(primitive_part(rest));
    return out;
}

RatPoly to_rat(const IntPoly& f)
{
    std::vector<Rational> c;
    for (const auto& x : f.coefficients()) {
        c.emplace_back(x);
    }
    return RatPoly(std::move(c));
}

}  // namespace

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m)
{
    FpPoly acc = FpPoly::constant(Fp(1)) % m;
    FpPoly b = base % m;
    const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        acc = (acc * acc) % m;
        if (bit_test(e, i)) {
            acc = (acc * b) % m;
        }
    }
    return acc;
}

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f_in)
{
    if (f_in.is_zero()) {
        throw std::domain_error("squarefree_decomposition of zero");
    }
    const std::uint32_t p = modulus_of(f_in);
    const FpPoly f = bind(f_in, p).monic();
    std::vector<std::pair<FpPoly, int>> out;
    if (f.degree() < 1) {
        return out;
    }
    const FpPoly d = f.derivative();
    if (d.is_zero()) {
        for (auto [g, m] : squarefree_decomposition(pth_root(f, p))) {
            out.emplace_back(g, m * static_cast<int>(p));
        }
        return out;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        const FpPoly y = gcd(w, c);
        const FpPoly z = w / y;
        if (z.degree() > 0) {
            out.emplace_back(z.monic(), i);
        }
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto [g, m] : squarefree_decomposition(pth_root(c.monic(), p))) {
            out.emplace_back(g, m * static_cast<int>(p));
        }
    }
    return out;
}

std::vector<std::pair<FpPoly, int>> factor_over_fp(const FpPoly& f_in)
{
    if (f_in.is_zero()) {
        throw std::domain_error("factor_over_fp of zero");
    }
    const std::uint32_t p = modulus_of(f_in);
    if (p == 2) {
        throw std::invalid_argument("factor_over_fp: characteristic 2 not supported");
    }
    std::mt19937_64 rng(0x6b33);
    std::vector<std::pair<FpPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f_in)) {
        for (const auto& [g, d] : distinct_degree(part, p)) {
            std::vector<FpPoly> irr;
            equal_degree(g, d, p, rng, irr);
            for (auto& h : irr) {
                out.emplace_back(h.monic(), mult);
            }
        }
    }
    std::sort(out.begin(), out.end(), degree_less<FpPoly>);
    return out;
}

IntPoly primitive_part(const IntPoly& f)
{
    if (f.is_zero()) {
        return f;
    }
    Integer g = 0;
    for (const auto& c : f.coefficients()) {
        g = boost::multiprecision::gcd(g, c);
    }
    if (f.leading() < 0) {
        g = -g;
    }
    std::vector<Integer> c;
    for (const auto& x : f.coefficients()) {
        c.push_back(x / g);
    }
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& f)
{
    Integer den = 1;
    for (const auto& c : f.coefficients()) {
        den = boost::multiprecision::lcm(den, Integer(denominator(c)));
    }
    std::vector<Integer> c;
    for (const auto& x : f.coefficients()) {
        c.push_back(Integer(numerator(x)) * (den / Integer(denominator(x))));
    }
    return primitive_part(IntPoly(std::move(c)));
}

std::vector<std::pair<IntPoly, int>> factor_over_integers(const IntPoly& f)
{
    if (f.is_zero()) {
        throw std::domain_error("factor_over_integers of zero");
    }
    std::vector<std::pair<IntPoly, int>> out;
    // Yun over Q
    const RatPoly fr = to_rat(primitive_part(f)).monic();
    if (fr.degree() >= 1) {
        RatPoly c = gcd(fr, fr.derivative());
        RatPoly w = fr / c;
        RatPoly y = fr.derivative() / c - w.derivative();
        int i = 1;
        while (w.degree() > 0) {
            const RatPoly z = gcd(w, y);
            if (z.degree() > 0) {
                for (auto& g : zassenhaus(primitive_part(z))) {
                    out.emplace_back(g, i);
                }
            }
            w = w / z;
            y = y / z - w.derivative();
            ++i;
        }
    }
    std::sort(out.begin(), out.end(), degree_less<IntPoly>);
    return out;
}

std::vector<std::pair<RatPoly, int>> factor_over_rationals(const RatPoly& f)
{
    if (f.is_zero()) {
        throw std::domain_error("factor_over_rationals of zero");
    }
    std::vector<std::pair<RatPoly, int>> out;
    for (const auto& [g, m] : factor_over_integers(primitive_part(f))) {
        out.emplace_back(to_rat(g).monic(), m);
    }
    std::sort(out.begin(), out.end(), degree_less<RatPoly>);
    return out;
}

}  // namespace k3

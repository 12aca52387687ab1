#include "k3/point_count.hpp"

#include "k3/arith.hpp"
#include "k3/weierstrass.hpp"

#include <stdexcept>

namespace k3 {

namespace {

bool is_square_mod(std::uint64_t a, std::uint32_t p)
{
    a %= p;
    if (a == 0) {
        return true;
    }
    std::uint64_t acc = 1, base = a, e = (p - 1) / 2;
    while (e != 0) {
        if (e & 1U) {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1U;
    }
    return acc == 1;
}

ProbeCheck weil_check(std::int64_t trace, std::uint64_t q)
{
    const auto bound = static_cast<std::int64_t>(22 * q);
    return {"weil_bound", trace <= bound && -trace <= bound, true,
        "|" + std::to_string(trace) + "| <= " + std::to_string(bound)};
}

}  // namespace

FieldSpec FieldSpec::make(std::uint32_t p, int ext)
{
    if (p < 3 || !is_prime(p) || p > 46337) {
        throw std::invalid_argument("field: p must be an odd prime below 46337, got " + std::to_string(p));
    }
    if (ext != 1 && ext != 2) {
        throw std::invalid_argument("field: ext must be 1 or 2");
    }
    FieldSpec f{p, ext, 0};
    if (ext == 2) {
        std::uint32_t nu = 2;
        while (is_square_mod(nu, p)) {
            ++nu;
        }
        f.nu = nu;
    }
    return f;
}

FiniteField::FiniteField(const FieldSpec& spec)
    : p_(spec.p), q_(static_cast<std::uint32_t>(spec.q())), nu_(spec.nu)
{
}

std::uint32_t FiniteField::add(std::uint32_t u, std::uint32_t v) const
{
    const std::uint32_t a = (u % p_ + v % p_) % p_;
    const std::uint32_t b = (u / p_ + v / p_) % p_;
    return a + b * p_;
}

std::uint32_t FiniteField::neg(std::uint32_t u) const
{
    const std::uint32_t a = (p_ - u % p_) % p_;
    const std::uint32_t b = (p_ - u / p_) % p_;
    return a + b * p_;
}

std::uint32_t FiniteField::mul(std::uint32_t u, std::uint32_t v) const
{
    const std::uint64_t a1 = u % p_, b1 = u / p_, a2 = v % p_, b2 = v / p_;
    // (a1 + b1 s)(a2 + b2 s) with s^2 = nu
    const std::uint64_t a = (a1 * a2 + b1 * b2 % p_ * nu_) % p_;
    const std::uint64_t b = (a1 * b2 + a2 * b1) % p_;
    return static_cast<std::uint32_t>(a + b * p_);
}

std::uint32_t FiniteField::pow(std::uint32_t u, std::uint64_t e) const
{
    std::uint32_t acc = 1, base = u;
    while (e != 0) {
        if (e & 1U) {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1U;
    }
    return acc;
}

std::uint32_t FiniteField::from_int(long long v) const
{
    return static_cast<std::uint32_t>(mod(v, p_));
}

std::string FiniteField::label(std::uint32_t u) const
{
    const std::uint32_t a = u % p_, b = u / p_;
    if (q_ == p_) {
        return std::to_string(a);
    }
    return std::to_string(a) + "+" + std::to_string(b) + "s";
}

bool CountReport::ok() const
{
    for (const auto& c : checks) {
        if (c.asserted && !c.pass) {
            return false;
        }
    }
    return true;
}

bool ProbeReport::ok() const
{
    for (const auto& c : checks) {
        if (c.asserted && !c.pass) {
            return false;
        }
    }
    return true;
}

CountReport count_points(const FieldSpec& field)
{
    const X60Model<Fp> model = build_x60(field.p);
    const FiniteField F(field);
    const std::uint32_t q = F.size();

    std::vector<std::uint32_t> roots(q, 0);  // #{y : y^2 = z}
    for (std::uint32_t y = 0; y < q; ++y) {
        ++roots[F.mul(y, y)];
    }
    std::vector<std::uint32_t> neg_cube(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        neg_cube[x] = F.neg(F.mul(x, F.mul(x, x)));
    }
    std::vector<std::uint32_t> bcoef;
    for (const auto& c : model.b.coefficients()) {
        bcoef.push_back(F.from_int(c.value()));
    }
    // B(1, t) by Horner in t; B(0, 1) is the top coefficient
    auto b_at = [&](std::uint32_t t) {
        std::uint32_t acc = 0;
        for (std::size_t j = bcoef.size(); j-- > 0;) {
            acc = F.add(F.mul(acc, t), bcoef[j]);
        }
        return acc;
    };

    CountReport rep;
    rep.surface = "X60";
    rep.field = field;
    rep.q = q;
    std::uint64_t total = 0;
    bool hasse = true, cusp = true;
    std::int64_t cuspidal = 0;
    auto fiber = [&](const std::string& label, std::uint32_t bt) {
        std::uint64_t affine = 0;
        for (std::uint32_t x = 0; x < q; ++x) {
            affine += roots[F.add(neg_cube[x], F.neg(bt))];
        }
        const std::uint64_t count = affine + 1;
        FiberCount fc{label, count, bt == 0 ? "cuspidal" : "smooth"};
        if (bt == 0) {
            ++cuspidal;
            cusp = cusp && count == std::uint64_t{q} + 1;
        } else {
            const auto d = static_cast<std::int64_t>(count) - static_cast<std::int64_t>(q) - 1;
            hasse = hasse && d * d <= 4 * static_cast<std::int64_t>(q);
        }
        total += count;
        rep.fibers.push_back(std::move(fc));
    };
    fiber("inf", bcoef.back());
    for (std::uint32_t t = 0; t < q; ++t) {
        fiber(F.label(t), b_at(t));
    }

    const auto qq = static_cast<std::int64_t>(q);
    rep.n = static_cast<std::int64_t>(total);
    rep.trace = rep.n - 1 - qq * qq;
    rep.checks.push_back({"hasse_smooth_fibers", hasse, true, "every smooth fibre within q+1 +- 2 sqrt(q)"});
    rep.checks.push_back({"cuspidal_fibers", cusp, true,
        std::to_string(cuspidal) + " cuspidal fibres with q+1 points each"});
    rep.checks.push_back(weil_check(rep.trace, q));
    if (field.p % 12 == 11) {
        if (field.ext == 1) {
            rep.checks.push_back({"trace_divisible_by_p", rep.trace % field.p == 0, true,
                "trace " + std::to_string(rep.trace) + " mod " + std::to_string(field.p)});
        } else {
            rep.checks.push_back({"trace_equals_22q", rep.trace == 22 * qq, false,
                "trace " + std::to_string(rep.trace) + " vs " + std::to_string(22 * qq)});
        }
    }
    return rep;
}

CountReport count_fermat_quartic(const FieldSpec& field)
{
    const FiniteField F(field);
    const std::uint32_t q = F.size();
    std::vector<std::uint64_t> fourth(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) {
        ++fourth[F.pow(x, 4)];
    }
    std::vector<std::uint32_t> support;
    for (std::uint32_t v = 0; v < q; ++v) {
        if (fourth[v] != 0) {
            support.push_back(v);
        }
    }
    // pairs[v] = #{(x0, x1) : x0^4 + x1^4 = v}
    std::vector<std::uint64_t> pairs(q, 0);
    for (std::uint32_t u : support) {
        for (std::uint32_t w : support) {
            pairs[F.add(u, w)] += fourth[u] * fourth[w];
        }
    }
    std::uint64_t cone = 0;
    for (std::uint32_t v = 0; v < q; ++v) {
        cone += pairs[v] * pairs[F.neg(v)];
    }
    CountReport rep;
    rep.surface = "fermat_quartic";
    rep.field = field;
    rep.q = q;
    rep.n = static_cast<std::int64_t>((cone - 1) / (q - 1));
    const auto qq = static_cast<std::int64_t>(q);
    rep.trace = rep.n - 1 - qq * qq;
    rep.checks.push_back(weil_check(rep.trace, q));
    return rep;
}

ProbeReport supersingular_probe(std::uint32_t p)
{
    if (!is_prime(p) || p % 12 != 11) {
        throw Refused("supersingular probe needs a prime p = 11 mod 12; " + std::to_string(p) + " is "
            + (is_prime(p) ? std::to_string(p % 12) + " mod 12" : "not prime"));
    }
    ProbeReport rep;
    rep.p = p;
    const CountReport c1 = count_points(FieldSpec::make(p, 1));
    const CountReport c2 = count_points(FieldSpec::make(p, 2));
    const CountReport fermat = count_fermat_quartic(FieldSpec::make(p, 2));
    const auto pp = static_cast<std::int64_t>(p);
    rep.trace_p = c1.trace;
    rep.trace_p2 = c2.trace;
    rep.x60_p2 = c2.n;
    rep.fermat_p2 = fermat.n;
    rep.checks.push_back({"trace_p_divisible_by_p", c1.trace % pp == 0, true,
        "trace(p) = " + std::to_string(c1.trace)});
    rep.checks.push_back({"trace_p2_equals_22p2", c2.trace == 22 * pp * pp, false,
        "trace(p^2) = " + std::to_string(c2.trace) + ", 22p^2 = " + std::to_string(22 * pp * pp)});
    rep.checks.push_back({"fermat_count_equal_p2", fermat.n == c2.n, false,
        "X60 " + std::to_string(c2.n) + ", Fermat " + std::to_string(fermat.n)});
    return rep;
}

}  // namespace k3

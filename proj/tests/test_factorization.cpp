#include "k3/cyclotomic.hpp"
#include "k3/factorization.hpp"

#include <doctest.h>

#include <random>

using namespace k3;

namespace {

IntPoly product(const std::vector<std::pair<IntPoly, int>>& fs)
{
    IntPoly acc = IntPoly::constant(1);
    for (const auto& [g, m] : fs) {
        acc *= g.pow(static_cast<unsigned>(m));
    }
    return acc;
}

FpPoly fp_poly(const std::vector<long long>& c, std::uint32_t p)
{
    std::vector<Fp> v;
    for (auto x : c) {
        v.emplace_back(x, p);
    }
    return FpPoly(std::move(v));
}

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree <= deg/2.
bool irreducible_by_search(const FpPoly& f, std::uint32_t p)
{
    const long n = f.degree();
    for (long d = 1; 2 * d <= n; ++d) {
        std::vector<long long> c(static_cast<std::size_t>(d + 1), 0);
        c.back() = 1;
        while (true) {
            if ((f % fp_poly(c, p)).is_zero()) {
                return false;
            }
            std::size_t i = 0;
            while (i < static_cast<std::size_t>(d) && ++c[i] == p) {
                c[i++] = 0;
            }
            if (i == static_cast<std::size_t>(d)) {
                break;
            }
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("factorization")
{
    TEST_CASE("x^n - 1 splits into cyclotomic polynomials over Q")
    {
        for (std::int64_t n = 1; n <= 30; ++n) {
            std::vector<Integer> c(static_cast<std::size_t>(n + 1), 0);
            c[0] = -1;
            c.back() = 1;
            const auto fs = factor_over_integers(IntPoly(c));
            CHECK(fs.size() == divisors(n).size());
            std::set<std::string> got, want;
            for (const auto& [g, m] : fs) {
                CHECK(m == 1);
                got.insert(g.str());
            }
            for (auto d : divisors(n)) {
                want.insert(cyclotomic_polynomial(d).str());
            }
            CHECK(got == want);
        }
    }

    TEST_CASE("random products over Q are recovered")
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> coeff(-5, 5);
        for (int trial = 0; trial < 40; ++trial) {
            IntPoly f = IntPoly::constant(1);
            int pieces = 1 + trial % 4;
            for (int k = 0; k < pieces; ++k) {
                std::vector<Integer> c;
                const int deg = 1 + (trial + k) % 3;
                for (int i = 0; i < deg; ++i) {
                    c.emplace_back(coeff(rng));
                }
                c.emplace_back(1 + (trial % 3));
                f *= IntPoly(c);
            }
            f *= IntPoly{Integer(3), Integer(1)};  // repeated factor x + 3 on some trials
            if (trial % 2 == 0) {
                f *= IntPoly{Integer(3), Integer(1)};
            }
            const auto fs = factor_over_integers(f);
            const IntPoly back = product(fs);
            CHECK(primitive_part(back) == primitive_part(f));
            for (const auto& [g, m] : fs) {
                CHECK(g.leading() > 0);
            }
        }
    }

    TEST_CASE("irreducible inputs stay whole")
    {
        // x^4 + 1 is irreducible over Q but splits mod every prime
        const auto fs = factor_over_integers(IntPoly{Integer(1), Integer(0), Integer(0), Integer(0), Integer(1)});
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first.degree() == 4);
        const auto rs = factor_over_rationals(RatPoly{Rational(1, 2), Rational(0), Rational(3)});
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].first == RatPoly{Rational(1, 6), Rational(0), Rational(1)});
    }

    TEST_CASE("F_p factors are irreducible and multiply back")
    {
        std::mt19937 rng(11);
        for (std::uint32_t p : {5u, 7u, 11u}) {
            std::uniform_int_distribution<long long> coeff(0, p - 1);
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<long long> c;
                const int deg = 2 + trial % 7;
                for (int i = 0; i < deg; ++i) {
                    c.push_back(coeff(rng));
                }
                c.push_back(1);
                FpPoly f = fp_poly(c, p);
                if (trial % 3 == 0) {
                    f *= fp_poly({1, 1}, p).pow(static_cast<unsigned>(p));  // inseparable part
                }
                FpPoly back = FpPoly::constant(Fp(1, p));
                for (const auto& [g, m] : factor_over_fp(f)) {
                    CHECK(irreducible_by_search(g, p));
                    back *= g.pow(static_cast<unsigned>(m));
                }
                CHECK(back == f.monic());
            }
        }
    }

    TEST_CASE("x^(p^2) - x over F_p")
    {
        const std::uint32_t p = 7;
        std::vector<long long> c(p * p + 1, 0);
        c[1] = -1;
        c.back() = 1;
        const auto fs = factor_over_fp(fp_poly(c, p));
        std::size_t linear = 0, quadratic = 0;
        for (const auto& [g, m] : fs) {
            CHECK(m == 1);
            linear += g.degree() == 1 ? 1 : 0;
            quadratic += g.degree() == 2 ? 1 : 0;
        }
        CHECK(linear == p);
        CHECK(quadratic == (p * p - p) / 2);
        CHECK_THROWS_AS(factor_over_fp(FpPoly()), std::domain_error);
    }
}

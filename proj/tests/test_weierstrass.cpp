#include "k3/weierstrass.hpp"

#include <doctest.h>

#include <complex>
#include <map>
#include <numbers>
#include <random>

using namespace k3;

namespace {

using Mono = std::pair<int, int>;  // powers of t0, t1
using Dense = std::map<Mono, Rational>;

Dense dense(const BinaryForm<Rational>& f)
{
    Dense out;
    for (std::int64_t j = 0; j <= f.degree(); ++j) {
        out[{static_cast<int>(f.degree() - j), static_cast<int>(j)}] += f[static_cast<std::size_t>(j)];
    }
    return out;
}

Dense times(const Dense& a, const Dense& b)
{
    Dense out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            out[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
        }
    }
    return out;
}

Dense combine(const Dense& a, const Rational& s, const Dense& b, const Rational& t)
{
    Dense out;
    for (const auto& [m, c] : a) {
        out[m] += s * c;
    }
    for (const auto& [m, c] : b) {
        out[m] += t * c;
    }
    return out;
}

bool same(const Dense& a, const BinaryForm<Rational>& f)
{
    Dense want = dense(f);
    for (const auto& [m, c] : a) {
        if (c != 0 && (want.count(m) == 0 || want[m] != c)) {
            return false;
        }
    }
    for (const auto& [m, c] : want) {
        if (c != 0 && (a.count(m) == 0 || a.at(m) != c)) {
            return false;
        }
    }
    return true;
}

BinaryForm<Rational> form(std::int64_t deg, const std::map<std::int64_t, Rational>& c)
{
    BinaryForm<Rational> f(deg);
    for (const auto& [j, x] : c) {
        f[static_cast<std::size_t>(j)] = x;
    }
    return f;
}

}  // namespace

TEST_SUITE("weierstrass")
{
    TEST_CASE("discriminant of X60")
    {
        const auto m = build_x60();
        const auto d = form_discriminant(m.a, m.b);
        // -27 t0^2 t1^2 (t1^10 - t0^10)^2
        const auto want = form(24, {{2, -27}, {12, 54}, {22, -27}});
        CHECK(d == want);
        CHECK(form_discriminant(BinaryForm<Rational>(8), BinaryForm<Rational>(12)).is_zero());
        CHECK_THROWS_AS(form_discriminant(BinaryForm<Rational>(6), BinaryForm<Rational>(12)), std::invalid_argument);
    }

    TEST_CASE("discriminant against expand-and-combine")
    {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> coeff(-9, 9);
        for (int trial = 0; trial < 20; ++trial) {
            BinaryForm<Rational> a(8), b(12);
            for (std::size_t j = 0; j <= 8; ++j) {
                a[j] = Rational(coeff(rng), 1 + trial % 3);
            }
            for (std::size_t j = 0; j <= 12; ++j) {
                b[j] = coeff(rng);
            }
            const Dense da = dense(a), db = dense(b);
            const Dense want = combine(times(times(da, da), da), -4, times(db, db), -27);
            const auto d = form_discriminant(a, b);
            CHECK(d.degree() == 24);
            CHECK(same(want, d));
        }
    }

    TEST_CASE("X60 fibres over Q and F_11")
    {
        const auto m = build_x60();
        CHECK(m.equivariance == 6);
        CHECK(m.weights.x == 2);
        CHECK(m.weights.y == 3);
        CHECK(m.weights.t1 == 6);
        const auto r = classify_fibers(m.a, m.b);
        CHECK(r.geometric_fibers == 12);
        CHECK(r.euler_sum == 24);
        CHECK(r.degree_sum == 24);
        for (const auto& f : r.fibers) {
            CHECK(f.kodaira_type == "II");
            CHECK(f.local_euler == 2);
        }
        CHECK(r.fibers.front().place == "t0");

        const auto m11 = build_x60(11);
        CHECK(m11.b[1] == Fp(10, 11));
        CHECK(m11.b[11] == Fp(1, 11));
        const auto r11 = classify_fibers(m11.a, m11.b, 11);
        CHECK(r11.fibers.size() == 12);  // t^10 - 1 splits over F_11
        CHECK(r11.euler_sum == 24);
        CHECK_THROWS_AS(build_x60(5), std::invalid_argument);
        CHECK_THROWS_AS(build_x60(3), std::invalid_argument);
        CHECK_THROWS_AS(classify_fibers(m11.a, m11.b, 3), std::invalid_argument);
    }

    TEST_CASE("equivariance fails for a perturbed model")
    {
        auto m = build_x60();
        m.b[2] = 1;
        CHECK_FALSE(equivariance_exponent(m.a, m.b, m.weights).has_value());
        m = build_x60();
        m.a[0] = 1;
        CHECK_FALSE(equivariance_exponent(m.a, m.b, m.weights).has_value());
    }

    TEST_CASE("Kodaira rows")
    {
        // at t = 0: (v(A), v(B)) = (1, 2) -> III, (2, 2) -> IV, (2, 3) -> unsupported
        auto kind_at_zero = [](const BinaryForm<Rational>& a, const BinaryForm<Rational>& b) {
            for (const auto& f : classify_fibers(a, b).fibers) {
                if (f.place == "t") {
                    return f.kodaira_type;
                }
            }
            return std::string("none");
        };
        CHECK(kind_at_zero(form(8, {{1, 1}, {8, 1}}), form(12, {{2, 1}, {12, 1}})) == "III");
        CHECK(kind_at_zero(form(8, {{2, 1}, {8, 1}}), form(12, {{2, 1}, {12, 1}})) == "IV");
        CHECK(kind_at_zero(form(8, {{2, 1}, {8, 1}}), form(12, {{3, 1}, {12, 1}})) == "unsupported");
        CHECK(kind_at_zero(BinaryForm<Rational>(8), form(12, {{1, 1}, {12, 1}})) == "II");
        CHECK_THROWS_AS(classify_fibers(form(8, {{4, 1}}), form(12, {{6, 1}})), std::invalid_argument);
        CHECK_THROWS_AS(classify_fibers(BinaryForm<Rational>(8), BinaryForm<Rational>(12)), std::invalid_argument);
    }

    TEST_CASE("squarefree discriminant gives 24 nodal fibres")
    {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> coeff(-4, 4);
        int tested = 0;
        for (int trial = 0; trial < 30 && tested < 5; ++trial) {
            BinaryForm<Rational> a(8), b(12);
            for (std::size_t j = 0; j <= 8; ++j) {
                a[j] = coeff(rng);
            }
            for (std::size_t j = 0; j <= 12; ++j) {
                b[j] = coeff(rng);
            }
            const auto d = form_discriminant(a, b);
            const RatPoly f = d.dehomogenize();
            if (d.order_at_infinity() != 0 || gcd(f, f.derivative()).degree() != 0) {
                continue;
            }
            ++tested;
            const auto r = classify_fibers(a, b);
            CHECK(r.geometric_fibers == 24);
            CHECK(r.euler_sum == 24);
            for (const auto& x : r.fibers) {
                CHECK(x.kodaira_type == "I_1");
            }
        }
        CHECK(tested == 5);
    }

    TEST_CASE("invariant forms against root-of-unity substitution")
    {
        CHECK(invariant_form_space(8, 6, 4, 60).empty());
        CHECK(invariant_form_space(12, 6, 6, 60) == std::vector<std::int64_t>{1, 11});
        CHECK(invariant_form_space(12, 0, 0, 1).size() == 13);
        auto z = [](std::int64_t k, std::int64_t n) {
            const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            return std::complex<double>(std::cos(t), std::sin(t));
        };
        for (std::int64_t n : {12, 30, 60}) {
            for (std::int64_t w = 0; w < n; w += 5) {
                for (std::int64_t c = 0; c < n; c += 7) {
                    std::vector<std::int64_t> want;
                    for (std::int64_t j = 0; j <= 12; ++j) {
                        // t0^(12-j) (z^w t1)^j against z^c t0^(12-j) t1^j at t0 = t1 = 1
                        std::complex<double> lhs = 1;
                        for (std::int64_t i = 0; i < j; ++i) {
                            lhs *= z(w, n);
                        }
                        if (std::abs(lhs - z(c, n)) < 1e-9) {
                            want.push_back(j);
                        }
                    }
                    CHECK(invariant_form_space(12, w, c, n) == want);
                }
            }
        }
    }

    TEST_CASE("two-form character")
    {
        const auto c = two_form_character(2, 3, 6, 60);
        CHECK(c.exponent == 5);
        CHECK(c.order == 12);
        CHECK(60 / c.order == 5);
        const auto t = two_form_character(0, 0, 0, 60);
        CHECK(t.exponent == 0);
        CHECK(t.order == 1);
        const auto g10 = two_form_character(20, 30, 0, 60);
        CHECK(g10.exponent == 50);
        CHECK(g10.order == 6);
    }

    TEST_CASE("field text")
    {
        CHECK(BaseField::parse("Q").p == 0);
        CHECK(BaseField::parse("Fp:11").p == 11);
        CHECK(BaseField::parse("Fp:11").str() == "Fp:11");
        CHECK_THROWS_AS(BaseField::parse("Fp:12"), std::invalid_argument);
        CHECK_THROWS_AS(BaseField::parse("R"), std::invalid_argument);
    }
}

#include "oracles.hpp"

#include "k3/cyclotomic.hpp"

#include <doctest.h>

using namespace k3;

namespace {

const OrbitProfile p60_12 = OrbitProfile::parse("1^2 12^1 60^1");

std::vector<long long> coeffs(const IntPoly& f)
{
    std::vector<long long> out;
    for (const auto& c : f.coefficients()) {
        out.push_back(static_cast<long long>(c));
    }
    return out;
}

}  // namespace

TEST_SUITE("cyclotomic")
{
    TEST_CASE("euler_phi and mobius against counting")
    {
        CHECK(euler_phi(60) == 16);
        CHECK(euler_phi(12) == 4);
        CHECK(euler_phi(1) == 1);
        for (std::int64_t n = 1; n <= 300; ++n) {
            CHECK(euler_phi(n) == oracle::phi(n));
        }
        CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    }

    TEST_CASE("primitive_root_sum")
    {
        CHECK(primitive_root_sum(4) == 0);
        CHECK(primitive_root_sum(30) == -1);
        CHECK(primitive_root_sum(1) == 1);
        for (std::int64_t n = 1; n <= 120; ++n) {
            const auto z = oracle::ramanujan(n, 1);
            CHECK(primitive_root_sum(n) == std::llround(z.real()));
        }
    }

    TEST_CASE("ramanujan_sum against floating point")
    {
        CHECK(ramanujan_sum(60, 30) == -16);
        CHECK(ramanujan_sum(12, 2) == 2);
        CHECK(ramanujan_sum(17, 0) == 16);
        for (std::int64_t n = 1; n <= 120; ++n) {
            for (std::int64_t a = 0; a <= 120; ++a) {
                const auto z = oracle::ramanujan(n, a);
                const long long r = std::llround(z.real());
                REQUIRE(std::abs(z.real() - static_cast<double>(r)) < 1e-6);
                REQUIRE(std::abs(z.imag()) < 1e-6);
                REQUIRE(ramanujan_sum(n, a) == r);
            }
        }
    }

    TEST_CASE("profile text is canonical")
    {
        const auto p = OrbitProfile::parse("60^1 1^1 12^1 1^1");
        CHECK(p.str() == "1^2 12^1 60^1");
        CHECK(OrbitProfile::parse(p.str()) == p);
        CHECK(p.dimension() == 22);
        CHECK(p.exponent() == 60);
        CHECK_THROWS_AS(OrbitProfile::parse("1^x"), std::invalid_argument);
        CHECK_THROWS_AS(OrbitProfile::parse("0^2"), std::invalid_argument);
    }

    TEST_CASE("profile_power")
    {
        CHECK(profile_power(p60_12, 30).str() == "1^2 2^20");
        CHECK(profile_power(p60_12, 10).str() == "1^2 6^10");
        CHECK(profile_power(p60_12, 1) == p60_12);
        for (std::int64_t a = 1; a <= 60; ++a) {
            CHECK(profile_power(p60_12, a).orbits() == oracle::power(p60_12, a));
        }
    }

    TEST_CASE("profile_trace and invariant_dim")
    {
        CHECK(profile_trace(p60_12, 12) == 2);
        CHECK(profile_trace(OrbitProfile::parse("1^2 10^1 60^1"), 30) == -10);
        CHECK(profile_trace(OrbitProfile::identity(22), 7) == 22);
        CHECK(invariant_dim(p60_12, 30) == 2);
        CHECK(invariant_dim(OrbitProfile::parse("1^2 10^1 60^1"), 30) == 6);
        CHECK(invariant_dim(OrbitProfile::identity(22), 1) == 22);
        for (std::int64_t a = 0; a <= 60; ++a) {
            CHECK(profile_trace(p60_12, a) == std::llround(oracle::trace(p60_12, a)));
        }
    }

    TEST_CASE("char_poly")
    {
        CHECK(coeffs(char_poly(OrbitProfile::parse("1^2"))) == std::vector<long long>{1, -2, 1});
        CHECK(coeffs(char_poly(p60_12)) == oracle::char_poly(p60_12));
        CHECK(char_poly(p60_12).degree() == 22);
        // (x+1)^8 (x-1)^14 by binomial expansion
        std::vector<long long> binom(23, 0);
        for (int i = 0; i <= 8; ++i) {
            for (int j = 0; j <= 14; ++j) {
                long long c = 1;
                for (int k = 0; k < i; ++k) {
                    c = c * (8 - k) / (k + 1);
                }
                long long d = 1;
                for (int k = 0; k < j; ++k) {
                    d = d * (14 - k) / (k + 1);
                }
                binom[static_cast<std::size_t>(i + j)] += c * d * (((14 - j) % 2) ? -1 : 1);
            }
        }
        CHECK(coeffs(char_poly(OrbitProfile::parse("1^14 2^8"))) == binom);
    }

    TEST_CASE("cyclotomic_polynomial against roots")
    {
        for (std::int64_t n = 1; n <= 60; ++n) {
            const OrbitProfile one(std::map<std::int64_t, std::int64_t>{{n, 1}});
            CHECK(coeffs(cyclotomic_polynomial(n)) == oracle::char_poly(one));
        }
    }
}

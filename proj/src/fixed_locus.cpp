#include "k3/fixed_locus.hpp"

#include "k3/profile_space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace k3 {

std::int64_t lefschetz_euler(const OrbitProfile& profile, std::int64_t a)
{
    if (profile.dimension() != k3_b2) {
        throw std::invalid_argument("lefschetz_euler: profile must have dimension 22, got " + profile.str());
    }
    if (mod(a, profile.exponent()) == 0) {
        throw std::invalid_argument("lefschetz_euler: exponent " + std::to_string(a)
            + " gives the identity; e(X) = 24 is a constant, not a trace");
    }
    return 2 + profile_trace(profile, a);
}

std::string FixedCurve::str() const
{
    std::string s = "g" + std::to_string(genus);
    switch (role) {
    case CurveRole::plain:
        break;
    case CurveRole::rational_component:
        s += "(rational)";
        break;
    case CurveRole::section:
        s += "(section)";
        break;
    case CurveRole::multisection:
        s += "(" + std::to_string(section_degree) + "-section)";
        break;
    }
    return s;
}

std::int64_t FixedLocusModel::euler() const
{
    std::int64_t e = points;
    for (const auto& c : curves) {
        e += c.euler();
    }
    return e;
}

std::int64_t FixedLocusModel::rational_curves() const
{
    return std::count_if(curves.begin(), curves.end(), [](const FixedCurve& c) { return c.genus == 0; });
}

std::int64_t FixedLocusModel::irrational_curves() const
{
    return static_cast<std::int64_t>(curves.size()) - rational_curves();
}

std::string FixedLocusModel::str() const
{
    std::string s = "points=" + std::to_string(points) + " curves=[";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += curves[i].str();
    }
    return s + "]";
}

namespace {

FixedCurve curve_of_genus(std::int64_t g)
{
    return {g, g == 0 ? CurveRole::rational_component : CurveRole::plain, 0};
}

}  // namespace

std::vector<FixedLocusModel> decompose_fixed_locus(std::int64_t e, std::int64_t max_curves, bool allow_points,
    bool involution_axiom, std::int64_t max_genus)
{
    std::vector<FixedLocusModel> out;
    if (max_curves < 0) {
        return out;
    }
    if (involution_axiom) {
        for (std::int64_t d = 0; d <= max_curves; ++d) {
            FixedLocusModel rational;
            for (std::int64_t i = 0; i < d; ++i) {
                rational.curves.push_back(curve_of_genus(0));
            }
            if (2 * d == e) {
                out.push_back(rational);
            }
            // One more curve of genus g >= 1 with 2 - 2g = e - 2d.
            const std::int64_t rest = e - 2 * d;
            if (d + 1 <= max_curves && rest <= 0 && rest % 2 == 0) {
                FixedLocusModel model = rational;
                model.curves.push_back(curve_of_genus((2 - rest) / 2));
                out.push_back(model);
            }
        }
    } else {
        std::vector<std::int64_t> genera;
        std::function<void(std::int64_t)> grow = [&](std::int64_t min_genus) {
            std::int64_t curve_euler = 0;
            for (std::int64_t g : genera) {
                curve_euler += 2 - 2 * g;
            }
            const std::int64_t points = e - curve_euler;
            if (points >= 0 && (allow_points || points == 0)) {
                FixedLocusModel model;
                model.points = points;
                for (std::int64_t g : genera) {
                    model.curves.push_back(curve_of_genus(g));
                }
                out.push_back(model);
            }
            if (static_cast<std::int64_t>(genera.size()) == max_curves) {
                return;
            }
            for (std::int64_t g = min_genus; g <= max_genus; ++g) {
                genera.push_back(g);
                grow(g);
                genera.pop_back();
            }
        };
        grow(0);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.str() < b.str(); });
    return out;
}

bool rh_feasible(std::int64_t n, std::int64_t g_top, std::int64_t f)
{
    if (!is_prime(n)) {
        throw std::invalid_argument("rh_feasible: order must be prime, got " + std::to_string(n));
    }
    if (g_top < 0 || f < 0) {
        return false;
    }
    // n (2g' - 2) = 2 g_top - 2 - f (n - 1)
    const std::int64_t rhs = 2 * g_top - 2 - f * (n - 1);
    if (rhs % n != 0) {
        return false;
    }
    const std::int64_t twice_minus_two = rhs / n;
    return twice_minus_two >= -2 && twice_minus_two % 2 == 0;
}

std::vector<std::vector<std::int64_t>> orbit_partitions(std::int64_t d, std::int64_t group_order)
{
    std::vector<std::vector<std::int64_t>> out;
    if (d < 0) {
        return out;
    }
    const std::vector<std::int64_t> lengths = divisors(group_order);
    std::vector<std::int64_t> current;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t left) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < lengths.size() && lengths[i] <= left; ++i) {
            current.push_back(lengths[i]);
            rec(i, left - lengths[i]);
            current.pop_back();
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace k3

#include "k3/singularity.hpp"

#include <algorithm>
#include <functional>

namespace k3 {

SingularityType resolution_data(const std::string& label)
{
    if (label == "1/5(3,3)") {
        // One (-5)-curve A, K_Y = ... - 3A/5.
        return {label, 1, Rational(9, 5), {Rational(3, 5)}};
    }
    if (label == "1/5(2,4)") {
        // Chain A1 (-2), A2 (-3), K_Y = ... - (A1 + 2 A2)/5.
        return {label, 2, Rational(2, 5), {Rational(1, 5), Rational(2, 5)}};
    }
    if (label == "smooth") {
        return {label, 0, Rational(0), {Rational(0)}};
    }
    throw std::invalid_argument("resolution_data: unknown singularity '" + label + "'");
}

CountSolution solve_counts(std::int64_t rho_quotient, const std::vector<SingularityType>& types,
    std::int64_t total_points)
{
    if (total_points < 0) {
        throw InfeasibleSystem("solve_counts: negative number of points");
    }
    std::vector<CountSolution> found;
    std::vector<std::int64_t> counts(types.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == types.size()) {
            if (left != 0) {
                return;
            }
            // K_Y^2 from the Picard number of Y and from the D_p.
            Rational from_rho(10 - rho_quotient);
            Rational from_kd(0);
            for (std::size_t j = 0; j < types.size(); ++j) {
                from_rho -= counts[j] * types[j].exceptional_curves;
                from_kd -= counts[j] * types[j].kd;
            }
            if (from_rho != from_kd) {
                return;
            }
            CountSolution s;
            for (std::size_t j = 0; j < types.size(); ++j) {
                s.counts[types[j].label] += counts[j];
            }
            s.k_squared = from_rho;
            found.push_back(std::move(s));
            return;
        }
        for (std::int64_t c = 0; c <= left; ++c) {
            counts[i] = c;
            rec(i + 1, left - c);
        }
        counts[i] = 0;
    };
    rec(0, total_points);
    if (found.empty()) {
        throw InfeasibleSystem("solve_counts: infeasible, no nonnegative integer solution");
    }
    if (found.size() > 1) {
        throw InfeasibleSystem("solve_counts: " + std::to_string(found.size()) + " solutions, expected one");
    }
    return found.front();
}

std::vector<IntegralityVerdict> integrality_scan(const std::vector<CurvePoints>& curves)
{
    std::vector<IntegralityVerdict> out;
    for (const auto& c : curves) {
        std::vector<Rational> sums = {Rational(0)};
        for (const auto& p : c.points) {
            std::vector<Rational> next;
            for (const auto& s : sums) {
                for (const auto& x : p.curve_contributions) {
                    next.push_back(s - x);
                }
            }
            sums = std::move(next);
        }
        std::sort(sums.begin(), sums.end());
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        const bool any_integer = std::any_of(sums.begin(), sums.end(),
            [](const Rational& v) { return denominator(v) == 1; });
        out.push_back({c.curve, sums, !any_integer});
    }
    return out;
}

std::string join_values(const std::vector<Rational>& values)
{
    std::string s;
    for (const auto& v : values) {
        if (!s.empty()) {
            s += ",";
        }
        s += to_string(v);
    }
    return s;
}

std::vector<PointAssignment> fixed_point_assignments()
{
    const SingularityType special = resolution_data("1/5(3,3)");
    const SingularityType chain = resolution_data("1/5(2,4)");
    std::vector<PointAssignment> out;
    for (const std::string host : {"C10", "R"}) {
        PointAssignment pa;
        pa.label = special.label + " on " + host;
        for (const std::string curve : {"R", "C10"}) {
            CurvePoints cp{curve, {}};
            cp.points.push_back(curve == host ? special : chain);
            cp.points.push_back(chain);
            pa.curves.push_back(cp);
        }
        out.push_back(pa);
    }
    return out;
}

}  // namespace k3

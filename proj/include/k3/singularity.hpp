#pragma once

// Resolution data of the order-5 cyclic quotient singularities and the
// canonical-class bookkeeping on the minimal resolution of X / <g^12>.

#include "k3/arith.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

struct SingularityType {
    std::string label;
    std::int64_t exceptional_curves = 0;
    Rational kd;                                // K_Y . D_p
    std::vector<Rational> curve_contributions;  // possible D_p . C' for a curve through p
};

/// "1/5(3,3)", "1/5(2,4)" or "smooth". Throws std::invalid_argument otherwise.
SingularityType resolution_data(const std::string& label);

class InfeasibleSystem : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CountSolution {
    std::map<std::string, std::int64_t> counts;  // label -> number of points
    Rational k_squared;                         // K_Y^2, equal from both sides
};

/// Nonnegative integers c_i with sum total_points and
/// 10 - (rho_quotient + sum c_i e_i) = -sum c_i kd_i,
/// e_i the number of exceptional curves of type i.
///
/// Throws InfeasibleSystem when there is no solution, or more than one.
CountSolution solve_counts(std::int64_t rho_quotient, const std::vector<SingularityType>& types,
    std::int64_t total_points);

struct CurvePoints {
    std::string curve;
    std::vector<SingularityType> points;
};

struct IntegralityVerdict {
    std::string curve;
    std::vector<Rational> values;  // ascending, distinct
    bool contradiction = false;
};

/// Possible values of K_Y . C' = -sum over the points on C of one
/// contribution each. A curve is a contradiction when none is an integer.
std::vector<IntegralityVerdict> integrality_scan(const std::vector<CurvePoints>& curves);

std::string join_values(const std::vector<Rational>& values);

/// One way of placing the four fixed points of g^12 (one of type 1/5(3,3),
/// three of type 1/5(2,4)) with two on R and two on C10.
struct PointAssignment {
    std::string label;  // e.g. "1/5(3,3) on R"
    std::vector<CurvePoints> curves;
};

std::vector<PointAssignment> fixed_point_assignments();

}  // namespace k3

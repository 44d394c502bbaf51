#pragma once

#include <span>
#include <string>
#include <vector>

#include "partrep/bigint.hpp"

namespace partrep {

/// Polynomial in the natural log of d: sum_j coefficients[j] * (ln d)^j.
struct LogPolyModel {
    unsigned degree = 1;
    std::vector<double> coefficients;
    /// The fit used d = 10^i for 0 <= i <= window_exponent.
    unsigned window_exponent = 0;
};

struct FitPoint {
    Natural d;
    double m = 0.0;
};

/// Unweighted linear least squares on the basis {1, ln d, ..., (ln d)^degree}.
///
/// Columns are rescaled to unit max-norm and solved with a column-pivoted
/// Householder QR. Throws SingularSystemError for fewer than degree + 1 points
/// or a rank-deficient design (e.g. repeated d), and std::invalid_argument for
/// degree 0 or d = 0.
LogPolyModel fit_mk(std::span<const FitPoint> points, unsigned degree);

double evaluate(const LogPolyModel& model, const Natural& d);

/// Evaluation at a precomputed ln d.
double evaluate_at_log(const LogPolyModel& model, double log_d);

/// Root-mean-square of M - model(d) over the points.
double rms_residual(const LogPolyModel& model, std::span<const FitPoint> points);

/// Points (10^i, series[i]) for i = 0..window_exponent.
std::vector<FitPoint> power_of_ten_points(std::span<const std::size_t> series, unsigned window_exponent);

std::string to_json(const LogPolyModel& model);

}  // namespace partrep

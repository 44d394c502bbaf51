#include "partrep/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "partrep/errors.hpp"

namespace partrep {

LogPolyModel fit_mk(std::span<const FitPoint> points, unsigned degree) {
    if (degree < 1) {
        throw std::invalid_argument("fit degree must be >= 1");
    }
    const auto cols = static_cast<Eigen::Index>(degree) + 1;
    const auto rows = static_cast<Eigen::Index>(points.size());
    if (rows < cols) {
        throw SingularSystemError("degree " + std::to_string(degree) + " fit needs at least " +
                                  std::to_string(cols) + " points, got " + std::to_string(rows));
    }

    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd target(rows);
    Natural max_d = 1;
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& p = points[static_cast<std::size_t>(r)];
        if (sgn(p.d) <= 0) {
            throw std::invalid_argument("fit points need d >= 1");
        }
        max_d = std::max(max_d, p.d);
        const double x = natural_log(p.d);
        double term = 1.0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            design(r, c) = term;
            term *= x;
        }
        target(r) = p.m;
    }

    Eigen::VectorXd scale = design.cwiseAbs().colwise().maxCoeff().transpose();
    for (Eigen::Index c = 0; c < cols; ++c) {
        if (scale(c) == 0.0) {
            throw SingularSystemError("basis column " + std::to_string(c) + " vanishes at every point");
        }
        design.col(c) /= scale(c);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-12);
    if (qr.rank() < cols) {
        throw SingularSystemError("design matrix has rank " + std::to_string(qr.rank()) + " < " +
                                  std::to_string(cols) + "; need more distinct d values");
    }
    const Eigen::VectorXd solution = qr.solve(target);

    LogPolyModel model;
    model.degree = degree;
    model.coefficients.resize(static_cast<std::size_t>(cols));
    for (Eigen::Index c = 0; c < cols; ++c) {
        model.coefficients[static_cast<std::size_t>(c)] = solution(c) / scale(c);
    }
    model.window_exponent = static_cast<unsigned>(to_decimal(max_d).size() - 1);
    return model;
}

double evaluate_at_log(const LogPolyModel& model, double log_d) {
    double acc = 0.0;
    for (auto it = model.coefficients.rbegin(); it != model.coefficients.rend(); ++it) {
        acc = acc * log_d + *it;
    }
    return acc;
}

double evaluate(const LogPolyModel& model, const Natural& d) { return evaluate_at_log(model, natural_log(d)); }

double rms_residual(const LogPolyModel& model, std::span<const FitPoint> points) {
    if (points.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto& p : points) {
        const double r = p.m - evaluate(model, p.d);
        sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(points.size()));
}

std::vector<FitPoint> power_of_ten_points(std::span<const std::size_t> series, unsigned window_exponent) {
    if (series.size() <= window_exponent) {
        throw RangeError("series has " + std::to_string(series.size()) + " entries, window needs " +
                         std::to_string(window_exponent + 1));
    }
    std::vector<FitPoint> points;
    for (unsigned i = 0; i <= window_exponent; ++i) {
        points.push_back({power_of_ten(i), static_cast<double>(series[i])});
    }
    return points;
}

std::string to_json(const LogPolyModel& model) {
    nlohmann::ordered_json doc;
    doc["degree"] = model.degree;
    doc["coefficients"] = model.coefficients;
    doc["window"] = model.window_exponent;
    return doc.dump(2) + "\n";
}

}  // namespace partrep

#pragma once

#include <random>
#include <string>

namespace qtopo {

enum class DistShape { uniform, point };

// Random edge parameter with mean 1 - delta, maximum 1 - a*delta and
// minimum 1 - b*delta. (b - a) measures the heterogeneity of the network;
// zero means every edge carries the mean value.
struct ParamDistribution {
    double delta = 0.0;
    double a = 1.0;
    double b = 1.0;
    DistShape shape = DistShape::point;

    static ParamDistribution point_at_mean(double mean);
    // Uniform on [1 - b*delta, 1 - a*delta]; requires a + b = 2 so the
    // mean is exactly 1 - delta.
    static ParamDistribution uniform_spread(double delta, double a, double b);

    double mean() const { return 1.0 - delta; }
    double max_value() const { return 1.0 - a * delta; }
    double min_value() const { return 1.0 - b * delta; }
    double width() const { return b - a; }

    // Throws std::invalid_argument naming the offending field when the
    // parametrization is inconsistent or the support leaves [0,1].
    void validate(const std::string& field_prefix = "") const;

    double sample(std::mt19937_64& eng) const;
};

}  // namespace qtopo

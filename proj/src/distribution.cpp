#include "qtopo/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "qtopo/rng.hpp"

namespace qtopo {

namespace {
constexpr double kEps = 1e-9;
}

ParamDistribution ParamDistribution::point_at_mean(double mean) {
    ParamDistribution d;
    d.delta = 1.0 - mean;
    d.a = 1.0;
    d.b = 1.0;
    d.shape = DistShape::point;
    d.validate();
    return d;
}

ParamDistribution ParamDistribution::uniform_spread(double delta, double a, double b) {
    ParamDistribution d;
    d.delta = delta;
    d.a = a;
    d.b = b;
    d.shape = DistShape::uniform;
    d.validate();
    return d;
}

void ParamDistribution::validate(const std::string& field_prefix) const {
    auto fail = [&](const std::string& field, const std::string& msg) {
        throw std::invalid_argument(field_prefix + field + ": " + msg);
    };
    if (!(delta >= 0.0 && delta <= 1.0)) fail("delta", "must lie in [0,1]");
    if (!(a >= 0.0)) fail("a", "must be >= 0");
    if (!(a <= 1.0 + kEps)) fail("a", "must be <= 1 (mean cannot exceed the max)");
    if (!(b >= 1.0 - kEps)) fail("b", "must be >= 1 (mean cannot fall below the min)");
    if (delta > 0.0 && b > 1.0 / delta + kEps) {
        fail("b", "support leaves [0,1]: need b <= 1/delta = " + std::to_string(1.0 / delta));
    }
    if (shape == DistShape::point) {
        if (std::abs(a - 1.0) > kEps || std::abs(b - 1.0) > kEps) {
            fail("shape", "point distribution requires a = b = 1");
        }
    } else {
        if (std::abs(a + b - 2.0) > kEps) {
            fail("a", "uniform shape requires a + b = 2 so the mean is 1 - delta");
        }
    }
}

double ParamDistribution::sample(std::mt19937_64& eng) const {
    if (shape == DistShape::point || delta == 0.0 || b - a == 0.0) {
        return mean();
    }
    return uniform_range(eng, min_value(), max_value());
}

}  // namespace qtopo

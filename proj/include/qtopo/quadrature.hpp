#pragma once

#include <functional>
#include <span>

namespace qtopo {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod 7/15 with interval bisection. Convergence when
// the summed Kronrod error estimate is below max(abs_tol, rel_tol*|I|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-4, double abs_tol = 1e-12,
                                    int max_intervals = 2000);

// Same, pre-splitting the domain at known kinks (step cutoffs, branch
// boundaries) before adapting.
QuadratureResult integrate_adaptive_split(const std::function<double(double)>& f, double a,
                                          double b, std::span<const double> split_points,
                                          double rel_tol = 1e-4, double abs_tol = 1e-12,
                                          int max_intervals = 2000);

}  // namespace qtopo

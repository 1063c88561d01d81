#include "qtopo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace qtopo {

namespace {

// QUADPACK qk15 abscissae and weights on [-1, 1]
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct Interval {
    double a, b;
    double value;
    double error;
};

bool operator<(const Interval& x, const Interval& y) { return x.error < y.error; }

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);
    double kronrod = kWgk[7] * f_center;
    double gauss = kWg[3] * f_center;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[i] * sum;
        if (i % 2 == 1) gauss += kWg[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive_split(const std::function<double(double)>& f, double a,
                                          double b, std::span<const double> split_points,
                                          double rel_tol, double abs_tol, int max_intervals) {
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::vector<double> boundaries{a};
    for (double s : split_points) {
        if (s > a && s < b) boundaries.push_back(s);
    }
    boundaries.push_back(b);
    std::sort(boundaries.begin(), boundaries.end());

    std::priority_queue<Interval> heap;
    double total = 0.0, total_err = 0.0;
    int evals = 0;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        Interval seg = gk15(f, boundaries[i], boundaries[i + 1]);
        evals += 15;
        total += seg.value;
        total_err += seg.error;
        heap.push(seg);
    }

    auto tolerance = [&]() { return std::max(abs_tol, rel_tol * std::abs(total)); };
    while (total_err > tolerance() && static_cast<int>(heap.size()) < max_intervals) {
        const Interval worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {  // interval exhausted at machine precision
            total += worst.value;
            total_err += worst.error;
            break;
        }
        for (const Interval& half : {gk15(f, worst.a, mid), gk15(f, mid, worst.b)}) {
            evals += 15;
            total += half.value;
            total_err += half.error;
            heap.push(half);
        }
    }

    result.value = total;
    result.error_estimate = total_err;
    result.evaluations = evals;
    result.converged = total_err <= tolerance();
    return result;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_intervals) {
    return integrate_adaptive_split(f, a, b, {}, rel_tol, abs_tol, max_intervals);
}

}  // namespace qtopo

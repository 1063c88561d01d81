#include "qtopo/topography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtopo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn3 = std::log(3.0);

void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(x));
    }
}

// Largest real l with 3/2 x^l - 1/2 >= c, x = (1+2mu)/3; +inf when the
// curve never drops to c.
double exact_log_conc_radius(double mean_conc, double c) {
    const double x = (1.0 + 2.0 * mean_conc) / 3.0;
    if (x >= 1.0) return kInf;
    if (c >= 1.0) return 0.0;
    const double target = (2.0 * c + 1.0) / 3.0;  // x^l >= target
    return std::log(target) / std::log(x);
}

// Largest real l with mu^l >= p.
double exact_log_prob_radius(double mean_prob, double p) {
    if (mean_prob >= 1.0) return kInf;
    if (p >= 1.0) return 0.0;
    if (mean_prob <= 0.0) return 0.0;
    return std::log(p) / std::log(mean_prob);
}

}  // namespace

void TaskThresholds::validate() const {
    check_unit(c_star, "c_star");
    if (!(xi > 0.0 && xi <= 1.0)) throw std::domain_error("xi must lie in (0,1]");
    if (!(p_star >= xi && p_star <= 1.0)) {
        throw std::domain_error("p_star must lie in [xi, 1], got " + std::to_string(p_star));
    }
    check_unit(eps_c, "eps_c");
    check_unit(eps_p, "eps_p");
}

double avg_path_concurrence(double mean_conc, int l, CurveMode mode) {
    check_unit(mean_conc, "mean_conc");
    if (l < 0) throw std::domain_error("path length must be >= 0");
    if (mode == CurveMode::exact) {
        const double x = (1.0 + 2.0 * mean_conc) / 3.0;
        return std::max(0.0, 1.5 * std::pow(x, l) - 0.5);
    }
    const double delta1 = 1.0 - mean_conc;
    return std::max(0.0, 1.5 * std::exp(-(2.0 / 3.0) * delta1 * l) - 0.5);
}

double avg_path_probability(double mean_prob, int l) {
    check_unit(mean_prob, "mean_prob");
    if (l < 0) throw std::domain_error("path length must be >= 0");
    return std::pow(mean_prob, l);
}

double entanglement_radius(double delta1) {
    if (delta1 < 0.0) throw std::domain_error("delta1 must be >= 0");
    if (delta1 == 0.0) return kInf;
    return 1.5 * kLn3 / delta1;
}

double connection_radius(double delta2, double xi) {
    if (delta2 < 0.0) throw std::domain_error("delta2 must be >= 0");
    if (!(xi > 0.0 && xi <= 1.0)) throw std::domain_error("xi must lie in (0,1]");
    if (xi == 1.0) return 0.0;
    if (delta2 == 0.0) return kInf;
    return std::log(1.0 / xi) / delta2;
}

TvrRadii tvr_radius(const TaskThresholds& t, double mean_conc, double mean_prob, RadiusMode mode) {
    t.validate();
    check_unit(mean_conc, "mean_conc");
    check_unit(mean_prob, "mean_prob");
    TvrRadii r;
    if (mode == RadiusMode::small_delta) {
        const double delta1 = 1.0 - mean_conc;
        r.r_star_c = delta1 == 0.0
                         ? kInf
                         : entanglement_radius(delta1) * (1.0 - std::log1p(2.0 * t.c_star) / kLn3);
        // Eq. form r^P ln p*/ln xi with r^P = ln(1/xi)/delta2 cancels to
        // ln(1/p*)/delta2, well defined also at xi = 1.
        const double delta2 = 1.0 - mean_prob;
        r.r_star_p = delta2 == 0.0 ? kInf : std::log(1.0 / t.p_star) / delta2;
    } else {
        r.r_star_c = exact_log_conc_radius(mean_conc, t.c_star);
        r.r_star_p = exact_log_prob_radius(mean_prob, t.p_star);
    }
    r.r_star = std::min(r.r_star_c, r.r_star_p);
    return r;
}

MvrRadii mvr_radius(const TaskThresholds& t, double mean_conc, double mean_prob, RadiusMode mode) {
    t.validate();
    check_unit(mean_conc, "mean_conc");
    check_unit(mean_prob, "mean_prob");
    MvrRadii r;
    const double relaxed_c = t.c_star * t.eps_c;
    const double relaxed_p = t.p_star * t.eps_p;
    if (mode == RadiusMode::small_delta) {
        const double delta1 = 1.0 - mean_conc;
        r.r_tilde_c = delta1 == 0.0
                          ? kInf
                          : entanglement_radius(delta1) *
                                (1.0 - std::log1p(2.0 * relaxed_c) / kLn3);
        const double delta2 = 1.0 - mean_prob;
        const double r_p = connection_radius(delta2, t.xi);
        const double raw = delta2 == 0.0 ? kInf
                           : relaxed_p <= 0.0
                               ? kInf
                               : std::log(1.0 / relaxed_p) / delta2;
        r.r_tilde_p = std::min(raw, r_p);
    } else {
        r.r_tilde_c = exact_log_conc_radius(mean_conc, relaxed_c);
        const double r_p = exact_log_prob_radius(mean_prob, t.xi);
        const double raw = relaxed_p <= 0.0 ? kInf : exact_log_prob_radius(mean_prob, relaxed_p);
        r.r_tilde_p = std::min(raw, r_p);
    }
    r.r_tilde = std::min(r.r_tilde_c, r.r_tilde_p);
    return r;
}

double mvr_width_mean_form(const TaskThresholds& t, double mean_conc, double eps) {
    t.validate();
    check_unit(mean_conc, "mean_conc");
    check_unit(eps, "eps");
    const double r_c = entanglement_radius(1.0 - mean_conc);
    return r_c * std::log((1.0 + 2.0 * t.c_star) / (1.0 + 2.0 * t.c_star * eps));
}

double mvr_width_distribution_form(double r_star, double eps, double a, double b) {
    if (!(r_star >= 0.0)) throw std::domain_error("r_star must be >= 0");
    if (!(b >= a && a >= 0.0)) throw std::domain_error("need 0 <= a <= b");
    if (!(b >= 1.0 - 1e-12)) throw std::domain_error("b must be >= 1");
    check_unit(eps, "eps");
    const double eps_min = 1.0 - 1.0 / b;
    if (eps < eps_min - 1e-12) {
        throw std::domain_error("eps below the validity range: need eps >= 1 - 1/b = " +
                                std::to_string(eps_min));
    }
    if (a == b) return 0.0;
    const double denom = 1.0 - (1.0 - eps) * b;
    if (denom <= 0.0) return kInf;  // eps == 1 - 1/b exactly
    return r_star * (1.0 - eps) * (b - a) / denom;
}

double sgp_optimality_bound(double r_star, double a1, double b1, double a2, double b2) {
    if (!(r_star >= 0.0)) throw std::domain_error("r_star must be >= 0");
    for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
        if (!(b >= a && a >= 0.0)) throw std::domain_error("need 0 <= a <= b");
    }
    return 1.0 / (r_star * (b1 - a1) + b1) / (r_star * (b2 - a2) + b2);
}

ScalingTargets scaling_targets(double n_nodes, TopologyTag topology, double xi) {
    if (!(n_nodes >= 3.0)) throw std::domain_error("n_nodes must be >= 3");
    if (!(xi > 0.0 && xi <= 1.0)) throw std::domain_error("xi must lie in (0,1]");
    double r;
    if (topology == TopologyTag::erdos_renyi) {
        r = std::log(n_nodes);
    } else if (topology == TopologyTag::scale_free) {
        r = std::log(std::log(n_nodes));
        if (!(r > 0.0)) throw std::domain_error("scale_free targets need ln ln N > 0");
    } else {
        throw std::invalid_argument("scaling targets defined for erdos_renyi and scale_free only");
    }
    return {1.0 - 1.5 * kLn3 / r, std::pow(xi, 1.0 / r)};
}

MultipathEstimates multipath_estimates(double delta1, double delta2, int k,
                                       const TaskThresholds& t, const MultipathConstants& z) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    check_unit(delta1, "delta1");
    check_unit(delta2, "delta2");
    t.validate();
    MultipathEstimates est;
    est.k_beneficial_max = delta2 == 0.0 ? kInf : delta1 / delta2;
    if (k == 1) {
        const TvrRadii single = tvr_radius(t, 1.0 - delta1, 1.0 - delta2, RadiusMode::small_delta);
        est.r_star_k_c = single.r_star_c;
        est.r_star_k_p = single.r_star_p;
        est.r_star_k = single.r_star;
        return est;
    }
    const double denom_c = z.z1 * delta1;
    const double denom_p = k * (z.z2 * delta1 + delta2);
    est.r_star_k_c = denom_c == 0.0 ? kInf : (1.0 - t.c_star) / denom_c;
    est.r_star_k_p = denom_p == 0.0 ? kInf : (1.0 - t.p_star) / denom_p;
    est.r_star_k = std::min(est.r_star_k_c, est.r_star_k_p);
    return est;
}

RadiiReport build_radii_report(const TaskThresholds& t, double mean_conc, double mean_prob,
                               RadiusMode mode, FloorPolicy floor_policy) {
    RadiiReport report;
    report.mode = mode;
    report.floor_policy = floor_policy;
    const double delta1 = 1.0 - mean_conc;
    const double delta2 = 1.0 - mean_prob;
    if (mode == RadiusMode::small_delta) {
        report.r_c = entanglement_radius(delta1);
        report.r_p = connection_radius(delta2, t.xi);
    } else {
        report.r_c = exact_log_conc_radius(mean_conc, 0.0);
        report.r_p = exact_log_prob_radius(mean_prob, t.xi);
    }
    const TvrRadii tvr = tvr_radius(t, mean_conc, mean_prob, mode);
    const MvrRadii mvr = mvr_radius(t, mean_conc, mean_prob, mode);
    report.r_star_c = tvr.r_star_c;
    report.r_star_p = tvr.r_star_p;
    report.r_star = tvr.r_star;
    report.r_tilde_c = mvr.r_tilde_c;
    report.r_tilde_p = mvr.r_tilde_p;
    report.r_tilde = mvr.r_tilde;
    if (floor_policy == FloorPolicy::floored) {
        for (double* r : {&report.r_c, &report.r_p, &report.r_star_c, &report.r_star_p,
                          &report.r_star, &report.r_tilde_c, &report.r_tilde_p, &report.r_tilde}) {
            if (std::isfinite(*r)) *r = std::floor(*r);
        }
    }
    report.width = report.r_tilde - report.r_star;
    return report;
}

}  // namespace qtopo

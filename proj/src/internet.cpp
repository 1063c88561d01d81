#include "qtopo/internet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qtopo/quadrature.hpp"

namespace qtopo {

using nlohmann::json;

double InternetModel::density() const { return node_count / (M_PI * radius_km * radius_km); }

void InternetModel::validate() const {
    auto positive = [](double x, const char* what) {
        if (!(x > 0.0)) {
            throw std::invalid_argument(std::string(what) + " must be positive");
        }
    };
    positive(radius_km, "radius_km");
    positive(node_count, "node_count");
    positive(two_alpha_r_km, "two_alpha_r_km");
    positive(gamma_db_per_km, "gamma_db_per_km");
    positive(n_photons, "n_photons");
    positive(rho_c_per_km2, "rho_c_per_km2");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in (0,1]");
    if (!(b_coeff >= 0.0)) throw std::invalid_argument("b_coeff must be >= 0");
}

double edge_connection_probability(double z_km, const InternetModel& model) {
    if (z_km < 0.0) throw std::domain_error("distance must be >= 0");
    return model.beta * std::exp(-z_km / model.two_alpha_r_km);
}

double photonic_connection_probability(double z_km, const InternetModel& model) {
    if (z_km < 0.0) throw std::domain_error("distance must be >= 0");
    const double survival = std::pow(10.0, -model.gamma_db_per_km * z_km / 10.0);
    if (survival >= 1.0) return 1.0;
    return -std::expm1(model.n_photons * std::log1p(-survival));
}

double connection_law(double z_km, const InternetModel& model) {
    return edge_connection_probability(z_km, model) * photonic_connection_probability(z_km, model);
}

double step_cutoff_km(double n_photons) {
    if (!(n_photons > 0.0)) throw std::domain_error("n_photons must be positive");
    // calibrated plateau edges of p(z); nearest regime in log10(n_p)
    return std::log10(n_photons) >= 4.5 ? 250.0 : 120.0;
}

double annulus_node_count(double h_km, double z_km, const InternetModel& model,
                          AnnulusMode mode) {
    const double R = model.radius_km;
    if (!(h_km >= 0.0 && h_km <= R)) throw std::domain_error("h must lie in [0, R]");
    if (z_km < 0.0) throw std::domain_error("z must be >= 0");
    if (z_km > R + h_km) return 0.0;
    const double rho = model.density();
    if (z_km <= R - h_km) return 2.0 * M_PI * rho * z_km;
    double angle;
    if (mode == AnnulusMode::approx) {
        angle = std::acos(h_km / (2.0 * R));
    } else {
        const double c = (h_km * h_km + z_km * z_km - R * R) / (2.0 * h_km * z_km);
        angle = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return 2.0 * rho * z_km * angle;
}

namespace {

constexpr double kQuadRelTol = 1e-4;

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          std::span<const double> splits, const char* what) {
    const QuadratureResult r = integrate_adaptive_split(f, a, b, splits, kQuadRelTol);
    if (!r.converged) {
        throw std::runtime_error(std::string("quadrature failed to converge for ") + what +
                                 ": value=" + std::to_string(r.value) +
                                 " error=" + std::to_string(r.error_estimate) +
                                 " evaluations=" + std::to_string(r.evaluations));
    }
    return r.value;
}

}  // namespace

double mean_edge_probability(const InternetModel& model, PhotonicMode p_mode,
                             AnnulusMode annulus_mode) {
    model.validate();
    const double R = model.radius_km;
    const double cutoff = step_cutoff_km(model.n_photons);

    // inner integrals over the annulus radius z at fixed source offset h
    auto edge_weight = [&](double h, double z) {
        return annulus_node_count(h, z, model, annulus_mode) *
               edge_connection_probability(z, model);
    };
    auto photonic_weight = [&](double h) {
        if (p_mode == PhotonicMode::step) {
            const double hi = std::min(cutoff, R + h);
            const double splits[] = {R - h};
            return integrate_or_throw([&](double z) { return edge_weight(h, z); }, 0.0, hi,
                                      splits, "P(h), step mode");
        }
        const double splits[] = {R - h, cutoff};
        return integrate_or_throw(
            [&](double z) { return edge_weight(h, z) * photonic_connection_probability(z, model); },
            0.0, R + h, splits, "P(h), exact mode");
    };
    auto edge_total = [&](double h) {
        const double splits[] = {R - h};
        return integrate_or_throw([&](double z) { return edge_weight(h, z); }, 0.0, R + h, splits,
                                  "N(h)");
    };

    const double rho = model.density();
    const double numerator = integrate_or_throw(
        [&](double h) { return 2.0 * M_PI * rho * h * photonic_weight(h); }, 0.0, R, {},
        "edge-probability mass");
    const double denominator = integrate_or_throw(
        [&](double h) { return 2.0 * M_PI * rho * h * edge_total(h); }, 0.0, R, {},
        "edge count");
    return numerator / denominator;
}

double average_graph_distance(const InternetModel& model) {
    model.validate();
    return model.b_coeff * std::sqrt(model.node_count) / model.density();
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary entropy argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double qkd_key_rate_factor(double concurrence) {
    if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
        throw std::domain_error("concurrence must lie in [0,1]");
    }
    return 1.0 - 2.0 * binary_entropy((1.0 - concurrence) / 2.0);
}

double qkd_min_probability(double r_sec_hz, double r_eps_hz, double concurrence) {
    if (!(r_sec_hz > 0.0 && r_eps_hz > 0.0)) {
        throw std::domain_error("rates must be positive");
    }
    const double factor = qkd_key_rate_factor(concurrence);
    if (factor <= 0.0) {
        throw std::domain_error("no secure key: key-rate factor is non-positive at concurrence " +
                                std::to_string(concurrence));
    }
    const double p_star = r_sec_hz / (r_eps_hz * factor);
    if (p_star > 1.0) {
        throw std::domain_error("no secure key: required connection probability " +
                                std::to_string(p_star) + " exceeds 1 at concurrence " +
                                std::to_string(concurrence));
    }
    return p_star;
}

ViabilityVerdict viability_verdict(const InternetModel& model, const TaskThresholds& thresholds,
                                   double target_mean_conc, PhotonicMode p_mode) {
    model.validate();
    thresholds.validate();
    if (!(target_mean_conc >= 0.0 && target_mean_conc <= 1.0)) {
        throw std::domain_error("target_mean_conc must lie in [0,1]");
    }

    ViabilityVerdict v;
    v.model = model;
    v.thresholds = thresholds;
    v.p_mode = p_mode;
    v.target_mean_conc = target_mean_conc;
    v.density = model.density();
    v.critical_density = model.rho_c_per_km2;
    v.connected = v.density > v.critical_density;
    v.mean_edge_probability = mean_edge_probability(model, p_mode);
    v.avg_graph_distance = average_graph_distance(model);
    v.mode = RadiusMode::exact_log;
    const TvrRadii radii =
        tvr_radius(thresholds, target_mean_conc, v.mean_edge_probability, v.mode);
    v.r_star_c = radii.r_star_c;
    v.r_star_p = radii.r_star_p;
    v.r_star = radii.r_star;
    v.viable = v.connected && v.r_star >= v.avg_graph_distance;
    return v;
}

std::string verdict_to_json(const ViabilityVerdict& v) {
    json doc;
    doc["density"] = v.density;
    doc["density_formula"] = "N / (pi R^2)";
    doc["critical_density"] = v.critical_density;
    doc["connected"] = v.connected;
    doc["mean_edge_probability"] = v.mean_edge_probability;
    doc["avg_graph_distance"] = v.avg_graph_distance;
    doc["r_star_c"] = v.r_star_c;
    doc["r_star_p"] = v.r_star_p;
    doc["r_star"] = v.r_star;
    doc["radius_mode"] = v.mode == RadiusMode::exact_log ? "exact_log" : "small_delta";
    doc["viable"] = v.viable;
    doc["inputs"] = {
        {"radius_km", v.model.radius_km},
        {"node_count", v.model.node_count},
        {"two_alpha_r_km", v.model.two_alpha_r_km},
        {"beta", v.model.beta},
        {"gamma_db_per_km", v.model.gamma_db_per_km},
        {"n_photons", v.model.n_photons},
        {"b_coeff", v.model.b_coeff},
        {"rho_c_per_km2", v.model.rho_c_per_km2},
        {"target_mean_conc", v.target_mean_conc},
        {"c_star", v.thresholds.c_star},
        {"p_star", v.thresholds.p_star},
        {"xi", v.thresholds.xi},
        {"p_mode", v.p_mode == PhotonicMode::step ? "step" : "exact"},
    };
    return doc.dump(2) + "\n";
}

}  // namespace qtopo

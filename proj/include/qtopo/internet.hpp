#pragma once

#include <string>

#include "qtopo/topography.hpp"

namespace qtopo {

// Photonic quantum-internet model on a soft random geometric graph.
struct InternetModel {
    double radius_km = 1000.0;
    double node_count = 1500.0;
    double two_alpha_r_km = 226.0;  // typical edge length
    double beta = 1.0;              // edge-degree prefactor
    double gamma_db_per_km = 0.2;   // fiber loss
    double n_photons = 1e6;         // photons per generation attempt
    double b_coeff = 5e-5;          // graph-distance law coefficient
    double rho_c_per_km2 = 6.82e-5; // connectivity phase-transition density

    double density() const;  // N / (pi R^2), per km^2
    void validate() const;
};

// Pi(z): probability that two nodes z km apart share an edge.
double edge_connection_probability(double z_km, const InternetModel& model);
// p(z): probability of a photonic connection given an edge.
double photonic_connection_probability(double z_km, const InternetModel& model);
// The product Pi(z) * p(z). In [0,1], non-increasing in z.
double connection_law(double z_km, const InternetModel& model);

// Step-function stand-in for p(z): the calibrated cutoffs are 250 km for
// n_p = 1e6 and 120 km for n_p = 1e3 (nearest regime by log10 n_p).
double step_cutoff_km(double n_photons);

enum class AnnulusMode {
    approx,  // outer branch arccos(h / 2R) (default)
    exact    // outer branch arccos((h^2 + z^2 - R^2) / (2 h z))
};

// Node count per km of radius on the circle of radius z centered h km
// from the disc center: 2 pi rho z inside, boundary-clipped arc outside.
double annulus_node_count(double h_km, double z_km, const InternetModel& model,
                          AnnulusMode mode = AnnulusMode::approx);

enum class PhotonicMode { step, exact };

// Network-mean edge availability mu2 = P/N via the nested annulus
// integrals, adaptive quadrature at relative tolerance 1e-4 (h outermost).
// Throws std::runtime_error with diagnostics on non-convergence.
double mean_edge_probability(const InternetModel& model, PhotonicMode p_mode = PhotonicMode::step,
                             AnnulusMode annulus_mode = AnnulusMode::approx);

// <l>_QN = b sqrt(N) / rho.
double average_graph_distance(const InternetModel& model);

double binary_entropy(double x);  // bits
// Secure-key factor 1 - 2 h[(1-C)/2]; positive only above C ~ 0.78.
double qkd_key_rate_factor(double concurrence);

// Minimum entanglement-connection probability for a secure-key rate of
// r_sec with sources at r_eps: r_sec / (r_eps * key-rate factor). Throws
// std::domain_error when no key is possible (factor <= 0 or p* > 1).
double qkd_min_probability(double r_sec_hz, double r_eps_hz, double concurrence);

struct ViabilityVerdict {
    double density = 0.0;
    double critical_density = 0.0;
    bool connected = false;
    double mean_edge_probability = 0.0;  // mu2 from the model integrals
    double avg_graph_distance = 0.0;
    double target_mean_conc = 0.0;
    double r_star_c = 0.0;
    double r_star_p = 0.0;
    double r_star = 0.0;
    RadiusMode mode = RadiusMode::exact_log;
    bool viable = false;  // connected and r_star >= <l>_QN
    InternetModel model;
    TaskThresholds thresholds;
    PhotonicMode p_mode = PhotonicMode::step;
};

// End-to-end viability of a task on the modeled network: computes mu2,
// the density check and <l>_QN, then the TVR radius (exact_log) from
// (target_mean_conc, mu2).
ViabilityVerdict viability_verdict(const InternetModel& model, const TaskThresholds& thresholds,
                                   double target_mean_conc,
                                   PhotonicMode p_mode = PhotonicMode::step);

// JSON report {density, critical_density, connected,
// mean_edge_probability, avg_graph_distance, r_star_c, r_star_p, r_star,
// viable, inputs}.
std::string verdict_to_json(const ViabilityVerdict& verdict);

}  // namespace qtopo

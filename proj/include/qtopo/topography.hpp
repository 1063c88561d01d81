#pragma once

#include "qtopo/network.hpp"

namespace qtopo {

// Parameter thresholds of a quantum-information task plus the viability
// probability floors for the maximal viable region.
struct TaskThresholds {
    double c_star = 0.0;  // concurrence threshold
    double p_star = 1.0;  // probability threshold, xi <= p_star <= 1
    double xi = 0.01;     // connection cutoff probability
    double eps_c = 1.0;   // exceedance floor, concurrence branch
    double eps_p = 1.0;   // exceedance floor, probability branch

    void validate() const;
};

enum class RadiusMode {
    small_delta,  // the printed closed forms in r^C, r^P
    exact_log     // largest real l satisfying the exact mean-parameter laws
};

enum class CurveMode {
    exact,      // Max(0, 3/2 ((1+2 mu1)/3)^l - 1/2)
    asymptotic  // long-path form Max(0, 3/2 e^{-(2/3)(1-mu1) l} - 1/2)
};

enum class FloorPolicy { real, floored };

double avg_path_concurrence(double mean_conc, int l, CurveMode mode = CurveMode::exact);
double avg_path_probability(double mean_prob, int l);

// r^C = (3/2) ln 3 / delta1; infinite for delta1 = 0.
double entanglement_radius(double delta1);
// r^P = ln(1/xi) / delta2.
double connection_radius(double delta2, double xi);

struct TvrRadii {
    double r_star_c = 0.0;
    double r_star_p = 0.0;
    double r_star = 0.0;  // min of the two
};

struct MvrRadii {
    double r_tilde_c = 0.0;
    double r_tilde_p = 0.0;
    double r_tilde = 0.0;
};

// Radius of the typical viable region: largest l with mean path
// parameters above (c*, p*). Unreachable thresholds give radius 0, not an
// error.
TvrRadii tvr_radius(const TaskThresholds& t, double mean_conc, double mean_prob, RadiusMode mode);

// Radius of the maximal viable region: thresholds relaxed to c* eps_c and
// p* eps_p through the Markov bound. The probability branch is capped at
// the connection radius (the region is defined within the connected
// subgraph), which also realizes the eps -> 0 limit r_tilde_p -> r^P.
MvrRadii mvr_radius(const TaskThresholds& t, double mean_conc, double mean_prob, RadiusMode mode);

// Width of the MVR from the means alone: r^C ln[(1+2c*)/(1+2c* eps)].
double mvr_width_mean_form(const TaskThresholds& t, double mean_conc, double eps);

// Width of the MVR from the edge-parameter distribution width:
// r* (1-eps)(b-a) / (1 - (1-eps) b). Valid for 1 - 1/b <= eps <= 1;
// throws std::domain_error naming the bound otherwise.
double mvr_width_distribution_form(double r_star, double eps, double a, double b);

// Lower bound on the probability that the shortest graph path is optimal
// in both path parameters: prod_i 1/(r*(b_i - a_i) + b_i).
double sgp_optimality_bound(double r_star, double a1, double b1, double a2, double b2);

struct ScalingTargets {
    double mean_conc = 1.0;
    double mean_prob = 1.0;
};

// Edge-parameter means required for the viable radius to reach the graph
// radius: r = ln N (Erdos-Renyi) or ln ln N (scale-free).
ScalingTargets scaling_targets(double n_nodes, TopologyTag topology, double xi);

struct MultipathConstants {
    double z1 = 1.0 / 3.0;
    double z2 = 0.5;
};

struct MultipathEstimates {
    double r_star_k_c = 0.0;
    double r_star_k_p = 0.0;
    double r_star_k = 0.0;
    double k_beneficial_max = 0.0;  // delta1 / delta2
};

// Short-path estimates of the k-path purified TVR radii:
// r*^(k),C = (1-c*)/(z1 delta1), r*^(k),P = (1-p*)/(k (z2 delta1 + delta2)).
// k = 1 returns the single-path small-delta TVR radii instead.
MultipathEstimates multipath_estimates(double delta1, double delta2, int k,
                                       const TaskThresholds& t,
                                       const MultipathConstants& z = {});

struct RadiiReport {
    double r_c = 0.0;
    double r_p = 0.0;
    double r_star_c = 0.0;
    double r_star_p = 0.0;
    double r_star = 0.0;
    double r_tilde_c = 0.0;
    double r_tilde_p = 0.0;
    double r_tilde = 0.0;
    double width = 0.0;  // r_tilde - r_star
    RadiusMode mode = RadiusMode::exact_log;
    FloorPolicy floor_policy = FloorPolicy::real;
};

RadiiReport build_radii_report(const TaskThresholds& t, double mean_conc, double mean_prob,
                               RadiusMode mode, FloorPolicy floor_policy = FloorPolicy::real);

}  // namespace qtopo

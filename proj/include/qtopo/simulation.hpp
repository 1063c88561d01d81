#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtopo/network.hpp"
#include "qtopo/topography.hpp"

namespace qtopo {

struct SimConfig {
    int n_source_samples = 100;
    int n_dest_samples = 100;
    int k_max = 1;
    bool improve_only = true;
    std::uint64_t master_seed = 0;
    int l_max = 64;

    void validate() const;
};

struct CurvePoint {
    int l = 0;
    double mean_conc = 0.0;
    double stderr_conc = 0.0;
    double mean_prob = 0.0;
    double stderr_prob = 0.0;
    long n_samples = 0;
};

struct CampaignStats {
    long sampled_pairs = 0;
    long unreachable_pairs = 0;
    long beyond_l_max = 0;
};

struct Curve {
    std::vector<CurvePoint> points;  // ascending l, only populated bins
    CampaignStats stats;
};

// Mean SGP path parameters per graph distance. Destinations are sampled
// without replacement per source; sample index -> independent RNG
// substream, so output is bitwise identical for any worker count.
Curve single_path_topography(const QuantumNetwork& net, const SimConfig& config, int workers = 1);

// Effective parameters after pumping the states of up to k_max
// edge-disjoint paths per pair. Effective probability is the product of
// the accepted paths' availabilities times the accepted pumping-step
// success probabilities. k_max = 1 degenerates to the single-path curve.
Curve multipath_topography(const QuantumNetwork& net, const SimConfig& config, int workers = 1);

struct ViabilityPoint {
    int l = 0;
    long n_samples = 0;
    double mean_conc = 0.0, stderr_conc = 0.0;
    double mean_prob = 0.0, stderr_prob = 0.0;
    double pr_conc = 0.0;   // empirical Pr(C_l >= c*)
    double pr_prob = 0.0;   // empirical Pr(P_l >= p*)
    double pr_joint = 0.0;  // both at once
    double wilson_lo_conc = 0.0, wilson_hi_conc = 0.0;
    double wilson_lo_prob = 0.0, wilson_hi_prob = 0.0;
};

struct ViabilityReport {
    std::vector<ViabilityPoint> points;
    CampaignStats stats;
    // Largest l whose bin means meet both thresholds (-1: none).
    int empirical_tvr_radius = -1;
    // Largest l with empirical exceedance >= eps on both branches.
    int empirical_mvr_radius = -1;
    int empirical_mvr_radius_c = -1;
    int empirical_mvr_radius_p = -1;
};

// Empirical exceedance probabilities of the SGP path parameters with
// Wilson-score intervals, plus empirical TVR/MVR radii.
ViabilityReport empirical_viability(const QuantumNetwork& net, const TaskThresholds& thresholds,
                                    const SimConfig& config, int workers = 1);

// 95% Wilson score interval for k successes out of n.
std::pair<double, double> wilson_interval(long k, long n);

// CSV rows `l,mean_conc,stderr_conc,mean_prob,stderr_prob,n_samples,mode`
// (mode is "single" or "multi"); numbers in shortest round-trip form.
std::string curves_to_csv(const Curve& single, const Curve* multi);

}  // namespace qtopo

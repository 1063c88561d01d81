#include "qtopo/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "qtopo/pathfinding.hpp"
#include "qtopo/quantum.hpp"
#include "qtopo/rng.hpp"

namespace qtopo {

void SimConfig::validate() const {
    if (n_source_samples < 1) throw std::invalid_argument("n_source_samples must be >= 1");
    if (n_dest_samples < 1) throw std::invalid_argument("n_dest_samples must be >= 1");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
}

namespace {

struct BinAcc {
    long n = 0;
    double sum_c = 0.0, sum_cc = 0.0;
    double sum_p = 0.0, sum_pp = 0.0;
    long exceed_c = 0, exceed_p = 0, exceed_joint = 0;

    void add(double conc, double prob) {
        ++n;
        sum_c += conc;
        sum_cc += conc * conc;
        sum_p += prob;
        sum_pp += prob * prob;
    }

    void merge(const BinAcc& other) {
        n += other.n;
        sum_c += other.sum_c;
        sum_cc += other.sum_cc;
        sum_p += other.sum_p;
        sum_pp += other.sum_pp;
        exceed_c += other.exceed_c;
        exceed_p += other.exceed_p;
        exceed_joint += other.exceed_joint;
    }
};

struct Partial {
    std::vector<BinAcc> bins;
    CampaignStats stats;

    explicit Partial(int l_max) : bins(l_max + 1) {}

    void merge(const Partial& other) {
        for (std::size_t i = 0; i < bins.size(); ++i) bins[i].merge(other.bins[i]);
        stats.sampled_pairs += other.stats.sampled_pairs;
        stats.unreachable_pairs += other.stats.unreachable_pairs;
        stats.beyond_l_max += other.stats.beyond_l_max;
    }
};

// First k entries of a Fisher-Yates shuffle of `candidates`.
std::vector<int> sample_without_replacement(std::vector<int> candidates, int k,
                                            std::mt19937_64& eng) {
    const int take = std::min<int>(k, static_cast<int>(candidates.size()));
    for (int i = 0; i < take; ++i) {
        const auto j = i + static_cast<int>(uniform_index(eng, candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(take);
    return candidates;
}

std::vector<int> pick_sources(const QuantumNetwork& net, const SimConfig& config) {
    std::vector<int> all(net.node_count);
    std::iota(all.begin(), all.end(), 0);
    auto eng = substream(config.master_seed, 0);
    return sample_without_replacement(std::move(all), config.n_source_samples, eng);
}

bool multipath_effective(const QuantumNetwork& net, int s, int d, const SimConfig& config,
                         double& conc, double& prob) {
    const std::vector<PathRecord> paths = edge_disjoint_paths(net, s, d, config.k_max);
    if (paths.empty()) return false;
    if (paths.size() == 1) {
        conc = paths[0].path_concurrence;
        prob = paths[0].path_probability;
        return true;
    }
    std::vector<BellDiagonalState> states;
    states.reserve(paths.size());
    for (const PathRecord& p : paths) {
        states.push_back(BellDiagonalState::from_isotropic(p.path_q));
    }
    const PumpResult pump = pump_sequence(states, config.improve_only);
    conc = pump.state.concurrence();
    prob = pump.success_probability;
    for (std::size_t idx : pump.accepted) prob *= paths[idx].path_probability;
    return true;
}

// Runs the sampling campaign: one RNG substream per source, per-source
// partial accumulators merged in source order so any worker count yields
// identical sums.
Partial run_campaign(const QuantumNetwork& net, const SimConfig& config, int workers,
                     bool multipath, const TaskThresholds* thresholds) {
    config.validate();
    if (net.node_count < 2) throw std::invalid_argument("campaign needs at least two nodes");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    const std::vector<int> sources = pick_sources(net, config);
    std::vector<Partial> partials(sources.size(), Partial(config.l_max));

    auto run_source = [&](std::size_t src_idx) {
        const int s = sources[src_idx];
        Partial& part = partials[src_idx];
        auto eng = substream(config.master_seed, 1 + src_idx);

        const BfsTree tree = bfs_shortest_tree(net, s);
        std::vector<int> candidates;
        candidates.reserve(net.node_count - 1);
        for (int v = 0; v < net.node_count; ++v) {
            if (v != s) candidates.push_back(v);
        }
        const std::vector<int> dests =
            sample_without_replacement(std::move(candidates), config.n_dest_samples, eng);

        for (int d : dests) {
            const int l = tree.dist[d];
            if (l < 0) {
                ++part.stats.unreachable_pairs;
                continue;
            }
            if (l > config.l_max) {
                ++part.stats.beyond_l_max;
                continue;
            }
            double conc = 0.0, prob = 0.0;
            if (multipath) {
                if (!multipath_effective(net, s, d, config, conc, prob)) continue;
            } else {
                const PathRecord rec = make_path_record(net, tree.path_to(d));
                conc = rec.path_concurrence;
                prob = rec.path_probability;
            }
            ++part.stats.sampled_pairs;
            BinAcc& bin = part.bins[l];
            bin.add(conc, prob);
            if (thresholds) {
                const bool over_c = conc >= thresholds->c_star;
                const bool over_p = prob >= thresholds->p_star;
                bin.exceed_c += over_c;
                bin.exceed_p += over_p;
                bin.exceed_joint += over_c && over_p;
            }
        }
    };

    if (workers == 1) {
        for (std::size_t i = 0; i < sources.size(); ++i) run_source(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int n_threads = std::min<int>(workers, static_cast<int>(sources.size()));
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < sources.size();
                     i = next.fetch_add(1)) {
                    run_source(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    Partial total(config.l_max);
    for (const Partial& part : partials) total.merge(part);
    return total;
}

double stderr_of_mean(long n, double sum, double sum_sq) {
    if (n < 2) return 0.0;
    const double var = (sum_sq - sum * sum / n) / (n - 1);
    return std::sqrt(std::max(0.0, var) / n);
}

Curve curve_from_partial(const Partial& total) {
    Curve curve;
    curve.stats = total.stats;
    for (std::size_t l = 0; l < total.bins.size(); ++l) {
        const BinAcc& bin = total.bins[l];
        if (bin.n == 0) continue;
        CurvePoint pt;
        pt.l = static_cast<int>(l);
        pt.n_samples = bin.n;
        pt.mean_conc = bin.sum_c / bin.n;
        pt.mean_prob = bin.sum_p / bin.n;
        pt.stderr_conc = stderr_of_mean(bin.n, bin.sum_c, bin.sum_cc);
        pt.stderr_prob = stderr_of_mean(bin.n, bin.sum_p, bin.sum_pp);
        curve.points.push_back(pt);
    }
    return curve;
}

}  // namespace

Curve single_path_topography(const QuantumNetwork& net, const SimConfig& config, int workers) {
    return curve_from_partial(run_campaign(net, config, workers, false, nullptr));
}

Curve multipath_topography(const QuantumNetwork& net, const SimConfig& config, int workers) {
    return curve_from_partial(run_campaign(net, config, workers, true, nullptr));
}

std::pair<double, double> wilson_interval(long k, long n) {
    if (n <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 95%
    const double p = static_cast<double>(k) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ViabilityReport empirical_viability(const QuantumNetwork& net, const TaskThresholds& thresholds,
                                    const SimConfig& config, int workers) {
    thresholds.validate();
    const Partial total = run_campaign(net, config, workers, false, &thresholds);

    ViabilityReport report;
    report.stats = total.stats;
    for (std::size_t l = 0; l < total.bins.size(); ++l) {
        const BinAcc& bin = total.bins[l];
        if (bin.n == 0) continue;
        ViabilityPoint pt;
        pt.l = static_cast<int>(l);
        pt.n_samples = bin.n;
        pt.mean_conc = bin.sum_c / bin.n;
        pt.mean_prob = bin.sum_p / bin.n;
        pt.stderr_conc = stderr_of_mean(bin.n, bin.sum_c, bin.sum_cc);
        pt.stderr_prob = stderr_of_mean(bin.n, bin.sum_p, bin.sum_pp);
        pt.pr_conc = static_cast<double>(bin.exceed_c) / bin.n;
        pt.pr_prob = static_cast<double>(bin.exceed_p) / bin.n;
        pt.pr_joint = static_cast<double>(bin.exceed_joint) / bin.n;
        std::tie(pt.wilson_lo_conc, pt.wilson_hi_conc) = wilson_interval(bin.exceed_c, bin.n);
        std::tie(pt.wilson_lo_prob, pt.wilson_hi_prob) = wilson_interval(bin.exceed_p, bin.n);
        report.points.push_back(pt);

        if (pt.mean_conc >= thresholds.c_star && pt.mean_prob >= thresholds.p_star) {
            report.empirical_tvr_radius = std::max(report.empirical_tvr_radius, pt.l);
        }
        if (pt.pr_conc >= thresholds.eps_c) {
            report.empirical_mvr_radius_c = std::max(report.empirical_mvr_radius_c, pt.l);
        }
        if (pt.pr_prob >= thresholds.eps_p) {
            report.empirical_mvr_radius_p = std::max(report.empirical_mvr_radius_p, pt.l);
        }
        if (pt.pr_conc >= thresholds.eps_c && pt.pr_prob >= thresholds.eps_p) {
            report.empirical_mvr_radius = std::max(report.empirical_mvr_radius, pt.l);
        }
    }
    return report;
}

namespace {

std::string num(double x) { return nlohmann::json(x).dump(); }

void append_rows(std::string& out, const Curve& curve, const char* mode) {
    for (const CurvePoint& pt : curve.points) {
        out += std::to_string(pt.l);
        out += ',';
        out += num(pt.mean_conc);
        out += ',';
        out += num(pt.stderr_conc);
        out += ',';
        out += num(pt.mean_prob);
        out += ',';
        out += num(pt.stderr_prob);
        out += ',';
        out += std::to_string(pt.n_samples);
        out += ',';
        out += mode;
        out += '\n';
    }
}

}  // namespace

std::string curves_to_csv(const Curve& single, const Curve* multi) {
    std::string out = "l,mean_conc,stderr_conc,mean_prob,stderr_prob,n_samples,mode\n";
    append_rows(out, single, "single");
    if (multi) append_rows(out, *multi, "multi");
    return out;
}

}  // namespace qtopo

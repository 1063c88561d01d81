// qtopo: entanglement topography analyses for large-scale quantum networks.
//
// One JSON config document per run (see README); every output embeds the
// resolved config and all randomness derives from a single seed.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtopo/internet.hpp"
#include "qtopo/network.hpp"
#include "qtopo/pathfinding.hpp"
#include "qtopo/quantum.hpp"
#include "qtopo/rng.hpp"
#include "qtopo/simulation.hpp"
#include "qtopo/topography.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qtopo;

namespace {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& field, const std::string& msg)
        : std::runtime_error("config error at " + field + ": " + msg) {}
    explicit ConfigError(const std::string& msg)
        : std::runtime_error("config error: " + msg) {}
};

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
        }
    }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) {
        throw ConfigError(path.empty() ? key : path + "." + key, "missing required key");
    }
    return obj.at(key);
}

double number_at(const json& obj, const std::string& path, const std::string& key) {
    const json& v = require(obj, path, key);
    if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
    return v.get<double>();
}

double number_or(const json& obj, const std::string& path, const std::string& key, double dflt) {
    if (!obj.contains(key)) return dflt;
    return number_at(obj, path, key);
}

bool bool_or(const json& obj, const std::string& path, const std::string& key, bool dflt) {
    if (!obj.contains(key)) return dflt;
    const json& v = obj.at(key);
    if (!v.is_boolean()) throw ConfigError(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

std::string string_at(const json& obj, const std::string& path, const std::string& key) {
    const json& v = require(obj, path, key);
    if (!v.is_string()) throw ConfigError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::string string_or(const json& obj, const std::string& path, const std::string& key,
                      const std::string& dflt) {
    if (!obj.contains(key)) return dflt;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

ParamDistribution parse_distribution(const json& obj, const std::string& path) {
    reject_unknown_keys(obj, path, {"shape", "delta", "a", "b", "mean"});
    const std::string shape = string_or(obj, path, "shape", "uniform");
    ParamDistribution dist;
    if (shape == "point") {
        dist.shape = DistShape::point;
        dist.a = 1.0;
        dist.b = 1.0;
        dist.delta = obj.contains("mean") ? 1.0 - number_at(obj, path, "mean")
                                          : number_at(obj, path, "delta");
    } else if (shape == "uniform") {
        dist.shape = DistShape::uniform;
        dist.delta = number_at(obj, path, "delta");
        dist.a = number_at(obj, path, "a");
        dist.b = number_at(obj, path, "b");
    } else {
        throw ConfigError(path + ".shape", "expected \"uniform\" or \"point\"");
    }
    try {
        dist.validate(path + ".");
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what());  // message already carries the field path
    }
    return dist;
}

TaskThresholds parse_thresholds(const json& obj, const std::string& path) {
    reject_unknown_keys(obj, path, {"c_star", "p_star", "xi", "eps_c", "eps_p"});
    TaskThresholds t;
    t.c_star = number_at(obj, path, "c_star");
    t.p_star = number_at(obj, path, "p_star");
    t.xi = number_or(obj, path, "xi", 0.01);
    t.eps_c = number_or(obj, path, "eps_c", 1.0);
    t.eps_p = number_or(obj, path, "eps_p", 1.0);
    try {
        t.validate();
    } catch (const std::exception& err) {
        throw ConfigError(path, err.what());
    }
    return t;
}

QuantumNetwork build_from_topology(const json& topo, const std::string& path, std::uint64_t seed) {
    const std::string type = string_at(topo, path, "type");
    const bool largest = bool_or(topo, path, "largest_component", false);
    try {
        if (type == "erdos_renyi") {
            reject_unknown_keys(topo, path, {"type", "n", "mean_degree", "largest_component"});
            return build_erdos_renyi(static_cast<int>(number_at(topo, path, "n")),
                                     number_at(topo, path, "mean_degree"), seed, largest);
        }
        if (type == "scale_free") {
            reject_unknown_keys(topo, path, {"type", "n", "m", "largest_component"});
            return build_scale_free(static_cast<int>(number_at(topo, path, "n")),
                                    static_cast<int>(number_at(topo, path, "m")), seed, largest);
        }
        if (type == "soft_rgg") {
            reject_unknown_keys(topo, path,
                                {"type", "n", "radius_km", "alpha", "gamma_db_per_km", "n_photons",
                                 "beta", "largest_component"});
            const double radius = number_at(topo, path, "radius_km");
            const double alpha = number_or(topo, path, "alpha", 113.0 / radius);
            return build_soft_rgg(static_cast<int>(number_at(topo, path, "n")), radius, alpha,
                                  number_or(topo, path, "gamma_db_per_km", 0.2),
                                  number_or(topo, path, "n_photons", 1e6), seed,
                                  number_or(topo, path, "beta", 1.0), largest);
        }
        if (type == "grid") {
            reject_unknown_keys(topo, path, {"type", "rows", "cols", "largest_component"});
            return build_square_lattice(static_cast<int>(number_at(topo, path, "rows")),
                                        static_cast<int>(number_at(topo, path, "cols")));
        }
    } catch (const std::invalid_argument& err) {
        throw ConfigError(path, err.what());
    }
    throw ConfigError(path + ".type",
                      "expected one of erdos_renyi, scale_free, soft_rgg, grid");
}

void write_file(const fs::path& target, const std::string& text) {
    std::ofstream out(target, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + target.string() + " for writing");
    out << text;
}

json radii_report_to_json(const RadiiReport& r) {
    auto value = [](double x) -> json {
        if (std::isinf(x)) return "inf";
        return x;
    };
    return json{{"r_c", value(r.r_c)},
                {"r_p", value(r.r_p)},
                {"r_star_c", value(r.r_star_c)},
                {"r_star_p", value(r.r_star_p)},
                {"r_star", value(r.r_star)},
                {"r_tilde_c", value(r.r_tilde_c)},
                {"r_tilde_p", value(r.r_tilde_p)},
                {"r_tilde", value(r.r_tilde)},
                {"width", value(r.width)}};
}

json curve_to_json(const Curve& curve) {
    json rows = json::array();
    for (const CurvePoint& pt : curve.points) {
        rows.push_back(json{{"l", pt.l},
                            {"mean_conc", pt.mean_conc},
                            {"stderr_conc", pt.stderr_conc},
                            {"mean_prob", pt.mean_prob},
                            {"stderr_prob", pt.stderr_prob},
                            {"n_samples", pt.n_samples}});
    }
    return json{{"points", std::move(rows)},
                {"sampled_pairs", curve.stats.sampled_pairs},
                {"unreachable_pairs", curve.stats.unreachable_pairs},
                {"beyond_l_max", curve.stats.beyond_l_max}};
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "both";
    std::optional<std::uint64_t> seed_override;
};

json load_config(const CommonArgs& args, const std::string& expected_command) {
    std::ifstream in(args.config_path);
    if (!in) throw std::runtime_error("cannot read config file " + args.config_path);
    json config;
    try {
        config = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + err.what());
    }
    if (!config.is_object()) throw ConfigError("<root>", "config must be a JSON object");
    if (config.contains("command") &&
        config.at("command").get<std::string>() != expected_command) {
        throw ConfigError("command", "config is for command \"" +
                                         config.at("command").get<std::string>() +
                                         "\", invoked as \"" + expected_command + "\"");
    }
    if (args.seed_override) config["seed"] = *args.seed_override;
    return config;
}

int cmd_generate(const CommonArgs& args) {
    json config = load_config(args, "generate");
    reject_unknown_keys(config, "",
                        {"command", "seed", "output", "topology", "conc_dist", "prob_dist"});
    const auto seed = static_cast<std::uint64_t>(number_or(config, "", "seed", 0));
    config["seed"] = seed;

    QuantumNetwork net = build_from_topology(require(config, "", "topology"), "topology", seed);

    std::optional<ParamDistribution> conc_dist, prob_dist;
    if (config.contains("conc_dist")) {
        conc_dist = parse_distribution(config.at("conc_dist"), "conc_dist");
    }
    if (config.contains("prob_dist")) {
        prob_dist = parse_distribution(config.at("prob_dist"), "prob_dist");
    }
    if (conc_dist && prob_dist) {
        assign_edge_states(net, *conc_dist, *prob_dist, seed);
    } else if (conc_dist) {
        assign_edge_concurrences(net, *conc_dist, seed);
    } else if (prob_dist) {
        throw ConfigError("prob_dist", "prob_dist without conc_dist is not supported");
    }
    // audit trail: distribution parameters ride along in the params map
    if (conc_dist) {
        net.params["conc_delta"] = conc_dist->delta;
        net.params["conc_a"] = conc_dist->a;
        net.params["conc_b"] = conc_dist->b;
    }
    if (prob_dist) {
        net.params["prob_delta"] = prob_dist->delta;
        net.params["prob_a"] = prob_dist->a;
        net.params["prob_b"] = prob_dist->b;
    }

    const fs::path target = fs::path(args.out_dir) / string_or(config, "", "output", "network.json");
    write_file(target, network_to_json(net));

    double mean_c = 0.0, mean_p = 0.0;
    for (int e = 0; e < net.edge_count(); ++e) {
        mean_c += std::max(0.0, 1.0 - 1.5 * net.edge_q[e]);
        mean_p += net.edge_p[e];
    }
    if (net.edge_count() > 0) {
        mean_c /= net.edge_count();
        mean_p /= net.edge_count();
    }
    std::cout << "generated " << to_string(net.topology_tag) << " network: " << net.node_count
              << " nodes, " << net.edge_count() << " edges, mean degree " << net.mean_degree()
              << ", mean edge concurrence " << mean_c << ", mean edge probability " << mean_p
              << " -> " << target.string() << "\n";
    return 0;
}

int cmd_radii(const CommonArgs& args) {
    json config = load_config(args, "radii");
    reject_unknown_keys(config, "",
                        {"command", "seed", "mean_conc", "mean_prob", "thresholds", "dist_coeffs",
                         "scaling", "multipath", "output"});
    const double mean_conc = number_at(config, "", "mean_conc");
    const double mean_prob = number_at(config, "", "mean_prob");
    const TaskThresholds t = parse_thresholds(require(config, "", "thresholds"), "thresholds");

    json out;
    out["config"] = config;
    for (auto [mode, name] : {std::pair{RadiusMode::exact_log, "exact_log"},
                              std::pair{RadiusMode::small_delta, "small_delta"}}) {
        json entry = radii_report_to_json(
            build_radii_report(t, mean_conc, mean_prob, mode, FloorPolicy::real));
        entry["floored"] = radii_report_to_json(
            build_radii_report(t, mean_conc, mean_prob, mode, FloorPolicy::floored));
        out[name] = std::move(entry);
    }

    out["width_mean_form"] = mvr_width_mean_form(t, mean_conc, t.eps_c);

    if (config.contains("dist_coeffs")) {
        const json& coeffs = config.at("dist_coeffs");
        reject_unknown_keys(coeffs, "dist_coeffs", {"a1", "b1", "a2", "b2"});
        const double a1 = number_at(coeffs, "dist_coeffs", "a1");
        const double b1 = number_at(coeffs, "dist_coeffs", "b1");
        const double a2 = number_at(coeffs, "dist_coeffs", "a2");
        const double b2 = number_at(coeffs, "dist_coeffs", "b2");
        const RadiiReport exact =
            build_radii_report(t, mean_conc, mean_prob, RadiusMode::exact_log, FloorPolicy::real);
        json width;
        try {
            width["concurrence"] = mvr_width_distribution_form(exact.r_star_c, t.eps_c, a1, b1);
        } catch (const std::domain_error& err) {
            width["warning"] = err.what();
        }
        try {
            width["probability"] = mvr_width_distribution_form(exact.r_star_p, t.eps_p, a2, b2);
        } catch (const std::domain_error& err) {
            if (!width.contains("warning")) width["warning"] = err.what();
        }
        out["width_distribution_form"] = std::move(width);
        out["sgp_optimality_bound"] = sgp_optimality_bound(exact.r_star, a1, b1, a2, b2);
    }


    if (config.contains("scaling")) {
        const json& scaling = config.at("scaling");
        reject_unknown_keys(scaling, "scaling", {"n_nodes", "topology"});
        const std::string topology = string_at(scaling, "scaling", "topology");
        const ScalingTargets targets = scaling_targets(
            number_at(scaling, "scaling", "n_nodes"), topology_tag_from_string(topology), t.xi);
        out["scaling_targets"] = {{"mean_conc", targets.mean_conc},
                                  {"mean_prob", targets.mean_prob}};
    }

    if (config.contains("multipath")) {
        const json& mp = config.at("multipath");
        reject_unknown_keys(mp, "multipath", {"k", "z1", "z2"});
        MultipathConstants z;
        z.z1 = number_or(mp, "multipath", "z1", z.z1);
        z.z2 = number_or(mp, "multipath", "z2", z.z2);
        const MultipathEstimates est =
            multipath_estimates(1.0 - mean_conc, 1.0 - mean_prob,
                                static_cast<int>(number_at(mp, "multipath", "k")), t, z);
        out["multipath"] = {{"r_star_k_c", est.r_star_k_c},
                            {"r_star_k_p", est.r_star_k_p},
                            {"r_star_k", est.r_star_k},
                            {"k_beneficial_max", est.k_beneficial_max}};
    }

    const fs::path target = fs::path(args.out_dir) / string_or(config, "", "output", "radii.json");
    write_file(target, out.dump(2) + "\n");
    const RadiiReport headline =
        build_radii_report(t, mean_conc, mean_prob, RadiusMode::exact_log, FloorPolicy::floored);
    std::cout << "radii: r*_c=" << headline.r_star_c << " r*_p=" << headline.r_star_p
              << " r*=" << headline.r_star << " (exact_log, floored) -> " << target.string()
              << "\n";
    return 0;
}

int cmd_simulate(const CommonArgs& args) {
    json config = load_config(args, "simulate");
    reject_unknown_keys(config, "",
                        {"command", "seed", "network_file", "topology", "conc_dist", "prob_dist",
                         "sim", "thresholds", "analytic_means", "output_prefix"});
    const auto seed = static_cast<std::uint64_t>(number_or(config, "", "seed", 0));
    config["seed"] = seed;

    QuantumNetwork net;
    double analytic_conc = -1.0, analytic_prob = -1.0;
    if (config.contains("network_file")) {
        const std::string file = string_at(config, "", "network_file");
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot read network file " << file << "\n";
            return 1;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        net = network_from_json(text);
    } else if (config.contains("topology")) {
        const auto net_seed = splitmix64(seed + 1);
        net = build_from_topology(config.at("topology"), "topology", net_seed);
        if (config.contains("conc_dist")) {
            const ParamDistribution conc = parse_distribution(config.at("conc_dist"), "conc_dist");
            analytic_conc = conc.mean();
            if (config.contains("prob_dist")) {
                const ParamDistribution prob =
                    parse_distribution(config.at("prob_dist"), "prob_dist");
                analytic_prob = prob.mean();
                assign_edge_states(net, conc, prob, net_seed);
            } else {
                assign_edge_concurrences(net, conc, net_seed);
            }
        }
    } else {
        throw ConfigError("network_file", "provide network_file or an inline topology");
    }

    const json& sim_obj = require(config, "", "sim");
    reject_unknown_keys(sim_obj, "sim",
                        {"n_source_samples", "n_dest_samples", "k_max", "improve_only", "l_max",
                         "workers"});
    SimConfig sim;
    sim.n_source_samples = static_cast<int>(number_or(sim_obj, "sim", "n_source_samples", 100));
    sim.n_dest_samples = static_cast<int>(number_or(sim_obj, "sim", "n_dest_samples", 100));
    sim.k_max = static_cast<int>(number_or(sim_obj, "sim", "k_max", 1));
    sim.improve_only = bool_or(sim_obj, "sim", "improve_only", true);
    sim.l_max = static_cast<int>(number_or(sim_obj, "sim", "l_max", 64));
    sim.master_seed = seed;
    const int workers = static_cast<int>(number_or(sim_obj, "sim", "workers", 1));
    try {
        sim.validate();
        if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    } catch (const std::invalid_argument& err) {
        throw ConfigError("sim", err.what());
    }

    if (config.contains("analytic_means")) {
        const json& means = config.at("analytic_means");
        reject_unknown_keys(means, "analytic_means", {"mean_conc", "mean_prob"});
        analytic_conc = number_at(means, "analytic_means", "mean_conc");
        analytic_prob = number_at(means, "analytic_means", "mean_prob");
    }

    const Curve single = single_path_topography(net, sim, workers);
    std::optional<Curve> multi;
    if (sim.k_max >= 2) multi = multipath_topography(net, sim, workers);

    json report;
    report["config"] = config;
    report["network"] = {{"nodes", net.node_count},
                         {"edges", net.edge_count()},
                         {"topology_tag", to_string(net.topology_tag)},
                         {"seed", net.seed}};
    report["single"] = curve_to_json(single);
    if (multi) report["multi"] = curve_to_json(*multi);

    if (analytic_conc >= 0.0 && analytic_prob >= 0.0) {
        json overlay = json::array();
        bool all_within = true;
        for (const CurvePoint& pt : single.points) {
            const double ac = avg_path_concurrence(analytic_conc, pt.l, CurveMode::exact);
            const double ap = avg_path_probability(analytic_prob, pt.l);
            // 1e-12 floor keeps degenerate (zero-variance) bins meaningful
            const bool within = std::abs(pt.mean_conc - ac) <= 3.0 * pt.stderr_conc + 1e-12 &&
                                std::abs(pt.mean_prob - ap) <= 3.0 * pt.stderr_prob + 1e-12;
            if (pt.n_samples >= 30 && !within) all_within = false;
            overlay.push_back(json{{"l", pt.l},
                                   {"analytic_conc", ac},
                                   {"analytic_prob", ap},
                                   {"within_3_sigma", within}});
        }
        report["analytic_overlay"] = std::move(overlay);
        report["analytic_agreement_3sigma"] = all_within;
    }

    if (config.contains("thresholds")) {
        const TaskThresholds t = parse_thresholds(config.at("thresholds"), "thresholds");
        const ViabilityReport viability = empirical_viability(net, t, sim, workers);
        json rows = json::array();
        for (const ViabilityPoint& pt : viability.points) {
            rows.push_back(json{{"l", pt.l},
                                {"n_samples", pt.n_samples},
                                {"pr_conc", pt.pr_conc},
                                {"pr_prob", pt.pr_prob},
                                {"pr_joint", pt.pr_joint},
                                {"wilson_conc", {pt.wilson_lo_conc, pt.wilson_hi_conc}},
                                {"wilson_prob", {pt.wilson_lo_prob, pt.wilson_hi_prob}}});
        }
        report["viability"] = {{"points", std::move(rows)},
                               {"empirical_tvr_radius", viability.empirical_tvr_radius},
                               {"empirical_mvr_radius", viability.empirical_mvr_radius},
                               {"empirical_mvr_radius_c", viability.empirical_mvr_radius_c},
                               {"empirical_mvr_radius_p", viability.empirical_mvr_radius_p}};
    }

    const std::string prefix = string_or(config, "", "output_prefix", "sim");
    const fs::path csv_path = fs::path(args.out_dir) / (prefix + "_curves.csv");
    const fs::path json_path = fs::path(args.out_dir) / (prefix + "_report.json");
    if (args.format == "csv" || args.format == "both") {
        write_file(csv_path, curves_to_csv(single, multi ? &*multi : nullptr));
    }
    if (args.format == "json" || args.format == "both") {
        write_file(json_path, report.dump(2) + "\n");
    }
    std::cout << "simulated " << single.stats.sampled_pairs << " single-path pairs"
              << (multi ? " (+multi-path)" : "") << " on " << net.node_count << " nodes -> "
              << (args.format == "json" ? json_path.string() : csv_path.string()) << "\n";
    return 0;
}

int cmd_internet(const CommonArgs& args) {
    json config = load_config(args, "internet");
    reject_unknown_keys(config, "",
                        {"command", "seed", "model", "thresholds", "qkd", "target_mean_conc",
                         "p_mode", "output"});
    InternetModel model;
    if (config.contains("model")) {
        const json& m = config.at("model");
        reject_unknown_keys(m, "model",
                            {"radius_km", "node_count", "two_alpha_r_km", "beta",
                             "gamma_db_per_km", "n_photons", "b_coeff", "rho_c_per_km2"});
        model.radius_km = number_or(m, "model", "radius_km", model.radius_km);
        model.node_count = number_or(m, "model", "node_count", model.node_count);
        model.two_alpha_r_km = number_or(m, "model", "two_alpha_r_km", model.two_alpha_r_km);
        model.beta = number_or(m, "model", "beta", model.beta);
        model.gamma_db_per_km = number_or(m, "model", "gamma_db_per_km", model.gamma_db_per_km);
        model.n_photons = number_or(m, "model", "n_photons", model.n_photons);
        model.b_coeff = number_or(m, "model", "b_coeff", model.b_coeff);
        model.rho_c_per_km2 = number_or(m, "model", "rho_c_per_km2", model.rho_c_per_km2);
    }
    try {
        model.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError("model", err.what());
    }

    TaskThresholds t;
    if (config.contains("qkd")) {
        const json& qkd = config.at("qkd");
        reject_unknown_keys(qkd, "qkd", {"r_sec_hz", "r_eps_hz", "c_star", "xi"});
        t.c_star = number_or(qkd, "qkd", "c_star", 0.8);
        t.xi = number_or(qkd, "qkd", "xi", 0.01);
        try {
            t.p_star = qkd_min_probability(number_at(qkd, "qkd", "r_sec_hz"),
                                           number_at(qkd, "qkd", "r_eps_hz"), t.c_star);
        } catch (const std::domain_error& err) {
            throw ConfigError("qkd", err.what());
        }
    } else if (config.contains("thresholds")) {
        t = parse_thresholds(config.at("thresholds"), "thresholds");
    } else {
        throw ConfigError("thresholds", "provide thresholds or a qkd block");
    }

    const double target_conc = number_or(config, "", "target_mean_conc", 0.95);
    const std::string p_mode_name = string_or(config, "", "p_mode", "step");
    if (p_mode_name != "step" && p_mode_name != "exact") {
        throw ConfigError("p_mode", "expected \"step\" or \"exact\"");
    }
    const PhotonicMode p_mode =
        p_mode_name == "step" ? PhotonicMode::step : PhotonicMode::exact;

    std::cerr << "note: density computed as N / (pi R^2) = " << model.density()
              << " per km^2\n";
    const ViabilityVerdict verdict = viability_verdict(model, t, target_conc, p_mode);

    json out = json::parse(verdict_to_json(verdict));
    out["config"] = config;
    const fs::path target =
        fs::path(args.out_dir) / string_or(config, "", "output", "verdict.json");
    write_file(target, out.dump(2) + "\n");
    std::cout << "internet viability: " << (verdict.viable ? "VIABLE" : "NOT VIABLE")
              << " (r*=" << verdict.r_star << ", <l>=" << verdict.avg_graph_distance
              << ", mu2=" << verdict.mean_edge_probability << ") -> " << target.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement topography of large-scale quantum networks"};
    app.require_subcommand(1);

    CommonArgs args;
    std::uint64_t seed_flag = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", args.config_path, "JSON config document")->required();
        sub->add_option("--out", args.out_dir, "output directory")->capture_default_str();
        sub->add_option("--format", args.format, "output format: csv, json or both")
            ->check(CLI::IsMember({"csv", "json", "both"}))
            ->capture_default_str();
        sub->add_option("--seed", seed_flag, "override the config seed");
    };

    CLI::App* generate = app.add_subcommand("generate", "sample a network topology");
    CLI::App* radii = app.add_subcommand("radii", "analytic viability radii and widths");
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo topography campaign");
    CLI::App* internet = app.add_subcommand("internet", "photonic quantum-internet verdict");
    for (CLI::App* sub : {generate, radii, simulate, internet}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    for (CLI::App* sub : {generate, radii, simulate, internet}) {
        if (sub->parsed() && sub->count("--seed") > 0) args.seed_override = seed_flag;
    }

    try {
        fs::create_directories(args.out_dir);
        if (generate->parsed()) return cmd_generate(args);
        if (radii->parsed()) return cmd_radii(args);
        if (simulate->parsed()) return cmd_simulate(args);
        if (internet->parsed()) return cmd_internet(args);
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtopo/internet.hpp"
#include "qtopo/network.hpp"
#include "qtopo/pathfinding.hpp"
#include "qtopo/quantum.hpp"
#include "qtopo/simulation.hpp"
#include "qtopo/topography.hpp"

namespace py = pybind11;
using namespace qtopo;

PYBIND11_MODULE(_core, m) {
    m.doc() = "entanglement topography of large-scale quantum networks";

    // ---- quantum state algebra -------------------------------------------
    m.def("concurrence_isotropic", &concurrence_isotropic, py::arg("q"));
    m.def("q_from_concurrence", &q_from_concurrence, py::arg("concurrence"));
    m.def("swap", &swap_q, py::arg("q1"), py::arg("q2"));
    m.def(
        "swap_chain",
        [](const std::vector<double>& qs) { return swap_chain(qs); },
        py::arg("qs"));

    py::class_<BellDiagonalState>(m, "BellDiagonalState")
        .def(py::init([](double pp, double pm, double sp, double sm) {
                 return BellDiagonalState{pp, pm, sp, sm};
             }),
             py::arg("w_phi_plus"), py::arg("w_phi_minus"), py::arg("w_psi_plus"),
             py::arg("w_psi_minus"))
        .def_static("from_isotropic", &BellDiagonalState::from_isotropic, py::arg("q"))
        .def_readonly("w_phi_plus", &BellDiagonalState::w_phi_plus)
        .def_readonly("w_phi_minus", &BellDiagonalState::w_phi_minus)
        .def_readonly("w_psi_plus", &BellDiagonalState::w_psi_plus)
        .def_readonly("w_psi_minus", &BellDiagonalState::w_psi_minus)
        .def("concurrence", &BellDiagonalState::concurrence)
        .def("is_valid", &BellDiagonalState::is_valid, py::arg("tol") = 1e-12)
        .def("__repr__", [](const BellDiagonalState& s) {
            return "BellDiagonalState(" + std::to_string(s.w_phi_plus) + ", " +
                   std::to_string(s.w_phi_minus) + ", " + std::to_string(s.w_psi_plus) + ", " +
                   std::to_string(s.w_psi_minus) + ")";
        });

    py::class_<PurificationOutcome>(m, "PurificationOutcome")
        .def_readonly("state", &PurificationOutcome::state)
        .def_readonly("success_probability", &PurificationOutcome::success_probability);
    m.def("deutsch_purify", &deutsch_purify, py::arg("s1"), py::arg("s2"));

    py::class_<PumpResult>(m, "PumpResult")
        .def_readonly("state", &PumpResult::state)
        .def_readonly("success_probability", &PumpResult::success_probability)
        .def_readonly("accepted", &PumpResult::accepted)
        .def("accepted_count", &PumpResult::accepted_count);
    m.def("pump_sequence", &pump_sequence, py::arg("states"), py::arg("improve_only"));

    // ---- network model ----------------------------------------------------
    py::enum_<DistShape>(m, "DistShape")
        .value("uniform", DistShape::uniform)
        .value("point", DistShape::point);

    py::class_<ParamDistribution>(m, "ParamDistribution")
        .def_static("point_at_mean", &ParamDistribution::point_at_mean, py::arg("mean"))
        .def_static("uniform_spread", &ParamDistribution::uniform_spread, py::arg("delta"),
                    py::arg("a"), py::arg("b"))
        .def_readonly("delta", &ParamDistribution::delta)
        .def_readonly("a", &ParamDistribution::a)
        .def_readonly("b", &ParamDistribution::b)
        .def("mean", &ParamDistribution::mean)
        .def("max_value", &ParamDistribution::max_value)
        .def("min_value", &ParamDistribution::min_value);

    py::enum_<TopologyTag>(m, "TopologyTag")
        .value("erdos_renyi", TopologyTag::erdos_renyi)
        .value("scale_free", TopologyTag::scale_free)
        .value("soft_rgg", TopologyTag::soft_rgg)
        .value("custom", TopologyTag::custom);

    py::class_<QuantumNetwork>(m, "QuantumNetwork")
        .def_readonly("node_count", &QuantumNetwork::node_count)
        .def_readonly("topology_tag", &QuantumNetwork::topology_tag)
        .def_readonly("seed", &QuantumNetwork::seed)
        .def_readonly("edge_q", &QuantumNetwork::edge_q)
        .def_readonly("edge_p", &QuantumNetwork::edge_p)
        .def_property_readonly("edges",
                               [](const QuantumNetwork& net) {
                                   std::vector<std::pair<int, int>> out;
                                   out.reserve(net.edges.size());
                                   for (const auto& [u, v] : net.edges) out.emplace_back(u, v);
                                   return out;
                               })
        .def("edge_count", &QuantumNetwork::edge_count)
        .def("mean_degree", &QuantumNetwork::mean_degree)
        .def("degree", &QuantumNetwork::degree, py::arg("node"))
        .def("has_edge", &QuantumNetwork::has_edge, py::arg("u"), py::arg("v"))
        .def("to_json", &network_to_json);

    m.def("build_erdos_renyi", &build_erdos_renyi, py::arg("n"), py::arg("mean_degree"),
          py::arg("seed"), py::arg("largest_component_only") = false);
    m.def("build_scale_free", &build_scale_free, py::arg("n"), py::arg("m"), py::arg("seed"),
          py::arg("largest_component_only") = false);
    m.def("build_soft_rgg", &build_soft_rgg, py::arg("n"), py::arg("radius_km"), py::arg("alpha"),
          py::arg("gamma_db_per_km"), py::arg("n_photons"), py::arg("seed"),
          py::arg("beta") = 1.0, py::arg("largest_component_only") = false);
    m.def("build_square_lattice", &build_square_lattice, py::arg("rows"), py::arg("cols"));
    m.def("largest_component", &largest_component, py::arg("network"));
    m.def("assign_edge_states", &assign_edge_states, py::arg("network"), py::arg("conc_dist"),
          py::arg("prob_dist"), py::arg("seed"));
    m.def("assign_edge_concurrences", &assign_edge_concurrences, py::arg("network"),
          py::arg("conc_dist"), py::arg("seed"));
    m.def("network_from_json", &network_from_json, py::arg("text"));

    // ---- topography analytics ----------------------------------------------
    py::enum_<RadiusMode>(m, "RadiusMode")
        .value("small_delta", RadiusMode::small_delta)
        .value("exact_log", RadiusMode::exact_log);
    py::enum_<CurveMode>(m, "CurveMode")
        .value("exact", CurveMode::exact)
        .value("asymptotic", CurveMode::asymptotic);
    py::enum_<FloorPolicy>(m, "FloorPolicy")
        .value("real", FloorPolicy::real)
        .value("floored", FloorPolicy::floored);

    py::class_<TaskThresholds>(m, "TaskThresholds")
        .def(py::init([](double c_star, double p_star, double xi, double eps_c, double eps_p) {
                 TaskThresholds t;
                 t.c_star = c_star;
                 t.p_star = p_star;
                 t.xi = xi;
                 t.eps_c = eps_c;
                 t.eps_p = eps_p;
                 t.validate();
                 return t;
             }),
             py::arg("c_star"), py::arg("p_star"), py::arg("xi") = 0.01, py::arg("eps_c") = 1.0,
             py::arg("eps_p") = 1.0)
        .def_readonly("c_star", &TaskThresholds::c_star)
        .def_readonly("p_star", &TaskThresholds::p_star)
        .def_readonly("xi", &TaskThresholds::xi)
        .def_readonly("eps_c", &TaskThresholds::eps_c)
        .def_readonly("eps_p", &TaskThresholds::eps_p);

    m.def("avg_path_concurrence", &avg_path_concurrence, py::arg("mean_conc"), py::arg("l"),
          py::arg("mode") = CurveMode::exact);
    m.def("avg_path_probability", &avg_path_probability, py::arg("mean_prob"), py::arg("l"));
    m.def("entanglement_radius", &entanglement_radius, py::arg("delta1"));
    m.def("connection_radius", &connection_radius, py::arg("delta2"), py::arg("xi"));

    py::class_<TvrRadii>(m, "TvrRadii")
        .def_readonly("r_star_c", &TvrRadii::r_star_c)
        .def_readonly("r_star_p", &TvrRadii::r_star_p)
        .def_readonly("r_star", &TvrRadii::r_star);
    py::class_<MvrRadii>(m, "MvrRadii")
        .def_readonly("r_tilde_c", &MvrRadii::r_tilde_c)
        .def_readonly("r_tilde_p", &MvrRadii::r_tilde_p)
        .def_readonly("r_tilde", &MvrRadii::r_tilde);

    m.def("tvr_radius", &tvr_radius, py::arg("thresholds"), py::arg("mean_conc"),
          py::arg("mean_prob"), py::arg("mode") = RadiusMode::exact_log);
    m.def("mvr_radius", &mvr_radius, py::arg("thresholds"), py::arg("mean_conc"),
          py::arg("mean_prob"), py::arg("mode") = RadiusMode::exact_log);
    m.def("mvr_width_mean_form", &mvr_width_mean_form, py::arg("thresholds"),
          py::arg("mean_conc"), py::arg("eps"));
    m.def("mvr_width_distribution_form", &mvr_width_distribution_form, py::arg("r_star"),
          py::arg("eps"), py::arg("a"), py::arg("b"));
    m.def("sgp_optimality_bound", &sgp_optimality_bound, py::arg("r_star"), py::arg("a1"),
          py::arg("b1"), py::arg("a2"), py::arg("b2"));

    py::class_<ScalingTargets>(m, "ScalingTargets")
        .def_readonly("mean_conc", &ScalingTargets::mean_conc)
        .def_readonly("mean_prob", &ScalingTargets::mean_prob);
    m.def("scaling_targets", &scaling_targets, py::arg("n_nodes"), py::arg("topology"),
          py::arg("xi") = 0.01);

    py::class_<MultipathEstimates>(m, "MultipathEstimates")
        .def_readonly("r_star_k_c", &MultipathEstimates::r_star_k_c)
        .def_readonly("r_star_k_p", &MultipathEstimates::r_star_k_p)
        .def_readonly("r_star_k", &MultipathEstimates::r_star_k)
        .def_readonly("k_beneficial_max", &MultipathEstimates::k_beneficial_max);
    m.def(
        "multipath_estimates",
        [](double delta1, double delta2, int k, const TaskThresholds& t, double z1, double z2) {
            return multipath_estimates(delta1, delta2, k, t, MultipathConstants{z1, z2});
        },
        py::arg("delta1"), py::arg("delta2"), py::arg("k"), py::arg("thresholds"),
        py::arg("z1") = 1.0 / 3.0, py::arg("z2") = 0.5);

    py::class_<RadiiReport>(m, "RadiiReport")
        .def_readonly("r_c", &RadiiReport::r_c)
        .def_readonly("r_p", &RadiiReport::r_p)
        .def_readonly("r_star_c", &RadiiReport::r_star_c)
        .def_readonly("r_star_p", &RadiiReport::r_star_p)
        .def_readonly("r_star", &RadiiReport::r_star)
        .def_readonly("r_tilde_c", &RadiiReport::r_tilde_c)
        .def_readonly("r_tilde_p", &RadiiReport::r_tilde_p)
        .def_readonly("r_tilde", &RadiiReport::r_tilde)
        .def_readonly("width", &RadiiReport::width);
    m.def("build_radii_report", &build_radii_report, py::arg("thresholds"), py::arg("mean_conc"),
          py::arg("mean_prob"), py::arg("mode") = RadiusMode::exact_log,
          py::arg("floor_policy") = FloorPolicy::real);

    // ---- paths --------------------------------------------------------------
    py::class_<PathRecord>(m, "PathRecord")
        .def_readonly("nodes", &PathRecord::nodes)
        .def_readonly("length", &PathRecord::length)
        .def_readonly("path_q", &PathRecord::path_q)
        .def_readonly("path_concurrence", &PathRecord::path_concurrence)
        .def_readonly("path_probability", &PathRecord::path_probability)
        .def_readonly("found", &PathRecord::found);
    m.def("shortest_graph_path", &shortest_graph_path, py::arg("network"), py::arg("s"),
          py::arg("d"));
    m.def("edge_disjoint_paths", &edge_disjoint_paths, py::arg("network"), py::arg("s"),
          py::arg("d"), py::arg("k_max"));

    py::class_<ParetoResult>(m, "ParetoResult")
        .def_readonly("paths", &ParetoResult::paths)
        .def_readonly("truncated", &ParetoResult::truncated);
    m.def("pareto_paths", &pareto_paths, py::arg("network"), py::arg("s"), py::arg("d"),
          py::arg("max_labels") = 10000);

    // ---- Monte Carlo campaigns ----------------------------------------------
    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](int n_source_samples, int n_dest_samples, int k_max, bool improve_only,
                         std::uint64_t master_seed, int l_max) {
                 SimConfig config;
                 config.n_source_samples = n_source_samples;
                 config.n_dest_samples = n_dest_samples;
                 config.k_max = k_max;
                 config.improve_only = improve_only;
                 config.master_seed = master_seed;
                 config.l_max = l_max;
                 config.validate();
                 return config;
             }),
             py::arg("n_source_samples") = 100, py::arg("n_dest_samples") = 100,
             py::arg("k_max") = 1, py::arg("improve_only") = true, py::arg("master_seed") = 0,
             py::arg("l_max") = 64)
        .def_readonly("n_source_samples", &SimConfig::n_source_samples)
        .def_readonly("n_dest_samples", &SimConfig::n_dest_samples)
        .def_readonly("k_max", &SimConfig::k_max)
        .def_readonly("improve_only", &SimConfig::improve_only)
        .def_readonly("master_seed", &SimConfig::master_seed)
        .def_readonly("l_max", &SimConfig::l_max);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("l", &CurvePoint::l)
        .def_readonly("mean_conc", &CurvePoint::mean_conc)
        .def_readonly("stderr_conc", &CurvePoint::stderr_conc)
        .def_readonly("mean_prob", &CurvePoint::mean_prob)
        .def_readonly("stderr_prob", &CurvePoint::stderr_prob)
        .def_readonly("n_samples", &CurvePoint::n_samples);
    py::class_<CampaignStats>(m, "CampaignStats")
        .def_readonly("sampled_pairs", &CampaignStats::sampled_pairs)
        .def_readonly("unreachable_pairs", &CampaignStats::unreachable_pairs)
        .def_readonly("beyond_l_max", &CampaignStats::beyond_l_max);
    py::class_<Curve>(m, "Curve")
        .def_readonly("points", &Curve::points)
        .def_readonly("stats", &Curve::stats);

    m.def("single_path_topography", &single_path_topography, py::arg("network"),
          py::arg("config"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("multipath_topography", &multipath_topography, py::arg("network"), py::arg("config"),
          py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

    py::class_<ViabilityPoint>(m, "ViabilityPoint")
        .def_readonly("l", &ViabilityPoint::l)
        .def_readonly("n_samples", &ViabilityPoint::n_samples)
        .def_readonly("mean_conc", &ViabilityPoint::mean_conc)
        .def_readonly("stderr_conc", &ViabilityPoint::stderr_conc)
        .def_readonly("mean_prob", &ViabilityPoint::mean_prob)
        .def_readonly("stderr_prob", &ViabilityPoint::stderr_prob)
        .def_readonly("pr_conc", &ViabilityPoint::pr_conc)
        .def_readonly("pr_prob", &ViabilityPoint::pr_prob)
        .def_readonly("pr_joint", &ViabilityPoint::pr_joint)
        .def_readonly("wilson_lo_conc", &ViabilityPoint::wilson_lo_conc)
        .def_readonly("wilson_hi_conc", &ViabilityPoint::wilson_hi_conc)
        .def_readonly("wilson_lo_prob", &ViabilityPoint::wilson_lo_prob)
        .def_readonly("wilson_hi_prob", &ViabilityPoint::wilson_hi_prob);
    py::class_<ViabilityReport>(m, "ViabilityReport")
        .def_readonly("points", &ViabilityReport::points)
        .def_readonly("stats", &ViabilityReport::stats)
        .def_readonly("empirical_tvr_radius", &ViabilityReport::empirical_tvr_radius)
        .def_readonly("empirical_mvr_radius", &ViabilityReport::empirical_mvr_radius)
        .def_readonly("empirical_mvr_radius_c", &ViabilityReport::empirical_mvr_radius_c)
        .def_readonly("empirical_mvr_radius_p", &ViabilityReport::empirical_mvr_radius_p);
    m.def("empirical_viability", &empirical_viability, py::arg("network"), py::arg("thresholds"),
          py::arg("config"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "curves_to_csv",
        [](const Curve& single, const Curve* multi) { return curves_to_csv(single, multi); },
        py::arg("single"), py::arg("multi") = nullptr);

    // ---- photonic quantum internet --------------------------------------------
    py::enum_<AnnulusMode>(m, "AnnulusMode")
        .value("approx", AnnulusMode::approx)
        .value("exact", AnnulusMode::exact);
    py::enum_<PhotonicMode>(m, "PhotonicMode")
        .value("step", PhotonicMode::step)
        .value("exact", PhotonicMode::exact);

    py::class_<InternetModel>(m, "InternetModel")
        .def(py::init([](double radius_km, double node_count, double two_alpha_r_km, double beta,
                         double gamma_db_per_km, double n_photons, double b_coeff,
                         double rho_c_per_km2) {
                 InternetModel model;
                 model.radius_km = radius_km;
                 model.node_count = node_count;
                 model.two_alpha_r_km = two_alpha_r_km;
                 model.beta = beta;
                 model.gamma_db_per_km = gamma_db_per_km;
                 model.n_photons = n_photons;
                 model.b_coeff = b_coeff;
                 model.rho_c_per_km2 = rho_c_per_km2;
                 model.validate();
                 return model;
             }),
             py::arg("radius_km") = 1000.0, py::arg("node_count") = 1500.0,
             py::arg("two_alpha_r_km") = 226.0, py::arg("beta") = 1.0,
             py::arg("gamma_db_per_km") = 0.2, py::arg("n_photons") = 1e6,
             py::arg("b_coeff") = 5e-5, py::arg("rho_c_per_km2") = 6.82e-5)
        .def_readonly("radius_km", &InternetModel::radius_km)
        .def_readonly("node_count", &InternetModel::node_count)
        .def_readonly("two_alpha_r_km", &InternetModel::two_alpha_r_km)
        .def_readonly("beta", &InternetModel::beta)
        .def_readonly("gamma_db_per_km", &InternetModel::gamma_db_per_km)
        .def_readonly("n_photons", &InternetModel::n_photons)
        .def_readonly("b_coeff", &InternetModel::b_coeff)
        .def_readonly("rho_c_per_km2", &InternetModel::rho_c_per_km2)
        .def("density", &InternetModel::density);

    m.def("edge_connection_probability", &edge_connection_probability, py::arg("z_km"),
          py::arg("model"));
    m.def("photonic_connection_probability", &photonic_connection_probability, py::arg("z_km"),
          py::arg("model"));
    m.def("connection_law", &connection_law, py::arg("z_km"), py::arg("model"));
    m.def("step_cutoff_km", &step_cutoff_km, py::arg("n_photons"));
    m.def("annulus_node_count", &annulus_node_count, py::arg("h_km"), py::arg("z_km"),
          py::arg("model"), py::arg("mode") = AnnulusMode::approx);
    m.def("mean_edge_probability", &mean_edge_probability, py::arg("model"),
          py::arg("p_mode") = PhotonicMode::step, py::arg("annulus_mode") = AnnulusMode::approx,
          py::call_guard<py::gil_scoped_release>());
    m.def("average_graph_distance", &average_graph_distance, py::arg("model"));
    m.def("binary_entropy", &binary_entropy, py::arg("x"));
    m.def("qkd_key_rate_factor", &qkd_key_rate_factor, py::arg("concurrence"));
    m.def("qkd_min_probability", &qkd_min_probability, py::arg("r_sec_hz"), py::arg("r_eps_hz"),
          py::arg("concurrence"));

    py::class_<ViabilityVerdict>(m, "ViabilityVerdict")
        .def_readonly("density", &ViabilityVerdict::density)
        .def_readonly("critical_density", &ViabilityVerdict::critical_density)
        .def_readonly("connected", &ViabilityVerdict::connected)
        .def_readonly("mean_edge_probability", &ViabilityVerdict::mean_edge_probability)
        .def_readonly("avg_graph_distance", &ViabilityVerdict::avg_graph_distance)
        .def_readonly("r_star_c", &ViabilityVerdict::r_star_c)
        .def_readonly("r_star_p", &ViabilityVerdict::r_star_p)
        .def_readonly("r_star", &ViabilityVerdict::r_star)
        .def_readonly("viable", &ViabilityVerdict::viable)
        .def("to_json", &verdict_to_json);
    m.def("viability_verdict", &viability_verdict, py::arg("model"), py::arg("thresholds"),
          py::arg("target_mean_conc"), py::arg("p_mode") = PhotonicMode::step,
          py::call_guard<py::gil_scoped_release>());
}

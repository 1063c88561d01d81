"""Entanglement topography of large-scale quantum networks.

Thin package wrapper around the compiled core: state algebra (swap and
Deutsch pumping), network generators, viability radii, path search,
Monte Carlo campaigns and the photonic quantum-internet calculator.
"""

from ._core import (  # noqa: F401
    AnnulusMode,
    BellDiagonalState,
    CampaignStats,
    Curve,
    CurveMode,
    CurvePoint,
    DistShape,
    FloorPolicy,
    InternetModel,
    MultipathEstimates,
    MvrRadii,
    ParamDistribution,
    ParetoResult,
    PathRecord,
    PhotonicMode,
    PumpResult,
    PurificationOutcome,
    QuantumNetwork,
    RadiiReport,
    RadiusMode,
    ScalingTargets,
    SimConfig,
    TaskThresholds,
    TopologyTag,
    TvrRadii,
    ViabilityPoint,
    ViabilityReport,
    ViabilityVerdict,
    annulus_node_count,
    assign_edge_concurrences,
    assign_edge_states,
    average_graph_distance,
    avg_path_concurrence,
    avg_path_probability,
    binary_entropy,
    build_erdos_renyi,
    build_radii_report,
    build_scale_free,
    build_soft_rgg,
    build_square_lattice,
    concurrence_isotropic,
    connection_law,
    connection_radius,
    curves_to_csv,
    deutsch_purify,
    edge_connection_probability,
    edge_disjoint_paths,
    empirical_viability,
    entanglement_radius,
    largest_component,
    mean_edge_probability,
    multipath_estimates,
    multipath_topography,
    mvr_radius,
    mvr_width_distribution_form,
    mvr_width_mean_form,
    network_from_json,
    pareto_paths,
    photonic_connection_probability,
    pump_sequence,
    q_from_concurrence,
    qkd_key_rate_factor,
    qkd_min_probability,
    scaling_targets,
    sgp_optimality_bound,
    shortest_graph_path,
    single_path_topography,
    step_cutoff_km,
    swap,
    swap_chain,
    tvr_radius,
    viability_verdict,
)

__version__ = "0.1.0"

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtopo/distribution.hpp"

namespace qtopo {

enum class TopologyTag { erdos_renyi, scale_free, soft_rgg, custom };

std::string to_string(TopologyTag tag);
TopologyTag topology_tag_from_string(const std::string& s);

struct NodePosition {
    double x = 0.0;  // km
    double y = 0.0;
};

// Undirected simple graph with per-edge mixing parameter q and
// availability probability p. Immutable after generation; concurrent
// readers are safe.
struct QuantumNetwork {
    int node_count = 0;
    std::vector<std::array<int, 2>> edges;  // u < v
    std::vector<double> edge_q;
    std::vector<double> edge_p;
    // (neighbor, edge index), sorted by neighbor id per node
    std::vector<std::vector<std::pair<int, int>>> adjacency;
    TopologyTag topology_tag = TopologyTag::custom;
    std::vector<NodePosition> node_positions;  // soft_rgg only
    std::uint64_t seed = 0;
    std::map<std::string, double> params;  // generator arguments echo

    int edge_count() const { return static_cast<int>(edges.size()); }
    double mean_degree() const;
    bool has_edge(int u, int v) const;
    // Edge index for (u,v) or -1.
    int edge_index(int u, int v) const;
    int degree(int node) const { return static_cast<int>(adjacency[node].size()); }
    double edge_length_km(int edge) const;  // requires positions

    // Appends an edge with q=0, p=1; rejects self-loops and duplicates.
    void add_edge(int u, int v);
    void check_node(int node) const;  // throws std::out_of_range
};

QuantumNetwork build_erdos_renyi(int n, double mean_degree, std::uint64_t seed,
                                 bool largest_component_only = false);

// Preferential attachment: m edges per new node; connected by construction.
QuantumNetwork build_scale_free(int n, int m, std::uint64_t seed,
                                bool largest_component_only = false);

// Soft random geometric graph on a disc of radius R km. Nodes are uniform
// on the disc; a pair at Euclidean distance z is joined with probability
// beta * exp(-z / (2 alpha R)) * [1 - (1 - 10^(-gamma z / 10))^n_photons].
// edge_p is initialized to the photonic factor (second bracket) of the
// sampled edge's length.
QuantumNetwork build_soft_rgg(int n, double radius_km, double alpha, double gamma_db_per_km,
                              double n_photons, std::uint64_t seed, double beta = 1.0,
                              bool largest_component_only = false);

// rows x cols grid, unit convenience topology (tagged custom).
QuantumNetwork build_square_lattice(int rows, int cols);

QuantumNetwork largest_component(const QuantumNetwork& net);

// Draws i.i.d. edge concurrences from conc_dist (stored as q = 2(1-c)/3)
// and availabilities from prob_dist.
void assign_edge_states(QuantumNetwork& net, const ParamDistribution& conc_dist,
                        const ParamDistribution& prob_dist, std::uint64_t seed);

// Concurrence-only variant; keeps whatever edge_p the generator set.
void assign_edge_concurrences(QuantumNetwork& net, const ParamDistribution& conc_dist,
                              std::uint64_t seed);

// JSON document {nodes, edges:[{u,v,q,p,length_km?}], topology_tag, seed,
// params}; round-trips exactly.
std::string network_to_json(const QuantumNetwork& net);
QuantumNetwork network_from_json(const std::string& text);

}  // namespace qtopo

#pragma once

#include <vector>

#include "qtopo/network.hpp"

namespace qtopo {

struct PathRecord {
    std::vector<int> nodes;  // s first, d last
    int length = 0;          // hop count
    double path_q = 0.0;
    double path_concurrence = 1.0;
    double path_probability = 1.0;
    bool found = false;  // false = disconnected pair, not an error

    bool uses_edge(const QuantumNetwork& net, int edge) const;
};

PathRecord make_path_record(const QuantumNetwork& net, std::vector<int> nodes);

// Shortest-path tree from s with lexicographic tie-breaking. parent[v] is
// -1 at the root, -2 when unreachable; dist[v] is -1 when unreachable.
struct BfsTree {
    std::vector<int> parent;
    std::vector<int> dist;

    std::vector<int> path_to(int d) const;  // node sequence from the root
};

BfsTree bfs_shortest_tree(const QuantumNetwork& net, int s);

// Breadth-first shortest path; among equal-length paths the
// lexicographically smallest node sequence is returned.
PathRecord shortest_graph_path(const QuantumNetwork& net, int s, int d);

// Greedy successive shortest paths: take the SGP, remove its edges,
// repeat until k_max paths are found or s-d disconnects. First element is
// always the SGP; results are pairwise edge-disjoint. May return fewer
// than k_max.
std::vector<PathRecord> edge_disjoint_paths(const QuantumNetwork& net, int s, int d, int k_max);

struct ParetoResult {
    std::vector<PathRecord> paths;  // descending concurrence
    bool truncated = false;         // label cap hit somewhere
};

// Label-correcting bi-objective search maximizing (path_concurrence,
// path_probability); returns the non-dominated set of simple paths at d.
// max_labels caps the per-node label list; exceeding it sets `truncated`.
ParetoResult pareto_paths(const QuantumNetwork& net, int s, int d, int max_labels = 10000);

}  // namespace qtopo

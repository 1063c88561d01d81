#include "qtopo/pathfinding.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

#include "qtopo/quantum.hpp"

namespace qtopo {

bool PathRecord::uses_edge(const QuantumNetwork& net, int edge) const {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (net.edge_index(nodes[i], nodes[i + 1]) == edge) return true;
    }
    return false;
}

PathRecord make_path_record(const QuantumNetwork& net, std::vector<int> nodes) {
    PathRecord rec;
    rec.found = true;
    rec.length = static_cast<int>(nodes.size()) - 1;
    double survival = 1.0;
    double prob = 1.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const int e = net.edge_index(nodes[i], nodes[i + 1]);
        if (e < 0) throw std::invalid_argument("make_path_record: missing edge on path");
        survival *= 1.0 - net.edge_q[e];
        prob *= net.edge_p[e];
    }
    rec.path_q = 1.0 - survival;
    rec.path_concurrence = std::max(0.0, 1.0 - 1.5 * rec.path_q);
    rec.path_probability = prob;
    rec.nodes = std::move(nodes);
    return rec;
}

namespace {

// BFS with neighbors visited in ascending id; the parent tree then yields
// the lexicographically smallest shortest node sequence to every node.
std::vector<int> bfs_lex_parents(const QuantumNetwork& net, int s,
                                 const std::vector<bool>* edge_removed = nullptr) {
    std::vector<int> parent(net.node_count, -2);  // -2 unvisited, -1 root
    std::deque<int> frontier;
    parent[s] = -1;
    frontier.push_back(s);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop_front();
        for (const auto& [v, e] : net.adjacency[u]) {
            if (edge_removed && (*edge_removed)[e]) continue;
            if (parent[v] == -2) {
                parent[v] = u;
                frontier.push_back(v);
            }
        }
    }
    return parent;
}

std::vector<int> path_from_parents(const std::vector<int>& parent, int d) {
    std::vector<int> nodes;
    for (int v = d; v != -1; v = parent[v]) nodes.push_back(v);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;  // starts at s by construction
}

}  // namespace

std::vector<int> BfsTree::path_to(int d) const {
    if (parent[d] == -2) return {};
    return path_from_parents(parent, d);
}

BfsTree bfs_shortest_tree(const QuantumNetwork& net, int s) {
    net.check_node(s);
    BfsTree tree;
    tree.parent = bfs_lex_parents(net, s);
    tree.dist.assign(net.node_count, -1);
    tree.dist[s] = 0;
    // parent order is topological outward from s
    std::deque<int> frontier{s};
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop_front();
        for (const auto& [v, e] : net.adjacency[u]) {
            if (tree.parent[v] == u && tree.dist[v] == -1) {
                tree.dist[v] = tree.dist[u] + 1;
                frontier.push_back(v);
            }
        }
    }
    return tree;
}

PathRecord shortest_graph_path(const QuantumNetwork& net, int s, int d) {
    net.check_node(s);
    net.check_node(d);
    if (s == d) throw std::invalid_argument("shortest_graph_path: source equals destination");
    const std::vector<int> parent = bfs_lex_parents(net, s);
    if (parent[d] == -2) return {};  // no-path result
    return make_path_record(net, path_from_parents(parent, d));
}

std::vector<PathRecord> edge_disjoint_paths(const QuantumNetwork& net, int s, int d, int k_max) {
    if (k_max < 1) throw std::invalid_argument("edge_disjoint_paths: k_max must be >= 1");
    net.check_node(s);
    net.check_node(d);
    if (s == d) throw std::invalid_argument("edge_disjoint_paths: source equals destination");

    std::vector<PathRecord> paths;
    std::vector<bool> removed(net.edges.size(), false);
    while (static_cast<int>(paths.size()) < k_max) {
        const std::vector<int> parent = bfs_lex_parents(net, s, &removed);
        if (parent[d] == -2) break;
        std::vector<int> nodes = path_from_parents(parent, d);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            removed[net.edge_index(nodes[i], nodes[i + 1])] = true;
        }
        paths.push_back(make_path_record(net, std::move(nodes)));
    }
    return paths;
}

namespace {

struct Label {
    double q;     // mixing parameter so far (lower is better)
    double prob;  // availability so far (higher is better)
    std::vector<int> nodes;
};

// (q,p)-dominance is a refinement of (concurrence, probability)
// dominance: q maps monotonically onto concurrence, and keeping the finer
// order preserves completeness when both concurrences clamp to zero.
bool dominates(const Label& x, const Label& y) {
    return x.q <= y.q && x.prob >= y.prob && (x.q < y.q || x.prob > y.prob);
}

}  // namespace

ParetoResult pareto_paths(const QuantumNetwork& net, int s, int d, int max_labels) {
    if (max_labels < 1) throw std::invalid_argument("pareto_paths: max_labels must be >= 1");
    net.check_node(s);
    net.check_node(d);
    if (s == d) throw std::invalid_argument("pareto_paths: source equals destination");

    ParetoResult result;
    std::vector<std::vector<Label>> labels(net.node_count);
    std::deque<std::pair<int, Label>> queue;
    Label start{0.0, 1.0, {s}};
    labels[s].push_back(start);
    queue.emplace_back(s, std::move(start));

    auto try_insert = [&](int node, Label&& lab) -> bool {
        auto& list = labels[node];
        for (const Label& existing : list) {
            if (dominates(existing, lab)) return false;
        }
        std::erase_if(list, [&](const Label& existing) { return dominates(lab, existing); });
        if (static_cast<int>(list.size()) >= max_labels) {
            result.truncated = true;
            // evict the scalar-worst label if the newcomer beats it
            auto worst = std::min_element(list.begin(), list.end(),
                                          [](const Label& x, const Label& y) {
                                              return (1.0 - x.q) + x.prob < (1.0 - y.q) + y.prob;
                                          });
            if ((1.0 - lab.q) + lab.prob <= (1.0 - worst->q) + worst->prob) return false;
            *worst = lab;
        } else {
            list.push_back(lab);
        }
        queue.emplace_back(node, std::move(lab));
        return true;
    };

    while (!queue.empty()) {
        auto [u, lab] = std::move(queue.front());
        queue.pop_front();
        // stale labels (dominated after being queued) are skipped
        bool alive = false;
        for (const Label& existing : labels[u]) {
            if (existing.q == lab.q && existing.prob == lab.prob && existing.nodes == lab.nodes) {
                alive = true;
                break;
            }
        }
        if (!alive || u == d) continue;
        for (const auto& [v, e] : net.adjacency[u]) {
            if (std::find(lab.nodes.begin(), lab.nodes.end(), v) != lab.nodes.end()) continue;
            Label next;
            next.q = 1.0 - (1.0 - lab.q) * (1.0 - net.edge_q[e]);
            next.prob = lab.prob * net.edge_p[e];
            next.nodes = lab.nodes;
            next.nodes.push_back(v);
            try_insert(v, std::move(next));
        }
    }

    // reduce the destination labels to the (concurrence, probability)
    // non-dominated set and deduplicate
    std::vector<PathRecord> records;
    for (const Label& lab : labels[d]) {
        records.push_back(make_path_record(net, lab.nodes));
    }
    std::vector<PathRecord> front;
    for (const PathRecord& candidate : records) {
        bool dominated = false;
        for (const PathRecord& other : records) {
            if (other.path_concurrence >= candidate.path_concurrence &&
                other.path_probability >= candidate.path_probability &&
                (other.path_concurrence > candidate.path_concurrence ||
                 other.path_probability > candidate.path_probability)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(candidate);
    }
    std::sort(front.begin(), front.end(), [](const PathRecord& x, const PathRecord& y) {
        if (x.path_concurrence != y.path_concurrence) {
            return x.path_concurrence > y.path_concurrence;
        }
        if (x.path_probability != y.path_probability) {
            return x.path_probability > y.path_probability;
        }
        return x.nodes < y.nodes;
    });
    // one representative per value point: equal-valued ties (homogeneous
    // networks) collapse onto the lexicographically smallest path
    front.erase(std::unique(front.begin(), front.end(),
                            [](const PathRecord& x, const PathRecord& y) {
                                return x.path_concurrence == y.path_concurrence &&
                                       x.path_probability == y.path_probability;
                            }),
                front.end());
    result.paths = std::move(front);
    return result;
}

}  // namespace qtopo

#include "qtopo/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qtopo/quantum.hpp"
#include "qtopo/rng.hpp"

namespace qtopo {

using nlohmann::json;

std::string to_string(TopologyTag tag) {
    switch (tag) {
        case TopologyTag::erdos_renyi: return "erdos_renyi";
        case TopologyTag::scale_free: return "scale_free";
        case TopologyTag::soft_rgg: return "soft_rgg";
        case TopologyTag::custom: return "custom";
    }
    return "custom";
}

TopologyTag topology_tag_from_string(const std::string& s) {
    if (s == "erdos_renyi") return TopologyTag::erdos_renyi;
    if (s == "scale_free") return TopologyTag::scale_free;
    if (s == "soft_rgg") return TopologyTag::soft_rgg;
    if (s == "custom") return TopologyTag::custom;
    throw std::invalid_argument("unknown topology_tag: " + s);
}

double QuantumNetwork::mean_degree() const {
    if (node_count == 0) return 0.0;
    return 2.0 * static_cast<double>(edges.size()) / node_count;
}

void QuantumNetwork::check_node(int node) const {
    if (node < 0 || node >= node_count) {
        throw std::out_of_range("node " + std::to_string(node) + " outside [0, " +
                                std::to_string(node_count) + ")");
    }
}

int QuantumNetwork::edge_index(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& adj = adjacency[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const std::pair<int, int>& e, int node) { return e.first < node; });
    if (it != adj.end() && it->first == v) return it->second;
    return -1;
}

bool QuantumNetwork::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

double QuantumNetwork::edge_length_km(int edge) const {
    if (node_positions.empty()) {
        throw std::logic_error("edge_length_km: network carries no node positions");
    }
    const auto& [u, v] = edges[edge];
    const double dx = node_positions[u].x - node_positions[v].x;
    const double dy = node_positions[u].y - node_positions[v].y;
    return std::hypot(dx, dy);
}

void QuantumNetwork::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
    const int idx = static_cast<int>(edges.size());
    edges.push_back({u, v});
    edge_q.push_back(0.0);
    edge_p.push_back(1.0);
    auto insert_sorted = [](std::vector<std::pair<int, int>>& adj, int node, int e) {
        auto it = std::lower_bound(adj.begin(), adj.end(), std::make_pair(node, 0),
                                   [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
                                       return x.first < y.first;
                                   });
        adj.insert(it, {node, e});
    };
    insert_sorted(adjacency[u], v, idx);
    insert_sorted(adjacency[v], u, idx);
}

namespace {

QuantumNetwork empty_network(int n, TopologyTag tag, std::uint64_t seed) {
    QuantumNetwork net;
    net.node_count = n;
    net.adjacency.resize(n);
    net.topology_tag = tag;
    net.seed = seed;
    return net;
}

}  // namespace

QuantumNetwork build_erdos_renyi(int n, double mean_degree, std::uint64_t seed,
                                 bool largest_component_only) {
    if (n < 2) throw std::invalid_argument("erdos_renyi: n must be >= 2");
    if (!(mean_degree >= 0.0 && mean_degree < n)) {
        throw std::invalid_argument("erdos_renyi: mean_degree must lie in [0, n)");
    }
    QuantumNetwork net = empty_network(n, TopologyTag::erdos_renyi, seed);
    net.params = {{"n", static_cast<double>(n)}, {"mean_degree", mean_degree}};

    const double p = mean_degree / static_cast<double>(n - 1);
    auto eng = make_engine(seed);
    if (p > 0.0) {
        // Batagelj-Brandes skipping over the n(n-1)/2 pair sequence
        const double log1mp = std::log1p(-p);
        long long u = 1, v = -1;
        const long long nn = n;
        while (u < nn) {
            const double r = uniform01(eng);
            const long long skip =
                p >= 1.0 ? 1 : 1 + static_cast<long long>(std::floor(std::log1p(-r) / log1mp));
            v += skip;
            while (v >= u && u < nn) {
                v -= u;
                ++u;
            }
            if (u < nn) net.add_edge(static_cast<int>(v), static_cast<int>(u));
        }
    }
    if (largest_component_only) return largest_component(net);
    return net;
}

QuantumNetwork build_scale_free(int n, int m, std::uint64_t seed, bool largest_component_only) {
    if (m < 1) throw std::invalid_argument("scale_free: m must be >= 1");
    if (n <= m) throw std::invalid_argument("scale_free: n must exceed m");
    QuantumNetwork net = empty_network(n, TopologyTag::scale_free, seed);
    net.params = {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}};

    auto eng = make_engine(seed);
    // endpoint pool repeats each node once per incident edge
    std::vector<int> pool;
    pool.reserve(2 * static_cast<std::size_t>(m) * n);
    for (int v = m; v < n; ++v) {
        std::vector<int> targets;
        if (v == m) {
            for (int t = 0; t < m; ++t) targets.push_back(t);
        } else {
            while (static_cast<int>(targets.size()) < m) {
                const int candidate = pool[uniform_index(eng, pool.size())];
                if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) {
                    targets.push_back(candidate);
                }
            }
        }
        for (int t : targets) {
            net.add_edge(v, t);
            pool.push_back(v);
            pool.push_back(t);
        }
    }
    if (largest_component_only) return largest_component(net);
    return net;
}

QuantumNetwork build_soft_rgg(int n, double radius_km, double alpha, double gamma_db_per_km,
                              double n_photons, std::uint64_t seed, double beta,
                              bool largest_component_only) {
    if (n < 2) throw std::invalid_argument("soft_rgg: n must be >= 2");
    if (!(radius_km > 0.0)) throw std::invalid_argument("soft_rgg: radius_km must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("soft_rgg: alpha must be positive");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("soft_rgg: beta must lie in (0,1]");
    QuantumNetwork net = empty_network(n, TopologyTag::soft_rgg, seed);
    const double two_alpha_r = 2.0 * alpha * radius_km;
    net.params = {{"n", static_cast<double>(n)}, {"radius_km", radius_km},
                  {"alpha", alpha},              {"gamma_db_per_km", gamma_db_per_km},
                  {"n_photons", n_photons},      {"beta", beta}};

    auto eng = make_engine(seed);
    net.node_positions.resize(n);
    for (auto& pos : net.node_positions) {
        const double r = radius_km * std::sqrt(uniform01(eng));
        const double theta = 2.0 * M_PI * uniform01(eng);
        pos = {r * std::cos(theta), r * std::sin(theta)};
    }

    auto photonic = [&](double z) {
        const double loss = std::pow(10.0, -gamma_db_per_km * z / 10.0);
        if (loss >= 1.0) return 1.0;
        return -std::expm1(n_photons * std::log1p(-loss));
    };

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double dx = net.node_positions[u].x - net.node_positions[v].x;
            const double dy = net.node_positions[u].y - net.node_positions[v].y;
            const double z = std::hypot(dx, dy);
            const double p_edge = beta * std::exp(-z / two_alpha_r) * photonic(z);
            if (uniform01(eng) < p_edge) {
                net.add_edge(u, v);
                net.edge_p.back() = photonic(z);
            }
        }
    }
    if (largest_component_only) return largest_component(net);
    return net;
}

QuantumNetwork build_square_lattice(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("lattice: rows, cols must be >= 1");
    QuantumNetwork net = empty_network(rows * cols, TopologyTag::custom, 0);
    net.params = {{"rows", static_cast<double>(rows)}, {"cols", static_cast<double>(cols)}};
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) net.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) net.add_edge(id(r, c), id(r + 1, c));
        }
    }
    return net;
}

QuantumNetwork largest_component(const QuantumNetwork& net) {
    std::vector<int> component(net.node_count, -1);
    int best_root = -1, best_size = 0, n_components = 0;
    for (int start = 0; start < net.node_count; ++start) {
        if (component[start] >= 0) continue;
        int size = 0;
        std::queue<int> frontier;
        frontier.push(start);
        component[start] = n_components;
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            ++size;
            for (const auto& [v, e] : net.adjacency[u]) {
                if (component[v] < 0) {
                    component[v] = n_components;
                    frontier.push(v);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_root = n_components;
        }
        ++n_components;
    }

    std::vector<int> relabel(net.node_count, -1);
    int next = 0;
    for (int v = 0; v < net.node_count; ++v) {
        if (component[v] == best_root) relabel[v] = next++;
    }

    QuantumNetwork out = empty_network(best_size, net.topology_tag, net.seed);
    out.params = net.params;
    if (!net.node_positions.empty()) {
        out.node_positions.resize(best_size);
        for (int v = 0; v < net.node_count; ++v) {
            if (relabel[v] >= 0) out.node_positions[relabel[v]] = net.node_positions[v];
        }
    }
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto& [u, v] = net.edges[e];
        if (relabel[u] >= 0 && relabel[v] >= 0) {
            out.add_edge(relabel[u], relabel[v]);
            out.edge_q.back() = net.edge_q[e];
            out.edge_p.back() = net.edge_p[e];
        }
    }
    return out;
}

void assign_edge_states(QuantumNetwork& net, const ParamDistribution& conc_dist,
                        const ParamDistribution& prob_dist, std::uint64_t seed) {
    conc_dist.validate("conc_dist.");
    prob_dist.validate("prob_dist.");
    auto eng = substream(seed, 0x61737369676eull);  // fixed tag stream
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        net.edge_q[e] = q_from_concurrence(conc_dist.sample(eng));
        net.edge_p[e] = prob_dist.sample(eng);
    }
}

void assign_edge_concurrences(QuantumNetwork& net, const ParamDistribution& conc_dist,
                              std::uint64_t seed) {
    conc_dist.validate("conc_dist.");
    auto eng = substream(seed, 0x61737369676eull);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        net.edge_q[e] = q_from_concurrence(conc_dist.sample(eng));
    }
}

std::string network_to_json(const QuantumNetwork& net) {
    json doc;
    doc["topology_tag"] = to_string(net.topology_tag);
    doc["seed"] = net.seed;
    doc["params"] = json::object();
    for (const auto& [key, value] : net.params) doc["params"][key] = value;

    if (net.node_positions.empty()) {
        doc["nodes"] = net.node_count;
    } else {
        json nodes = json::array();
        for (const auto& pos : net.node_positions) {
            nodes.push_back(json{{"x", pos.x}, {"y", pos.y}});
        }
        doc["nodes"] = std::move(nodes);
    }

    json edges = json::array();
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        json row{{"u", net.edges[e][0]}, {"v", net.edges[e][1]},
                 {"q", net.edge_q[e]},   {"p", net.edge_p[e]}};
        if (!net.node_positions.empty()) row["length_km"] = net.edge_length_km(static_cast<int>(e));
        edges.push_back(std::move(row));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

QuantumNetwork network_from_json(const std::string& text) {
    const json doc = json::parse(text);
    QuantumNetwork net;
    net.topology_tag = topology_tag_from_string(doc.at("topology_tag").get<std::string>());
    net.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("params")) {
        for (const auto& [key, value] : doc.at("params").items()) {
            net.params[key] = value.get<double>();
        }
    }
    const json& nodes = doc.at("nodes");
    if (nodes.is_number_integer()) {
        net.node_count = nodes.get<int>();
    } else {
        net.node_count = static_cast<int>(nodes.size());
        net.node_positions.reserve(nodes.size());
        for (const auto& row : nodes) {
            net.node_positions.push_back({row.at("x").get<double>(), row.at("y").get<double>()});
        }
    }
    if (net.node_count < 0) throw std::invalid_argument("network json: negative node count");
    net.adjacency.resize(net.node_count);
    for (const auto& row : doc.at("edges")) {
        net.add_edge(row.at("u").get<int>(), row.at("v").get<int>());
        net.edge_q.back() = row.at("q").get<double>();
        net.edge_p.back() = row.at("p").get<double>();
        if (!(net.edge_q.back() >= 0.0 && net.edge_q.back() <= 1.0) ||
            !(net.edge_p.back() >= 0.0 && net.edge_p.back() <= 1.0)) {
            throw std::invalid_argument("network json: edge parameters outside [0,1]");
        }
    }
    return net;
}

}  // namespace qtopo

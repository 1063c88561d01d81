#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <numeric>

#include "qtopo/network.hpp"
#include "qtopo/quantum.hpp"
#include "qtopo/rng.hpp"

using namespace qtopo;

TEST_CASE("param distribution") {
    const ParamDistribution point = ParamDistribution::point_at_mean(0.9);
    auto eng = make_engine(3);
    for (int i = 0; i < 10; ++i) CHECK(point.sample(eng) == 0.9);

    const ParamDistribution uniform = ParamDistribution::uniform_spread(0.1, 0.5, 1.5);
    CHECK(uniform.mean() == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(uniform.max_value() == doctest::Approx(0.95).epsilon(1e-15));
    CHECK(uniform.min_value() == doctest::Approx(0.85).epsilon(1e-15));

    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double x = uniform.sample(eng);
        CHECK(x >= uniform.min_value());
        CHECK(x <= uniform.max_value());
        sum += x;
    }
    // 3 standard errors of a U[0.85, 0.95] mean over 1e4 draws
    const double se = (0.1 / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sum / n - 0.9) <= 3.0 * se);

    // the homogeneity limit b - a -> 0 pins every draw to the mean
    const ParamDistribution degenerate = ParamDistribution::uniform_spread(0.1, 1.0, 1.0);
    for (int i = 0; i < 5; ++i) CHECK(degenerate.sample(eng) == degenerate.mean());

    CHECK_THROWS_WITH_AS(ParamDistribution::uniform_spread(1.5, 0.5, 1.5).validate(),
                         doctest::Contains("delta"), std::invalid_argument);
    CHECK_THROWS_AS(ParamDistribution::uniform_spread(0.1, 0.4, 1.5), std::invalid_argument);
    // support would leave [0,1]: b > 1/delta
    CHECK_THROWS_AS(ParamDistribution::uniform_spread(0.6, 0.2, 1.8), std::invalid_argument);
}

TEST_CASE("erdos-renyi generator") {
    SUBCASE("two nodes at mean degree 1 always join") {
        const QuantumNetwork net = build_erdos_renyi(2, 1.0, 5);
        CHECK(net.node_count == 2);
        CHECK(net.edge_count() == 1);
    }

    SUBCASE("determinism") {
        const QuantumNetwork a = build_erdos_renyi(1000, 6.0, 42);
        const QuantumNetwork b = build_erdos_renyi(1000, 6.0, 42);
        CHECK(a.edges == b.edges);
        const QuantumNetwork c = build_erdos_renyi(1000, 6.0, 43);
        CHECK(a.edges != c.edges);
    }

    SUBCASE("mean degree statistics across seeds") {
        double total = 0.0;
        const int seeds = 20;
        for (int s = 0; s < seeds; ++s) total += build_erdos_renyi(1000, 6.0, 100 + s).mean_degree();
        // sd of one realization's mean degree is ~0.11; 3 SE over 20 seeds
        CHECK(std::abs(total / seeds - 6.0) <= 3.0 * 0.11 / std::sqrt(20.0));
    }

    SUBCASE("simple graph invariants") {
        const QuantumNetwork net = build_erdos_renyi(300, 8.0, 7);
        for (int e = 0; e < net.edge_count(); ++e) {
            CHECK(net.edges[e][0] < net.edges[e][1]);
        }
        // adjacency is sorted and mirrors the edge list
        long degree_sum = 0;
        for (int v = 0; v < net.node_count; ++v) {
            degree_sum += net.degree(v);
            for (int i = 1; i < net.degree(v); ++i) {
                CHECK(net.adjacency[v][i - 1].first < net.adjacency[v][i].first);
            }
        }
        CHECK(degree_sum == 2 * net.edge_count());
    }
}

TEST_CASE("scale-free generator") {
    const QuantumNetwork tree = build_scale_free(5, 1, 11);
    CHECK(tree.edge_count() == 4);  // m = 1 grows a tree

    const QuantumNetwork a = build_scale_free(500, 2, 13);
    const QuantumNetwork b = build_scale_free(500, 2, 13);
    CHECK(a.edges == b.edges);

    SUBCASE("degree tail heavier than ER at the same mean degree") {
        const QuantumNetwork sf = build_scale_free(2000, 2, 17);
        const QuantumNetwork er = build_erdos_renyi(2000, sf.mean_degree(), 17);
        auto p99 = [](const QuantumNetwork& net) {
            std::vector<int> degrees(net.node_count);
            for (int v = 0; v < net.node_count; ++v) degrees[v] = net.degree(v);
            std::sort(degrees.begin(), degrees.end());
            return degrees[static_cast<std::size_t>(0.99 * net.node_count)];
        };
        CHECK(p99(sf) > p99(er));
    }

    CHECK_THROWS_AS(build_scale_free(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_scale_free(2, 2, 1), std::invalid_argument);
}

TEST_CASE("soft random geometric graph") {
    const double radius = 1000.0;
    const double alpha = 113.0 / radius;  // 2 alpha R = 226 km
    const QuantumNetwork net = build_soft_rgg(400, radius, alpha, 0.2, 1e6, 21);

    CHECK(net.node_positions.size() == 400);
    for (const NodePosition& pos : net.node_positions) {
        CHECK(std::hypot(pos.x, pos.y) <= radius + 1e-9);
    }

    // edge_p carries the photonic factor of the sampled length
    for (int e = 0; e < std::min(20, net.edge_count()); ++e) {
        const double z = net.edge_length_km(e);
        const double loss = std::pow(10.0, -0.2 * z / 10.0);
        const double expected = -std::expm1(1e6 * std::log1p(-loss));
        CHECK(net.edge_p[e] == doctest::Approx(expected).epsilon(1e-12));
    }

    const QuantumNetwork again = build_soft_rgg(400, radius, alpha, 0.2, 1e6, 21);
    CHECK(net.edges == again.edges);
}

TEST_CASE("square lattice and largest component") {
    const QuantumNetwork grid = build_square_lattice(3, 4);
    CHECK(grid.node_count == 12);
    CHECK(grid.edge_count() == 3 * 3 + 2 * 4);  // horizontal + vertical

    // two components: a triangle and an edge; extraction keeps the triangle
    QuantumNetwork split;
    split.node_count = 5;
    split.adjacency.resize(5);
    split.add_edge(0, 1);
    split.add_edge(1, 2);
    split.add_edge(0, 2);
    split.add_edge(3, 4);
    split.edge_q = {0.1, 0.2, 0.3, 0.4};
    split.edge_p = {0.9, 0.8, 0.7, 0.6};
    const QuantumNetwork major = largest_component(split);
    CHECK(major.node_count == 3);
    CHECK(major.edge_count() == 3);
    CHECK(major.edge_q == std::vector<double>{0.1, 0.2, 0.3});
}

TEST_CASE("edge state assignment") {
    QuantumNetwork net = build_erdos_renyi(2000, 10.0, 31);

    SUBCASE("point distributions pin every edge") {
        assign_edge_states(net, ParamDistribution::point_at_mean(0.9),
                           ParamDistribution::point_at_mean(0.95), 1);
        for (int e = 0; e < net.edge_count(); ++e) {
            CHECK(net.edge_q[e] == doctest::Approx(q_from_concurrence(0.9)).epsilon(1e-15));
            CHECK(net.edge_p[e] == 0.95);
        }
    }

    SUBCASE("uniform sampling honors support and mean") {
        const ParamDistribution conc = ParamDistribution::uniform_spread(0.1, 0.5, 1.5);
        const ParamDistribution prob = ParamDistribution::uniform_spread(0.05, 0.5, 1.5);
        assign_edge_states(net, conc, prob, 7);
        double mean_c = 0.0;
        for (int e = 0; e < net.edge_count(); ++e) {
            const double c = 1.0 - 1.5 * net.edge_q[e];
            CHECK(c >= conc.min_value() - 1e-12);
            CHECK(c <= conc.max_value() + 1e-12);
            CHECK(net.edge_p[e] >= prob.min_value());
            CHECK(net.edge_p[e] <= prob.max_value());
            mean_c += c;
        }
        mean_c /= net.edge_count();
        const double se = (0.1 / std::sqrt(12.0)) / std::sqrt(net.edge_count());
        CHECK(std::abs(mean_c - 0.9) <= 3.0 * se);

        // reassignment with the same seed reproduces the draw
        std::vector<double> q_before = net.edge_q;
        assign_edge_states(net, conc, prob, 7);
        CHECK(net.edge_q == q_before);
    }
}

TEST_CASE("network json round-trip") {
    QuantumNetwork net = build_erdos_renyi(50, 4.0, 77);
    assign_edge_states(net, ParamDistribution::uniform_spread(0.1, 0.5, 1.5),
                       ParamDistribution::uniform_spread(0.05, 0.5, 1.5), 3);
    const std::string text = network_to_json(net);
    const QuantumNetwork parsed = network_from_json(text);
    CHECK(parsed.node_count == net.node_count);
    CHECK(parsed.edges == net.edges);
    CHECK(parsed.edge_q == net.edge_q);  // bitwise: shortest round-trip doubles
    CHECK(parsed.edge_p == net.edge_p);
    CHECK(parsed.topology_tag == net.topology_tag);
    CHECK(parsed.seed == net.seed);
    CHECK(network_to_json(parsed) == text);

    const QuantumNetwork geo = build_soft_rgg(60, 500.0, 0.226, 0.2, 1e3, 5);
    const QuantumNetwork geo_parsed = network_from_json(network_to_json(geo));
    CHECK(geo_parsed.node_positions.size() == geo.node_positions.size());
    for (std::size_t i = 0; i < geo.node_positions.size(); ++i) {
        CHECK(geo_parsed.node_positions[i].x == geo.node_positions[i].x);
        CHECK(geo_parsed.node_positions[i].y == geo.node_positions[i].y);
    }
    CHECK(network_to_json(geo_parsed) == network_to_json(geo));
}

TEST_CASE("graph construction guards") {
    QuantumNetwork net;
    net.node_count = 3;
    net.adjacency.resize(3);
    net.add_edge(0, 1);
    CHECK_THROWS_AS(net.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(net.add_edge(1, 0), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(net.add_edge(0, 3), std::out_of_range);
    CHECK(net.has_edge(0, 1));
    CHECK(net.has_edge(1, 0));
    CHECK(!net.has_edge(0, 2));
}

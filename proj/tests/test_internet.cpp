#include <doctest.h>

#include <stdexcept>
#include <cmath>

#include <nlohmann/json.hpp>

#include "qtopo/internet.hpp"
#include "qtopo/quadrature.hpp"

using namespace qtopo;

namespace {
InternetModel paper_model() { return InternetModel{}; }  // defaults are the headline config
}

TEST_CASE("connection law") {
    const InternetModel model = paper_model();
    CHECK(connection_law(0.0, model) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(edge_connection_probability(226.0, model) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(photonic_connection_probability(226.0, model) == doctest::Approx(1.0).epsilon(1e-3));

    double prev = 1.1;
    for (double z = 0.0; z <= 1500.0; z += 25.0) {
        const double value = connection_law(z, model);
        CHECK(value >= 0.0);
        CHECK(value <= 1.0);
        CHECK(value <= prev + 1e-15);
        prev = value;
    }
}

TEST_CASE("photonic step cutoffs") {
    CHECK(step_cutoff_km(1e6) == 250.0);
    CHECK(step_cutoff_km(1e3) == 120.0);

    InternetModel model = paper_model();
    model.n_photons = 1e6;
    CHECK(photonic_connection_probability(250.0, model) > 0.99);
    CHECK(photonic_connection_probability(400.0, model) < 0.01);
    model.n_photons = 1e3;
    CHECK(photonic_connection_probability(120.0, model) > 0.97);
    CHECK(photonic_connection_probability(250.0, model) < 0.01);
}

TEST_CASE("annulus node density") {
    const InternetModel model = paper_model();
    const double rho = model.density();
    const double R = model.radius_km;

    CHECK(annulus_node_count(0.0, 200.0, model) ==
          doctest::Approx(2.0 * M_PI * rho * 200.0).epsilon(1e-14));
    CHECK(annulus_node_count(500.0, 1501.0, model) == 0.0);

    SUBCASE("area conservation, exact outer branch") {
        for (double h : {0.0, 250.0, 500.0, 900.0}) {
            const double split[] = {R - h};
            const QuadratureResult integral = integrate_adaptive_split(
                [&](double z) {
                    return annulus_node_count(h, z, model, AnnulusMode::exact);
                },
                0.0, R + h, split, 1e-6);
            CHECK(integral.converged);
            CHECK(integral.value ==
                  doctest::Approx(model.node_count).epsilon(0.01));
        }
    }

    SUBCASE("the approximate branch coincides at the center only") {
        CHECK(annulus_node_count(0.0, 800.0, model, AnnulusMode::approx) ==
              annulus_node_count(0.0, 800.0, model, AnnulusMode::exact));
    }
}

TEST_CASE("mean edge probability reproduces the worked step-mode values") {
    InternetModel model = paper_model();
    model.n_photons = 1e6;
    const double mu2_high = mean_edge_probability(model, PhotonicMode::step);
    CHECK(std::abs(mu2_high - 0.404) <= 0.01);

    model.n_photons = 1e3;
    const double mu2_low = mean_edge_probability(model, PhotonicMode::step);
    CHECK(std::abs(mu2_low - 0.146) <= 0.01);

    SUBCASE("beta cancels in the ratio") {
        model.n_photons = 1e6;
        model.beta = 0.5;
        CHECK(mean_edge_probability(model, PhotonicMode::step) ==
              doctest::Approx(mu2_high).epsilon(1e-9));
    }

    SUBCASE("monotone in the photon budget") {
        InternetModel low = paper_model(), high = paper_model();
        low.n_photons = 1e3;
        high.n_photons = 1e6;
        CHECK(mean_edge_probability(low, PhotonicMode::step) <
              mean_edge_probability(high, PhotonicMode::step));
        CHECK(mean_edge_probability(low, PhotonicMode::exact) <
              mean_edge_probability(high, PhotonicMode::exact));
    }

    SUBCASE("exact p(z) mode: the step approximation undershoots by its tail") {
        // The full p(z) has substantial mass beyond the plateau cutoffs
        // (p(300 km) = 0.63 at n_p = 1e6), so the gap is ~0.11, not small.
        model.n_photons = 1e6;
        model.beta = 1.0;
        const double exact_high = mean_edge_probability(model, PhotonicMode::exact);
        CHECK(std::abs(exact_high - 0.514) <= 0.01);
        CHECK(exact_high > mu2_high);
        CHECK(std::abs(exact_high - mu2_high) <= 0.12);

        model.n_photons = 1e3;
        const double exact_low = mean_edge_probability(model, PhotonicMode::exact);
        CHECK(std::abs(exact_low - 0.231) <= 0.01);
        CHECK(std::abs(exact_low - mu2_low) <= 0.12);
    }
}

TEST_CASE("average graph distance") {
    const InternetModel model = paper_model();
    CHECK(average_graph_distance(model) == doctest::Approx(4.0558).epsilon(2e-4));

    InternetModel zero_b = model;
    zero_b.b_coeff = 0.0;
    CHECK(average_graph_distance(zero_b) == 0.0);

    // doubling the density at fixed N halves the distance
    InternetModel dense = model;
    dense.radius_km = model.radius_km / std::sqrt(2.0);
    CHECK(average_graph_distance(dense) ==
          doctest::Approx(average_graph_distance(model) / 2.0).epsilon(1e-12));
}

TEST_CASE("binary entropy and the QKD threshold") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-15));

    CHECK(qkd_min_probability(1e3, 1e6, 0.8) == doctest::Approx(0.0161267).epsilon(2e-4 / 0.0161));
    CHECK(std::abs(qkd_min_probability(1e3, 1e6, 0.8) - 0.0161) <= 2e-4);
    CHECK(qkd_min_probability(1e3, 1e6, 1.0) == doctest::Approx(1e-3).epsilon(1e-12));

    // at the viability boundary no key is possible
    CHECK_THROWS_AS(qkd_min_probability(1e3, 1e6, 0.78), std::domain_error);
    CHECK_THROWS_AS(qkd_min_probability(1e3, 1e6, 0.5), std::domain_error);
    CHECK(qkd_key_rate_factor(0.8) == doctest::Approx(0.0620088).epsilon(1e-5));
}

TEST_CASE("viability verdict") {
    TaskThresholds t;
    t.c_star = 0.8;
    t.p_star = 0.016;
    t.xi = 0.01;

    SUBCASE("headline configuration is viable") {
        const ViabilityVerdict v = viability_verdict(paper_model(), t, 0.95);
        CHECK(v.connected);
        CHECK(v.density == doctest::Approx(4.7746e-4).epsilon(1e-4));
        CHECK(std::floor(v.r_star_c) == 4.0);
        CHECK(std::floor(v.r_star_p) == 4.0);
        CHECK(v.avg_graph_distance == doctest::Approx(4.0558).epsilon(1e-3));
        CHECK(v.r_star >= v.avg_graph_distance);
        CHECK(v.viable);
    }

    SUBCASE("a thousand photons per attempt are not enough") {
        InternetModel model = paper_model();
        model.n_photons = 1e3;
        const ViabilityVerdict v = viability_verdict(model, t, 0.95);
        CHECK(std::floor(v.r_star_p) == 2.0);
        CHECK(!v.viable);
    }

    SUBCASE("sub-critical density reads as disconnected") {
        InternetModel model = paper_model();
        model.node_count = 100;
        const ViabilityVerdict v = viability_verdict(model, t, 0.95);
        CHECK(v.density < v.critical_density);
        CHECK(!v.connected);
        CHECK(!v.viable);
    }

    SUBCASE("report serializes") {
        const ViabilityVerdict v = viability_verdict(paper_model(), t, 0.95);
        const nlohmann::json doc = nlohmann::json::parse(verdict_to_json(v));
        CHECK(doc.at("viable").get<bool>());
        CHECK(doc.at("connected").get<bool>());
        CHECK(doc.at("mean_edge_probability").get<double>() ==
              doctest::Approx(v.mean_edge_probability));
        CHECK(doc.contains("density"));
        CHECK(doc.contains("critical_density"));
        CHECK(doc.contains("avg_graph_distance"));
        CHECK(doc.contains("r_star"));
        CHECK(doc.contains("inputs"));
    }
}

TEST_CASE("quadrature kernel") {
    const QuadratureResult poly =
        integrate_adaptive([](double x) { return x * x; }, 0.0, 3.0, 1e-10);
    CHECK(poly.converged);
    CHECK(poly.value == doctest::Approx(9.0).epsilon(1e-12));

    // a kink handled by pre-splitting
    const double split[] = {1.0};
    const QuadratureResult kink = integrate_adaptive_split(
        [](double x) { return x < 1.0 ? x : 2.0 - x; }, 0.0, 2.0, split, 1e-10);
    CHECK(kink.converged);
    CHECK(kink.value == doctest::Approx(1.0).epsilon(1e-12));

    const QuadratureResult gauss = integrate_adaptive(
        [](double x) { return std::exp(-x * x / 2.0); }, -8.0, 8.0, 1e-8);
    CHECK(gauss.value == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-8));
}

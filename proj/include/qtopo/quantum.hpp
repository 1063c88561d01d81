#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qtopo {

// Concurrence of the isotropic state rho(q) = (1-q)|phi+><phi+| + q I/4.
// Entangled iff q < 2/3. Throws std::domain_error for q outside [0,1].
double concurrence_isotropic(double q);

// Inverse map: mixing parameter of the isotropic state with concurrence c.
double q_from_concurrence(double c);

// Mixing parameter after entanglement swapping two isotropic links:
// 1 - (1-q1)(1-q2). Commutative; never below max(q1, q2).
double swap_q(double q1, double q2);

// Iterated swap along a path: 1 - prod(1 - q_i). Throws
// std::invalid_argument on an empty list.
double swap_chain(std::span<const double> qs);

struct IsotropicState {
    double q = 0.0;

    explicit IsotropicState(double q_param);
    double concurrence() const;
};

// Two-qubit state diagonal in the Bell basis {phi+, phi-, psi+, psi-}.
// Weights are probabilities summing to 1.
struct BellDiagonalState {
    double w_phi_plus = 1.0;
    double w_phi_minus = 0.0;
    double w_psi_plus = 0.0;
    double w_psi_minus = 0.0;

    // Expansion of the isotropic state: (1 - 3q/4, q/4, q/4, q/4).
    static BellDiagonalState from_isotropic(double q);

    double max_weight() const;
    double concurrence() const;  // Max(0, 2 max_weight - 1)
    bool is_valid(double tol = 1e-12) const;
};

struct PurificationOutcome {
    BellDiagonalState state;
    double success_probability = 1.0;
};

// One round of Deutsch entanglement pumping (DEJMPS) on two Bell-diagonal
// pairs; returns the post-selected state on the kept pair and the
// probability of the coincident parity-check outcome. Throws
// std::domain_error when the post-selection probability vanishes
// (degenerate inputs) and std::invalid_argument on invalid states.
PurificationOutcome deutsch_purify(const BellDiagonalState& s1, const BellDiagonalState& s2);

struct PumpResult {
    BellDiagonalState state;
    // Product of the success probabilities N_i of the accepted pumping
    // steps (1.0 when nothing was merged). Availability probabilities of
    // the source paths are the caller's concern.
    double success_probability = 1.0;
    // Indices into the input list of the states that entered the pump,
    // target first, then accepted merges in processing order.
    std::vector<std::size_t> accepted;

    std::size_t accepted_count() const { return accepted.size(); }
};

// Entanglement pumping over a set of states: sorts by descending
// concurrence, takes the best as the pump target and merges the rest in
// order via deutsch_purify. With improve_only set, a merge is kept only
// if it strictly increases the concurrence; skipped states are excluded
// from `accepted` and from the combined success probability.
PumpResult pump_sequence(const std::vector<BellDiagonalState>& states, bool improve_only);

}  // namespace qtopo

#include "qtopo/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtopo {

namespace {

void check_q(double q, const char* what) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(q));
    }
}

}  // namespace

double concurrence_isotropic(double q) {
    check_q(q, "mixing parameter");
    return std::max(0.0, 1.0 - 1.5 * q);
}

double q_from_concurrence(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::domain_error("concurrence must lie in [0,1], got " + std::to_string(c));
    }
    return 2.0 * (1.0 - c) / 3.0;
}

double swap_q(double q1, double q2) {
    check_q(q1, "mixing parameter q1");
    check_q(q2, "mixing parameter q2");
    return 1.0 - (1.0 - q1) * (1.0 - q2);
}

double swap_chain(std::span<const double> qs) {
    if (qs.empty()) {
        throw std::invalid_argument("swap_chain: empty path");
    }
    double survival = 1.0;
    for (double q : qs) {
        check_q(q, "mixing parameter");
        survival *= 1.0 - q;
    }
    return 1.0 - survival;
}

IsotropicState::IsotropicState(double q_param) : q(q_param) {
    check_q(q, "mixing parameter");
}

double IsotropicState::concurrence() const { return std::max(0.0, 1.0 - 1.5 * q); }

BellDiagonalState BellDiagonalState::from_isotropic(double q) {
    check_q(q, "mixing parameter");
    return {1.0 - 0.75 * q, 0.25 * q, 0.25 * q, 0.25 * q};
}

double BellDiagonalState::max_weight() const {
    return std::max({w_phi_plus, w_phi_minus, w_psi_plus, w_psi_minus});
}

double BellDiagonalState::concurrence() const { return std::max(0.0, 2.0 * max_weight() - 1.0); }

bool BellDiagonalState::is_valid(double tol) const {
    const double sum = w_phi_plus + w_phi_minus + w_psi_plus + w_psi_minus;
    return w_phi_plus >= -tol && w_phi_minus >= -tol && w_psi_plus >= -tol &&
           w_psi_minus >= -tol && std::abs(sum - 1.0) <= tol;
}

PurificationOutcome deutsch_purify(const BellDiagonalState& s1, const BellDiagonalState& s2) {
    if (!s1.is_valid() || !s2.is_valid()) {
        throw std::invalid_argument("deutsch_purify: input weights invalid or unnormalized");
    }
    // Deutsch protocol parity sectors: {phi+, psi-} and {phi-, psi+}.
    // Coincident target-pair outcomes keep contributions where both input
    // states come from the same sector.
    const double same1 = s1.w_phi_plus + s1.w_psi_minus;
    const double same2 = s2.w_phi_plus + s2.w_psi_minus;
    const double cross1 = s1.w_phi_minus + s1.w_psi_plus;
    const double cross2 = s2.w_phi_minus + s2.w_psi_plus;
    const double n = same1 * same2 + cross1 * cross2;
    if (n <= 0.0) {
        throw std::domain_error("deutsch_purify: degenerate inputs, post-selection never succeeds");
    }

    BellDiagonalState out;
    out.w_phi_plus = (s1.w_phi_plus * s2.w_phi_plus + s1.w_psi_minus * s2.w_psi_minus) / n;
    out.w_phi_minus = (s1.w_phi_plus * s2.w_psi_minus + s1.w_psi_minus * s2.w_phi_plus) / n;
    out.w_psi_plus = (s1.w_psi_plus * s2.w_psi_plus + s1.w_phi_minus * s2.w_phi_minus) / n;
    out.w_psi_minus = (s1.w_psi_plus * s2.w_phi_minus + s1.w_phi_minus * s2.w_psi_plus) / n;

    // clamp tiny negatives and renormalize
    for (double* w : {&out.w_phi_plus, &out.w_phi_minus, &out.w_psi_plus, &out.w_psi_minus}) {
        if (*w < 0.0) *w = 0.0;
    }
    const double sum = out.w_phi_plus + out.w_phi_minus + out.w_psi_plus + out.w_psi_minus;
    out.w_phi_plus /= sum;
    out.w_phi_minus /= sum;
    out.w_psi_plus /= sum;
    out.w_psi_minus /= sum;

    return {out, n};
}

PumpResult pump_sequence(const std::vector<BellDiagonalState>& states, bool improve_only) {
    if (states.empty()) {
        throw std::invalid_argument("pump_sequence: empty state list");
    }

    std::vector<std::size_t> order(states.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return states[i].concurrence() > states[j].concurrence();
    });

    PumpResult result;
    result.state = states[order[0]];
    result.success_probability = 1.0;
    result.accepted.push_back(order[0]);

    for (std::size_t i = 1; i < order.size(); ++i) {
        const BellDiagonalState& next = states[order[i]];
        if (improve_only) {
            PurificationOutcome merged;
            try {
                merged = deutsch_purify(result.state, next);
            } catch (const std::domain_error&) {
                continue;  // degenerate merge cannot improve anything
            }
            if (merged.state.concurrence() <= result.state.concurrence()) {
                continue;
            }
            result.state = merged.state;
            result.success_probability *= merged.success_probability;
            result.accepted.push_back(order[i]);
        } else {
            PurificationOutcome merged = deutsch_purify(result.state, next);
            result.state = merged.state;
            result.success_probability *= merged.success_probability;
            result.accepted.push_back(order[i]);
        }
    }
    return result;
}

}  // namespace qtopo

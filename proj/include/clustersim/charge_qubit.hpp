#pragma once

#include <cstddef>
#include <vector>

#include "clustersim/errors.hpp"

namespace clustersim {

// Units: hbar = 1, flux quantum = 1, energies in units of a reference
// max Josephson energy. Flux is the fraction threaded through the qubit
// loop, restricted to [0, 1/2] where the effective Josephson energy is
// nonnegative.

struct QubitParams {
    double charging_energy = 20.0;  // E_C
    double max_josephson = 1.0;     // E_J at zero flux
    double offset_charge = 1.0;     // C*V/e; 1 = degeneracy point
    double flux = 0.0;              // Phi/Phi0 in [0, 1/2]

    bool charging_regime() const { return charging_energy >= 10.0 * max_josephson; }
};

struct ChainParams {
    std::vector<QubitParams> qubits;
    double coupler_inductance = 1.0;  // L_J of the shared large junction
    double rate_g = 0.0;              // set by tuning

    std::size_t size() const { return qubits.size(); }
};

/// Gate-charge energy 1/2 E_C (C V / e - 1); zero at the degeneracy point.
double epsilon(const QubitParams& q);

/// Flux-suppressed Josephson energy E_J cos(pi Phi); decreases from E_J to
/// zero as flux runs over [0, 1/2].
double effective_josephson(const QubitParams& q);

/// Inductive interqubit coupling
/// L_J pi^2 E_Ji E_Jj sin(pi Phi_i) sin(pi Phi_j), increasing in each flux.
double coupling_strength(const QubitParams& qi, const QubitParams& qj, double l_j);

/// Solves the tuning condition on [0, 1/2] for a uniform-flux coupled pair:
/// interior:  L_J pi^2 E_J^2 sin^2(pi Phi) = E_J cos(pi Phi) / 2
/// boundary:  L_J pi^2 E_J^2 sin^2(pi Phi) = E_J cos(pi Phi)
/// The left side is strictly increasing, the right strictly decreasing, so
/// the root is unique. Bisection to |lhs - rhs| <= 1e-12 E_J.
double tune_flux(double e_j, double l_j, bool interior);

/// Builds a chain at the degeneracy point satisfying every tuning condition:
/// all pair couplings equal g/4, interior qubits have effective Josephson
/// energy g/2, boundary qubits g/4. Interior fluxes come from tune_flux;
/// the boundary flux solves the mixed condition cos(pi Phi) =
/// L_J pi^2 E_J sin(pi Phi) sin(pi Phi_int) (the boundary E_J cancels there)
/// after which the boundary max Josephson energy is rescaled to hit g/4.
ChainParams make_tuned_chain(std::size_t n, double e_c, double e_j, double l_j);

/// Recovers g from a tuned chain (g = 4 Lambda) and certifies that every
/// per-qubit and per-pair condition yields the same value within 1e-9
/// relative. Throws InconsistentTuning otherwise.
double derive_g(const ChainParams& chain);

}  // namespace clustersim

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clustersim/tensor_algebra.hpp"

namespace clustersim {

/// The two X-basis conventions in play. The charge-qubit convention takes
/// |+> = (|0> - |1>)/sqrt2 (sigma^x eigenvalue -1); the standard convention
/// takes |+> = (|0> + |1>)/sqrt2. Keeping both as explicit data is the
/// guard against silent sign mistakes.
struct BasisConvention {
    std::string name;
    Eigen::Vector2cd plus_state;
    Eigen::Vector2cd minus_state;
};

BasisConvention charge_basis();    // |+> = (|0> - |1>)/sqrt2
BasisConvention standard_basis();  // |+> = (|0> + |1>)/sqrt2

/// |0...0>: amplitude 1 at index 0.
StateVector initial_state(std::size_t n);

/// Standard linear cluster state: CZ between neighbors on the standard
/// all-plus product state. Amplitudes 2^{-n/2} (-1)^{sum x_i x_{i+1}}.
StateVector cluster_standard(std::size_t n);

/// The driven chain's target state: pair blocks U_{i,i+1} = I - 2 Pi_i Pi_{i+1}
/// applied sequentially to |0...0> expanded in the charge X basis. This route
/// never forms the dense evolution operator, so it can certify it.
StateVector cluster_product_form(std::size_t n);

/// n-fold Hadamard; involutive. Maps the charge-basis product form onto the
/// standard cluster state.
StateVector hadamard_map(const StateVector& state);

struct StabilizerGenerator {
    std::string label;  // e.g. "Z1X2Z3", 1-based sites
    ComplexMatrix matrix;
};

struct StabilizerSet {
    std::vector<StabilizerGenerator> generators;
};

/// Generators of the linear cluster state: X1 Z2, Z_{i-1} X_i Z_{i+1}, and
/// Z_{n-1} X_n (1-based).
StabilizerSet stabilizer_set(std::size_t n);

struct StabilizerCheck {
    bool pass = false;
    double worst_residual = 0.0;
    std::string worst_label;
    std::vector<double> residuals;
};

/// Pure-state check: residual_i = || S_i psi - psi ||, pass when all <= 1e-9.
StabilizerCheck verify_stabilizers(const StateVector& state, const StabilizerSet& stabs);

/// Mixed-state check via expectations: residual_i = |1 - Tr(S_i rho)|,
/// pass when all <= 1e-8.
StabilizerCheck verify_stabilizers(const ComplexMatrix& rho, const StabilizerSet& stabs);

/// Graded diagnostic Tr(S_i rho) per generator.
std::vector<double> stabilizer_expectations(const ComplexMatrix& rho, const StabilizerSet& stabs);

}  // namespace clustersim

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "clustersim/errors.hpp"

namespace clustersim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense complex kernels shared by every other module. All functions are
/// pure; matrices are treated as immutable values.

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);

/// Validates the density-matrix contract: Hermitian within herm_tol,
/// trace 1 within trace_tol, eigenvalues >= -eig_tol.
void check_density_matrix(const ComplexMatrix& rho, double herm_tol = 1e-10,
                          double trace_tol = 1e-8, double eig_tol = 1e-8);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigResult {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // columns, unitary
};

/// Hermitian eigendecomposition, a = V diag(lambda) V^dagger.
/// Throws NotHermitian if max|a - a^dagger| exceeds 1e-10.
EigResult herm_eig(const ComplexMatrix& a);

/// Square root of a positive semidefinite Hermitian matrix. Eigenvalues in
/// [-1e-6, 0) are clamped to zero (integrator round-off); anything below
/// -1e-6 raises NegativeSpectrum.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Brute-force e^{-i theta h} through the eigendecomposition of h.
/// Reference implementation only; the production evolution path uses the
/// factorized projector identity.
ComplexMatrix expm_oracle(const ComplexMatrix& h, double theta);

struct PhaseAlignment {
    StateVector state;
    bool phase_defined = true;  // false when |<a|b>| < 1e-14
};

/// Multiplies b by the unit phase that maximizes Re<a|b>. When the overlap
/// vanishes the phase is undefined: b is returned unchanged with the flag
/// cleared.
PhaseAlignment phase_align(const StateVector& a, const StateVector& b);

/// In-place single-qubit gate on site `site` of an n-qubit register
/// (site 0 is the leftmost Kronecker factor).
void apply_one_qubit(const Eigen::Matrix2cd& gate, std::size_t site, StateVector& psi);

}  // namespace clustersim

#include "clustersim/tensor_algebra.hpp"

#include <cmath>

namespace clustersim {

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void check_density_matrix(const ComplexMatrix& rho, double herm_tol, double trace_tol,
                          double eig_tol) {
    if (rho.rows() != rho.cols())
        throw DimensionMismatch("density matrix must be square");
    if (!is_hermitian(rho, herm_tol))
        throw NotHermitian("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > trace_tol || std::abs(rho.trace().imag()) > trace_tol)
        throw NumericalError("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -eig_tol)
        throw NegativeSpectrum("density matrix has a negative eigenvalue");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

EigResult herm_eig(const ComplexMatrix& a) {
    if (!is_hermitian(a, 1e-10))
        throw NotHermitian("herm_eig: input is not Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
    if (es.info() != Eigen::Success)
        throw NumericalError("herm_eig: eigensolver failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    auto [values, vectors] = herm_eig(a);
    RealVector roots(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        double lambda = values[k];
        if (lambda < -1e-6)
            throw NegativeSpectrum("psd_sqrt: eigenvalue below -1e-6");
        roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    return vectors * roots.asDiagonal() * vectors.adjoint();
}

ComplexMatrix expm_oracle(const ComplexMatrix& h, double theta) {
    auto [values, vectors] = herm_eig(h);
    StateVector phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k)
        phases[k] = std::exp(Complex(0.0, -theta * values[k]));
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

PhaseAlignment phase_align(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("phase_align: dimension mismatch");
    Complex overlap = a.dot(b);  // conjugates a
    double mag = std::abs(overlap);
    if (mag < 1e-14) return {b, false};
    return {StateVector(b * (std::conj(overlap) / mag)), true};
}

void apply_one_qubit(const Eigen::Matrix2cd& gate, std::size_t site, StateVector& psi) {
    const auto dim = static_cast<std::size_t>(psi.size());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim)
        throw DimensionMismatch("apply_one_qubit: dimension is not a power of two");
    if (site >= n) throw SiteOutOfRange("apply_one_qubit: site out of range");
    const std::size_t stride = std::size_t{1} << (n - 1 - site);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            Complex lo = psi[base + k];
            Complex hi = psi[base + k + stride];
            psi[base + k] = gate(0, 0) * lo + gate(0, 1) * hi;
            psi[base + k + stride] = gate(1, 0) * lo + gate(1, 1) * hi;
        }
    }
}

}  // namespace clustersim

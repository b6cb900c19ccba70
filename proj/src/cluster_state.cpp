#include "clustersim/cluster_state.hpp"

#include <cmath>

#include "clustersim/hamiltonian.hpp"

namespace clustersim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t bit_of(std::size_t index, std::size_t site, std::size_t n) {
    return (index >> (n - 1 - site)) & 1u;
}

}  // namespace

BasisConvention charge_basis() {
    BasisConvention b;
    b.name = "charge";
    b.plus_state << kInvSqrt2, -kInvSqrt2;
    b.minus_state << kInvSqrt2, kInvSqrt2;
    return b;
}

BasisConvention standard_basis() {
    BasisConvention b;
    b.name = "standard";
    b.plus_state << kInvSqrt2, kInvSqrt2;
    b.minus_state << kInvSqrt2, -kInvSqrt2;
    return b;
}

StateVector initial_state(std::size_t n) {
    if (n < 1) throw ConfigError("initial_state needs at least 1 qubit");
    StateVector psi = StateVector::Zero(Eigen::Index{1} << n);
    psi[0] = 1.0;
    return psi;
}

StateVector cluster_standard(std::size_t n) {
    if (n < 2) throw ConfigError("cluster_standard needs at least 2 qubits");
    const std::size_t dim = std::size_t{1} << n;
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    StateVector psi(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        std::size_t phase = 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            phase += bit_of(x, i, n) & bit_of(x, i + 1, n);
        psi[static_cast<Eigen::Index>(x)] = (phase & 1u) ? -amp : amp;
    }
    return psi;
}

StateVector cluster_product_form(std::size_t n) {
    if (n < 2) throw ConfigError("cluster_product_form needs at least 2 qubits");
    const std::size_t dim = std::size_t{1} << n;
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));

    // |0...0> in the charge X basis: equal weight on every +/- string.
    // Encode strings as bitmasks with bit = 1 meaning |+>.
    StateVector coeff = StateVector::Constant(static_cast<Eigen::Index>(dim), amp);

    // Each pair block flips the sign of strings with |+>|+> on the pair.
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t s = 0; s < dim; ++s)
            if (bit_of(s, i, n) && bit_of(s, i + 1, n))
                coeff[static_cast<Eigen::Index>(s)] = -coeff[static_cast<Eigen::Index>(s)];

    // Change of basis back to computational: column 0 is |->, column 1 |+>.
    const BasisConvention basis = charge_basis();
    Eigen::Matrix2cd to_computational;
    to_computational.col(0) = basis.minus_state;
    to_computational.col(1) = basis.plus_state;
    for (std::size_t site = 0; site < n; ++site)
        apply_one_qubit(to_computational, site, coeff);
    return coeff;
}

StateVector hadamard_map(const StateVector& state) {
    const auto dim = static_cast<std::size_t>(state.size());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim)
        throw DimensionMismatch("hadamard_map: dimension is not a power of two");
    Eigen::Matrix2cd h;
    h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    StateVector out = state;
    for (std::size_t site = 0; site < n; ++site) apply_one_qubit(h, site, out);
    return out;
}

StabilizerSet stabilizer_set(std::size_t n) {
    if (n < 2) throw ConfigError("stabilizer_set needs at least 2 qubits");
    StabilizerSet set;
    for (std::size_t i = 0; i < n; ++i) {
        StabilizerGenerator gen;
        const std::size_t dim = std::size_t{1} << n;
        gen.matrix = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                             static_cast<Eigen::Index>(dim));
        auto mul = [&](PauliAxis axis, std::size_t site) {
            gen.matrix = ComplexMatrix(gen.matrix * pauli_embed({axis, site}, n));
            gen.label += (axis == PauliAxis::X ? "X" : "Z") + std::to_string(site + 1);
        };
        if (i > 0) mul(PauliAxis::Z, i - 1);
        mul(PauliAxis::X, i);
        if (i + 1 < n) mul(PauliAxis::Z, i + 1);
        set.generators.push_back(std::move(gen));
    }
    return set;
}

StabilizerCheck verify_stabilizers(const StateVector& state, const StabilizerSet& stabs) {
    StabilizerCheck check;
    check.pass = true;
    for (const auto& gen : stabs.generators) {
        if (gen.matrix.rows() != state.size())
            throw DimensionMismatch("verify_stabilizers: dimension mismatch");
        double residual = (gen.matrix * state - state).norm();
        check.residuals.push_back(residual);
        if (check.worst_label.empty() || residual > check.worst_residual) {
            check.worst_residual = residual;
            check.worst_label = gen.label;
        }
        if (residual > 1e-9) check.pass = false;
    }
    return check;
}

StabilizerCheck verify_stabilizers(const ComplexMatrix& rho, const StabilizerSet& stabs) {
    StabilizerCheck check;
    check.pass = true;
    for (const auto& gen : stabs.generators) {
        if (gen.matrix.rows() != rho.rows())
            throw DimensionMismatch("verify_stabilizers: dimension mismatch");
        double residual = std::abs(1.0 - (gen.matrix * rho).trace().real());
        check.residuals.push_back(residual);
        if (check.worst_label.empty() || residual > check.worst_residual) {
            check.worst_residual = residual;
            check.worst_label = gen.label;
        }
        if (residual > 1e-8) check.pass = false;
    }
    return check;
}

std::vector<double> stabilizer_expectations(const ComplexMatrix& rho,
                                            const StabilizerSet& stabs) {
    std::vector<double> expectations;
    for (const auto& gen : stabs.generators) {
        if (gen.matrix.rows() != rho.rows())
            throw DimensionMismatch("stabilizer_expectations: dimension mismatch");
        expectations.push_back((gen.matrix * rho).trace().real());
    }
    return expectations;
}

}  // namespace clustersim

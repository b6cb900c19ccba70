#include "clustersim/hamiltonian.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace clustersim {

namespace {

ComplexMatrix identity(std::size_t dim) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim));
}

}  // namespace

ComplexMatrix pauli_matrix(PauliAxis axis) {
    ComplexMatrix m(2, 2);
    switch (axis) {
        case PauliAxis::I: m << 1, 0, 0, 1; break;
        case PauliAxis::X: m << 0, 1, 1, 0; break;
        case PauliAxis::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case PauliAxis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

ComplexMatrix pauli_embed(const PauliLabel& label, std::size_t n) {
    if (label.site >= n)
        throw SiteOutOfRange("pauli_embed: site " + std::to_string(label.site) +
                             " out of range for n = " + std::to_string(n));
    ComplexMatrix out = ComplexMatrix::Ones(1, 1);
    for (std::size_t k = 0; k < n; ++k)
        out = kron(out, k == label.site ? pauli_matrix(label.axis) : pauli_matrix(PauliAxis::I));
    return out;
}

ComplexMatrix projector_site(std::size_t site, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    return 0.5 * (identity(dim) - pauli_embed({PauliAxis::X, site}, n));
}

ComplexMatrix HamiltonianTerms::to_matrix() const {
    const std::size_t dim = std::size_t{1} << n_qubits;
    ComplexMatrix h = constant * identity(dim);
    for (const auto& t : single_site)
        h += t.coeff * pauli_embed({t.axis, t.site}, n_qubits);
    for (const auto& t : two_site) {
        if (t.site_i + 1 != t.site_j && t.site_j + 1 != t.site_i)
            throw ConfigError("two-site terms must be nearest-neighbor");
        h += t.coeff * (pauli_embed({t.axis_i, t.site_i}, n_qubits) *
                        pauli_embed({t.axis_j, t.site_j}, n_qubits));
    }
    return h;
}

HamiltonianTerms raw_terms(const ChainParams& chain) {
    const std::size_t n = chain.size();
    HamiltonianTerms terms;
    terms.n_qubits = n;
    for (std::size_t i = 0; i < n; ++i)
        terms.single_site.push_back({i, -effective_josephson(chain.qubits[i]), PauliAxis::X});
    for (std::size_t i = 0; i + 1 < n; ++i)
        terms.two_site.push_back({i, i + 1,
                                  coupling_strength(chain.qubits[i], chain.qubits[i + 1],
                                                    chain.coupler_inductance),
                                  PauliAxis::X, PauliAxis::X});
    return terms;
}

ComplexMatrix build_raw(const ChainParams& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (std::abs(chain.qubits[i].offset_charge - 1.0) > 1e-12)
            throw NotAtDegeneracy("qubit " + std::to_string(i + 1) +
                                  " is biased away from the degeneracy point");
    return raw_terms(chain).to_matrix();
}

ComplexMatrix build_projector_form(std::size_t n, double g) {
    if (n < 2) throw ConfigError("projector form needs at least 2 qubits");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix h = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i + 1 < n; ++i)
        h += g * (projector_site(i, n) * projector_site(i + 1, n));
    return h;
}

double equivalence_shift(const ComplexMatrix& raw, const ComplexMatrix& projector_form,
                         std::size_t n, double g) {
    if (raw.rows() != projector_form.rows() || raw.cols() != projector_form.cols())
        throw DimensionMismatch("equivalence_shift: dimension mismatch");
    ComplexMatrix diff = projector_form - raw;
    const double c = diff.trace().real() / static_cast<double>(diff.rows());
    double residual = (diff - c * identity(static_cast<std::size_t>(diff.rows())))
                          .cwiseAbs()
                          .maxCoeff();
    if (residual > 1e-9)
        throw NotProportionalToIdentity("forms differ by more than a constant shift");
    const double expected = 0.25 * g * static_cast<double>(n - 1);
    if (std::abs(c - expected) > 1e-10 * std::max(1.0, std::abs(expected)))
        throw NotProportionalToIdentity("constant shift is not (n-1) g / 4");
    return c;
}

double pairwise_commutators(std::size_t n) {
    if (n < 3) throw ConfigError("pairwise_commutators needs at least 3 qubits");
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i + 1 < n; ++i)
        blocks.push_back(projector_site(i, n) * projector_site(i + 1, n));
    double worst = 0.0;
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            ComplexMatrix comm = blocks[a] * blocks[b] - blocks[b] * blocks[a];
            worst = std::max(worst, comm.cwiseAbs().maxCoeff());
        }
    return worst;
}

}  // namespace clustersim

#pragma once

#include <cstddef>
#include <vector>

#include "clustersim/charge_qubit.hpp"
#include "clustersim/tensor_algebra.hpp"

namespace clustersim {

enum class PauliAxis { I, X, Y, Z };

struct PauliLabel {
    PauliAxis axis = PauliAxis::I;
    std::size_t site = 0;
};

struct SingleSiteTerm {
    std::size_t site;
    double coeff;
    PauliAxis axis;
};

struct TwoSiteTerm {
    std::size_t site_i;
    std::size_t site_j;
    double coeff;
    PauliAxis axis_i;
    PauliAxis axis_j;
};

/// Symbolic nearest-neighbor Hamiltonian. Coefficients are real; two-site
/// terms must couple adjacent sites only.
struct HamiltonianTerms {
    std::size_t n_qubits = 0;
    std::vector<SingleSiteTerm> single_site;
    std::vector<TwoSiteTerm> two_site;
    double constant = 0.0;

    ComplexMatrix to_matrix() const;
};

ComplexMatrix pauli_matrix(PauliAxis axis);

/// I x ... x sigma x ... x I with sigma at `site`; site 0 is the leftmost
/// factor (most significant bit of the basis index).
ComplexMatrix pauli_embed(const PauliLabel& label, std::size_t n);

/// Pi_site = (1 - sigma^x_site)/2 embedded in n qubits. Projects onto the
/// charge-qubit |+> = (|0> - |1>)/sqrt2, the sigma^x eigenstate with
/// eigenvalue -1. Idempotent, Hermitian, rank 2^(n-1).
ComplexMatrix projector_site(std::size_t site, std::size_t n);

/// Symbolic terms of the array Hamiltonian
/// H = sum_i -Ebar_i sigma^x_i + sum_i Lambda_{i,i+1} sigma^x_i sigma^x_{i+1}.
HamiltonianTerms raw_terms(const ChainParams& chain);

/// Dense array Hamiltonian in charge-qubit form. Requires every qubit at
/// the degeneracy point (offset charge 1); throws NotAtDegeneracy otherwise.
ComplexMatrix build_raw(const ChainParams& chain);

/// Dense projector-form Hamiltonian g * sum_i Pi_i Pi_{i+1}. Positive
/// semidefinite with spectrum in {0, g, ..., (n-1) g}.
ComplexMatrix build_projector_form(std::size_t n, double g);

/// Returns the constant c with projector_form - raw = c I, certifying
/// c = (n-1) g / 4. Throws NotProportionalToIdentity if the difference is
/// not proportional to the identity or the constant is off.
double equivalence_shift(const ComplexMatrix& raw, const ComplexMatrix& projector_form,
                         std::size_t n, double g);

/// Max over pairs (i, j) of the max-abs entry of
/// [Pi_i Pi_{i+1}, Pi_j Pi_{j+1}]; zero because all factors are diagonal in
/// the x basis.
double pairwise_commutators(std::size_t n);

}  // namespace clustersim

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "clustersim/tensor_algebra.hpp"

namespace clustersim {

/// T1/T2 noise description. Times are physical (microseconds); kappa is the
/// bridge between microseconds and simulation time units (us per unit), so
/// the per-unit rates scale linearly with kappa.
struct NoiseModel {
    double t1_us = 262.69;
    double t2_us = 176.67;
    double kappa = 1.0;
    bool enable_relaxation = true;
    bool enable_dephasing = true;

    /// Relaxation rate per simulation unit (kappa / T1), 0 when disabled.
    double gamma1() const;

    /// Pure-dephasing rate per simulation unit. With relaxation active the
    /// decomposition kappa (1/T2 - 1/(2 T1)) keeps the observed off-diagonal
    /// decay time at T2; dephasing-only uses kappa / T2 directly.
    /// Throws UnphysicalRates when negative (T2 > 2 T1).
    double gamma_phi() const;

    void validate() const;

    static NoiseModel none();
    static NoiseModel relaxation_only(double t1_us, double kappa);
    static NoiseModel dephasing_only(double t2_us, double kappa);
    static NoiseModel combined(double t1_us, double t2_us, double kappa);
};

struct EvolutionTrajectory {
    std::vector<double> times;
    std::vector<ComplexMatrix> states;
    std::string scenario;
};

/// Exact factorized evolution operator
/// U = prod_i [I + (e^{-i phase} - 1) Pi_i Pi_{i+1}], phase = g t.
ComplexMatrix unitary_exact(std::size_t n, double phase);

/// Applies the factorized unitary directly to a state without forming the
/// dense operator; O(n 2^n) per call.
StateVector evolve_pure(const StateVector& state, std::size_t n, double phase);

/// Per-qubit collapse operators: sqrt(gamma1) sigma^- (sigma^- = |0><1| in
/// the charge basis) and sqrt(gamma_phi / 2) sigma^z.
std::vector<ComplexMatrix> collapse_operators(const NoiseModel& noise, std::size_t n);

/// drho/dt = -i [H, rho] + sum_C (C rho C^dag - 1/2 {C^dag C, rho}).
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<ComplexMatrix>& collapse);

/// RK4 stepper for the Lindblad flow with the generator pieces precomputed.
/// Lets callers drive their own loop (e.g. switching the Hamiltonian off at
/// an exact time with a fractional final step).
class MasterIntegrator {
  public:
    MasterIntegrator(ComplexMatrix h, std::vector<ComplexMatrix> collapse);
    ~MasterIntegrator();
    MasterIntegrator(MasterIntegrator&&) noexcept;
    MasterIntegrator& operator=(MasterIntegrator&&) noexcept;

    void rhs(const ComplexMatrix& rho, ComplexMatrix& out);
    void step(ComplexMatrix& rho, double dt);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Fixed-step RK4 master-equation integrator. Sampled states are
/// re-Hermitized, trace-renormalized when drift exceeds 1e-10, and checked
/// for positivity (eigenvalue < -1e-5 raises StepTooLarge). The observer is
/// called at t = 0 and every `sample_every` steps.
void integrate_master_observe(
    const ComplexMatrix& rho0, const ComplexMatrix& h,
    const std::vector<ComplexMatrix>& collapse, double t_end, double dt,
    std::size_t sample_every,
    const std::function<void(double, const ComplexMatrix&)>& observer);

/// Same as above but stores the sampled density matrices.
EvolutionTrajectory integrate_master(const ComplexMatrix& rho0, const ComplexMatrix& h,
                                     const std::vector<ComplexMatrix>& collapse,
                                     double t_end, double dt, std::size_t sample_every);

}  // namespace clustersim

#include "clustersim/evolution.hpp"

#include <cmath>
#include <string>

#include "clustersim/hamiltonian.hpp"

namespace clustersim {

// Precomputed pieces of the Lindblad generator plus RK4 scratch space.
struct MasterIntegrator::Impl {
    ComplexMatrix h;
    std::vector<ComplexMatrix> collapse;
    std::vector<ComplexMatrix> collapse_dag;
    ComplexMatrix damping;  // 1/2 sum C^dag C
    ComplexMatrix k1, k2, k3, k4, tmp, acc, stage;

    Impl(ComplexMatrix h_in, std::vector<ComplexMatrix> collapse_in)
        : h(std::move(h_in)), collapse(std::move(collapse_in)) {
        const auto dim = h.rows();
        damping = ComplexMatrix::Zero(dim, dim);
        for (const auto& c : collapse) {
            if (c.rows() != dim || c.cols() != dim)
                throw DimensionMismatch("collapse operator dimension mismatch");
            collapse_dag.push_back(c.adjoint());
            damping += 0.5 * (collapse_dag.back() * c);
        }
        k1 = k2 = k3 = k4 = tmp = acc = stage = ComplexMatrix::Zero(dim, dim);
    }

    void rhs(const ComplexMatrix& rho, ComplexMatrix& out) {
        tmp.noalias() = h * rho;
        out = Complex(0, -1) * (tmp - tmp.adjoint());
        tmp.noalias() = damping * rho;
        out -= tmp;
        out -= tmp.adjoint();
        for (std::size_t k = 0; k < collapse.size(); ++k) {
            acc.noalias() = collapse[k] * rho;
            out.noalias() += acc * collapse_dag[k];
        }
    }

    void step(ComplexMatrix& rho, double dt) {
        rhs(rho, k1);
        stage = rho + (0.5 * dt) * k1;
        rhs(stage, k2);
        stage = rho + (0.5 * dt) * k2;
        rhs(stage, k3);
        stage = rho + dt * k3;
        rhs(stage, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
};

MasterIntegrator::MasterIntegrator(ComplexMatrix h, std::vector<ComplexMatrix> collapse)
    : impl_(std::make_unique<Impl>(std::move(h), std::move(collapse))) {}
MasterIntegrator::~MasterIntegrator() = default;
MasterIntegrator::MasterIntegrator(MasterIntegrator&&) noexcept = default;
MasterIntegrator& MasterIntegrator::operator=(MasterIntegrator&&) noexcept = default;

void MasterIntegrator::rhs(const ComplexMatrix& rho, ComplexMatrix& out) {
    impl_->rhs(rho, out);
}
void MasterIntegrator::step(ComplexMatrix& rho, double dt) { impl_->step(rho, dt); }

namespace {

void condition_sample(ComplexMatrix& rho, double t) {
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-10) rho /= tr;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-5)
        throw StepTooLarge("density matrix lost positivity at t = " + std::to_string(t) +
                           "; reduce dt");
}

}  // namespace

double NoiseModel::gamma1() const {
    if (!enable_relaxation) return 0.0;
    return kappa / t1_us;
}

double NoiseModel::gamma_phi() const {
    if (!enable_dephasing) return 0.0;
    double rate = enable_relaxation ? kappa * (1.0 / t2_us - 1.0 / (2.0 * t1_us))
                                    : kappa / t2_us;
    if (rate < 0.0)
        throw UnphysicalRates("negative pure-dephasing rate (T2 > 2 T1)");
    return rate;
}

void NoiseModel::validate() const {
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) throw ConfigError("T1 and T2 must be positive");
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (enable_relaxation && enable_dephasing && t2_us > 2.0 * t1_us)
        throw UnphysicalRates("T2 must not exceed 2 T1 when both channels are enabled");
}

NoiseModel NoiseModel::none() {
    NoiseModel m;
    m.enable_relaxation = false;
    m.enable_dephasing = false;
    return m;
}

NoiseModel NoiseModel::relaxation_only(double t1_us, double kappa) {
    NoiseModel m;
    m.t1_us = t1_us;
    m.kappa = kappa;
    m.enable_relaxation = true;
    m.enable_dephasing = false;
    return m;
}

NoiseModel NoiseModel::dephasing_only(double t2_us, double kappa) {
    NoiseModel m;
    m.t2_us = t2_us;
    m.kappa = kappa;
    m.enable_relaxation = false;
    m.enable_dephasing = true;
    return m;
}

NoiseModel NoiseModel::combined(double t1_us, double t2_us, double kappa) {
    NoiseModel m;
    m.t1_us = t1_us;
    m.t2_us = t2_us;
    m.kappa = kappa;
    m.enable_relaxation = true;
    m.enable_dephasing = true;
    return m;
}

ComplexMatrix unitary_exact(std::size_t n, double phase) {
    if (n < 2) throw ConfigError("unitary_exact needs at least 2 qubits");
    const std::size_t dim = std::size_t{1} << n;
    const Complex factor = std::exp(Complex(0, -phase)) - 1.0;
    ComplexMatrix u = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ComplexMatrix block =
            ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim)) +
            factor * (projector_site(i, n) * projector_site(i + 1, n));
        u = block * u;
    }
    return u;
}

StateVector evolve_pure(const StateVector& state, std::size_t n, double phase) {
    if (state.size() != (Eigen::Index{1} << n))
        throw DimensionMismatch("evolve_pure: state dimension is not 2^n");
    const std::size_t dim = std::size_t{1} << n;
    const Complex factor = std::exp(Complex(0, -phase)) - 1.0;
    StateVector psi = state;

    // Pi_i Pi_{i+1} |psi> picks the |+>|+> component of the pair:
    // apply (1 - sigma^x)/2 on each of the two sites.
    auto half_minus_x = [&](std::size_t site, StateVector& v) {
        const std::size_t stride = std::size_t{1} << (n - 1 - site);
        for (std::size_t base = 0; base < dim; base += 2 * stride)
            for (std::size_t k = 0; k < stride; ++k) {
                Complex lo = v[base + k];
                Complex hi = v[base + k + stride];
                v[base + k] = 0.5 * (lo - hi);
                v[base + k + stride] = 0.5 * (hi - lo);
            }
    };

    StateVector projected(dim);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        projected = psi;
        half_minus_x(i, projected);
        half_minus_x(i + 1, projected);
        psi += factor * projected;
    }
    return psi;
}

std::vector<ComplexMatrix> collapse_operators(const NoiseModel& noise, std::size_t n) {
    noise.validate();
    std::vector<ComplexMatrix> ops;
    ComplexMatrix sigma_minus(2, 2);
    sigma_minus << 0, 1, 0, 0;  // |0><1| in the charge basis

    const double g1 = noise.gamma1();
    const double gphi = noise.gamma_phi();

    if (noise.enable_relaxation) {
        ComplexMatrix op = std::sqrt(g1) * sigma_minus;
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix embedded = ComplexMatrix::Ones(1, 1);
            for (std::size_t k = 0; k < n; ++k)
                embedded = kron(embedded, k == j ? op : ComplexMatrix::Identity(2, 2).eval());
            ops.push_back(std::move(embedded));
        }
    }
    if (noise.enable_dephasing) {
        for (std::size_t j = 0; j < n; ++j)
            ops.push_back(std::sqrt(gphi / 2.0) * pauli_embed({PauliAxis::Z, j}, n));
    }
    return ops;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<ComplexMatrix>& collapse) {
    if (rho.rows() != h.rows() || rho.cols() != h.cols())
        throw DimensionMismatch("lindblad_rhs: dimension mismatch");
    MasterIntegrator integrator(h, collapse);
    ComplexMatrix out(rho.rows(), rho.cols());
    integrator.rhs(rho, out);
    return out;
}

void integrate_master_observe(
    const ComplexMatrix& rho0, const ComplexMatrix& h,
    const std::vector<ComplexMatrix>& collapse, double t_end, double dt,
    std::size_t sample_every,
    const std::function<void(double, const ComplexMatrix&)>& observer) {
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw ConfigError("integrate_master requires positive dt and t_end");
    if (sample_every == 0) throw ConfigError("sample_every must be at least 1");
    if (rho0.rows() != h.rows() || rho0.cols() != h.cols())
        throw DimensionMismatch("integrate_master: dimension mismatch");
    check_density_matrix(rho0);

    MasterIntegrator integrator(h, collapse);
    ComplexMatrix rho = rho0;
    observer(0.0, rho);

    const auto n_steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    for (std::size_t step = 1; step <= n_steps; ++step) {
        integrator.step(rho, dt);
        if (step % sample_every == 0) {
            condition_sample(rho, step * dt);
            observer(step * dt, rho);
        }
    }
}

EvolutionTrajectory integrate_master(const ComplexMatrix& rho0, const ComplexMatrix& h,
                                     const std::vector<ComplexMatrix>& collapse,
                                     double t_end, double dt, std::size_t sample_every) {
    EvolutionTrajectory traj;
    integrate_master_observe(rho0, h, collapse, t_end, dt, sample_every,
                             [&](double t, const ComplexMatrix& rho) {
                                 traj.times.push_back(t);
                                 traj.states.push_back(rho);
                             });
    return traj;
}

}  // namespace clustersim

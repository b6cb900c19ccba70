#include "clustersim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clustersim/cluster_state.hpp"
#include "clustersim/evolution.hpp"
#include "clustersim/hamiltonian.hpp"

namespace clustersim {

namespace {
constexpr double kPi = std::numbers::pi;
}

double fidelity_pure(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("fidelity_pure: dimension mismatch");
    double f = std::norm(a.dot(b));
    return std::clamp(f, 0.0, 1.0);
}

double fidelity_mixed(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw DimensionMismatch("fidelity_mixed: dimension mismatch");
    ComplexMatrix root = psd_sqrt(rho);
    ComplexMatrix inner = root * sigma * root;
    // inner is PSD up to round-off; Tr sqrt comes from its spectrum.
    auto [values, vectors] = herm_eig(0.5 * (inner + inner.adjoint()).eval());
    double trace_root = 0.0;
    for (Eigen::Index k = 0; k < values.size(); ++k)
        if (values[k] > 0.0) trace_root += std::sqrt(values[k]);
    return std::clamp(trace_root * trace_root, 0.0, 1.0);
}

double l1_coherence(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) throw DimensionMismatch("l1_coherence: matrix must be square");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j)
            if (i != j) sum += std::abs(rho(i, j));
    return sum;
}

PeakReport find_peaks(const std::vector<double>& times, const std::vector<double>& values) {
    if (times.size() != values.size())
        throw DimensionMismatch("find_peaks: times and values differ in length");
    if (values.size() < 3) throw NoPeaks("series too short for interior maxima");

    PeakReport report;
    for (std::size_t k = 1; k + 1 < values.size(); ++k) {
        if (!(values[k] > values[k - 1])) continue;
        // Let a plateau count once, at its earliest index.
        std::size_t end = k;
        while (end + 1 < values.size() && values[end + 1] == values[k]) ++end;
        if (end + 1 >= values.size() || values[end + 1] >= values[k]) continue;
        report.peak_times.push_back(times[k]);
        report.peak_values.push_back(values[k]);
        // nearest odd multiple of pi, never below pi
        double m = std::round((times[k] / kPi - 1.0) / 2.0);
        report.expected_times.push_back((2.0 * std::max(0.0, m) + 1.0) * kPi);
    }
    if (report.peak_times.empty()) throw NoPeaks("series has no interior local maxima");
    return report;
}

double combined_first_peak(const ExperimentConfig& config, double kappa) {
    const std::size_t n = config.n_qubits;
    ComplexMatrix h = build_projector_form(n, config.g);
    NoiseModel noise = NoiseModel::combined(config.t1_us, config.t2_us, kappa);
    auto collapse = collapse_operators(noise, n);

    StateVector psi0 = initial_state(n);
    ComplexMatrix rho0 = psi0 * psi0.adjoint();
    StateVector target = cluster_product_form(n);
    ComplexMatrix sigma = target * target.adjoint();

    // The first revival sits at g t = pi; integrating a little past it is
    // enough to capture the maximum.
    const double t_stop = 1.5 * kPi / config.g;
    double best = 0.0;
    integrate_master_observe(rho0, h, collapse, t_stop, config.dt, config.sample_every,
                             [&](double, const ComplexMatrix& rho) {
                                 best = std::max(best, fidelity_mixed(rho, sigma));
                             });
    return best;
}

double calibrate_kappa(double target_first_peak, const ExperimentConfig& config) {
    if (!(target_first_peak > 0.0 && target_first_peak < 1.0))
        throw ConfigError("calibration target must lie in (0, 1)");

    double lo = 1e-3, hi = 1e3;
    double f_lo = combined_first_peak(config, lo);
    double f_hi = combined_first_peak(config, hi);
    if (target_first_peak > f_lo || target_first_peak < f_hi)
        throw TargetUnreachable("first-peak target outside the achievable range [" +
                                std::to_string(f_hi) + ", " + std::to_string(f_lo) + "]");

    // Peak fidelity falls monotonically with kappa; kappa spans six decades,
    // so bisect geometrically.
    double mid = std::sqrt(lo * hi);
    for (int iter = 0; iter < 60; ++iter) {
        mid = std::sqrt(lo * hi);
        double f_mid = combined_first_peak(config, mid);
        if (std::abs(f_mid - target_first_peak) <= 5e-3) return mid;
        (f_mid > target_first_peak ? lo : hi) = mid;
    }
    throw TargetUnreachable("calibration bisection did not converge");
}

}  // namespace clustersim

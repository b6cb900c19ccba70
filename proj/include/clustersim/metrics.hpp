#pragma once

#include <cstddef>
#include <vector>

#include "clustersim/config.hpp"
#include "clustersim/tensor_algebra.hpp"

namespace clustersim {

/// |<a|b>|^2 for normalized pure states.
double fidelity_pure(const StateVector& a, const StateVector& b);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Reduces to
/// fidelity_pure on rank-1 inputs.
double fidelity_mixed(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Sum of |rho_ij| over i != j.
double l1_coherence(const ComplexMatrix& rho);

struct PeakReport {
    std::vector<double> peak_times;
    std::vector<double> peak_values;
    std::vector<double> expected_times;  // nearest odd multiple of pi per peak
};

/// Interior strict local maxima of a sampled series (ties go to the earliest
/// index), each matched to the nearest odd multiple of pi. Throws NoPeaks on
/// monotone or constant series.
PeakReport find_peaks(const std::vector<double>& times, const std::vector<double>& values);

/// Bisects kappa in [1e-3, 1e3] so the combined-scenario first revival peak
/// hits `target_first_peak` within 5e-3. The peak fidelity is monotone
/// decreasing in kappa; TargetUnreachable when the target lies outside the
/// bracket's range.
double calibrate_kappa(double target_first_peak, const ExperimentConfig& config);

/// First-peak fidelity of the combined-noise scenario at a given kappa;
/// exposed because calibration and the acceptance suite both need it.
double combined_first_peak(const ExperimentConfig& config, double kappa);

}  // namespace clustersim

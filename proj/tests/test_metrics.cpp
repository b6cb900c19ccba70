#include <doctest.h>

#include <numbers>
#include <random>

#include "clustersim/cluster_state.hpp"
#include "clustersim/evolution.hpp"
#include "clustersim/metrics.hpp"

using namespace clustersim;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937 rng(1331);

StateVector random_state(Eigen::Index dim) {
    std::normal_distribution<double> dist;
    StateVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(dist(rng), dist(rng));
    return v / v.norm();
}

ComplexMatrix random_density(Eigen::Index dim, int rank) {
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    std::uniform_real_distribution<double> w(0.1, 1.0);
    for (int k = 0; k < rank; ++k) {
        StateVector psi = random_state(dim);
        rho += w(rng) * (psi * psi.adjoint());
    }
    return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("fidelity_pure basics") {
    StateVector psi = random_state(8);
    CHECK(fidelity_pure(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));

    StateVector e0 = StateVector::Zero(2), e1 = StateVector::Zero(2);
    e0[0] = 1;
    e1[1] = 1;
    CHECK(fidelity_pure(e0, e1) == 0.0);

    CHECK(fidelity_pure(cluster_standard(4), initial_state(4)) ==
          doctest::Approx(1.0 / 16).epsilon(1e-12));

    StateVector phi = random_state(8);
    CHECK(fidelity_pure(psi, phi) == doctest::Approx(fidelity_pure(phi, psi)).epsilon(1e-12));
    CHECK_THROWS_AS(fidelity_pure(e0, psi), DimensionMismatch);
}

TEST_CASE("fidelity_mixed self, rank-1 reduction, and closed form") {
    ComplexMatrix rho = random_density(8, 3);
    CHECK(fidelity_mixed(rho, rho) == doctest::Approx(1.0).epsilon(1e-8));

    StateVector psi = random_state(4), phi = random_state(4);
    ComplexMatrix p1 = psi * psi.adjoint(), p2 = phi * phi.adjoint();
    CHECK(fidelity_mixed(p1, p2) ==
          doctest::Approx(fidelity_pure(psi, phi)).epsilon(1e-8));

    // F(I/2, |0><0|) = 1/2
    ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
    ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    CHECK(fidelity_mixed(half, ground) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("fidelity_mixed symmetry and bounds") {
    for (int k = 0; k < 5; ++k) {
        ComplexMatrix rho = random_density(8, 2);
        ComplexMatrix sigma = random_density(8, 3);
        double f1 = fidelity_mixed(rho, sigma);
        double f2 = fidelity_mixed(sigma, rho);
        CHECK(std::abs(f1 - f2) <= 1e-8);
        CHECK(f1 >= 0.0);
        CHECK(f1 <= 1.0);
    }
}

TEST_CASE("near-unit fidelity implies nearby states") {
    // fidelity loss is first order in mass escaping the support, so an
    // epsilon mixture gives F ~ 1 - epsilon
    ComplexMatrix rho = random_density(8, 2);
    ComplexMatrix delta = random_density(8, 1);
    ComplexMatrix sigma = rho + 1e-9 * (delta - rho);
    sigma /= sigma.trace().real();
    double f = fidelity_mixed(rho, sigma);
    CHECK(f >= 1.0 - 1e-8);
    CHECK((rho - sigma).norm() <= 1e-3);

    CHECK(fidelity_mixed(rho, rho) >= 1.0 - 1e-8);
}

TEST_CASE("l1_coherence closed forms") {
    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = diag(1, 1) = 0.5;
    CHECK(l1_coherence(diag) == 0.0);

    ComplexMatrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK(l1_coherence(plus) == doctest::Approx(1.0).epsilon(1e-14));

    StateVector c4 = cluster_standard(4);
    ComplexMatrix rho = c4 * c4.adjoint();
    // entrywise oracle: 240 off-diagonal entries of magnitude 1/16
    double direct = 0.0;
    for (Eigen::Index i = 0; i < 16; ++i)
        for (Eigen::Index j = 0; j < 16; ++j)
            if (i != j) direct += std::abs(rho(i, j));
    CHECK(direct == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(l1_coherence(rho) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("find_peaks on the ideal revival series") {
    // pi-aligned grid: revivals land on samples
    const std::size_t n = 4;
    StateVector psi0 = initial_state(n);
    StateVector target = cluster_product_form(n);
    std::vector<double> times, values;
    const double spacing = kPi / 100.0;
    for (int k = 0; k <= 800; ++k) {
        times.push_back(k * spacing);
        values.push_back(fidelity_pure(target, evolve_pure(psi0, n, times.back())));
    }
    PeakReport report = find_peaks(times, values);
    REQUIRE(report.peak_times.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        double expected = (2.0 * k + 1.0) * kPi;
        CHECK(report.expected_times[k] == doctest::Approx(expected).epsilon(1e-12));
        CHECK(std::abs(report.peak_times[k] - expected) <= 2.0 * spacing);
        CHECK(report.peak_values[k] >= 1.0 - 1e-9);
    }
}

TEST_CASE("find_peaks edge cases") {
    std::vector<double> t{0, 1, 2, 3};
    CHECK_THROWS_AS(find_peaks(t, {1, 1, 1, 1}), NoPeaks);
    CHECK_THROWS_AS(find_peaks(t, {0, 1, 2, 3}), NoPeaks);

    PeakReport tri = find_peaks({0, 1, 2}, {0, 1, 0});
    REQUIRE(tri.peak_times.size() == 1);
    CHECK(tri.peak_times[0] == 1.0);
    CHECK(tri.peak_values[0] == 1.0);

    // plateau counts once, at its earliest index
    PeakReport flat = find_peaks({0, 1, 2, 3, 4}, {0, 1, 1, 1, 0});
    REQUIRE(flat.peak_times.size() == 1);
    CHECK(flat.peak_times[0] == 1.0);
}

TEST_CASE("calibration rejects unreachable or invalid targets") {
    ExperimentConfig config;
    CHECK_THROWS_AS(calibrate_kappa(1.5, config), ConfigError);
    CHECK_THROWS_AS(calibrate_kappa(0.9999999, config), TargetUnreachable);
}

TEST_CASE("combined first peak falls with kappa") {
    ExperimentConfig config;
    double slow = combined_first_peak(config, 0.5);
    double fast = combined_first_peak(config, 50.0);
    CHECK(slow > fast);
    CHECK(slow > 0.95);
    CHECK(fast < 0.65);
}

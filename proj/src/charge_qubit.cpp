#include "clustersim/charge_qubit.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace clustersim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_flux(double flux) {
    if (!(flux >= 0.0 && flux <= 0.5))
        throw FluxOutOfRange("flux must lie in [0, 1/2], got " + std::to_string(flux));
}

// Bisection for a function known to be strictly increasing on [0, 1/2].
double bisect_increasing(const std::function<double(double)>& f, double abs_tol) {
    double lo = 0.0, hi = 0.5;
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw NoBracket("tuning condition does not change sign on [0, 1/2]");
    double mid = 0.25;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (std::abs(fm) <= abs_tol && hi - lo < 1e-14) break;
        (fm < 0.0 ? lo : hi) = mid;
    }
    return mid;
}

}  // namespace

double epsilon(const QubitParams& q) {
    return 0.5 * q.charging_energy * (q.offset_charge - 1.0);
}

double effective_josephson(const QubitParams& q) {
    check_flux(q.flux);
    return q.max_josephson * std::cos(kPi * q.flux);
}

double coupling_strength(const QubitParams& qi, const QubitParams& qj, double l_j) {
    check_flux(qi.flux);
    check_flux(qj.flux);
    return l_j * kPi * kPi * qi.max_josephson * qj.max_josephson * std::sin(kPi * qi.flux) *
           std::sin(kPi * qj.flux);
}

double tune_flux(double e_j, double l_j, bool interior) {
    if (!(e_j > 0.0) || !(l_j > 0.0))
        throw NoBracket("tune_flux requires positive E_J and L_J");
    const double target_scale = interior ? 0.5 : 1.0;
    auto diff = [&](double phi) {
        double s = std::sin(kPi * phi);
        return l_j * kPi * kPi * e_j * e_j * s * s -
               target_scale * e_j * std::cos(kPi * phi);
    };
    return bisect_increasing(diff, 1e-12 * e_j);
}

ChainParams make_tuned_chain(std::size_t n, double e_c, double e_j, double l_j) {
    if (n < 2) throw ConfigError("chain needs at least 2 qubits");
    if (!(e_j > 0.0) || !(l_j > 0.0) || !(e_c > 0.0))
        throw ConfigError("chain parameters must be positive");

    ChainParams chain;
    chain.coupler_inductance = l_j;
    chain.qubits.assign(n, QubitParams{e_c, e_j, 1.0, 0.0});

    if (n == 2) {
        double phi = tune_flux(e_j, l_j, /*interior=*/false);
        chain.qubits[0].flux = phi;
        chain.qubits[1].flux = phi;
        chain.rate_g = 4.0 * coupling_strength(chain.qubits[0], chain.qubits[1], l_j);
        return chain;
    }

    const double phi_int = tune_flux(e_j, l_j, /*interior=*/true);
    const double g = 2.0 * e_j * std::cos(kPi * phi_int);

    // Boundary flux from E_J1 cos = Lambda_{1,2}; the boundary E_J cancels.
    const double sin_int = std::sin(kPi * phi_int);
    auto diff = [&](double phi) {
        return l_j * kPi * kPi * e_j * std::sin(kPi * phi) * sin_int - std::cos(kPi * phi);
    };
    const double phi_bnd = bisect_increasing(diff, 1e-14);
    const double e_bnd = g / (4.0 * std::cos(kPi * phi_bnd));

    for (std::size_t i = 0; i < n; ++i) {
        bool boundary = (i == 0 || i + 1 == n);
        chain.qubits[i].flux = boundary ? phi_bnd : phi_int;
        chain.qubits[i].max_josephson = boundary ? e_bnd : e_j;
    }
    chain.rate_g = g;
    return chain;
}

double derive_g(const ChainParams& chain) {
    const std::size_t n = chain.size();
    if (n < 2) throw ConfigError("chain needs at least 2 qubits");

    double g_ref = 0.0;
    auto merge = [&](double candidate, const char* what) {
        if (!(candidate > 0.0))
            throw InconsistentTuning(std::string("nonpositive g candidate from ") + what);
        if (g_ref == 0.0) {
            g_ref = candidate;
        } else if (std::abs(candidate - g_ref) > 1e-9 * std::abs(g_ref)) {
            throw InconsistentTuning(std::string("tuning conditions disagree at ") + what);
        }
    };

    for (std::size_t i = 0; i + 1 < n; ++i)
        merge(4.0 * coupling_strength(chain.qubits[i], chain.qubits[i + 1],
                                      chain.coupler_inductance),
              "pair coupling");
    for (std::size_t i = 0; i < n; ++i) {
        bool boundary = (i == 0 || i + 1 == n);
        merge((boundary ? 4.0 : 2.0) * effective_josephson(chain.qubits[i]),
              boundary ? "boundary qubit" : "interior qubit");
    }
    return g_ref;
}

}  // namespace clustersim

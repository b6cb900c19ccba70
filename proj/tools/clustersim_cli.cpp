#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "clustersim/cluster_state.hpp"
#include "clustersim/evolution.hpp"
#include "clustersim/experiment.hpp"
#include "clustersim/metrics.hpp"

namespace {

using namespace clustersim;

struct CliFlags {
    std::string config_path;
    std::string scenario;
    std::string out_dir;
    std::size_t n_qubits = 0;
    double t_end = 0, dt = 0, kappa = 0;
    bool svg = false;

    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_t_end = nullptr;
    CLI::Option* opt_dt = nullptr;
    CLI::Option* opt_kappa = nullptr;
    CLI::Option* opt_out = nullptr;
};

void add_common_flags(CLI::App* cmd, CliFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key=value config file");
    flags.opt_n = cmd->add_option("--n-qubits", flags.n_qubits, "chain length (2..10)");
    flags.opt_t_end = cmd->add_option("--t-end", flags.t_end, "evolution window (sim units)");
    flags.opt_dt = cmd->add_option("--dt", flags.dt, "integrator step");
    flags.opt_kappa = cmd->add_option("--kappa", flags.kappa, "microseconds per sim unit");
    flags.opt_out = cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_flag("--svg", flags.svg, "also emit SVG plots");
}

ExperimentConfig build_config(const CliFlags& flags) {
    ExperimentConfig config;
    if (!flags.config_path.empty()) config = parse_config_file(flags.config_path);
    if (flags.opt_n->count()) config.n_qubits = flags.n_qubits;
    if (flags.opt_t_end->count()) config.t_end = flags.t_end;
    if (flags.opt_dt->count()) config.dt = flags.dt;
    if (flags.opt_kappa->count()) config.kappa = flags.kappa;
    if (flags.opt_out->count()) config.output_dir = flags.out_dir;
    if (flags.svg) config.emit_svg = true;
    if (!flags.scenario.empty()) config.scenario = scenario_from_string(flags.scenario);
    config.validate();
    return config;
}

void print_result(const ScenarioResult& r) {
    if (!r.error.empty()) {
        std::cout << r.scenario << ": ERROR " << r.error
                  << (r.partial_output ? " (partial CSV written)" : "") << "\n";
        return;
    }
    std::cout << r.scenario << ":";
    for (const auto& p : r.csv_paths) std::cout << " " << p;
    std::cout << "\n";
    if (r.scenario == "coherence") {
        auto show = [](double h) {
            return h < 0 ? std::string("not reached") : std::to_string(h) + " units";
        };
        std::cout << "  coherence half-life: combined " << show(r.half_life_combined)
                  << ", t1-only " << show(r.half_life_t1) << "\n";
        return;
    }
    std::cout << "  peaks:";
    if (r.peaks.peak_times.empty()) std::cout << " none in window";
    for (std::size_t k = 0; k < r.peaks.peak_times.size(); ++k) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), " t=%.4f F=%.6f", r.peaks.peak_times[k],
                      r.peaks.peak_values[k]);
        std::cout << buf;
    }
    auto scalar = [](double v) {
        if (std::isnan(v)) return std::string("n/a");
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    std::cout << "\n  troughs: F(0)=" << scalar(r.trough_start)
              << " F(2pi)=" << scalar(r.trough_revival) << "\n";
}

int cmd_run(const CliFlags& flags) {
    ExperimentConfig config = build_config(flags);
    if (config.scenario == Scenario::all) {
        for (const auto& r : run_all(config)) print_result(r);
        return 0;
    }
    ScenarioResult r = run_scenario(config);
    print_result(r);
    return r.error.empty() ? 0 : 2;
}

int cmd_run_all(const CliFlags& flags) {
    ExperimentConfig config = build_config(flags);
    bool any_error = false;
    for (const auto& r : run_all(config)) {
        print_result(r);
        any_error = any_error || !r.error.empty();
    }
    std::cout << "summary: " << config.output_dir << "/summary.txt\n";
    return any_error ? 2 : 0;
}

int cmd_calibrate(const CliFlags& flags, double target) {
    ExperimentConfig config = build_config(flags);
    double kappa = calibrate_kappa(target, config);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", kappa);
    std::cout << "calibrated kappa = " << buf << " (combined first peak ~ " << target << ")\n";

    std::filesystem::path dir(config.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config.output_dir + "'");
    auto path = dir / "calibrated_kappa.conf";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "# drop-in config fragment from `clustersim calibrate`\n";
    out << "kappa=" << buf << "\n";
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int cmd_verify(const CliFlags& flags) {
    ExperimentConfig config = build_config(flags);
    const std::size_t n_max = std::max<std::size_t>(6, config.n_qubits);
    bool all_ok = true;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
        all_ok = all_ok && ok;
    };

    for (std::size_t n = 2; n <= n_max; ++n) {
        StateVector evolved = evolve_pure(initial_state(n), n, std::numbers::pi);
        StateVector product = cluster_product_form(n);
        StateVector mapped = hadamard_map(cluster_standard(n));

        double f_ep = fidelity_pure(evolved, product);
        double f_em = fidelity_pure(evolved, mapped);
        double f_pm = fidelity_pure(product, mapped);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "n=%zu equivalence triangle (1-F: %0.2e, %0.2e, %0.2e)", n,
                      1 - f_ep, 1 - f_em, 1 - f_pm);
        report(f_ep > 1 - 1e-10 && f_em > 1 - 1e-10 && f_pm > 1 - 1e-10, buf);

        auto check = verify_stabilizers(cluster_standard(n), stabilizer_set(n));
        std::snprintf(buf, sizeof(buf), "n=%zu stabilizers (worst %0.2e at %s)", n,
                      check.worst_residual, check.worst_label.c_str());
        report(check.pass, buf);
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear cluster-state generation on a charge-qubit chain"};
    app.require_subcommand(1);

    CliFlags run_flags, all_flags, cal_flags, verify_flags;
    double target = 0.85;

    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("--scenario", run_flags.scenario,
                    "ideal | t1 | t2 | combined | coherence | all")
        ->required();
    add_common_flags(run, run_flags);

    auto* run_all_cmd = app.add_subcommand("run-all", "run the five scenarios");
    add_common_flags(run_all_cmd, all_flags);

    auto* calibrate = app.add_subcommand(
        "calibrate", "find kappa putting the combined first peak at the target");
    calibrate->add_option("--target", target, "first-peak fidelity target (0,1)");
    add_common_flags(calibrate, cal_flags);

    auto* verify = app.add_subcommand(
        "verify", "equivalence-triangle and stabilizer self-checks");
    add_common_flags(verify, verify_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags);
        if (run_all_cmd->parsed()) return cmd_run_all(all_flags);
        if (calibrate->parsed()) return cmd_calibrate(cal_flags, target);
        if (verify->parsed()) return cmd_verify(verify_flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

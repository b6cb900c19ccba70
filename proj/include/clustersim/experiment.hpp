#pragma once

#include <limits>
#include <string>
#include <vector>

#include "clustersim/config.hpp"
#include "clustersim/metrics.hpp"

namespace clustersim {

/// Line-oriented key=value config, '#' comments, unknown keys rejected.
/// Keys mirror the ExperimentConfig fields: n_qubits, g, t_end, dt,
/// sample_every, t1_us, t2_us, kappa, scenario, output_dir, emit_svg.
ExperimentConfig parse_config_file(const std::string& path);

/// Applies one key=value override (shared by the file parser and CLI flags).
/// Throws UnknownKey / MalformedValue; `where` goes into the message.
void apply_config_override(ExperimentConfig& config, const std::string& key,
                           const std::string& value, const std::string& where);

struct ScenarioResult {
    std::string scenario;
    std::vector<std::string> csv_paths;
    PeakReport peaks;

    // NaN marks a quantity the run's window never reached.
    double first_peak_fidelity = std::numeric_limits<double>::quiet_NaN();
    double fourth_peak_fidelity = std::numeric_limits<double>::quiet_NaN();
    double trough_start = std::numeric_limits<double>::quiet_NaN();    // F(0)
    double trough_revival = std::numeric_limits<double>::quiet_NaN();  // F(2 pi / g)

    // Coherence scenario: time (since projection) at which the normalized
    // l1 coherence first reaches 1/2, per emitted series. Negative when the
    // series never gets there inside the 30-unit hold.
    double half_life_combined = -1.0;
    double half_life_t1 = -1.0;

    bool partial_output = false;
    std::string error;  // empty on success (used by run_all aggregation)
};

/// Runs one scenario and writes its CSV (and optional SVG) into
/// config.output_dir:
///   ideal              fidelity of the pure evolved state vs the target
///   t1 / t2 / combined Lindblad evolution, Uhlmann fidelity vs the target
///   coherence          drive to t = pi, switch H off, track normalized
///                      l1 coherence for 30 units (combined and t1-only)
ScenarioResult run_scenario(const ExperimentConfig& config);

/// Runs the five scenarios with shared parameters, aggregating failures
/// without aborting the rest, and writes summary.txt.
std::vector<ScenarioResult> run_all(const ExperimentConfig& config);

/// Writes "t,value" rows at full precision; byte-deterministic.
void emit_csv(const std::string& path, const std::vector<double>& times,
              const std::vector<double>& values);

struct Series {
    std::string label;
    std::vector<double> times;
    std::vector<double> values;
};

/// Standalone SVG with axes, pi-multiple time ticks, one polyline per
/// series, and a legend.
void emit_svg(const std::string& path, const std::vector<Series>& series);

}  // namespace clustersim

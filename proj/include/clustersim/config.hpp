#pragma once

#include <cstddef>
#include <numbers>
#include <string>

#include "clustersim/errors.hpp"

namespace clustersim {

enum class Scenario { ideal, t1, t2, combined, coherence, all };

Scenario scenario_from_string(const std::string& name);  // MalformedValue
std::string to_string(Scenario scenario);

struct ExperimentConfig {
    std::size_t n_qubits = 4;
    double g = 1.0;
    double t_end = 8.0 * std::numbers::pi;
    double dt = 1e-3;
    std::size_t sample_every = 10;
    double t1_us = 262.69;
    double t2_us = 176.67;
    double kappa = 1.0;
    Scenario scenario = Scenario::all;
    std::string output_dir = "out";
    bool emit_svg = false;

    void validate() const;  // throws ConfigError
};

}  // namespace clustersim

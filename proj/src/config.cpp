#include "clustersim/config.hpp"

#include <fstream>
#include <map>

#include "clustersim/experiment.hpp"

namespace clustersim {

Scenario scenario_from_string(const std::string& name) {
    static const std::map<std::string, Scenario> table = {
        {"ideal", Scenario::ideal},       {"t1", Scenario::t1},
        {"t2", Scenario::t2},             {"combined", Scenario::combined},
        {"coherence", Scenario::coherence}, {"all", Scenario::all},
    };
    auto it = table.find(name);
    if (it == table.end()) throw MalformedValue("unknown scenario '" + name + "'");
    return it->second;
}

std::string to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::ideal: return "ideal";
        case Scenario::t1: return "t1";
        case Scenario::t2: return "t2";
        case Scenario::combined: return "combined";
        case Scenario::coherence: return "coherence";
        case Scenario::all: return "all";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (n_qubits < 2 || n_qubits > 10)
        throw ConfigError("n_qubits must lie in [2, 10]");
    if (!(dt > 0.0 && dt <= 0.1)) throw ConfigError("dt must lie in (0, 0.1]");
    if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
    if (!(g > 0.0)) throw ConfigError("g must be positive");
    if (sample_every == 0) throw ConfigError("sample_every must be at least 1");
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) throw ConfigError("T1 and T2 must be positive");
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
}

namespace {

double parse_double(const std::string& value, const std::string& where) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw MalformedValue("");
        return v;
    } catch (const std::exception&) {
        throw MalformedValue("malformed number '" + value + "' " + where);
    }
}

std::size_t parse_count(const std::string& value, const std::string& where) {
    try {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size() || v < 0) throw MalformedValue("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw MalformedValue("malformed count '" + value + "' " + where);
    }
}

bool parse_bool(const std::string& value, const std::string& where) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw MalformedValue("malformed flag '" + value + "' " + where);
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

}  // namespace

void apply_config_override(ExperimentConfig& config, const std::string& key,
                           const std::string& value, const std::string& where) {
    if (key == "n_qubits") config.n_qubits = parse_count(value, where);
    else if (key == "g") config.g = parse_double(value, where);
    else if (key == "t_end") config.t_end = parse_double(value, where);
    else if (key == "dt") config.dt = parse_double(value, where);
    else if (key == "sample_every") config.sample_every = parse_count(value, where);
    else if (key == "t1_us") config.t1_us = parse_double(value, where);
    else if (key == "t2_us") config.t2_us = parse_double(value, where);
    else if (key == "kappa") config.kappa = parse_double(value, where);
    else if (key == "scenario") {
        try {
            config.scenario = scenario_from_string(value);
        } catch (const MalformedValue&) {
            throw MalformedValue("unknown scenario '" + value + "' " + where);
        }
    } else if (key == "output_dir") config.output_dir = value;
    else if (key == "emit_svg") config.emit_svg = parse_bool(value, where);
    else throw UnknownKey("unknown key '" + key + "' " + where);
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");

    ExperimentConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto eq = stripped.find('=');
        const std::string where = "at " + path + ":" + std::to_string(line_no);
        if (eq == std::string::npos)
            throw MalformedValue("expected key=value " + where);
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw MalformedValue("empty key " + where);
        apply_config_override(config, key, value, where);
    }
    return config;
}

}  // namespace clustersim

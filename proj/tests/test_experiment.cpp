#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "clustersim/experiment.hpp"

using namespace clustersim;

namespace {

constexpr double kPi = std::numbers::pi;

std::filesystem::path temp_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("clustersim_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("config parsing: defaults, overrides, comments") {
    auto dir = temp_dir("config");

    ExperimentConfig defaults = parse_config_file(write_file(dir / "empty.conf", ""));
    CHECK(defaults.n_qubits == 4);
    CHECK(defaults.g == 1.0);
    CHECK(defaults.t_end == doctest::Approx(8.0 * kPi));
    CHECK(defaults.dt == 1e-3);
    CHECK(defaults.sample_every == 10);
    CHECK(defaults.t1_us == doctest::Approx(262.69));
    CHECK(defaults.t2_us == doctest::Approx(176.67));
    CHECK(defaults.kappa == 1.0);
    CHECK(defaults.scenario == Scenario::all);
    CHECK_FALSE(defaults.emit_svg);

    ExperimentConfig overridden = parse_config_file(write_file(
        dir / "o.conf", "# comment\n\nn_qubits=6\nscenario=t2\nemit_svg=true\nkappa=2.5\n"));
    CHECK(overridden.n_qubits == 6);
    CHECK(overridden.scenario == Scenario::t2);
    CHECK(overridden.emit_svg);
    CHECK(overridden.kappa == 2.5);
}

TEST_CASE("config parsing: malformed input carries the line number") {
    auto dir = temp_dir("config_bad");
    try {
        parse_config_file(write_file(dir / "bad.conf", "n_qubits=4\ndt=abc\n"));
        FAIL("expected MalformedValue");
    } catch (const MalformedValue& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_file(write_file(dir / "unknown.conf", "qubits=4\n")),
                    UnknownKey);
    CHECK_THROWS_AS(parse_config_file(write_file(dir / "noeq.conf", "n_qubits 4\n")),
                    MalformedValue);
    CHECK_THROWS_AS(parse_config_file((dir / "missing.conf").string()), IoError);
}

TEST_CASE("config validation rejects out-of-range values") {
    ExperimentConfig config;
    config.dt = 0.0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.dt = 1e-3;
    config.n_qubits = 1;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.n_qubits = 11;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.n_qubits = 4;
    config.t_end = -1.0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.t_end = 1.0;
    CHECK_NOTHROW(config.validate());

    config.dt = 0.0;
    CHECK_THROWS_AS(run_scenario(config), ConfigError);
}

TEST_CASE("emit_csv row count, termination, determinism") {
    auto dir = temp_dir("csv");
    std::vector<double> t{0, 0.5, 1.0}, v{1, 2, 3};
    std::string path = (dir / "small.csv").string();
    emit_csv(path, t, v);
    std::string body = slurp(path);
    CHECK(count_lines(body) == 4);
    CHECK(body.back() == '\n');
    CHECK(body.substr(0, 8) == "t,value\n");

    std::string again = (dir / "small2.csv").string();
    emit_csv(again, t, v);
    CHECK(slurp(again) == body);

    CHECK_THROWS_AS(emit_csv((dir / "x.csv").string(), {}, {}), IoError);
}

TEST_CASE("ideal scenario: row contract and revival row") {
    auto dir = temp_dir("ideal");
    ExperimentConfig config;
    config.scenario = Scenario::ideal;
    config.output_dir = dir.string();

    ScenarioResult result = run_scenario(config);
    REQUIRE(result.csv_paths.size() == 1);
    std::string body = slurp(result.csv_paths[0]);

    const auto expected_rows =
        static_cast<std::size_t>(std::floor(config.t_end / (config.dt * config.sample_every))) + 1;
    CHECK(count_lines(body) == expected_rows + 1);  // + header

    // the row nearest t = pi carries the full revival
    std::istringstream in(body);
    std::string line;
    std::getline(in, line);
    double best_dt = 1e9, best_value = 0.0;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        double t = std::stod(line.substr(0, comma));
        double value = std::stod(line.substr(comma + 1));
        if (std::abs(t - kPi) < best_dt) {
            best_dt = std::abs(t - kPi);
            best_value = value;
        }
    }
    CHECK(best_value >= 1.0 - 1e-9);

    CHECK(result.peaks.peak_times.size() == 4);
    CHECK(result.first_peak_fidelity >= 1.0 - 1e-9);
    CHECK(result.fourth_peak_fidelity >= 1.0 - 1e-9);
    CHECK(result.trough_start == doctest::Approx(1.0 / 16).epsilon(1e-9));
    CHECK(result.trough_revival == doctest::Approx(1.0 / 16).epsilon(1e-9));
}

TEST_CASE("small noisy scenario keeps the scenario ordering") {
    auto dir = temp_dir("noisy");
    ExperimentConfig config;
    config.n_qubits = 2;
    config.t_end = 1.2 * kPi;
    config.kappa = 20.0;
    config.output_dir = dir.string();

    config.scenario = Scenario::ideal;
    ScenarioResult ideal = run_scenario(config);
    config.scenario = Scenario::t1;
    ScenarioResult t1 = run_scenario(config);
    config.scenario = Scenario::combined;
    ScenarioResult combined = run_scenario(config);

    CHECK(ideal.first_peak_fidelity >= 1.0 - 1e-9);
    CHECK(t1.first_peak_fidelity < ideal.first_peak_fidelity);
    CHECK(combined.first_peak_fidelity < t1.first_peak_fidelity);
    CHECK(std::filesystem::exists(dir / "t1.csv"));
    CHECK(std::filesystem::exists(dir / "combined.csv"));
}

TEST_CASE("noisy CSV reruns are byte-identical") {
    auto dir = temp_dir("determinism");
    ExperimentConfig config;
    config.n_qubits = 2;
    config.t_end = 0.8;
    config.kappa = 5.0;
    config.scenario = Scenario::combined;

    config.output_dir = (dir / "a").string();
    run_scenario(config);
    config.output_dir = (dir / "b").string();
    run_scenario(config);
    CHECK(slurp((dir / "a/combined.csv").string()) == slurp((dir / "b/combined.csv").string()));
}

TEST_CASE("coherence scenario emits two normalized series") {
    auto dir = temp_dir("coherence");
    ExperimentConfig config;
    config.n_qubits = 2;
    config.kappa = 30.0;  // strong noise keeps the half-life inside the window
    config.scenario = Scenario::coherence;
    config.output_dir = dir.string();

    ScenarioResult result = run_scenario(config);
    REQUIRE(result.csv_paths.size() == 2);
    std::string combined = slurp(result.csv_paths[0]);
    CHECK(combined.substr(0, 8) == "t,value\n");
    // starts at t=0 with normalized coherence 1
    std::istringstream in(combined);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(first.substr(0, 2) == "0,");
    CHECK(std::stod(first.substr(2)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(result.half_life_combined > 0.0);
    CHECK(result.half_life_t1 >= result.half_life_combined);
}

TEST_CASE("run_all emits five records and six CSVs") {
    auto dir = temp_dir("runall");
    ExperimentConfig config;
    config.n_qubits = 2;
    config.t_end = 1.2 * kPi;
    config.kappa = 10.0;
    config.output_dir = dir.string();

    auto results = run_all(config);
    REQUIRE(results.size() == 5);
    std::size_t csvs = 0;
    for (const auto& r : results) {
        CHECK(r.error.empty());
        csvs += r.csv_paths.size();
    }
    CHECK(csvs == 6);
    CHECK(std::filesystem::exists(dir / "summary.txt"));
}

TEST_CASE("svg output structure") {
    auto dir = temp_dir("svg");
    Series one{"ideal", {0, 1, 2}, {0.1, 0.9, 0.2}};
    Series two{"noisy", {0, 1, 2}, {0.1, 0.7, 0.15}};

    std::string single = (dir / "one.svg").string();
    emit_svg(single, {one});
    std::string body = slurp(single);
    CHECK(count_lines(body) > 0);
    std::size_t polylines = 0;
    for (std::size_t at = body.find("<polyline"); at != std::string::npos;
         at = body.find("<polyline", at + 1))
        ++polylines;
    CHECK(polylines == 1);

    std::string both = (dir / "two.svg").string();
    emit_svg(both, {one, two});
    body = slurp(both);
    polylines = 0;
    for (std::size_t at = body.find("<polyline"); at != std::string::npos;
         at = body.find("<polyline", at + 1))
        ++polylines;
    CHECK(polylines == 2);
    CHECK(body.find(">ideal<") != std::string::npos);
    CHECK(body.find(">noisy<") != std::string::npos);

    CHECK_THROWS_AS(emit_svg((dir / "bad.svg").string(), {}), ConfigError);
    CHECK_FALSE(std::filesystem::exists(dir / "bad.svg"));
}

TEST_CASE("scenario=all through run_scenario is rejected") {
    ExperimentConfig config;
    config.scenario = Scenario::all;
    CHECK_THROWS_AS(run_scenario(config), ConfigError);
}

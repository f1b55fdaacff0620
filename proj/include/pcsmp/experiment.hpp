// Copyright 2026 The pcsmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcsmp/benchmarks.hpp"
#include "pcsmp/checks.hpp"
#include "pcsmp/errors.hpp"
#include "pcsmp/qpu.hpp"

namespace pcs {

enum class Mode { Mitigate, Characterize, Calibrate, All };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

struct BenchmarkSpec {
    enum class Kind { GhzMirror, Toffoli, Custom };
    Kind kind = Kind::GhzMirror;
    std::size_t width = 8;
    std::string input_bits = "110";
    std::string circuit_path;  // Custom only; resolved against the config's directory

    friend bool operator==(const BenchmarkSpec&, const BenchmarkSpec&) = default;
};

struct CheckSpec {
    std::string left;
    std::string right;

    friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

struct QpuSpec {
    enum class Kind { LinearSweep, Rates };
    Kind kind = Kind::LinearSweep;
    std::size_t regions = 60;
    std::size_t qubits_per_region = 10;
    double p_min = 0.0005;
    double p_max = 0.03;
    std::vector<double> rates;
    std::optional<GridShape> grid;
    std::optional<std::uint64_t> permutation_seed;

    friend bool operator==(const QpuSpec&, const QpuSpec&) = default;
};

struct CalibrationSpec {
    std::vector<double> p_grid;
    std::uint64_t shots = 0;

    friend bool operator==(const CalibrationSpec&, const CalibrationSpec&) = default;
};

struct ExperimentConfig {
    BenchmarkSpec benchmark;
    bool auto_edge = true;
    std::vector<CheckSpec> checks;  // used when auto_edge is false
    QpuSpec qpu;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    std::string output_dir;
    Mode mode = Mode::All;
    std::size_t workers = 1;
    CalibrationSpec calibration;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Every semantic problem found in a config, not just the first.
class ConfigValidationError : public ConfigError {
public:
    explicit ConfigValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Parses and checks a JSON experiment config. Relative file references are
// resolved against base_dir. Malformed JSON raises ConfigError with the line
// and column; semantic problems raise ConfigValidationError listing all of
// them.
ExperimentConfig validate_config(std::string_view raw, const std::filesystem::path& base_dir = ".");

nlohmann::json config_to_json(const ExperimentConfig& config);

Benchmark resolve_benchmark(const BenchmarkSpec& spec);
QpuModel resolve_qpu(const QpuSpec& spec);
std::vector<CheckPair> resolve_checks(const ExperimentConfig& config, const Circuit& payload);

struct ExperimentReport {
    std::filesystem::path output_dir;
    std::vector<std::filesystem::path> files;
    std::string summary;
};

// Runs the pipeline selected by config.mode and writes its artifacts into
// output_dir (created if missing; existing files with the same names are
// replaced):
//
//   results.json           mitigate, characterize, all
//   calibration.json       characterize, calibrate, all
//   *_heatmap.csv, noise_estimates.json   characterize, all
//   summary.txt            always
//
// Every random draw derives from config.seed, so equal configs give
// byte-identical artifacts regardless of config.workers.
ExperimentReport run_experiment(const ExperimentConfig& config, const std::filesystem::path& output_dir);

}  // namespace pcs

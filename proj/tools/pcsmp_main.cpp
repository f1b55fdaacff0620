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

// Command-line driver: reads a JSON experiment config, runs it and writes the
// artifacts. Exit status 0 on success, 2 for config or usage errors, 1 for any
// failure while simulating or writing output.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pcsmp/experiment.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

fs::path fresh_subdirectory(const fs::path& root) {
    const std::string stamp = timestamp();
    fs::path dir = root / stamp;
    for (int i = 1; fs::exists(dir); ++i) {
        dir = root / fmt::format("{}-{}", stamp, i);
    }
    return dir;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pauli check sandwiching on an emulated multi-programmed QPU"};
    std::string config_path;
    std::string mode_text;
    std::uint64_t seed = 0;
    std::string out;
    std::size_t workers = 0;
    bool overwrite = false;

    app.add_option("--config", config_path, "experiment config (JSON)")->required();
    auto* mode_opt = app.add_option("--mode", mode_text, "mitigate, characterize, calibrate or all")
                         ->check(CLI::IsMember({"mitigate", "characterize", "calibrate", "all"}));
    auto* seed_opt = app.add_option("--seed", seed, "top-level RNG seed (overrides the config)");
    app.add_option("--out", out, "output directory (default: $PCSMP_OUTPUT_ROOT or ./pcsmp_runs)");
    auto* workers_opt =
        app.add_option("--workers", workers, "parallel simulation workers")->check(CLI::PositiveNumber);
    app.add_flag("--overwrite", overwrite, "write into the output directory itself instead of a new timestamped one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    pcs::ExperimentConfig config;
    try {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
            throw pcs::ConfigError(fmt::format("cannot read config {}", config_path));
        }
        std::ostringstream text;
        text << in.rdbuf();
        config = pcs::validate_config(text.str(), fs::path(config_path).parent_path());
    } catch (const pcs::ConfigValidationError& e) {
        std::cerr << "config " << config_path << " has " << e.violations().size() << " problem(s):\n";
        for (const auto& v : e.violations()) {
            std::cerr << "  " << v << '\n';
        }
        return kExitConfig;
    } catch (const pcs::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfig;
    }

    if (*mode_opt) {
        config.mode = *pcs::parse_mode(mode_text);
    }
    if (*seed_opt) {
        config.seed = seed;
    }
    if (*workers_opt) {
        config.workers = workers;
    }

    fs::path root;
    if (!out.empty()) {
        root = out;
    } else if (!config.output_dir.empty()) {
        root = config.output_dir;
    } else if (const char* env = std::getenv("PCSMP_OUTPUT_ROOT"); env && *env) {
        root = env;
    } else {
        root = "pcsmp_runs";
    }

    try {
        const fs::path dir = overwrite ? root : fresh_subdirectory(root);
        const pcs::ExperimentReport report = pcs::run_experiment(config, dir);
        std::cout << report.summary;
        std::cout << "artifacts written to " << report.output_dir.string() << '\n';
    } catch (const pcs::SimulationError& e) {
        std::cerr << "simulation failed in " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}

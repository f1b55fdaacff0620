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

#include "pcsmp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "pcsmp/calibration.hpp"
#include "pcsmp/heatmap.hpp"
#include "pcsmp/multiprogram.hpp"
#include "pcsmp/postprocess.hpp"
#include "pcsmp/sandwich.hpp"
#include "pcsmp/stats.hpp"
#include "pcsmp/trajectory.hpp"

namespace pcs {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kDefaultCalibrationPoints = 60;

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out = "invalid config:";
    for (const auto& l : lines) {
        out += "\n  ";
        out += l;
    }
    return out;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json_text(std::string_view raw, const std::string& what) {
    try {
        return json::parse(raw.begin(), raw.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(raw, e.byte);
        throw ConfigError(fmt::format("{}: malformed JSON at line {}, column {}", what, line, col));
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(fmt::format("cannot read {}", path.string()));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Collects violations while pulling typed fields out of a JSON object.
class FieldReader {
public:
    explicit FieldReader(std::vector<std::string>& violations) : v_(violations) {}

    void fail(std::string msg) { v_.push_back(std::move(msg)); }

    std::optional<std::int64_t> integer(const json& obj, const std::string& key, const std::string& path) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& f = obj.at(key);
        if (!f.is_number_integer()) {
            fail(fmt::format("{} must be an integer", path));
            return std::nullopt;
        }
        if (f.is_number_unsigned()) {
            const auto u = f.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
                fail(fmt::format("{} is out of range", path));
                return std::nullopt;
            }
        }
        return f.get<std::int64_t>();
    }

    std::optional<std::uint64_t> unsigned64(const json& obj, const std::string& key, const std::string& path) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& f = obj.at(key);
        if (f.is_number_unsigned()) {
            return f.get<std::uint64_t>();
        }
        fail(fmt::format("{} must be a non-negative integer", path));
        return std::nullopt;
    }

    std::optional<double> number(const json& obj, const std::string& key, const std::string& path) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& f = obj.at(key);
        if (!f.is_number()) {
            fail(fmt::format("{} must be a number", path));
            return std::nullopt;
        }
        return f.get<double>();
    }

    std::optional<std::string> string(const json& obj, const std::string& key, const std::string& path) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& f = obj.at(key);
        if (!f.is_string()) {
            fail(fmt::format("{} must be a string", path));
            return std::nullopt;
        }
        return f.get<std::string>();
    }

    std::optional<std::vector<double>> numbers(const json& obj, const std::string& key, const std::string& path) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& f = obj.at(key);
        if (!f.is_array()) {
            fail(fmt::format("{} must be an array of numbers", path));
            return std::nullopt;
        }
        std::vector<double> out;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!f[i].is_number()) {
                fail(fmt::format("{}[{}] must be a number", path, i));
                return std::nullopt;
            }
            out.push_back(f[i].get<double>());
        }
        return out;
    }

    void unknown_keys(const json& obj, std::initializer_list<std::string_view> known, const std::string& path) {
        for (const auto& [key, value] : obj.items()) {
            if (std::ranges::find(known, std::string_view(key)) == known.end()) {
                fail(fmt::format("{}: unknown field \"{}\"", path, key));
            }
        }
    }

private:
    std::vector<std::string>& v_;
};

bool valid_rate(double p) { return std::isfinite(p) && p >= 0.0 && p <= 0.5; }

std::vector<double> linear_grid(std::size_t n, double lo, double hi) {
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    if (n > 1) {
        grid.back() = hi;
    }
    return grid;
}

void read_benchmark(const json& j, const fs::path& base_dir, FieldReader& r, BenchmarkSpec& out, bool& ok) {
    if (!j.is_object()) {
        r.fail("benchmark must be an object");
        ok = false;
        return;
    }
    const auto type = r.string(j, "type", "benchmark.type");
    if (!type) {
        if (!j.contains("type")) {
            r.fail("benchmark.type is required");
        }
        ok = false;
        return;
    }
    if (*type == "ghz_mirror") {
        r.unknown_keys(j, {"type", "width"}, "benchmark");
        out.kind = BenchmarkSpec::Kind::GhzMirror;
        if (const auto w = r.integer(j, "width", "benchmark.width")) {
            if (*w < 2 || *w > 20) {
                r.fail("benchmark.width must be between 2 and 20");
                ok = false;
            } else {
                out.width = static_cast<std::size_t>(*w);
            }
        } else if (j.contains("width")) {
            ok = false;
        }
    } else if (*type == "toffoli") {
        r.unknown_keys(j, {"type", "input"}, "benchmark");
        out.kind = BenchmarkSpec::Kind::Toffoli;
        if (const auto in = r.string(j, "input", "benchmark.input")) {
            if (in->size() != 3 || in->find_first_not_of("01") != std::string::npos) {
                r.fail("benchmark.input must be three characters from {0,1}");
                ok = false;
            } else {
                out.input_bits = *in;
            }
        } else if (j.contains("input")) {
            ok = false;
        }
    } else if (*type == "custom") {
        r.unknown_keys(j, {"type", "circuit"}, "benchmark");
        out.kind = BenchmarkSpec::Kind::Custom;
        const auto path = r.string(j, "circuit", "benchmark.circuit");
        if (!path) {
            if (!j.contains("circuit")) {
                r.fail("benchmark.circuit is required for a custom benchmark");
            }
            ok = false;
            return;
        }
        fs::path p(*path);
        if (p.is_relative()) {
            p = base_dir / p;
        }
        out.circuit_path = p.lexically_normal().string();
        try {
            (void)resolve_benchmark(out);
        } catch (const Error& e) {
            r.fail(fmt::format("benchmark.circuit: {}", e.what()));
            ok = false;
        }
    } else {
        r.fail(fmt::format("benchmark.type \"{}\" is not one of ghz_mirror, toffoli, custom", *type));
        ok = false;
    }
}

void read_grid(const json& j, FieldReader& r, std::optional<GridShape>& out) {
    if (!j.contains("grid")) {
        return;
    }
    const auto& g = j.at("grid");
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_unsigned() || !g[1].is_number_unsigned()) {
        r.fail("qpu.grid must be [rows, cols]");
        return;
    }
    out = GridShape{g[0].get<std::size_t>(), g[1].get<std::size_t>()};
}

void read_qpu(const json& raw, const fs::path& base_dir, FieldReader& r, QpuSpec& out) {
    json j = raw;
    if (j.is_object() && j.contains("file")) {
        const auto path = r.string(j, "file", "qpu.file");
        if (!path) {
            return;
        }
        r.unknown_keys(j, {"file"}, "qpu");
        fs::path p(*path);
        if (p.is_relative()) {
            p = base_dir / p;
        }
        try {
            j = parse_json_text(read_file(p), p.string());
        } catch (const ConfigError& e) {
            r.fail(fmt::format("qpu.file: {}", e.what()));
            return;
        }
    }
    if (!j.is_object()) {
        r.fail("qpu must be an object");
        return;
    }
    r.unknown_keys(j, {"regions", "qubits_per_region", "p_min", "p_max", "rates", "grid", "permutation_seed"}, "qpu");
    if (const auto q = r.integer(j, "qubits_per_region", "qpu.qubits_per_region")) {
        if (*q < 1 || *q > 24) {
            r.fail("qpu.qubits_per_region must be between 1 and 24");
        } else {
            out.qubits_per_region = static_cast<std::size_t>(*q);
        }
    }
    read_grid(j, r, out.grid);
    out.permutation_seed = r.unsigned64(j, "permutation_seed", "qpu.permutation_seed");

    if (j.contains("rates")) {
        out.kind = QpuSpec::Kind::Rates;
        for (const char* key : {"regions", "p_min", "p_max"}) {
            if (j.contains(key)) {
                r.fail(fmt::format("qpu.{} cannot be combined with qpu.rates", key));
            }
        }
        if (const auto rates = r.numbers(j, "rates", "qpu.rates")) {
            if (rates->empty()) {
                r.fail("qpu.rates must not be empty");
            }
            for (std::size_t i = 0; i < rates->size(); ++i) {
                if (!valid_rate((*rates)[i])) {
                    r.fail(fmt::format("qpu.rates[{}] must lie in [0, 0.5]", i));
                }
            }
            out.rates = *rates;
            out.regions = rates->size();
        }
    } else {
        out.kind = QpuSpec::Kind::LinearSweep;
        if (const auto n = r.integer(j, "regions", "qpu.regions")) {
            if (*n < 1 || *n > 100000) {
                r.fail("qpu.regions must be between 1 and 100000");
            } else {
                out.regions = static_cast<std::size_t>(*n);
            }
        }
        if (const auto lo = r.number(j, "p_min", "qpu.p_min")) {
            out.p_min = *lo;
        }
        if (const auto hi = r.number(j, "p_max", "qpu.p_max")) {
            out.p_max = *hi;
        }
        if (!valid_rate(out.p_min) || !valid_rate(out.p_max)) {
            r.fail("qpu.p_min and qpu.p_max must lie in [0, 0.5]");
        } else if (out.p_min > out.p_max) {
            r.fail("qpu.p_min must not exceed qpu.p_max");
        }
    }
    if (out.grid && out.grid->rows * out.grid->cols != out.regions) {
        r.fail(fmt::format("qpu.grid {}x{} does not hold {} regions", out.grid->rows, out.grid->cols, out.regions));
    }
}

void read_checks(const json& j, FieldReader& r, ExperimentConfig& cfg) {
    if (j.is_string()) {
        if (j.get<std::string>() != "auto-edge") {
            r.fail("checks must be \"auto-edge\" or a list of {left, right} objects");
        }
        cfg.auto_edge = true;
        return;
    }
    if (!j.is_array() || j.empty()) {
        r.fail("checks must be \"auto-edge\" or a non-empty list of {left, right} objects");
        return;
    }
    cfg.auto_edge = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = fmt::format("checks[{}]", i);
        if (!j[i].is_object()) {
            r.fail(fmt::format("{} must be an object", path));
            continue;
        }
        r.unknown_keys(j[i], {"left", "right"}, path);
        const auto left = r.string(j[i], "left", path + ".left");
        const auto right = r.string(j[i], "right", path + ".right");
        if (!left || !right) {
            if (!j[i].contains("left") || !j[i].contains("right")) {
                r.fail(fmt::format("{} needs both left and right", path));
            }
            continue;
        }
        cfg.checks.push_back({*left, *right});
    }
}

void read_calibration(const json& j, FieldReader& r, CalibrationSpec& out, bool& has_grid) {
    if (!j.is_object()) {
        r.fail("calibration must be an object");
        return;
    }
    r.unknown_keys(j, {"p_grid", "points", "p_min", "p_max", "shots"}, "calibration");
    if (const auto s = r.integer(j, "shots", "calibration.shots")) {
        if (*s < 1) {
            r.fail("calibration.shots must be ≥ 1");
        } else {
            out.shots = static_cast<std::uint64_t>(*s);
        }
    }
    if (j.contains("p_grid")) {
        for (const char* key : {"points", "p_min", "p_max"}) {
            if (j.contains(key)) {
                r.fail(fmt::format("calibration.{} cannot be combined with calibration.p_grid", key));
            }
        }
        if (const auto grid = r.numbers(j, "p_grid", "calibration.p_grid")) {
            out.p_grid = *grid;
            has_grid = true;
        }
        return;
    }
    if (j.contains("points") || j.contains("p_min") || j.contains("p_max")) {
        const auto n = r.integer(j, "points", "calibration.points");
        const auto lo = r.number(j, "p_min", "calibration.p_min");
        const auto hi = r.number(j, "p_max", "calibration.p_max");
        if (!n || !lo || !hi) {
            r.fail("calibration needs points, p_min and p_max together");
            return;
        }
        if (*n < 2) {
            r.fail("calibration.points must be ≥ 2");
            return;
        }
        out.p_grid = linear_grid(static_cast<std::size_t>(*n), *lo, *hi);
        has_grid = true;
    }
}

void check_grid(const std::vector<double>& grid, FieldReader& r) {
    if (grid.size() < 2) {
        r.fail("calibration grid needs at least 2 points");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!valid_rate(grid[i])) {
            r.fail(fmt::format("calibration.p_grid[{}] must lie in [0, 0.5]", i));
        } else if (i > 0 && !(grid[i] > grid[i - 1])) {
            r.fail(fmt::format("calibration.p_grid must be strictly increasing (index {})", i));
        }
    }
}

std::pair<double, double> qpu_rate_range(const QpuSpec& spec) {
    if (spec.kind == QpuSpec::Kind::LinearSweep) {
        return {spec.p_min, spec.p_max};
    }
    const auto [lo, hi] = std::ranges::minmax(spec.rates);
    return {lo, hi};
}

}  // namespace

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::Mitigate: return "mitigate";
        case Mode::Characterize: return "characterize";
        case Mode::Calibrate: return "calibrate";
        case Mode::All: return "all";
    }
    return "all";
}

std::optional<Mode> parse_mode(std::string_view text) {
    for (Mode m : {Mode::Mitigate, Mode::Characterize, Mode::Calibrate, Mode::All}) {
        if (mode_name(m) == text) {
            return m;
        }
    }
    return std::nullopt;
}

ConfigValidationError::ConfigValidationError(std::vector<std::string> violations)
    : ConfigError(join_lines(violations)), violations_(std::move(violations)) {}

ExperimentConfig validate_config(std::string_view raw, const fs::path& base_dir) {
    const json j = parse_json_text(raw, "config");
    if (!j.is_object()) {
        throw ConfigValidationError({"config must be a JSON object"});
    }
    std::vector<std::string> violations;
    FieldReader r(violations);
    ExperimentConfig cfg;

    r.unknown_keys(j, {"benchmark", "checks", "qpu", "shots", "seed", "output_dir", "mode", "workers", "calibration"},
                   "config");

    bool benchmark_ok = false;
    if (j.contains("benchmark")) {
        benchmark_ok = true;
        read_benchmark(j.at("benchmark"), base_dir, r, cfg.benchmark, benchmark_ok);
    } else {
        r.fail("benchmark is required");
    }

    const std::size_t before_checks = violations.size();
    if (j.contains("checks")) {
        read_checks(j.at("checks"), r, cfg);
    }
    const bool checks_ok = violations.size() == before_checks;

    if (j.contains("qpu")) {
        read_qpu(j.at("qpu"), base_dir, r, cfg.qpu);
    } else {
        r.fail("qpu is required");
    }

    if (const auto s = r.integer(j, "shots", "shots")) {
        if (*s < 1) {
            r.fail("shots must be ≥ 1");
        } else {
            cfg.shots = static_cast<std::uint64_t>(*s);
        }
    }
    if (const auto seed = r.unsigned64(j, "seed", "seed")) {
        cfg.seed = *seed;
    }
    if (const auto dir = r.string(j, "output_dir", "output_dir")) {
        cfg.output_dir = *dir;
    }
    if (const auto m = r.string(j, "mode", "mode")) {
        if (const auto mode = parse_mode(*m)) {
            cfg.mode = *mode;
        } else {
            r.fail(fmt::format("mode \"{}\" is not one of mitigate, characterize, calibrate, all", *m));
        }
    }
    if (const auto w = r.integer(j, "workers", "workers")) {
        if (*w < 1) {
            r.fail("workers must be ≥ 1");
        } else {
            cfg.workers = static_cast<std::size_t>(*w);
        }
    }

    bool has_grid = false;
    if (j.contains("calibration")) {
        read_calibration(j.at("calibration"), r, cfg.calibration, has_grid);
    }
    if (!has_grid) {
        const auto [lo, hi] = qpu_rate_range(cfg.qpu);
        cfg.calibration.p_grid = linear_grid(kDefaultCalibrationPoints, lo, hi);
    }
    if (cfg.calibration.shots == 0) {
        cfg.calibration.shots = cfg.shots;
    }
    check_grid(cfg.calibration.p_grid, r);

    // Checks and capacity depend on the payload, so they are only examined
    // once the benchmark itself is usable.
    if (benchmark_ok && checks_ok) {
        const Benchmark bench = resolve_benchmark(cfg.benchmark);
        std::size_t ancillas = 0;
        if (cfg.auto_edge) {
            try {
                ancillas = auto_edge_checks(bench.payload).size();
            } catch (const Error& e) {
                r.fail(fmt::format("checks: auto-edge selection failed: {}", e.what()));
            }
        } else {
            for (std::size_t i = 0; i < cfg.checks.size(); ++i) {
                const auto& spec = cfg.checks[i];
                const std::string name = fmt::format("checks[{}] ({} / {})", i, spec.left, spec.right);
                try {
                    const CheckPair pair = CheckPair::parse(spec.left, spec.right);
                    if (pair.left.size() != bench.num_qubits()) {
                        r.fail(fmt::format("{}: width {} does not match the {}-qubit payload", name, pair.left.size(),
                                           bench.num_qubits()));
                    } else if (!kickback_phase(pair, bench.payload)) {
                        r.fail(fmt::format("{}: R U L != U for the chosen payload", name));
                    }
                } catch (const Error& e) {
                    r.fail(fmt::format("{}: {}", name, e.what()));
                }
            }
            ancillas = cfg.checks.size();
        }
        const std::size_t need = bench.num_qubits() + ancillas;
        if (need > cfg.qpu.qubits_per_region) {
            r.fail(fmt::format("no region can host the sandwiched circuit ({} qubits needed, {} per region)", need,
                               cfg.qpu.qubits_per_region));
        }
    }

    if (!violations.empty()) {
        throw ConfigValidationError(std::move(violations));
    }
    return cfg;
}

json config_to_json(const ExperimentConfig& config) {
    json out;
    json bench;
    switch (config.benchmark.kind) {
        case BenchmarkSpec::Kind::GhzMirror:
            bench = {{"type", "ghz_mirror"}, {"width", config.benchmark.width}};
            break;
        case BenchmarkSpec::Kind::Toffoli:
            bench = {{"type", "toffoli"}, {"input", config.benchmark.input_bits}};
            break;
        case BenchmarkSpec::Kind::Custom:
            bench = {{"type", "custom"}, {"circuit", config.benchmark.circuit_path}};
            break;
    }
    out["benchmark"] = bench;
    if (config.auto_edge) {
        out["checks"] = "auto-edge";
    } else {
        json checks = json::array();
        for (const auto& c : config.checks) {
            checks.push_back({{"left", c.left}, {"right", c.right}});
        }
        out["checks"] = checks;
    }
    json qpu;
    if (config.qpu.kind == QpuSpec::Kind::LinearSweep) {
        qpu["regions"] = config.qpu.regions;
        qpu["p_min"] = config.qpu.p_min;
        qpu["p_max"] = config.qpu.p_max;
    } else {
        qpu["rates"] = config.qpu.rates;
    }
    qpu["qubits_per_region"] = config.qpu.qubits_per_region;
    if (config.qpu.grid) {
        qpu["grid"] = {config.qpu.grid->rows, config.qpu.grid->cols};
    }
    if (config.qpu.permutation_seed) {
        qpu["permutation_seed"] = *config.qpu.permutation_seed;
    }
    out["qpu"] = qpu;
    out["shots"] = config.shots;
    out["seed"] = config.seed;
    if (!config.output_dir.empty()) {
        out["output_dir"] = config.output_dir;
    }
    out["mode"] = mode_name(config.mode);
    out["workers"] = config.workers;
    out["calibration"] = {{"p_grid", config.calibration.p_grid}, {"shots", config.calibration.shots}};
    return out;
}

Benchmark resolve_benchmark(const BenchmarkSpec& spec) {
    switch (spec.kind) {
        case BenchmarkSpec::Kind::GhzMirror:
            return ghz_mirror_benchmark(spec.width);
        case BenchmarkSpec::Kind::Toffoli:
            return toffoli_benchmark(spec.input_bits);
        case BenchmarkSpec::Kind::Custom:
            break;
    }
    const fs::path path(spec.circuit_path);
    Circuit payload = circuit_from_json(parse_json_text(read_file(path), path.string()));
    if (payload.has_measurement()) {
        throw ConfigError(fmt::format("{}: a payload must not measure", path.string()));
    }
    if (payload.num_qubits() == 0) {
        throw ConfigError(fmt::format("{}: payload has no qubits", path.string()));
    }
    Benchmark b;
    b.label = payload.label().empty() ? path.stem().string() : payload.label();
    b.preparation = Circuit(payload.num_qubits());
    b.payload = std::move(payload);
    return b;
}

QpuModel resolve_qpu(const QpuSpec& spec) {
    QpuModel qpu = spec.kind == QpuSpec::Kind::LinearSweep
                       ? make_linear_sweep_qpu(spec.regions, spec.qubits_per_region, spec.p_min, spec.p_max, spec.grid)
                       : make_qpu_from_rates(spec.rates, spec.qubits_per_region, spec.grid);
    if (spec.permutation_seed) {
        qpu = qpu.permuted(*spec.permutation_seed);
    }
    return qpu;
}

std::vector<CheckPair> resolve_checks(const ExperimentConfig& config, const Circuit& payload) {
    if (config.auto_edge) {
        return auto_edge_checks(payload);
    }
    std::vector<CheckPair> out;
    for (const auto& c : config.checks) {
        out.push_back(CheckPair::parse(c.left, c.right));
    }
    return out;
}

namespace {

json distribution_to_json(const Distribution& d) {
    json out = json::object();
    for (const auto& [key, value] : d) {
        out[key] = value;
    }
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(fmt::format("cannot write {}", path.string()));
    }
    out << text;
}

std::string most_likely(const Distribution& d) {
    std::string best;
    double best_p = -1.0;
    for (const auto& [key, p] : d) {
        if (p > best_p) {
            best = key;
            best_p = p;
        }
    }
    return best;
}

std::string check_label(const CheckPair& c) { return fmt::format("{} / {}", c.left.str(), c.right.str()); }

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, const fs::path& output_dir) {
    const Benchmark bench = resolve_benchmark(config.benchmark);
    const std::vector<CheckPair> checks = resolve_checks(config, bench.payload);
    const QpuModel qpu = resolve_qpu(config.qpu);
    const SandwichedCircuit sandwiched = sandwich(bench, checks);

    fs::create_directories(output_dir);
    ExperimentReport report;
    report.output_dir = output_dir;

    const bool run_pcs = config.mode != Mode::Calibrate;
    const bool run_base = config.mode == Mode::Mitigate || config.mode == Mode::All;
    const bool run_calibration = config.mode != Mode::Mitigate;
    const bool run_estimate = config.mode == Mode::Characterize || config.mode == Mode::All;

    const AllocationPlan plan =
        allocate_threads(qpu, sandwiched.q_algorithm(), sandwiched.q_ancilla(), config.shots);

    std::vector<std::string> summary;
    summary.push_back(fmt::format("benchmark: {} ({} payload qubits)", bench.label, bench.num_qubits()));
    for (const auto& c : checks) {
        summary.push_back(fmt::format("check: {}", check_label(c)));
    }
    summary.push_back(fmt::format("mode: {}  seed: {}  shots per thread: {}", mode_name(config.mode), config.seed,
                                  config.shots));
    summary.push_back(fmt::format("qpu: {} regions x {} qubits, grid {}x{}", qpu.regions().size(),
                                  qpu.regions().empty() ? 0 : qpu.regions().front().qubit_count, qpu.grid().rows,
                                  qpu.grid().cols));
    summary.push_back(fmt::format("threads (floor(N / (q_alg + q_anc))) = {}  [N = {}, q_alg = {}, q_anc = {}]",
                                  plan.max_threads, qpu.total_qubits(), sandwiched.q_algorithm(),
                                  sandwiched.q_ancilla()));
    summary.push_back(fmt::format("threads allocated: {}", plan.allocations.size()));
    for (const auto& w : plan.warnings) {
        summary.push_back(fmt::format("warning: {}", w));
    }

    std::vector<ThreadResult> threads;
    if (run_pcs) {
        json results;
        results["benchmark"] = bench.label;
        json check_list = json::array();
        for (const auto& c : checks) {
            check_list.push_back({{"left", c.left.str()}, {"right", c.right.str()}});
        }
        results["checks"] = check_list;
        results["seed"] = config.seed;
        results["shots"] = config.shots;
        results["qpu"] = {{"regions", qpu.regions().size()},
                          {"total_qubits", qpu.total_qubits()},
                          {"grid", {qpu.grid().rows, qpu.grid().cols}}};
        if (qpu.permutation_seed()) {
            results["qpu"]["permutation_seed"] = *qpu.permutation_seed();
        }
        results["allocation"] = {{"q_algorithm", sandwiched.q_algorithm()},
                                 {"q_ancilla", sandwiched.q_ancilla()},
                                 {"max_threads", plan.max_threads},
                                 {"threads", plan.allocations.size()},
                                 {"warnings", plan.warnings}};

        const auto runs =
            run_multiprogram(qpu, sandwiched, config.shots, config.seed, {.workers = config.workers, .stream_tag = "pcs"});
        threads = process_threads(runs, sandwiched.check_bits);

        json thread_list = json::array();
        summary.push_back("per-thread discard fraction d_i:");
        for (const auto& t : threads) {
            thread_list.push_back({{"thread_id", t.thread_id},
                                   {"region_id", t.region_id},
                                   {"shots", t.raw.total_shots},
                                   {"discarded", t.discarded},
                                   {"d", t.discard_fraction},
                                   {"counts", counts_to_json(t.filtered)["counts"]},
                                   {"scaled", distribution_to_json(t.scaled)}});
            summary.push_back(fmt::format("  thread {:>3}  region {:>3}  d = {:.4f}", t.thread_id, t.region_id,
                                          t.discard_fraction));
        }
        results["threads"] = thread_list;

        if (run_base) {
            const Distribution ideal = ideal_distribution(measured_circuit(bench));
            const std::string target = most_likely(ideal);
            const SandwichedCircuit bare = sandwich(bench, {});
            const auto base_runs =
                run_multiprogram(qpu, bare, config.shots, config.seed, {.workers = config.workers, .stream_tag = "base"});
            const Distribution baseline = unweighted_sum(base_runs);
            EnsembleResult ens = ensemble(threads);
            ens.fidelity_pcs = fidelity(ens.cumulative, ideal);
            ens.fidelity_base = fidelity(baseline, ideal);
            const Improvement imp = improvement(ens.fidelity_pcs, ens.fidelity_base);
            const double success_pcs = success_probability(ens.cumulative, target);
            const double success_base = success_probability(baseline, target);

            results["ensemble"] = {{"cumulative", distribution_to_json(ens.cumulative)},
                                   {"unfiltered", distribution_to_json(ens.unfiltered)},
                                   {"baseline", distribution_to_json(baseline)},
                                   {"ideal", distribution_to_json(ideal)}};
            results["fidelity"] = {{"pcs", ens.fidelity_pcs},
                                   {"base", ens.fidelity_base},
                                   {"improvement_abs", imp.absolute},
                                   {"improvement_rel", imp.relative},
                                   {"success_outcome", target},
                                   {"success_pcs", success_pcs},
                                   {"success_base", success_base}};
            summary.push_back(fmt::format("fidelity pcs:  {:.6f}", ens.fidelity_pcs));
            summary.push_back(fmt::format("fidelity base: {:.6f}", ens.fidelity_base));
            summary.push_back(fmt::format("improvement: {:+.6f} absolute, {:+.2f}% relative", imp.absolute,
                                          100.0 * imp.relative));
            summary.push_back(fmt::format("success probability of {}: pcs {:.6f}, base {:.6f}", target, success_pcs,
                                          success_base));
        }
        const fs::path path = output_dir / "results.json";
        write_text(path, results.dump(2) + "\n");
        report.files.push_back(path);
    }

    if (run_calibration) {
        const CalibrationCurve curve = build_calibration_curve(sandwiched, config.calibration.p_grid,
                                                               config.calibration.shots, config.seed, config.workers);
        const fs::path path = output_dir / "calibration.json";
        write_text(path, calibration_to_json(curve).dump(2) + "\n");
        report.files.push_back(path);
        summary.push_back(fmt::format("calibration: {} points over p in [{}, {}], {} shots each", curve.points.size(),
                                      config.calibration.p_grid.front(), config.calibration.p_grid.back(),
                                      config.calibration.shots));

        if (run_estimate) {
            const auto estimates = estimate_noise_map(threads, curve);
            const HeatmapFiles files = export_heatmap(estimates, qpu, output_dir);
            report.files.insert(report.files.end(),
                                {files.discard_csv, files.estimate_csv, files.ground_truth_csv, files.estimates_json});
            std::vector<double> est;
            std::vector<double> truth;
            std::size_t saturated = 0;
            for (const auto& e : estimates) {
                est.push_back(e.p_estimated);
                truth.push_back(qpu.region(e.region_id).noise.p1);
                saturated += e.saturated ? 1 : 0;
            }
            const double rho = est.size() >= 2 ? spearman(est, truth) : std::numeric_limits<double>::quiet_NaN();
            summary.push_back(fmt::format("noise estimates: {} regions, {} saturated, rank correlation with ground "
                                          "truth {:.4f}",
                                          estimates.size(), saturated, rho));
        }
    }

    std::string text;
    for (const auto& line : summary) {
        text += line;
        text += '\n';
    }
    const fs::path summary_path = output_dir / "summary.txt";
    write_text(summary_path, text);
    report.files.push_back(summary_path);
    report.summary = std::move(text);
    return report;
}

}  // namespace pcs

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

#include "pcsmp/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

FilterResult filter_counts(const CountsMap& raw, const std::vector<std::size_t>& check_bits) {
    FilterResult out;
    if (raw.counts.empty()) {
        return out;
    }
    std::vector<std::size_t> payload_bits;
    for (std::size_t b = 0; b < raw.width; ++b) {
        if (std::ranges::find(check_bits, b) == check_bits.end()) {
            payload_bits.push_back(b);
        }
    }
    for (auto b : check_bits) {
        if (b >= raw.width) {
            throw ShapeError(fmt::format("check bit {} outside outcome width {}", b, raw.width));
        }
    }
    out.filtered.width = payload_bits.size();
    out.projected.width = payload_bits.size();
    for (const auto& [key, n] : raw.counts) {
        std::string payload;
        payload.reserve(payload_bits.size());
        for (auto b : payload_bits) {
            payload.push_back(key[b]);
        }
        out.projected.add(payload, n);
        const bool fired = std::ranges::any_of(check_bits, [&](std::size_t b) { return key[b] == '1'; });
        if (fired) {
            out.discarded += n;
        } else {
            out.filtered.add(payload, n);
        }
    }
    return out;
}

double discard_fraction(std::uint64_t discarded, std::uint64_t shots) {
    if (shots == 0) {
        throw InvalidParameterError("discard_fraction: shots must be >= 1");
    }
    if (discarded > shots) {
        throw InvalidParameterError(fmt::format("discard_fraction: {} discarded out of {} shots", discarded, shots));
    }
    return static_cast<double>(discarded) / static_cast<double>(shots);
}

double scale_factor(double d, double d_min) {
    if (d == 0.0) {
        return 1.0;
    }
    return d_min / d;
}

Distribution scale_counts(const CountsMap& c, double d, double d_min) {
    const double factor = scale_factor(d, d_min);
    Distribution out;
    for (const auto& [k, n] : c.counts) {
        out[k] = static_cast<double>(n) * factor;
    }
    return out;
}

std::vector<ThreadResult> process_threads(const std::vector<ThreadRun>& runs, const std::vector<std::size_t>& check_bits) {
    std::vector<ThreadResult> out;
    out.reserve(runs.size());
    double d_min = std::numeric_limits<double>::infinity();
    for (const auto& run : runs) {
        FilterResult f = filter_counts(run.counts, check_bits);
        ThreadResult t;
        t.thread_id = run.allocation.thread_id;
        t.region_id = run.allocation.region_id;
        t.raw = run.counts;
        t.filtered = std::move(f.filtered);
        t.projected = std::move(f.projected);
        t.discarded = f.discarded;
        t.discard_fraction = discard_fraction(f.discarded, run.counts.total_shots);
        d_min = std::min(d_min, t.discard_fraction);
        out.push_back(std::move(t));
    }
    for (auto& t : out) {
        t.scaled = scale_counts(t.filtered, t.discard_fraction, d_min);
    }
    return out;
}

EnsembleResult ensemble(std::vector<ThreadResult> threads) {
    if (threads.empty()) {
        throw ContractError("ensemble: no threads");
    }
    const std::size_t width = threads.front().projected.width;
    EnsembleResult out;
    for (const auto& t : threads) {
        if (t.projected.width != width || (!t.filtered.counts.empty() && t.filtered.width != width)) {
            throw ContractError(fmt::format("ensemble: thread {} has payload width {}, expected {}", t.thread_id,
                                            t.projected.width, width));
        }
        for (const auto& [k, v] : t.scaled) {
            out.cumulative[k] += v;
        }
        for (const auto& [k, n] : t.projected.counts) {
            out.unfiltered[k] += static_cast<double>(n);
        }
    }
    out.per_thread = std::move(threads);
    return out;
}

Distribution unweighted_sum(const std::vector<ThreadRun>& runs) {
    Distribution out;
    for (const auto& r : runs) {
        for (const auto& [k, n] : r.counts.counts) {
            out[k] += static_cast<double>(n);
        }
    }
    return out;
}

double fidelity(const Distribution& dist, const Distribution& ideal) {
    for (const auto* d : {&dist, &ideal}) {
        for (const auto& [k, v] : *d) {
            if (v < 0.0) {
                throw UndefinedMetricError(fmt::format("fidelity: negative weight {} on '{}'", v, k));
            }
        }
        if (!(total_weight(*d) > 0.0)) {
            throw UndefinedMetricError("fidelity: all-zero distribution");
        }
    }
    const Distribution q = normalized(dist);
    const Distribution p = normalized(ideal);
    double overlap = 0.0;
    for (const auto& [k, v] : q) {
        auto it = p.find(k);
        if (it != p.end()) {
            overlap += std::sqrt(v * it->second);
        }
    }
    return std::min(1.0, overlap * overlap);
}

double success_probability(const Distribution& dist, const std::string& outcome) {
    const double total = total_weight(dist);
    if (!(total > 0.0)) {
        throw UndefinedMetricError("success_probability: all-zero distribution");
    }
    auto it = dist.find(outcome);
    return it == dist.end() ? 0.0 : it->second / total;
}

Improvement improvement(double pcs, double base) {
    return Improvement{pcs - base, base > 0.0 ? (pcs - base) / base : std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace pcs

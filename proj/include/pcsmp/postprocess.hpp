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
#include <string>
#include <vector>

#include "pcsmp/counts.hpp"
#include "pcsmp/multiprogram.hpp"

namespace pcs {

struct FilterResult {
    CountsMap filtered;   // kept shots, payload bits only
    CountsMap projected;  // every shot, payload bits only
    std::uint64_t discarded = 0;
};

// Drops every shot with a 1 on any check bit and projects the rest onto the
// remaining (payload) bits, preserving their order.
FilterResult filter_counts(const CountsMap& raw, const std::vector<std::size_t>& check_bits);

// r / shots. Throws InvalidParameterError for shots == 0 or r > shots.
double discard_fraction(std::uint64_t discarded, std::uint64_t shots);

// c * d_min / d. A thread with d == 0 keeps weight 1; with d_min == 0 every
// thread that discarded something gets weight 0.
Distribution scale_counts(const CountsMap& c, double d, double d_min);
double scale_factor(double d, double d_min);

struct ThreadResult {
    std::size_t thread_id = 0;
    std::size_t region_id = 0;
    CountsMap raw;
    CountsMap filtered;
    CountsMap projected;
    std::uint64_t discarded = 0;
    double discard_fraction = 0.0;
    Distribution scaled;
};

// Filters every run, then weights each by min(d) / d_i.
std::vector<ThreadResult> process_threads(const std::vector<ThreadRun>& runs, const std::vector<std::size_t>& check_bits);

struct EnsembleResult {
    Distribution cumulative;    // sum of scaled maps
    Distribution unfiltered;    // sum of projected raw counts, no weighting
    std::vector<ThreadResult> per_thread;
    double fidelity_pcs = 0.0;
    double fidelity_base = 0.0;
};

// Throws ContractError for an empty list or differing payload widths.
EnsembleResult ensemble(std::vector<ThreadResult> threads);

// Sum of raw counts of unprotected runs (the no-check baseline ensemble).
Distribution unweighted_sum(const std::vector<ThreadRun>& runs);

// Classical (Bhattacharyya) fidelity (sum_x sqrt(q_x p_x))^2 after
// normalizing both arguments. Throws UndefinedMetricError if either is
// all-zero or has a negative entry.
double fidelity(const Distribution& dist, const Distribution& ideal);

// Normalized weight of one outcome.
double success_probability(const Distribution& dist, const std::string& outcome);

struct Improvement {
    double absolute = 0.0;  // pcs - base
    double relative = 0.0;  // (pcs - base) / base
};

Improvement improvement(double pcs, double base);

}  // namespace pcs

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
#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace pcs {

// Outcome bit string -> shot count. Keys put classical bit 0 leftmost.
struct CountsMap {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
    std::size_t width = 0;

    // Throws ShapeError if the key width disagrees with earlier keys.
    void add(const std::string& key, std::uint64_t n = 1);
    std::uint64_t at(const std::string& key) const;

    friend bool operator==(const CountsMap&, const CountsMap&) = default;
};

// Real-valued outcome map; used both for probability distributions and for
// scaled (non-integer) count vectors.
using Distribution = std::map<std::string, double>;

Distribution to_distribution(const CountsMap& c);
double total_weight(const Distribution& d);
// Divides by the total weight; throws InvalidParameterError if it is zero.
Distribution normalized(const Distribution& d);
// Half the L1 distance between the normalized inputs.
double total_variation(const Distribution& a, const Distribution& b);

// Marginal over the listed bit positions, in the listed order.
Distribution marginal(const Distribution& d, const std::vector<std::size_t>& bits);

nlohmann::json counts_to_json(const CountsMap& c);
CountsMap counts_from_json(const nlohmann::json& j);

}  // namespace pcs

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

#include "pcsmp/counts.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

void CountsMap::add(const std::string& key, std::uint64_t n) {
    if (counts.empty() && total_shots == 0 && width == 0) {
        width = key.size();
    } else if (key.size() != width) {
        throw ShapeError(fmt::format("outcome '{}' has width {}, expected {}", key, key.size(), width));
    }
    if (n == 0) {
        return;
    }
    counts[key] += n;
    total_shots += n;
}

std::uint64_t CountsMap::at(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

Distribution to_distribution(const CountsMap& c) {
    Distribution d;
    for (const auto& [k, n] : c.counts) {
        d[k] = static_cast<double>(n);
    }
    return d;
}

double total_weight(const Distribution& d) {
    double s = 0.0;
    for (const auto& [k, v] : d) {
        s += v;
    }
    return s;
}

Distribution normalized(const Distribution& d) {
    const double s = total_weight(d);
    if (!(s > 0.0)) {
        throw InvalidParameterError("cannot normalize an all-zero outcome map");
    }
    Distribution out;
    for (const auto& [k, v] : d) {
        out[k] = v / s;
    }
    return out;
}

double total_variation(const Distribution& a, const Distribution& b) {
    const Distribution pa = normalized(a);
    const Distribution pb = normalized(b);
    std::set<std::string> keys;
    for (const auto& [k, v] : pa) keys.insert(k);
    for (const auto& [k, v] : pb) keys.insert(k);
    double sum = 0.0;
    for (const auto& k : keys) {
        const auto ia = pa.find(k);
        const auto ib = pb.find(k);
        sum += std::abs((ia == pa.end() ? 0.0 : ia->second) - (ib == pb.end() ? 0.0 : ib->second));
    }
    return 0.5 * sum;
}

Distribution marginal(const Distribution& d, const std::vector<std::size_t>& bits) {
    Distribution out;
    for (const auto& [k, v] : d) {
        std::string key;
        key.reserve(bits.size());
        for (auto b : bits) {
            if (b >= k.size()) {
                throw ShapeError(fmt::format("marginal: bit {} out of range for '{}'", b, k));
            }
            key.push_back(k[b]);
        }
        out[key] += v;
    }
    return out;
}

nlohmann::json counts_to_json(const CountsMap& c) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [k, n] : c.counts) {
        counts[k] = n;
    }
    return {{"shots", c.total_shots}, {"counts", std::move(counts)}};
}

CountsMap counts_from_json(const nlohmann::json& j) {
    CountsMap c;
    for (const auto& [k, n] : j.at("counts").items()) {
        c.add(k, n.get<std::uint64_t>());
    }
    if (c.total_shots != j.at("shots").get<std::uint64_t>()) {
        throw ShapeError("counts do not sum to 'shots'");
    }
    return c;
}

}  // namespace pcs

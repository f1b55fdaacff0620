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

#include <vector>

namespace pcs {

// Ranks starting at 1; tied values share their average rank.
std::vector<double> average_ranks(const std::vector<double>& values);

// Spearman rank correlation (Pearson correlation of average ranks). Returns
// NaN when either input is constant.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

double median(std::vector<double> values);

}  // namespace pcs

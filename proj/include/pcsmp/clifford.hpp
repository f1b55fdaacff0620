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

#include "pcsmp/circuit.hpp"
#include "pcsmp/pauli_string.hpp"

namespace pcs {

// Returns U p U^dagger where U is the product of the gates of `c` in circuit
// order, with the sign tracked exactly.
//
// Only the generators {H, S, Sdg, X, Y, Z, CX} are accepted; anything else
// (including MEASURE) raises UnsupportedGateError. Throws ShapeError when
// p.size() != c.num_qubits().
PauliString conjugate_through_clifford(const PauliString& p, const Circuit& c);

}  // namespace pcs

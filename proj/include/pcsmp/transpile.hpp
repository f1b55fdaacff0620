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

namespace pcs {

// Rewrites a circuit over the hardware basis {CX, X, SX, RZ} (MEASURE passes
// through). The result equals the input up to global phase.
//
//   H     -> RZ(pi/2) SX RZ(pi/2)
//   Y     -> RZ(pi) X
//   Z/S/Sdg/T/Tdg -> RZ(pi / pi/2 / -pi/2 / pi/4 / -pi/4)
//   CCX   -> 6-CX network, then recursively lowered
//   C-X   -> CX;  C-Z -> H CX H;  C-Y -> Sdg CX S   (on the target)
Circuit transpile_to_basis(const Circuit& c);

bool is_basis_gate(GateKind kind);

}  // namespace pcs

// Copyright 2026 The multires Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "multires/haar.hpp"

namespace multires {

enum class PauliTag { X, Y, Z, Plus, Minus };

/// A single-qubit operation acting at slot `qubit` (1-based, qubit 1 is the
/// coarsest digit).
struct GateKind {
    PauliTag tag = PauliTag::X;
    int qubit = 1;
};

/// Cell-level action of the gate on a resolution-v.n vector, O(2^n).
/// Matches gate_matrix(g, v.n) * v.coeffs exactly; bits shifted outside
/// (0,1] produce zero coefficients. Throws std::out_of_range when
/// g.qubit > v.n (embed first).
DyadicVector apply_gate(const GateKind& g, const DyadicVector& v);

/// Kronecker-product oracle I (x) ... (x) sigma (x) ... (x) I with the 2x2
/// gate in slot g.qubit of n factors.
OperatorMatrix gate_matrix(const GateKind& g, int n);

/// Fourier transform of the cell coefficients with kernel e^{+2 pi i kl/2^n}
/// and normalization 2^(-n/2); radix-2, O(N log N). Unitary.
DyadicVector qft_borel(const DyadicVector& v);

/// Direct O(N^2) evaluation of the same transform; independent check for
/// qft_borel.
DyadicVector dft_oracle(const DyadicVector& v);

/// One weighted segment of a distributional integral kernel on (0,1]^2;
/// x is the output variable, y the input.
struct KernelSegment {
    double x0 = 0.0, y0 = 0.0;
    double x1 = 0.0, y1 = 0.0;
    Complex weight;
};

/// The support lines of the gate's integral kernel, one segment per
/// interval of constant digit eps_k. Emitted for plotting.
std::vector<KernelSegment> kernel_support(const GateKind& g);

}  // namespace multires

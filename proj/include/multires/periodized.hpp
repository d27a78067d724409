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

#include <optional>
#include <vector>

#include "multires/gates.hpp"

namespace multires {

/// Array-wide operators with weights lambda_k = 2^(-k).
///
/// CX/CY/CZ/CPlus/CMinus sum the corresponding gate over every qubit; L is
/// the antiderivative u -> integral_0^x u, LT its adjoint, K = i(LT - L)
/// the compact correction; PMinus = CMinus + L and PPlus = CPlus + LT;
/// CTheta = cos(t) CX + sin(t) CY sweeps the equator of the Bloch sphere
/// and CThetaCorrected adds sin(t) K; V is the multiplier by (x - 1/2);
/// Bloch is the general weighted combination of CX, CY, CZ.
enum class PeriodizedTag {
    CX,
    CY,
    CZ,
    CPlus,
    CMinus,
    L,
    LT,
    K,
    PMinus,
    PPlus,
    CTheta,
    CThetaCorrected,
    V,
    Bloch,
};

struct BlochWeights {
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct PeriodizedKind {
    PeriodizedTag tag = PeriodizedTag::CX;
    std::optional<double> theta;        // CTheta / CThetaCorrected only
    std::optional<BlochWeights> bloch;  // Bloch only

    static PeriodizedKind plain(PeriodizedTag t);
    static PeriodizedKind equator(PeriodizedTag t, double theta);
    /// Weights must satisfy alpha^2 + beta^2 + gamma^2 = 1.
    static PeriodizedKind bloch_point(double alpha, double beta, double gamma);
};

/// Weights lambda_1..lambda_n of a finite-array operator.
struct LambdaWeights {
    std::vector<double> lambda;

    int qubits() const { return static_cast<int>(lambda.size()); }
    /// The infinite-array scaling lambda_k = 2^(-k) truncated at n terms.
    static LambdaWeights dyadic(int n);
};

enum class Axis { X, Y, Z };

/// The exact finite-array operator sum_k lambda_k sigma_axis^k in the
/// scaling basis (n = number of weights).
OperatorMatrix build_finite_array(Axis axis, const LambdaWeights& weights);

/// All 2^n signed sums sum_k eps_k lambda_k, eps_k = +-1: the eigenvalue
/// multiset of the finite-array operator for axis x, y or z. Ascending.
std::vector<double> finite_eigs_closed_form(const LambdaWeights& weights);

/// The exact compression of the infinite-array operator to resolution n in
/// the scaling basis: the gate terms k <= n plus the analytic contribution
/// of all unresolved qubits. With include_tail = false the bare truncation
/// to the first n qubits is returned instead (and L/LT/K switch to their
/// 0/1 counting variants), which reproduces qualitative plots only.
OperatorMatrix build_projected(const PeriodizedKind& kind, int n, bool include_tail = true);

/// Matrix-free action of the projected operator on v; equals
/// build_projected(kind, v.n) * v. Supported for CX, CY, CZ, CPlus,
/// CMinus, CTheta.
DyadicVector apply_periodized(const PeriodizedKind& kind, const DyadicVector& v);

/// Residual norm of the constant vector under PMinus or PPlus, which fix it.
double fixed_vector_check(PeriodizedTag tag, int n);

/// Largest singular value; exact eigenvalue route for Hermitian input,
/// dense SVD otherwise.
double operator_norm(const OperatorMatrix& M);

}  // namespace multires

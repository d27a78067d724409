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

#include "multires/periodized.hpp"

namespace multires {

/// Diagonal blocks of a Haar-basis operator, one per scale, with sizes
/// 1, 1, 2, 4, ..., 2^(n-1), plus the Frobenius norm of what lies outside.
struct BlockList {
    std::vector<Eigen::MatrixXcd> blocks;
    double off_block_residual = 0.0;

    std::vector<Eigen::Index> sizes() const;
};

/// One eigenpair, optionally labelled by its closed-form address
/// (level n, rank k, sign s) with eigenvalue s(2k+1)/2^n.
struct EigenPair {
    Complex value;
    Eigen::VectorXcd vector;
    int level = -1;  // -1 when unlabelled
    int rank = 0;
    int sign = 0;
    double theta = 0.0;
};

/// Placement of the phase in the doubling recurrence for the equator
/// blocks. Both variants are diagonally equivalent and isospectral;
/// Derived is the one the projected operators reproduce entrywise.
enum class ThetaConvention { Derived, Paper };

/// Scale blocks of the array-wide x operator:
/// D_0 = [0], D_{m+1} = (1/2) [[D_m, I], [I, D_m]].
Eigen::MatrixXcd recurrence_D(int n);

/// Scale blocks of PMinus: D-_{0} = [0], D-_{m+1} = (1/2) [[D-_m, I], [0, D-_m]].
Eigen::MatrixXcd recurrence_D_minus(int n);

/// Adjoint family, D+_{m} = (D-_{m})^dagger.
Eigen::MatrixXcd recurrence_D_plus(int n);

/// Scale blocks of the corrected equator operator; Hermitian for all theta,
/// eigenvalues +-(2k+1)/2^n independently of theta and convention.
Eigen::MatrixXcd recurrence_D_theta(int n, double theta,
                                    ThetaConvention convention = ThetaConvention::Derived);

/// Slice a Haar-basis operator along the canonical scale boundaries.
/// Throws std::invalid_argument for scaling-basis input.
BlockList extract_blocks(const OperatorMatrix& M);

/// All 2^n eigenpairs of recurrence_D_theta(n, theta, convention), built by
/// the doubling recurrence, unit norm, labelled, sorted by eigenvalue.
std::vector<EigenPair> eig_recurrence_theta(int n, double theta,
                                            ThetaConvention convention = ThetaConvention::Derived);

/// The closed-form spectrum {+-(2k+1)/2^n : k = 0..2^(n-1)-1}, ascending.
std::vector<double> spectrum_closed_form(int n);

/// Off-block part of the Haar image of the projected array-wide y operator,
/// with decay statistics and the exact cancellation against the compact
/// correction.
struct RemainderReport {
    OperatorMatrix remainder;            // Haar basis, zero on the blocks
    std::vector<double> per_scale_max;   // max |entry| per block row
    Eigen::Index max_row = 0;
    Eigen::Index max_col = 0;
    double max_abs = 0.0;
    /// max |remainder + off-block part of haar(K)|; zero up to roundoff.
    double cancellation_error = 0.0;
};

RemainderReport remainder_matrix(int n);

/// Full eigendecomposition by a dense solver (Hermitian path when the
/// input is Hermitian): ascending eigenvalues, unit vectors with the first
/// nonvanishing entry rotated real positive. Verifies residuals
/// ||Mv - lambda v|| <= 1e-9 ||M|| and throws std::runtime_error otherwise.
std::vector<EigenPair> dense_eig_oracle(const OperatorMatrix& M);

}  // namespace multires

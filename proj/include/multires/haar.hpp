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

#include <Eigen/Dense>

#include "multires/dyadic.hpp"

namespace multires {

/// Coefficients in the canonically ordered Haar basis:
/// G_{0,0}; H_{0,0}; H_{1,0}, H_{1,1}; H_{2,0}..H_{2,3}; ...
/// The detail coefficients of scale m occupy indices [2^m, 2^(m+1)).
struct HaarVector {
    int n = 0;
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(1);

    HaarVector() = default;
    HaarVector(int resolution, Eigen::VectorXcd values);

    static HaarVector zero(int n);

    std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
    double norm() const { return coeffs.norm(); }
};

enum class Basis { Scaling, Haar };

/// Dense square operator at resolution n, tagged with the basis its
/// entries are written in.
struct OperatorMatrix {
    int n = 0;
    Basis basis = Basis::Scaling;
    Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(1, 1);

    OperatorMatrix() = default;
    OperatorMatrix(int resolution, Basis b, Eigen::MatrixXcd m);

    static OperatorMatrix identity(int n, Basis b = Basis::Scaling);

    Eigen::Index dim() const { return entries.rows(); }
};

/// O(2^n) pyramid transform into the canonically ordered Haar basis.
HaarVector haar_forward(const DyadicVector& v);

/// Inverse pyramid; haar_inverse(haar_forward(v)) == v to machine precision.
DyadicVector haar_inverse(const HaarVector& h);

/// Dense transform matrix: row i is the discretized i-th Haar basis
/// function in the scaling basis. Real orthogonal; used as an oracle for
/// the fast transform and for operator conjugation.
OperatorMatrix haar_matrix(int n);

/// Unitary conjugation T_H M T_H' of a scaling-basis operator, computed by
/// fast transforms over columns and rows. Throws std::invalid_argument if
/// M is already in the Haar basis.
OperatorMatrix conjugate_to_haar(const OperatorMatrix& M);

/// The 2^m detail coefficients (c_{m,0}..c_{m,2^m-1}), 0 <= m < h.n.
Eigen::VectorXcd scale_slice(const HaarVector& h, int m);

}  // namespace multires

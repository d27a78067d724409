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

#include "multires/haar.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace multires {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// Pyramid sweeps between scaling coefficients at resolution n and the
// canonically ordered Haar coefficients: the smooth half of each sweep
// shrinks towards index 0 while the details of scale m land in
// [2^m, 2^(m+1)), which is exactly the canonical layout. Each sweep works
// off a copy of its active segment; the output slots overlap the inputs.
void pyramid_forward(Eigen::VectorXcd& data, int n) {
    Eigen::VectorXcd scratch(data.size());
    for (int m = n - 1; m >= 0; --m) {
        const auto half = static_cast<Eigen::Index>(cell_count(m));
        scratch.head(2 * half) = data.head(2 * half);
        for (Eigen::Index j = 0; j < half; ++j) {
            const Complex a = scratch[2 * j];
            const Complex b = scratch[2 * j + 1];
            data[j] = (a + b) * kInvSqrt2;
            data[half + j] = (a - b) * kInvSqrt2;
        }
    }
}

void pyramid_inverse(Eigen::VectorXcd& data, int n) {
    Eigen::VectorXcd scratch(data.size());
    for (int m = 0; m < n; ++m) {
        const auto half = static_cast<Eigen::Index>(cell_count(m));
        scratch.head(2 * half) = data.head(2 * half);
        for (Eigen::Index j = 0; j < half; ++j) {
            const Complex s = scratch[j];
            const Complex d = scratch[half + j];
            data[2 * j] = (s + d) * kInvSqrt2;
            data[2 * j + 1] = (s - d) * kInvSqrt2;
        }
    }
}

}  // namespace

HaarVector::HaarVector(int resolution, Eigen::VectorXcd values)
    : n(resolution), coeffs(std::move(values)) {
    if (n < 0 || n >= 63) throw std::out_of_range("HaarVector: bad resolution");
    if (coeffs.size() != static_cast<Eigen::Index>(cell_count(n))) {
        throw std::invalid_argument("HaarVector: expected 2^" + std::to_string(n) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    if (!coeffs.allFinite()) {
        throw std::invalid_argument("HaarVector: non-finite coefficient");
    }
}

HaarVector HaarVector::zero(int n) {
    return HaarVector(n, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cell_count(n))));
}

OperatorMatrix::OperatorMatrix(int resolution, Basis b, Eigen::MatrixXcd m)
    : n(resolution), basis(b), entries(std::move(m)) {
    if (n < 0 || n >= 32) throw std::out_of_range("OperatorMatrix: bad resolution");
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    if (entries.rows() != dim || entries.cols() != dim) {
        throw std::invalid_argument("OperatorMatrix: expected " + std::to_string(dim) +
                                    "x" + std::to_string(dim) + " entries");
    }
    if (!entries.allFinite()) {
        throw std::invalid_argument("OperatorMatrix: non-finite entry");
    }
}

OperatorMatrix OperatorMatrix::identity(int n, Basis b) {
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    return OperatorMatrix(n, b, Eigen::MatrixXcd::Identity(dim, dim));
}

HaarVector haar_forward(const DyadicVector& v) {
    Eigen::VectorXcd data = v.coeffs;
    pyramid_forward(data, v.n);
    return HaarVector(v.n, std::move(data));
}

DyadicVector haar_inverse(const HaarVector& h) {
    Eigen::VectorXcd data = h.coeffs;
    pyramid_inverse(data, h.n);
    return DyadicVector(h.n, std::move(data));
}

OperatorMatrix haar_matrix(int n) {
    if (n < 0) throw std::out_of_range("haar_matrix: negative resolution");
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
    t.row(0).setConstant(half_power_scale(n));
    for (int m = 0; m < n; ++m) {
        const double height = half_power_scale(n - m);
        const auto support = static_cast<Eigen::Index>(cell_count(n - m));
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(cell_count(m)); ++k) {
            const Eigen::Index row = static_cast<Eigen::Index>(cell_count(m)) + k;
            const Eigen::Index start = k * support;
            t.row(row).segment(start, support / 2).setConstant(height);
            t.row(row).segment(start + support / 2, support / 2).setConstant(-height);
        }
    }
    return OperatorMatrix(n, Basis::Scaling, std::move(t));
}

OperatorMatrix conjugate_to_haar(const OperatorMatrix& M) {
    if (M.basis != Basis::Scaling) {
        throw std::invalid_argument("conjugate_to_haar: operator already in Haar basis");
    }
    Eigen::MatrixXcd a = M.entries;
    const Eigen::Index dim = a.cols();
    Eigen::VectorXcd scratch(dim);
    // T_H M: transform every column; then (T_H M) T_H': transform every row.
    // T_H is real orthogonal, so the adjoint on the right is plain transpose.
    for (Eigen::Index c = 0; c < dim; ++c) {
        scratch = a.col(c);
        pyramid_forward(scratch, M.n);
        a.col(c) = scratch;
    }
    for (Eigen::Index r = 0; r < dim; ++r) {
        scratch = a.row(r).transpose();
        pyramid_forward(scratch, M.n);
        a.row(r) = scratch.transpose();
    }
    return OperatorMatrix(M.n, Basis::Haar, std::move(a));
}

Eigen::VectorXcd scale_slice(const HaarVector& h, int m) {
    if (m < 0 || m >= h.n) {
        throw std::out_of_range("scale_slice: scale " + std::to_string(m) +
                                " not present at resolution " + std::to_string(h.n));
    }
    const auto width = static_cast<Eigen::Index>(cell_count(m));
    return h.coeffs.segment(width, width);
}

}  // namespace multires

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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace multires {

using Complex = std::complex<double>;

/// Digits of a qubit-array basis label, most significant digit first.
/// Element j is the state of qubit j+1.
using BitString = std::vector<std::uint8_t>;

/// Number of cells (and basis functions) at resolution n.
inline std::size_t cell_count(int n) { return std::size_t{1} << n; }

/// The isometry weight 2^(-levels/2) spread over one refinement step.
double half_power_scale(int levels);

/// Address of the bit string as a cell index: k = sum_j eps_j 2^(n-j).
std::size_t bits_to_index(const BitString& bits);

/// Inverse of bits_to_index. Throws std::out_of_range unless 0 <= k < 2^n.
BitString index_to_bits(std::size_t k, int n);

/// The half-open dyadic interval (k/2^n, (k+1)/2^n].
struct DyadicInterval {
    int n = 0;
    std::size_t k = 0;

    DyadicInterval(int resolution, std::size_t cell);

    double lower() const;
    double upper() const;
    double measure() const;
};

/// A point known only up to its enclosing cell: any point in the open
/// interior of the interval (j/2^m, (j+1)/2^m]. Its first m dyadic digits
/// are exactly the address bits of j.
struct CellPoint {
    int resolution = 0;
    std::size_t cell = 0;

    CellPoint(int m, std::size_t j);
};

/// Digit eps_k of every point interior to the cell, 1 <= k <= resolution.
/// Throws std::out_of_range when k is outside that range (refine first).
int epsilon_digit(const CellPoint& p, int k);

/// Coefficients of a function in the scaling basis (G_{n,k})_k at
/// resolution n; equivalently the image of an n-qubit state vector.
struct DyadicVector {
    int n = 0;
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(1);

    DyadicVector() = default;
    DyadicVector(int resolution, Eigen::VectorXcd values);

    static DyadicVector zero(int n);
    /// The unit vector on G_{n,k} with k = bits_to_index(bits): the image
    /// of the basis state labelled by `bits`.
    static DyadicVector basis_state(const BitString& bits);
    /// The normalized constant vector (the function identically 1).
    static DyadicVector constant(int n);

    std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
    double norm() const { return coeffs.norm(); }
};

/// Isometric refinement to resolution m >= v.n: every coarse coefficient is
/// spread uniformly over its 2^(m-n) child cells with weight 2^(-(m-n)/2).
DyadicVector embed(const DyadicVector& v, int m);

/// Orthogonal compression to resolution n <= v.n; adjoint of embed.
DyadicVector project(const DyadicVector& v, int n);

}  // namespace multires

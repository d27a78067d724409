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

// Test-only oracles. These deliberately avoid the code paths they check:
// the projection oracle assembles array-wide operators by brute force at a
// much finer resolution and compresses, instead of using the analytic tail
// corrections of the library.

#pragma once

#include <random>

#include "multires/periodized.hpp"

namespace multires::testing {

// Antiderivative acting on fine-resolution cell coefficients via prefix
// sums; matches the Galerkin matrix without forming it.
inline Eigen::VectorXcd antiderivative_apply(const Eigen::VectorXcd& v, int n) {
    const double cell = std::ldexp(1.0, -n);
    Eigen::VectorXcd out(v.size());
    Complex running = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out[i] = cell * running + 0.5 * cell * v[i];
        running += v[i];
    }
    return out;
}

inline Eigen::VectorXcd antiderivative_adjoint_apply(const Eigen::VectorXcd& v, int n) {
    const double cell = std::ldexp(1.0, -n);
    Eigen::VectorXcd out(v.size());
    Complex running = 0.0;
    for (Eigen::Index i = v.size() - 1; i >= 0; --i) {
        out[i] = cell * running + 0.5 * cell * v[i];
        running += v[i];
    }
    return out;
}

// Action of the truncated array-wide operator (all gate terms k <= m, no
// tail) on a fine vector, plus the exact antiderivative pieces where the
// operator includes them.
inline DyadicVector periodized_apply_fine(PeriodizedTag tag, const DyadicVector& fine,
                                          double theta = 0.0) {
    const int m = fine.n;
    const auto dim = static_cast<Eigen::Index>(fine.size());
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim);
    const auto add_gates = [&](PauliTag gate, Complex scale) {
        for (int k = 1; k <= m; ++k) {
            acc += scale * std::ldexp(1.0, -k) * apply_gate({gate, k}, fine).coeffs;
        }
    };
    switch (tag) {
        case PeriodizedTag::CX:
            add_gates(PauliTag::X, 1.0);
            break;
        case PeriodizedTag::CY:
            add_gates(PauliTag::Y, 1.0);
            break;
        case PeriodizedTag::CZ:
            add_gates(PauliTag::Z, 1.0);
            break;
        case PeriodizedTag::CPlus:
            add_gates(PauliTag::Plus, 1.0);
            break;
        case PeriodizedTag::CMinus:
            add_gates(PauliTag::Minus, 1.0);
            break;
        case PeriodizedTag::L:
            acc = antiderivative_apply(fine.coeffs, m);
            break;
        case PeriodizedTag::LT:
            acc = antiderivative_adjoint_apply(fine.coeffs, m);
            break;
        case PeriodizedTag::K:
            acc = Complex{0.0, 1.0} * (antiderivative_adjoint_apply(fine.coeffs, m) -
                                       antiderivative_apply(fine.coeffs, m));
            break;
        case PeriodizedTag::PMinus:
            add_gates(PauliTag::Minus, 1.0);
            acc += antiderivative_apply(fine.coeffs, m);
            break;
        case PeriodizedTag::PPlus:
            add_gates(PauliTag::Plus, 1.0);
            acc += antiderivative_adjoint_apply(fine.coeffs, m);
            break;
        case PeriodizedTag::CTheta:
            add_gates(PauliTag::X, std::cos(theta));
            add_gates(PauliTag::Y, std::sin(theta));
            break;
        case PeriodizedTag::CThetaCorrected:
            add_gates(PauliTag::X, std::cos(theta));
            add_gates(PauliTag::Y, std::sin(theta));
            acc += std::sin(theta) * Complex{0.0, 1.0} *
                   (antiderivative_adjoint_apply(fine.coeffs, m) -
                    antiderivative_apply(fine.coeffs, m));
            break;
        default:
            throw std::invalid_argument("periodized_apply_fine: unsupported tag");
    }
    return DyadicVector(m, std::move(acc));
}

// Brute-force compression: embed each coarse basis vector to resolution m,
// apply the truncated operator there, compress back. Converges to the
// library's projected matrix geometrically in m - n.
inline Eigen::MatrixXcd projection_oracle(PeriodizedTag tag, int n, int m,
                                          double theta = 0.0) {
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        DyadicVector basis = DyadicVector::zero(n);
        basis.coeffs[j] = 1.0;
        const DyadicVector fine = embed(basis, m);
        out.col(j) = project(periodized_apply_fine(tag, fine, theta), n).coeffs;
    }
    return out;
}

inline Eigen::VectorXcd random_complex(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
    v.normalize();
    return v;
}

}  // namespace multires::testing

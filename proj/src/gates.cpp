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

#include "multires/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace multires {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd single_qubit_matrix(PauliTag tag) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (tag) {
        case PauliTag::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliTag::Y:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case PauliTag::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        case PauliTag::Plus:
            m(1, 0) = 1.0;
            break;
        case PauliTag::Minus:
            m(0, 1) = 1.0;
            break;
    }
    return m;
}

void check_qubit(int qubit, int n, const char* where) {
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range(std::string(where) + ": qubit " + std::to_string(qubit) +
                                " not resolved at resolution " + std::to_string(n));
    }
}

}  // namespace

DyadicVector apply_gate(const GateKind& g, const DyadicVector& v) {
    check_qubit(g.qubit, v.n, "apply_gate");
    const std::size_t mask = std::size_t{1} << (v.n - g.qubit);
    const std::size_t dim = v.size();
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    const auto in = [&](std::size_t j) { return v.coeffs[static_cast<Eigen::Index>(j)]; };
    for (std::size_t j = 0; j < dim; ++j) {
        const bool digit = (j & mask) != 0;
        Complex value;
        switch (g.tag) {
            case PauliTag::X:
                value = in(j ^ mask);
                break;
            case PauliTag::Y:
                value = (digit ? kI : -kI) * in(j ^ mask);
                break;
            case PauliTag::Z:
                value = (digit ? -1.0 : 1.0) * in(j);
                break;
            case PauliTag::Plus:
                value = digit ? in(j ^ mask) : 0.0;
                break;
            case PauliTag::Minus:
                value = digit ? 0.0 : in(j ^ mask);
                break;
        }
        out[static_cast<Eigen::Index>(j)] = value;
    }
    return DyadicVector(v.n, std::move(out));
}

OperatorMatrix gate_matrix(const GateKind& g, int n) {
    check_qubit(g.qubit, n, "gate_matrix");
    const Eigen::Matrix2cd gate = single_qubit_matrix(g.tag);
    const Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
    for (int slot = 1; slot <= n; ++slot) {
        m = Eigen::kroneckerProduct(m, slot == g.qubit ? gate : eye).eval();
    }
    return OperatorMatrix(n, Basis::Scaling, std::move(m));
}

DyadicVector qft_borel(const DyadicVector& v) {
    const std::size_t dim = v.size();
    Eigen::VectorXcd data = v.coeffs;
    // Bit-reversal permutation, then decimation-in-time butterflies with
    // the +i kernel.
    for (std::size_t j = 1, rev = 0; j < dim; ++j) {
        std::size_t bit = dim >> 1;
        for (; rev & bit; bit >>= 1) rev ^= bit;
        rev ^= bit;
        if (j < rev) std::swap(data[static_cast<Eigen::Index>(j)], data[static_cast<Eigen::Index>(rev)]);
    }
    for (std::size_t len = 2; len <= dim; len <<= 1) {
        std::vector<Complex> twiddle(len / 2);
        for (std::size_t j = 0; j < len / 2; ++j) {
            twiddle[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                             static_cast<double>(len));
        }
        for (std::size_t start = 0; start < dim; start += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto lo = static_cast<Eigen::Index>(start + j);
                const auto hi = static_cast<Eigen::Index>(start + j + len / 2);
                const Complex a = data[lo];
                const Complex b = data[hi] * twiddle[j];
                data[lo] = a + b;
                data[hi] = a - b;
            }
        }
    }
    data *= half_power_scale(v.n);
    return DyadicVector(v.n, std::move(data));
}

DyadicVector dft_oracle(const DyadicVector& v) {
    const std::size_t dim = v.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        Complex sum = 0.0;
        for (std::size_t l = 0; l < dim; ++l) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>((k * l) % dim) / static_cast<double>(dim);
            sum += v.coeffs[static_cast<Eigen::Index>(l)] * std::polar(1.0, angle);
        }
        out[static_cast<Eigen::Index>(k)] = sum;
    }
    out *= half_power_scale(v.n);
    return DyadicVector(v.n, std::move(out));
}

std::vector<KernelSegment> kernel_support(const GateKind& g) {
    if (g.qubit < 1) throw std::out_of_range("kernel_support: qubit index must be >= 1");
    const int k = g.qubit;
    const double step = std::ldexp(1.0, -k);
    std::vector<KernelSegment> segments;
    for (std::size_t c = 0; c < cell_count(k); ++c) {
        const bool digit = (c & 1u) != 0;  // eps_k is the last address bit at scale k
        const double x0 = static_cast<double>(c) * step;
        const double x1 = x0 + step;
        double offset = 0.0;
        Complex weight = 1.0;
        switch (g.tag) {
            case PauliTag::X:
                offset = digit ? -step : step;
                break;
            case PauliTag::Y:
                offset = digit ? -step : step;
                weight = digit ? kI : -kI;
                break;
            case PauliTag::Z:
                weight = digit ? -1.0 : 1.0;
                break;
            case PauliTag::Plus:
                if (!digit) continue;  // output vanishes where eps_k = 0
                offset = -step;
                break;
            case PauliTag::Minus:
                if (digit) continue;
                offset = step;
                break;
        }
        segments.push_back({x0, x0 + offset, x1, x1 + offset, weight});
    }
    return segments;
}

}  // namespace multires

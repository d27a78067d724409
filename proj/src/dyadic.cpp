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

#include "multires/dyadic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace multires {

namespace {

void check_resolution(int n, const char* where) {
    if (n < 0) {
        throw std::out_of_range(std::string(where) + ": negative resolution " +
                                std::to_string(n));
    }
    if (n >= 63) {
        throw std::out_of_range(std::string(where) + ": resolution " +
                                std::to_string(n) + " overflows the cell index");
    }
}

}  // namespace

double half_power_scale(int levels) {
    return std::sqrt(std::ldexp(1.0, -levels));
}

std::size_t bits_to_index(const BitString& bits) {
    std::size_t k = 0;
    for (std::uint8_t b : bits) {
        if (b > 1) throw std::invalid_argument("bits_to_index: digit not in {0,1}");
        k = (k << 1) | b;
    }
    return k;
}

BitString index_to_bits(std::size_t k, int n) {
    check_resolution(n, "index_to_bits");
    if (k >= cell_count(n)) {
        throw std::out_of_range("index_to_bits: index " + std::to_string(k) +
                                " out of range for n=" + std::to_string(n));
    }
    BitString bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        bits[static_cast<std::size_t>(j)] =
            static_cast<std::uint8_t>((k >> (n - 1 - j)) & 1u);
    }
    return bits;
}

DyadicInterval::DyadicInterval(int resolution, std::size_t cell)
    : n(resolution), k(cell) {
    check_resolution(n, "DyadicInterval");
    if (k >= cell_count(n)) {
        throw std::out_of_range("DyadicInterval: cell index out of range");
    }
}

double DyadicInterval::lower() const { return std::ldexp(static_cast<double>(k), -n); }
double DyadicInterval::upper() const { return std::ldexp(static_cast<double>(k + 1), -n); }
double DyadicInterval::measure() const { return std::ldexp(1.0, -n); }

CellPoint::CellPoint(int m, std::size_t j) : resolution(m), cell(j) {
    check_resolution(m, "CellPoint");
    if (j >= cell_count(m)) {
        throw std::out_of_range("CellPoint: cell index out of range");
    }
}

int epsilon_digit(const CellPoint& p, int k) {
    if (k < 1 || k > p.resolution) {
        throw std::out_of_range("epsilon_digit: digit " + std::to_string(k) +
                                " not resolved at resolution " +
                                std::to_string(p.resolution));
    }
    return static_cast<int>((p.cell >> (p.resolution - k)) & 1u);
}

DyadicVector::DyadicVector(int resolution, Eigen::VectorXcd values)
    : n(resolution), coeffs(std::move(values)) {
    check_resolution(n, "DyadicVector");
    if (coeffs.size() != static_cast<Eigen::Index>(cell_count(n))) {
        throw std::invalid_argument("DyadicVector: expected 2^" + std::to_string(n) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    if (!coeffs.allFinite()) {
        throw std::invalid_argument("DyadicVector: non-finite coefficient");
    }
}

DyadicVector DyadicVector::zero(int n) {
    check_resolution(n, "DyadicVector::zero");
    return DyadicVector(n, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cell_count(n))));
}

DyadicVector DyadicVector::basis_state(const BitString& bits) {
    const int n = static_cast<int>(bits.size());
    auto v = DyadicVector::zero(n);
    v.coeffs[static_cast<Eigen::Index>(bits_to_index(bits))] = 1.0;
    return v;
}

DyadicVector DyadicVector::constant(int n) {
    check_resolution(n, "DyadicVector::constant");
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    return DyadicVector(n, Eigen::VectorXcd::Constant(dim, half_power_scale(n)));
}

DyadicVector embed(const DyadicVector& v, int m) {
    check_resolution(m, "embed");
    if (m < v.n) {
        throw std::out_of_range("embed: target resolution " + std::to_string(m) +
                                " below source " + std::to_string(v.n));
    }
    if (m == v.n) return v;
    const int levels = m - v.n;
    const std::size_t children = cell_count(levels);
    const double scale = half_power_scale(levels);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(cell_count(m)));
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Complex value = v.coeffs[static_cast<Eigen::Index>(j)] * scale;
        for (std::size_t c = 0; c < children; ++c) {
            out[static_cast<Eigen::Index>(j * children + c)] = value;
        }
    }
    return DyadicVector(m, std::move(out));
}

DyadicVector project(const DyadicVector& v, int n) {
    check_resolution(n, "project");
    if (n > v.n) {
        throw std::out_of_range("project: target resolution " + std::to_string(n) +
                                " above source " + std::to_string(v.n));
    }
    if (n == v.n) return v;
    const int levels = v.n - n;
    const std::size_t children = cell_count(levels);
    const double scale = half_power_scale(levels);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(cell_count(n)));
    for (std::size_t j = 0; j < cell_count(n); ++j) {
        Complex sum = 0.0;
        for (std::size_t c = 0; c < children; ++c) {
            sum += v.coeffs[static_cast<Eigen::Index>(j * children + c)];
        }
        out[static_cast<Eigen::Index>(j)] = sum * scale;
    }
    return DyadicVector(n, std::move(out));
}

}  // namespace multires

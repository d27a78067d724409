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

#include "multires/periodized.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace multires {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_level(int n, const char* where) {
    if (n < 1 || n >= 31) {
        throw std::out_of_range(std::string(where) + ": resolution " + std::to_string(n) +
                                " out of range");
    }
}

PauliTag axis_tag(Axis axis) {
    switch (axis) {
        case Axis::X: return PauliTag::X;
        case Axis::Y: return PauliTag::Y;
        case Axis::Z: return PauliTag::Z;
    }
    throw std::invalid_argument("unknown axis");
}

// sum_{k=1}^{n} weight(k) * sigma_tag^k, written entry by entry. Column j of
// sigma^k has a single nonzero determined by digit k of j.
Eigen::MatrixXcd gate_sum(PauliTag tag, int n, const std::vector<double>& weight) {
    const std::size_t dim = cell_count(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (int k = 1; k <= n; ++k) {
        const double w = weight[static_cast<std::size_t>(k - 1)];
        const std::size_t mask = std::size_t{1} << (n - k);
        for (std::size_t j = 0; j < dim; ++j) {
            const bool digit = (j & mask) != 0;
            const auto col = static_cast<Eigen::Index>(j);
            const auto flipped = static_cast<Eigen::Index>(j ^ mask);
            switch (tag) {
                case PauliTag::X:
                    m(flipped, col) += w;
                    break;
                case PauliTag::Y:
                    // Output lands on the flipped cell, whose digit is the
                    // negation of `digit`.
                    m(flipped, col) += (digit ? -kI : kI) * w;
                    break;
                case PauliTag::Z:
                    m(col, col) += digit ? -w : w;
                    break;
                case PauliTag::Plus:
                    if (!digit) m(flipped, col) += w;
                    break;
                case PauliTag::Minus:
                    if (digit) m(flipped, col) += w;
                    break;
            }
        }
    }
    return m;
}

std::vector<double> dyadic_weights(int n) {
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = std::ldexp(1.0, -k);
    return w;
}

// Galerkin matrix of the antiderivative: 2^-n strictly below the diagonal,
// 2^-(n+1) on it.
Eigen::MatrixXcd antiderivative(int n) {
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    const double cell = std::ldexp(1.0, -n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) m(i, j) = cell;
        m(i, i) = cell / 2.0;
    }
    return m;
}

// The 0/1 counting matrix (1 above the diagonal) used by the qualitative
// truncated plots; differs from the Galerkin matrix by scale, orientation
// and diagonal weight.
Eigen::MatrixXcd antiderivative_counting(int n) {
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = i + 1; j < dim; ++j) m(i, j) = 1.0;
    }
    return m;
}

// Diagonal of cell averages of the multiplier 1 - 2x: 1 - (2j+1)/2^n.
Eigen::VectorXd multiplier_z_diagonal(int n) {
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    Eigen::VectorXd d(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        d[j] = 1.0 - std::ldexp(static_cast<double>(2 * j + 1), -n);
    }
    return d;
}

Eigen::MatrixXcd build_entries(const PeriodizedKind& kind, int n, bool tail);

Eigen::MatrixXcd tagged(PeriodizedTag tag, int n, bool tail) {
    return build_entries(PeriodizedKind::plain(tag), n, tail);
}

Eigen::MatrixXcd build_entries(const PeriodizedKind& kind, int n, bool tail) {
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    const auto eye = Eigen::MatrixXcd::Identity(dim, dim);
    const std::vector<double> w = dyadic_weights(n);
    const double tail_x = std::ldexp(1.0, -n);        // sum_{k>n} 2^-k
    const double tail_pm = std::ldexp(1.0, -(n + 1)); // half of it: the unresolved
                                                      // shift averages to 1/2
    switch (kind.tag) {
        case PeriodizedTag::CX:
            return gate_sum(PauliTag::X, n, w) + (tail ? tail_x : 0.0) * eye;
        case PeriodizedTag::CPlus:
            return gate_sum(PauliTag::Plus, n, w) + (tail ? tail_pm : 0.0) * eye;
        case PeriodizedTag::CMinus:
            return gate_sum(PauliTag::Minus, n, w) + (tail ? tail_pm : 0.0) * eye;
        case PeriodizedTag::CY:
            // The +- tails cancel, so truncation and projection coincide.
            return gate_sum(PauliTag::Y, n, w);
        case PeriodizedTag::CZ:
            return multiplier_z_diagonal(n).cast<Complex>().asDiagonal();
        case PeriodizedTag::V:
            return (-0.5 * multiplier_z_diagonal(n)).cast<Complex>().asDiagonal();
        case PeriodizedTag::L:
            return tail ? antiderivative(n) : antiderivative_counting(n);
        case PeriodizedTag::LT:
            return tail ? antiderivative(n).transpose().eval()
                        : antiderivative_counting(n).transpose().eval();
        case PeriodizedTag::K:
            return kI * (tagged(PeriodizedTag::LT, n, tail) - tagged(PeriodizedTag::L, n, tail));
        case PeriodizedTag::PMinus:
            return tagged(PeriodizedTag::CMinus, n, tail) + tagged(PeriodizedTag::L, n, tail);
        case PeriodizedTag::PPlus:
            return tagged(PeriodizedTag::CPlus, n, tail) + tagged(PeriodizedTag::LT, n, tail);
        case PeriodizedTag::CTheta: {
            const double t = kind.theta.value();
            return std::cos(t) * tagged(PeriodizedTag::CX, n, tail) +
                   std::sin(t) * tagged(PeriodizedTag::CY, n, tail);
        }
        case PeriodizedTag::CThetaCorrected: {
            const double t = kind.theta.value();
            return build_entries(PeriodizedKind::equator(PeriodizedTag::CTheta, t), n, tail) +
                   std::sin(t) * tagged(PeriodizedTag::K, n, tail);
        }
        case PeriodizedTag::Bloch: {
            const BlochWeights bw = kind.bloch.value();
            return bw.alpha * tagged(PeriodizedTag::CX, n, tail) +
                   bw.beta * tagged(PeriodizedTag::CY, n, tail) +
                   bw.gamma * tagged(PeriodizedTag::CZ, n, tail);
        }
    }
    throw std::invalid_argument("build_projected: unknown operator tag");
}

}  // namespace

PeriodizedKind PeriodizedKind::plain(PeriodizedTag t) {
    if (t == PeriodizedTag::CTheta || t == PeriodizedTag::CThetaCorrected) {
        throw std::invalid_argument("equator operators require an angle");
    }
    if (t == PeriodizedTag::Bloch) {
        throw std::invalid_argument("the Bloch operator requires weights");
    }
    return PeriodizedKind{t, std::nullopt, std::nullopt};
}

PeriodizedKind PeriodizedKind::equator(PeriodizedTag t, double theta) {
    if (t != PeriodizedTag::CTheta && t != PeriodizedTag::CThetaCorrected) {
        throw std::invalid_argument("only the equator operators take an angle");
    }
    if (!std::isfinite(theta)) throw std::invalid_argument("non-finite angle");
    return PeriodizedKind{t, theta, std::nullopt};
}

PeriodizedKind PeriodizedKind::bloch_point(double alpha, double beta, double gamma) {
    const double r2 = alpha * alpha + beta * beta + gamma * gamma;
    if (!std::isfinite(r2) || std::abs(r2 - 1.0) > 1e-12) {
        throw std::invalid_argument("Bloch weights must lie on the unit sphere");
    }
    return PeriodizedKind{PeriodizedTag::Bloch, std::nullopt, BlochWeights{alpha, beta, gamma}};
}

LambdaWeights LambdaWeights::dyadic(int n) {
    check_level(n, "LambdaWeights::dyadic");
    return LambdaWeights{dyadic_weights(n)};
}

OperatorMatrix build_finite_array(Axis axis, const LambdaWeights& weights) {
    const int n = weights.qubits();
    check_level(n, "build_finite_array");
    return OperatorMatrix(n, Basis::Scaling, gate_sum(axis_tag(axis), n, weights.lambda));
}

std::vector<double> finite_eigs_closed_form(const LambdaWeights& weights) {
    const int n = weights.qubits();
    check_level(n, "finite_eigs_closed_form");
    std::vector<double> eigs;
    eigs.reserve(cell_count(n));
    for (std::size_t pattern = 0; pattern < cell_count(n); ++pattern) {
        double sum = 0.0;
        for (int k = 1; k <= n; ++k) {
            const bool flip = (pattern >> (n - k)) & 1u;
            sum += (flip ? -1.0 : 1.0) * weights.lambda[static_cast<std::size_t>(k - 1)];
        }
        eigs.push_back(sum);
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

OperatorMatrix build_projected(const PeriodizedKind& kind, int n, bool include_tail) {
    check_level(n, "build_projected");
    const bool needs_theta =
        kind.tag == PeriodizedTag::CTheta || kind.tag == PeriodizedTag::CThetaCorrected;
    if (needs_theta != kind.theta.has_value()) {
        throw std::invalid_argument("build_projected: angle given for the wrong operator");
    }
    if ((kind.tag == PeriodizedTag::Bloch) != kind.bloch.has_value()) {
        throw std::invalid_argument("build_projected: weights given for the wrong operator");
    }
    return OperatorMatrix(n, Basis::Scaling, build_entries(kind, n, include_tail));
}

DyadicVector apply_periodized(const PeriodizedKind& kind, const DyadicVector& v) {
    const int n = v.n;
    check_level(n, "apply_periodized");
    switch (kind.tag) {
        case PeriodizedTag::CX:
        case PeriodizedTag::CPlus:
        case PeriodizedTag::CMinus: {
            PauliTag tag = PauliTag::X;
            double tail = std::ldexp(1.0, -n);
            if (kind.tag != PeriodizedTag::CX) {
                tag = kind.tag == PeriodizedTag::CPlus ? PauliTag::Plus : PauliTag::Minus;
                tail = std::ldexp(1.0, -(n + 1));
            }
            Eigen::VectorXcd acc = tail * v.coeffs;
            for (int k = 1; k <= n; ++k) {
                acc += std::ldexp(1.0, -k) * apply_gate({tag, k}, v).coeffs;
            }
            return DyadicVector(n, std::move(acc));
        }
        case PeriodizedTag::CY: {
            Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(v.coeffs.size());
            for (int k = 1; k <= n; ++k) {
                acc += std::ldexp(1.0, -k) * apply_gate({PauliTag::Y, k}, v).coeffs;
            }
            return DyadicVector(n, std::move(acc));
        }
        case PeriodizedTag::CZ: {
            const Eigen::VectorXd diag = multiplier_z_diagonal(n);
            return DyadicVector(n, diag.cast<Complex>().cwiseProduct(v.coeffs));
        }
        case PeriodizedTag::CTheta: {
            const double t = kind.theta.value();
            Eigen::VectorXcd acc =
                std::cos(t) * apply_periodized(PeriodizedKind::plain(PeriodizedTag::CX), v).coeffs +
                std::sin(t) * apply_periodized(PeriodizedKind::plain(PeriodizedTag::CY), v).coeffs;
            return DyadicVector(n, std::move(acc));
        }
        default:
            throw std::invalid_argument(
                "apply_periodized: only CX, CY, CZ, CPlus, CMinus and CTheta have a "
                "matrix-free action");
    }
}

double fixed_vector_check(PeriodizedTag tag, int n) {
    if (tag != PeriodizedTag::PMinus && tag != PeriodizedTag::PPlus) {
        throw std::invalid_argument("fixed_vector_check: expected PMinus or PPlus");
    }
    check_level(n, "fixed_vector_check");
    const OperatorMatrix m = build_projected(PeriodizedKind::plain(tag), n);
    const DyadicVector chi = DyadicVector::constant(n);
    return (m.entries * chi.coeffs - chi.coeffs).norm();
}

double operator_norm(const OperatorMatrix& M) {
    const Eigen::MatrixXcd& a = M.entries;
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("operator_norm: eigensolver failed to converge");
        }
        return solver.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    if (svd.info() != Eigen::Success) {
        throw std::runtime_error("operator_norm: SVD failed to converge");
    }
    return svd.singularValues()[0];
}

}  // namespace multires

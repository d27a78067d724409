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

#include "multires/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace multires {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_nonnegative(int n, const char* where) {
    if (n < 0 || n >= 31) {
        throw std::out_of_range(std::string(where) + ": level " + std::to_string(n) +
                                " out of range");
    }
}

enum class BlockFamily { Full, Lower };

// Shared doubling step: top-right gets `upper`, bottom-left gets `lower`.
Eigen::MatrixXcd doubled(const Eigen::MatrixXcd& d, Complex upper, Complex lower) {
    const Eigen::Index half = d.rows();
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(2 * half, 2 * half);
    next.topLeftCorner(half, half) = 0.5 * d;
    next.bottomRightCorner(half, half) = 0.5 * d;
    next.topRightCorner(half, half) =
        0.5 * upper * Eigen::MatrixXcd::Identity(half, half);
    next.bottomLeftCorner(half, half) =
        0.5 * lower * Eigen::MatrixXcd::Identity(half, half);
    return next;
}

Eigen::MatrixXcd run_recurrence(int n, Complex upper, Complex lower) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(1, 1);
    for (int m = 0; m < n; ++m) d = doubled(d, upper, lower);
    return d;
}

// Scale boundaries of the canonical Haar order: 1, 1, 2, 4, ..., 2^(n-1).
std::vector<Eigen::Index> block_sizes(int n) {
    std::vector<Eigen::Index> sizes{1};
    for (int m = 0; m < n; ++m) sizes.push_back(static_cast<Eigen::Index>(cell_count(m)));
    return sizes;
}

Complex recurrence_phase(double theta, ThetaConvention convention) {
    const double sign = convention == ThetaConvention::Paper ? 1.0 : -1.0;
    return std::polar(1.0, sign * theta);
}

void normalize_phase(Eigen::VectorXcd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > 1e-12) {
            v *= std::conj(v[i]) / mag;
            break;
        }
    }
    v.normalize();
}

}  // namespace

std::vector<Eigen::Index> BlockList::sizes() const {
    std::vector<Eigen::Index> s;
    s.reserve(blocks.size());
    for (const auto& b : blocks) s.push_back(b.rows());
    return s;
}

Eigen::MatrixXcd recurrence_D(int n) {
    check_nonnegative(n, "recurrence_D");
    return run_recurrence(n, 1.0, 1.0);
}

Eigen::MatrixXcd recurrence_D_minus(int n) {
    check_nonnegative(n, "recurrence_D_minus");
    return run_recurrence(n, 1.0, 0.0);
}

Eigen::MatrixXcd recurrence_D_plus(int n) {
    check_nonnegative(n, "recurrence_D_plus");
    return recurrence_D_minus(n).adjoint();
}

Eigen::MatrixXcd recurrence_D_theta(int n, double theta, ThetaConvention convention) {
    check_nonnegative(n, "recurrence_D_theta");
    const Complex phase = recurrence_phase(theta, convention);
    return run_recurrence(n, phase, std::conj(phase));
}

BlockList extract_blocks(const OperatorMatrix& M) {
    if (M.basis != Basis::Haar) {
        throw std::invalid_argument("extract_blocks: operator must be in the Haar basis");
    }
    const std::vector<Eigen::Index> sizes = block_sizes(M.n);
    BlockList list;
    double off_sq = 0.0;
    Eigen::Index offset = 0;
    for (const Eigen::Index size : sizes) {
        list.blocks.push_back(M.entries.block(offset, offset, size, size));
        offset += size;
    }
    // Accumulate the off-block mass directly; forming |M|^2 - sum |block|^2
    // would cancel catastrophically at the residuals we assert.
    offset = 0;
    std::vector<Eigen::Index> block_of(static_cast<std::size_t>(M.dim()));
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        for (Eigen::Index i = 0; i < sizes[b]; ++i) {
            block_of[static_cast<std::size_t>(offset + i)] = static_cast<Eigen::Index>(b);
        }
        offset += sizes[b];
    }
    for (Eigen::Index j = 0; j < M.dim(); ++j) {
        for (Eigen::Index i = 0; i < M.dim(); ++i) {
            if (block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(j)]) {
                off_sq += std::norm(M.entries(i, j));
            }
        }
    }
    list.off_block_residual = std::sqrt(off_sq);
    return list;
}

std::vector<EigenPair> eig_recurrence_theta(int n, double theta, ThetaConvention convention) {
    if (n < 1) throw std::out_of_range("eig_recurrence_theta: level must be >= 1");
    check_nonnegative(n, "eig_recurrence_theta");
    const Complex phase = recurrence_phase(theta, convention);

    struct Raw {
        double value;
        Eigen::VectorXcd vector;
    };
    std::vector<Raw> pairs;
    pairs.push_back({0.5, (Eigen::VectorXcd(2) << phase, 1.0).finished()});
    pairs.push_back({-0.5, (Eigen::VectorXcd(2) << phase, -1.0).finished()});
    for (int m = 1; m < n; ++m) {
        std::vector<Raw> next;
        next.reserve(2 * pairs.size());
        for (const Raw& p : pairs) {
            const Eigen::Index half = p.vector.size();
            for (const double s : {1.0, -1.0}) {
                Eigen::VectorXcd v(2 * half);
                v.head(half) = phase * p.vector;
                v.tail(half) = s * p.vector;
                next.push_back({0.5 * (p.value + s), std::move(v)});
            }
        }
        pairs = std::move(next);
    }

    std::vector<EigenPair> out;
    out.reserve(pairs.size());
    const double scale = std::ldexp(1.0, n);
    for (Raw& p : pairs) {
        normalize_phase(p.vector);
        EigenPair e;
        e.value = p.value;
        e.vector = std::move(p.vector);
        e.level = n;
        e.rank = static_cast<int>(std::lround((std::abs(p.value) * scale - 1.0) / 2.0));
        e.sign = p.value >= 0.0 ? 1 : -1;
        e.theta = theta;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const EigenPair& a, const EigenPair& b) {
        return a.value.real() < b.value.real();
    });
    return out;
}

std::vector<double> spectrum_closed_form(int n) {
    if (n < 1) throw std::out_of_range("spectrum_closed_form: level must be >= 1");
    check_nonnegative(n, "spectrum_closed_form");
    std::vector<double> values;
    values.reserve(cell_count(n));
    for (std::size_t k = 0; k < cell_count(n - 1); ++k) {
        const double v = std::ldexp(static_cast<double>(2 * k + 1), -n);
        values.push_back(-v);
        values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    return values;
}

RemainderReport remainder_matrix(int n) {
    if (n < 2) throw std::out_of_range("remainder_matrix: level must be >= 2");
    const OperatorMatrix hy =
        conjugate_to_haar(build_projected(PeriodizedKind::plain(PeriodizedTag::CY), n));
    const OperatorMatrix hk =
        conjugate_to_haar(build_projected(PeriodizedKind::plain(PeriodizedTag::K), n));

    const std::vector<Eigen::Index> sizes = block_sizes(n);
    const auto strip_blocks = [&](const Eigen::MatrixXcd& m) {
        Eigen::MatrixXcd off = m;
        Eigen::Index offset = 0;
        for (const Eigen::Index size : sizes) {
            off.block(offset, offset, size, size).setZero();
            offset += size;
        }
        return off;
    };

    RemainderReport report;
    Eigen::MatrixXcd remainder = strip_blocks(hy.entries);
    report.cancellation_error =
        (remainder + strip_blocks(hk.entries)).cwiseAbs().maxCoeff();
    report.max_abs = remainder.cwiseAbs().maxCoeff(&report.max_row, &report.max_col);
    Eigen::Index offset = 0;
    for (const Eigen::Index size : sizes) {
        report.per_scale_max.push_back(
            remainder.middleRows(offset, size).cwiseAbs().maxCoeff());
        offset += size;
    }
    report.remainder = OperatorMatrix(n, Basis::Haar, std::move(remainder));
    return report;
}

std::vector<EigenPair> dense_eig_oracle(const OperatorMatrix& M) {
    const Eigen::MatrixXcd& a = M.entries;
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
    const bool hermitian = (a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale;

    std::vector<EigenPair> out;
    const auto collect = [&out, &a](const auto& solver) {
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("dense_eig_oracle: eigensolver did not converge");
        }
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            EigenPair e;
            e.value = solver.eigenvalues()[i];
            e.vector = solver.eigenvectors().col(i);
            out.push_back(std::move(e));
        }
    };
    if (hermitian) {
        collect(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(a));
    } else {
        collect(Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(a));
    }
    const double norm_bound = 1e-9 * a.norm();
    for (EigenPair& e : out) {
        normalize_phase(e.vector);
        const double residual = (a * e.vector - e.value * e.vector).norm();
        if (residual > std::max(norm_bound, 1e-300)) {
            throw std::runtime_error("dense_eig_oracle: residual " + std::to_string(residual) +
                                     " exceeds tolerance");
        }
    }
    std::sort(out.begin(), out.end(), [](const EigenPair& x, const EigenPair& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

}  // namespace multires

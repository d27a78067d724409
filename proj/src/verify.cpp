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

#include "multires/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "multires/dynamics.hpp"

namespace multires {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2e", x);
    return buffer;
}

Eigen::VectorXcd random_vector(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = Complex(re, im);
    }
    v.normalize();
    return v;
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("verification eigensolver did not converge");
    }
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end());
    return values;
}

double max_multiset_gap(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// --- criterion 1 ------------------------------------------------------------

CriterionResult check_haar(int n_cap, std::uint64_t seed) {
    const int top = n_cap > 0 ? n_cap : 12;
    const int dense_top = std::min(top, 10);
    std::mt19937_64 rng(seed);
    double roundtrip = 0.0, parseval = 0.0, dense_gap = 0.0;
    for (int n = 1; n <= top; ++n) {
        const auto dim = static_cast<Eigen::Index>(cell_count(n));
        Eigen::MatrixXcd dense;
        if (n <= dense_top) dense = haar_matrix(n).entries;
        for (int r = 0; r < 5; ++r) {
            const DyadicVector v(n, random_vector(rng, dim));
            const HaarVector h = haar_forward(v);
            roundtrip = std::max(roundtrip, (haar_inverse(h).coeffs - v.coeffs).norm());
            parseval = std::max(parseval, std::abs(h.norm() - v.norm()));
            if (n <= dense_top) {
                dense_gap = std::max(
                    dense_gap, (dense * v.coeffs - h.coeffs).cwiseAbs().maxCoeff());
            }
        }
    }
    const bool ok = roundtrip <= 1e-12 && parseval <= 1e-12 && dense_gap <= 1e-12;
    return {"haar",
            "roundtrip " + fmt(roundtrip) + ", parseval " + fmt(parseval) +
                ", fast vs dense " + fmt(dense_gap) + " (n<=" + std::to_string(top) + ")",
            ok, 0.0};
}

// --- criterion 2 ------------------------------------------------------------

CriterionResult check_gates(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 8;
    constexpr PauliTag kTags[] = {PauliTag::X, PauliTag::Y, PauliTag::Z, PauliTag::Plus,
                                  PauliTag::Minus};
    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
        const auto dim = static_cast<Eigen::Index>(cell_count(n));
        for (int k = 1; k <= n; ++k) {
            for (const PauliTag tag : kTags) {
                const GateKind g{tag, k};
                const OperatorMatrix m = gate_matrix(g, n);
                for (Eigen::Index j = 0; j < dim; ++j) {
                    DyadicVector basis = DyadicVector::zero(n);
                    basis.coeffs[j] = 1.0;
                    const DyadicVector applied = apply_gate(g, basis);
                    worst = std::max(
                        worst, (applied.coeffs - m.entries.col(j)).cwiseAbs().maxCoeff());
                }
            }
        }
    }
    return {"gates", "max |digit action - kronecker column| " + fmt(worst), worst <= 1e-13,
            0.0};
}

// --- criterion 3 ------------------------------------------------------------

CriterionResult check_finite(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 8;
    double spec_gap = 0.0;
    for (int n = 1; n <= top; ++n) {
        const LambdaWeights weights = LambdaWeights::dyadic(n);
        const std::vector<double> closed = finite_eigs_closed_form(weights);
        const std::vector<double> dense =
            sorted_eigenvalues(build_finite_array(Axis::X, weights).entries);
        spec_gap = std::max(spec_gap, max_multiset_gap(closed, dense));
    }

    // Haar block pattern of the two-qubit array: [l1+l2], [-l1+l2], then a
    // 2x2 block with -l2 on the diagonal and l1 off it.
    const double l1 = 0.5, l2 = 0.25;
    const OperatorMatrix ha =
        conjugate_to_haar(build_finite_array(Axis::X, LambdaWeights::dyadic(2)));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = l1 + l2;
    expected(1, 1) = -l1 + l2;
    expected(2, 2) = -l2;
    expected(3, 3) = -l2;
    expected(2, 3) = l1;
    expected(3, 2) = l1;
    const double block_gap = (ha.entries - expected).cwiseAbs().maxCoeff();

    const bool ok = spec_gap <= 1e-10 && block_gap <= 1e-12;
    return {"finite",
            "closed-form vs dense spectra " + fmt(spec_gap) + ", 2-qubit haar pattern " +
                fmt(block_gap),
            ok, 0.0};
}

// --- criterion 4 ------------------------------------------------------------

CriterionResult check_blocks(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 10;
    double residual = 0.0, entry_gap = 0.0;
    for (int n = 1; n <= top; ++n) {
        for (const bool minus : {true, false}) {
            const auto tag = minus ? PeriodizedTag::PMinus : PeriodizedTag::PPlus;
            const BlockList blocks =
                extract_blocks(conjugate_to_haar(build_projected(PeriodizedKind::plain(tag), n)));
            residual = std::max(residual, blocks.off_block_residual);
            entry_gap = std::max(
                entry_gap,
                (blocks.blocks[0] - Eigen::MatrixXcd::Ones(1, 1)).cwiseAbs().maxCoeff());
            for (int m = 0; m < n; ++m) {
                const Eigen::MatrixXcd want =
                    minus ? recurrence_D_minus(m) : recurrence_D_plus(m);
                entry_gap = std::max(
                    entry_gap,
                    (blocks.blocks[static_cast<std::size_t>(m + 1)] - want).cwiseAbs().maxCoeff());
            }
        }
    }
    const bool ok = residual <= 1e-12 && entry_gap <= 1e-12;
    return {"blocks",
            "off-block residual " + fmt(residual) + ", block recurrence gap " + fmt(entry_gap) +
                " (n<=" + std::to_string(top) + ")",
            ok, 0.0};
}

// --- criterion 5 ------------------------------------------------------------

CriterionResult check_equator(int n_cap, std::uint64_t) {
    const int n = n_cap > 0 ? n_cap : 8;
    const double pi = std::numbers::pi;
    double residual = 0.0, spec_gap = 0.0, closed_gap = 0.0, theta0_gap = 0.0, d0_gap = 0.0,
           head_gap = 0.0;
    for (const double theta : {0.0, pi / 3.0, pi / 2.0, 1.0, pi}) {
        const OperatorMatrix projected = build_projected(
            PeriodizedKind::equator(PeriodizedTag::CThetaCorrected, theta), n);
        const BlockList blocks = extract_blocks(conjugate_to_haar(projected));
        residual = std::max(residual, blocks.off_block_residual);
        head_gap = std::max(head_gap,
                            std::abs(blocks.blocks[0](0, 0) - Complex(std::cos(theta))));
        d0_gap = std::max(d0_gap, std::abs(blocks.blocks[1](0, 0)));
        for (int m = 1; m < n; ++m) {
            const auto& block = blocks.blocks[static_cast<std::size_t>(m + 1)];
            const std::vector<double> got = sorted_eigenvalues(block);
            spec_gap = std::max(
                spec_gap, max_multiset_gap(got, sorted_eigenvalues(recurrence_D_theta(m, theta))));
            closed_gap = std::max(closed_gap, max_multiset_gap(got, spectrum_closed_form(m)));
            if (theta == 0.0) {
                theta0_gap =
                    std::max(theta0_gap, (block - recurrence_D(m)).cwiseAbs().maxCoeff());
            }
        }
    }
    const bool ok = residual <= 1e-12 && head_gap <= 1e-12 && d0_gap <= 1e-12 &&
                    spec_gap <= 1e-10 && closed_gap <= 1e-10 && theta0_gap <= 1e-12;
    return {"equator",
            "off-block " + fmt(residual) + ", vs recurrence spectra " + fmt(spec_gap) +
                ", vs closed form " + fmt(closed_gap) + ", theta=0 entries " + fmt(theta0_gap),
            ok, 0.0};
}

// --- criterion 6 ------------------------------------------------------------

CriterionResult check_eigvecs(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 10;
    double worst = 0.0;
    for (const double theta : {0.0, std::numbers::pi / 3.0, 1.0}) {
        for (int n = 1; n <= top; ++n) {
            const Eigen::MatrixXcd d = recurrence_D_theta(n, theta);
            const std::vector<EigenPair> pairs = eig_recurrence_theta(n, theta);
            const auto dim = static_cast<Eigen::Index>(cell_count(n));
            Eigen::MatrixXcd vectors(dim, dim);
            Eigen::VectorXcd values(dim);
            for (Eigen::Index i = 0; i < dim; ++i) {
                vectors.col(i) = pairs[static_cast<std::size_t>(i)].vector;
                values[i] = pairs[static_cast<std::size_t>(i)].value;
            }
            const Eigen::MatrixXcd r = d * vectors - vectors * values.asDiagonal();
            worst = std::max(worst, r.colwise().norm().maxCoeff());
        }
    }
    return {"eigvecs", "max recurrence eigenpair residual " + fmt(worst), worst <= 1e-10, 0.0};
}

// --- criterion 7 ------------------------------------------------------------

CriterionResult check_fixed(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 10;
    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
        worst = std::max(worst, fixed_vector_check(PeriodizedTag::PMinus, n));
        worst = std::max(worst, fixed_vector_check(PeriodizedTag::PPlus, n));
    }
    return {"fixed", "max |P(chi) - chi| " + fmt(worst), worst <= 1e-12, 0.0};
}

// --- criterion 8 ------------------------------------------------------------

CriterionResult check_norms(int n_cap, std::uint64_t) {
    const int n = n_cap > 0 ? n_cap : 8;
    const double block_norm = std::ldexp(static_cast<double>(cell_count(n) - 1), -n);
    double worst_theta = 0.0, worst_block = 0.0;
    for (int j = 0; j < 32; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / 32.0;
        worst_theta = std::max(
            worst_theta,
            operator_norm(build_projected(PeriodizedKind::equator(PeriodizedTag::CTheta, theta),
                                          n)));
        const OperatorMatrix block(n, Basis::Scaling, recurrence_D_theta(n, theta));
        worst_block = std::max(worst_block, std::abs(operator_norm(block) - block_norm));
    }
    const bool ok = worst_theta <= 1.0 + 1e-10 && worst_block <= 1e-10;
    return {"norms",
            "max ||C_theta|| " + fmt(worst_theta) + ", corrected scale-" + std::to_string(n) +
                " block norm gap " + fmt(worst_block),
            ok, 0.0};
}

// --- criterion 9 ------------------------------------------------------------

CriterionResult check_remainder(int n_cap, std::uint64_t) {
    const int n = n_cap > 0 ? n_cap : 10;
    const RemainderReport report = remainder_matrix(n);
    const bool corner = report.max_row < 4 && report.max_col < 4;
    const bool ok = report.cancellation_error <= 1e-13 && corner;
    return {"remainder",
            "cancellation vs compact correction " + fmt(report.cancellation_error) +
                ", largest entry " + fmt(report.max_abs) + " at (" +
                std::to_string(report.max_row) + "," + std::to_string(report.max_col) + ")",
            ok, 0.0};
}

// --- criterion 10 -----------------------------------------------------------

CriterionResult check_qft(int n_cap, std::uint64_t seed) {
    const int top = n_cap > 0 ? n_cap : 8;
    std::mt19937_64 rng(seed + 10);
    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
        const auto dim = static_cast<Eigen::Index>(cell_count(n));
        for (int r = 0; r < 100; ++r) {
            const DyadicVector v(n, random_vector(rng, dim));
            worst = std::max(
                worst, (qft_borel(v).coeffs - dft_oracle(v).coeffs).cwiseAbs().maxCoeff());
        }
    }
    return {"qft", "max |fft - direct transform| " + fmt(worst), worst <= 1e-12, 0.0};
}

// --- criterion 11 -----------------------------------------------------------

CriterionResult check_adjoint(int n_cap, std::uint64_t seed) {
    const int top = n_cap > 0 ? n_cap : 10;
    std::mt19937_64 rng(seed + 11);
    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
        const Eigen::MatrixXcd ell =
            build_projected(PeriodizedKind::plain(PeriodizedTag::L), n).entries;
        const auto dim = static_cast<Eigen::Index>(cell_count(n));
        for (int r = 0; r < 20; ++r) {
            Eigen::VectorXcd f = random_vector(rng, dim);
            Eigen::VectorXcd g = random_vector(rng, dim);
            f.array() -= f.mean();
            g.array() -= g.mean();
            const Complex pairing = g.dot(ell * f) + (ell * g).dot(f);
            worst = std::max(worst, std::abs(pairing));
        }
    }
    return {"adjoint", "max |<g,Lf> + <Lg,f>| on mean-zero inputs " + fmt(worst),
            worst <= 1e-14, 0.0};
}

// --- criterion 12 -----------------------------------------------------------

CriterionResult check_dynamics(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 10;
    const double two_pi = 2.0 * std::numbers::pi;

    const FlowParams fp(0.7, 0.625);
    double period_gap = 0.0;
    for (const double q : {-2.0, -0.3, 0.0, 1.7}) {
        for (const double p : {-1.1, 0.0, 2.4}) {
            const PhasePoint moved = characteristic_flow({q, p}, two_pi, fp);
            period_gap = std::max(period_gap,
                                  std::hypot(moved.q - q, moved.p - p));
        }
    }

    double fixed_gap = 0.0;
    const PhasePoint center{-fp.lambda * fp.eigenvalue, 0.0};
    for (const double t : {0.3, 1.0, 2.5, 4.0, 6.0}) {
        const PhasePoint moved = characteristic_flow(center, t, fp);
        fixed_gap = std::max(fixed_gap, std::hypot(moved.q - center.q, moved.p - center.p));
    }

    const double lambda = 0.8;
    double spacing_gap = 0.0;
    for (int n = 1; n <= top; ++n) {
        const std::vector<double> spectrum = spectrum_closed_form(n);
        const double expected = lambda * std::ldexp(1.0, 1 - n);
        for (std::size_t i = 1; i < spectrum.size(); ++i) {
            const double gap = lambda * (spectrum[i] - spectrum[i - 1]);
            spacing_gap = std::max(spacing_gap, std::abs(gap - expected));
        }
    }

    const GaussianState bump{0.5, -0.3, 0.6, 0.5};
    const GridSpec spec{-4.0, 4.0, -4.0, 4.0, 512, 512};
    const WignerGrid start = rasterize(bump, spec);
    const WignerGrid evolved = evolve_wigner(start, two_pi, FlowParams(lambda, 0.375));
    const double mass_gap =
        std::abs(evolved.mass() - evolved.initial_mass) / std::abs(evolved.initial_mass);

    const bool ok = period_gap <= 1e-12 && fixed_gap <= 1e-14 && spacing_gap <= 1e-12 &&
                    mass_gap <= 1e-3;
    return {"dynamics",
            "period " + fmt(period_gap) + ", fixed point " + fmt(fixed_gap) + ", spacing " +
                fmt(spacing_gap) + ", mass drift " + fmt(mass_gap),
            ok, 0.0};
}

// --- criterion 13 -----------------------------------------------------------

CriterionResult check_density(int n_cap, std::uint64_t) {
    const int top = n_cap > 0 ? n_cap : 10;
    std::vector<double> values;
    for (int n = 1; n <= top; ++n) {
        const std::vector<double> part = spectrum_closed_form(n);
        values.insert(values.end(), part.begin(), part.end());
    }
    std::sort(values.begin(), values.end());
    double covering = std::max(values.front() + 1.0, 1.0 - values.back());
    for (std::size_t i = 1; i < values.size(); ++i) {
        covering = std::max(covering, (values[i] - values[i - 1]) / 2.0);
    }
    const double bound = std::ldexp(1.0, -top) + 1e-15;
    return {"density",
            "covering radius of [-1,1] " + fmt(covering) + " (bound " +
                fmt(std::ldexp(1.0, -top)) + ")",
            covering <= bound, 0.0};
}

struct CriterionSpec {
    const char* name;
    CriterionResult (*run)(int, std::uint64_t);
    double time_budget;  // seconds; 0 = no stated bound
};

constexpr CriterionSpec kCriteria[] = {
    {"haar", check_haar, 1.0},
    {"gates", check_gates, 30.0},
    {"finite", check_finite, 0.0},
    {"blocks", check_blocks, 60.0},
    {"equator", check_equator, 0.0},
    {"eigvecs", check_eigvecs, 0.0},
    {"fixed", check_fixed, 0.0},
    {"norms", check_norms, 0.0},
    {"remainder", check_remainder, 0.0},
    {"qft", check_qft, 0.0},
    {"adjoint", check_adjoint, 0.0},
    {"dynamics", check_dynamics, 0.0},
    {"density", check_density, 0.0},
};

}  // namespace

std::vector<std::string> criterion_names() {
    std::vector<std::string> names;
    for (const CriterionSpec& c : kCriteria) names.emplace_back(c.name);
    return names;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& options) {
    if (!options.only.empty()) {
        const auto names = criterion_names();
        if (std::find(names.begin(), names.end(), options.only) == names.end()) {
            throw std::invalid_argument("unknown criterion '" + options.only + "'");
        }
    }
    std::vector<CriterionResult> results;
    for (const CriterionSpec& c : kCriteria) {
        if (!options.only.empty() && options.only != c.name) continue;
        const auto start = Clock::now();
        CriterionResult result = c.run(options.max_n, options.seed);
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.time_budget > 0.0 && result.seconds >= c.time_budget) {
            result.passed = false;
            result.detail += " [exceeded " + fmt(c.time_budget) + "s budget]";
        }
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace multires

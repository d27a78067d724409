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

#include <doctest.h>

#include <numbers>
#include <random>

#include "multires/spectra.hpp"
#include "oracles.hpp"

using namespace multires;

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<double> sorted_real_eigs(const Eigen::MatrixXcd& m) {
    std::vector<double> out;
    for (const EigenPair& p : dense_eig_oracle(OperatorMatrix(
             static_cast<int>(std::log2(static_cast<double>(m.rows()))), Basis::Scaling, m))) {
        out.push_back(p.value.real());
    }
    return out;
}

}  // namespace

TEST_CASE("block doubling recurrences") {
    CHECK(recurrence_D(0)(0, 0) == Complex(0.0));
    Eigen::MatrixXcd d1(2, 2);
    d1 << 0.0, 0.5, 0.5, 0.0;
    CHECK((recurrence_D(1) - d1).cwiseAbs().maxCoeff() == 0.0);

    const std::vector<double> eigs = sorted_real_eigs(recurrence_D(2));
    CHECK(eigs.size() == 4);
    CHECK(eigs[0] == doctest::Approx(-0.75));
    CHECK(eigs[1] == doctest::Approx(-0.25));
    CHECK(eigs[2] == doctest::Approx(0.25));
    CHECK(eigs[3] == doctest::Approx(0.75));
}

TEST_CASE("one-sided recurrences are nilpotent and mutually adjoint") {
    Eigen::MatrixXcd dm1(2, 2);
    dm1 << 0.0, 0.5, 0.0, 0.0;
    CHECK((recurrence_D_minus(1) - dm1).cwiseAbs().maxCoeff() == 0.0);
    CHECK((recurrence_D_plus(1) - dm1.adjoint()).cwiseAbs().maxCoeff() == 0.0);

    for (int n = 0; n <= 6; ++n) {
        const Eigen::MatrixXcd dm = recurrence_D_minus(n);
        Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(dm.rows(), dm.cols());
        for (int e = 0; e <= n; ++e) power = (power * dm).eval();
        CHECK(power.cwiseAbs().maxCoeff() == 0.0);
        CHECK((recurrence_D_plus(n) - dm.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("phase recurrence is Hermitian with a theta-free spectrum") {
    const double theta = std::numbers::pi / 3.0;
    const Eigen::MatrixXcd d1 = recurrence_D_theta(1, theta, ThetaConvention::Paper);
    CHECK(std::abs(d1(0, 1) - 0.5 * std::polar(1.0, theta)) <= 1e-15);
    CHECK(std::abs(d1(1, 0) - 0.5 * std::polar(1.0, -theta)) <= 1e-15);
    const Eigen::MatrixXcd d1d = recurrence_D_theta(1, theta, ThetaConvention::Derived);
    CHECK(std::abs(d1d(0, 1) - 0.5 * std::polar(1.0, -theta)) <= 1e-15);

    CHECK((recurrence_D_theta(3, 0.0) - recurrence_D(3)).cwiseAbs().maxCoeff() == 0.0);

    for (const ThetaConvention convention : {ThetaConvention::Derived, ThetaConvention::Paper}) {
        const Eigen::MatrixXcd d3 = recurrence_D_theta(3, theta, convention);
        CHECK((d3 - d3.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        const std::vector<double> eigs = sorted_real_eigs(d3);
        const std::vector<double> closed = spectrum_closed_form(3);
        REQUIRE(eigs.size() == closed.size());
        for (std::size_t i = 0; i < eigs.size(); ++i) {
            CHECK(std::abs(eigs[i] - closed[i]) <= 1e-12);
        }
    }
}

TEST_CASE("block extraction walks the canonical scale boundaries") {
    const BlockList eye = extract_blocks(OperatorMatrix::identity(3, Basis::Haar));
    CHECK(eye.sizes() == std::vector<Eigen::Index>{1, 1, 2, 4});
    CHECK(eye.off_block_residual == 0.0);
    for (const auto& b : eye.blocks) {
        CHECK((b - Eigen::MatrixXcd::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff() ==
              0.0);
    }
    CHECK_THROWS_AS(extract_blocks(OperatorMatrix::identity(3, Basis::Scaling)),
                    std::invalid_argument);
}

TEST_CASE("haar blocks of the projected operators follow the recurrences") {
    for (int n = 1; n <= 6; ++n) {
        const BlockList minus = extract_blocks(
            conjugate_to_haar(build_projected(PeriodizedKind::plain(PeriodizedTag::PMinus), n)));
        CHECK(minus.off_block_residual <= 1e-12);
        CHECK(std::abs(minus.blocks[0](0, 0) - 1.0) <= 1e-14);
        for (int m = 0; m < n; ++m) {
            CHECK((minus.blocks[static_cast<std::size_t>(m + 1)] - recurrence_D_minus(m))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-13);
        }

        const BlockList x = extract_blocks(
            conjugate_to_haar(build_projected(PeriodizedKind::plain(PeriodizedTag::CX), n)));
        CHECK(x.off_block_residual <= 1e-12);
        for (int m = 0; m < n; ++m) {
            CHECK((x.blocks[static_cast<std::size_t>(m + 1)] - recurrence_D(m))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-13);
        }
    }
}

TEST_CASE("corrected families reduce to the derived phase recurrence entrywise") {
    const double theta = 1.3;
    const int n = 5;
    const OperatorMatrix corrected = build_projected(
        PeriodizedKind::equator(PeriodizedTag::CThetaCorrected, theta), n);
    const BlockList blocks = extract_blocks(conjugate_to_haar(corrected));
    CHECK(blocks.off_block_residual <= 1e-12);
    CHECK(std::abs(blocks.blocks[0](0, 0) - std::cos(theta)) <= 1e-14);
    for (int m = 0; m < n; ++m) {
        CHECK((blocks.blocks[static_cast<std::size_t>(m + 1)] -
               recurrence_D_theta(m, theta, ThetaConvention::Derived))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-13);
    }

    // The sum of the one-sided families gives the purely imaginary part.
    const BlockList yk = extract_blocks(conjugate_to_haar(OperatorMatrix(
        n, Basis::Scaling,
        build_projected(PeriodizedKind::plain(PeriodizedTag::CY), n).entries +
            build_projected(PeriodizedKind::plain(PeriodizedTag::K), n).entries)));
    CHECK(yk.off_block_residual <= 1e-12);
    for (int m = 0; m < n; ++m) {
        const Eigen::MatrixXcd want = kI * (recurrence_D_plus(m) - recurrence_D_minus(m));
        CHECK((yk.blocks[static_cast<std::size_t>(m + 1)] - want).cwiseAbs().maxCoeff() <=
              1e-13);
    }
}

TEST_CASE("recurrence eigenpairs agree with their matrices and the dense solver") {
    const double theta = std::numbers::pi / 3.0;
    for (const ThetaConvention convention : {ThetaConvention::Derived, ThetaConvention::Paper}) {
        const std::vector<EigenPair> base = eig_recurrence_theta(1, theta, convention);
        REQUIRE(base.size() == 2);
        CHECK(base[0].value.real() == doctest::Approx(-0.5));
        CHECK(base[1].value.real() == doctest::Approx(0.5));
        // Up to the returned phase normalization the base pair is (phase, +-1).
        const double expected_sign = convention == ThetaConvention::Paper ? theta : -theta;
        const Complex ratio = base[1].vector[0] / base[1].vector[1];
        CHECK(std::abs(ratio - std::polar(1.0, expected_sign)) <= 1e-12);
    }

    for (int n = 1; n <= 6; ++n) {
        const std::vector<EigenPair> pairs = eig_recurrence_theta(n, theta);
        CHECK(pairs.size() == cell_count(n));
        const Eigen::MatrixXcd d = recurrence_D_theta(n, theta);
        for (const EigenPair& p : pairs) {
            CHECK(std::abs(p.vector.norm() - 1.0) <= 1e-13);
            CHECK((d * p.vector - p.value * p.vector).norm() <= 1e-12);
            CHECK(p.value.real() ==
                  doctest::Approx(p.sign * std::ldexp(2.0 * p.rank + 1.0, -n)));
        }
    }

    const std::vector<EigenPair> dense =
        dense_eig_oracle(OperatorMatrix(2, Basis::Scaling, recurrence_D_theta(2, 0.0)));
    const std::vector<EigenPair> recur = eig_recurrence_theta(2, 0.0);
    for (std::size_t i = 0; i < dense.size(); ++i) {
        CHECK(std::abs(dense[i].value - recur[i].value) <= 1e-12);
    }

    CHECK_THROWS_AS(eig_recurrence_theta(0, 0.0), std::out_of_range);
    CHECK_THROWS_AS(spectrum_closed_form(0), std::out_of_range);
}

TEST_CASE("finite corrected shifts have spectrum {1, 0}") {
    // Consistent with blocks [1] followed by nilpotent ones. The zero
    // eigenvalues sit on Jordan-like blocks, so roundoff eps spreads them
    // by eps^(1/m); the bound below reflects that conditioning, while the
    // trace identity is exact.
    for (const auto tag : {PeriodizedTag::PMinus, PeriodizedTag::PPlus}) {
        const OperatorMatrix p = build_projected(PeriodizedKind::plain(tag), 4);
        const std::vector<EigenPair> eigs = dense_eig_oracle(p);
        for (std::size_t i = 0; i + 1 < eigs.size(); ++i) {
            CHECK(std::abs(eigs[i].value) <= 1e-3);
        }
        CHECK(std::abs(eigs.back().value - 1.0) <= 1e-10);
        CHECK(std::abs(p.entries.trace() - 1.0) <= 1e-12);
    }
}

TEST_CASE("closed-form spectra and their density") {
    CHECK(spectrum_closed_form(1) == std::vector<double>{-0.5, 0.5});
    const std::vector<double> three = spectrum_closed_form(3);
    CHECK(three == std::vector<double>{-0.875, -0.625, -0.375, -0.125, 0.125, 0.375, 0.625,
                                       0.875});

    std::vector<double> all;
    for (int n = 1; n <= 10; ++n) {
        const std::vector<double> part = spectrum_closed_form(n);
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    double covering = std::max(all.front() + 1.0, 1.0 - all.back());
    for (std::size_t i = 1; i < all.size(); ++i) {
        covering = std::max(covering, (all[i] - all[i - 1]) / 2.0);
    }
    CHECK(covering <= std::ldexp(1.0, -10) + 1e-15);
}

TEST_CASE("the off-block remainder is exactly minus the compact correction") {
    const RemainderReport report = remainder_matrix(6);
    CHECK(report.cancellation_error <= 1e-13);
    CHECK(report.max_row < 4);
    CHECK(report.max_col < 4);
    CHECK(report.remainder.basis == Basis::Haar);
    // Entry magnitudes die off with scale.
    REQUIRE(report.per_scale_max.size() == 7);
    CHECK(report.per_scale_max.back() < report.per_scale_max[1]);
    CHECK(report.max_abs == doctest::Approx(0.5));
    CHECK_THROWS_AS(remainder_matrix(1), std::out_of_range);
}

TEST_CASE("dense eigensolver oracle") {
    Eigen::MatrixXcd sigma_x(2, 2);
    sigma_x << 0.0, 1.0, 1.0, 0.0;
    const std::vector<EigenPair> basic =
        dense_eig_oracle(OperatorMatrix(1, Basis::Scaling, sigma_x));
    CHECK(basic[0].value.real() == doctest::Approx(-1.0));
    CHECK(basic[1].value.real() == doctest::Approx(1.0));
    // Phase convention: first nonvanishing component rotated real positive.
    CHECK(basic[0].vector[0].imag() == doctest::Approx(0.0));
    CHECK(basic[0].vector[0].real() > 0.0);

    std::mt19937_64 rng(41);
    const int n = 5;
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    Eigen::MatrixXcd a(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) a.col(j) = testing::random_complex(rng, dim);
    a = 0.5 * (a + a.adjoint()).eval();
    const std::vector<EigenPair> pairs =
        dense_eig_oracle(OperatorMatrix(n, Basis::Scaling, a));
    Eigen::MatrixXcd vectors(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        CHECK(std::abs(pairs[static_cast<std::size_t>(i)].value.imag()) <= 1e-12);
        vectors.col(i) = pairs[static_cast<std::size_t>(i)].vector;
    }
    CHECK((vectors.adjoint() * vectors - Eigen::MatrixXcd::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() <= 1e-9);
}

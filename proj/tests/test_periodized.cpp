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

#include <random>

#include "multires/periodized.hpp"
#include "multires/spectra.hpp"
#include "oracles.hpp"

using namespace multires;

namespace {

constexpr Complex kI{0.0, 1.0};

OperatorMatrix build(PeriodizedTag tag, int n, bool tail = true) {
    return build_projected(PeriodizedKind::plain(tag), n, tail);
}

}  // namespace

TEST_CASE("finite arrays combine weighted gates") {
    const OperatorMatrix z2 = build_finite_array(Axis::Z, LambdaWeights{{0.5, 0.25}});
    Eigen::VectorXcd diag(4);
    diag << 0.75, 0.25, -0.25, -0.75;
    CHECK((z2.entries - Eigen::MatrixXcd(diag.asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

    const OperatorMatrix x1 = build_finite_array(Axis::X, LambdaWeights{{1.0}});
    CHECK(std::abs(x1.entries(0, 1) - 1.0) == 0.0);
    CHECK(std::abs(x1.entries(0, 0)) == 0.0);

    for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        const Eigen::MatrixXcd m = build_finite_array(axis, LambdaWeights::dyadic(3)).entries;
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("signed sums enumerate the finite-array spectrum") {
    const std::vector<double> two = finite_eigs_closed_form(LambdaWeights{{0.5, 0.25}});
    CHECK(two == std::vector<double>{-0.75, -0.25, 0.25, 0.75});
    CHECK(finite_eigs_closed_form(LambdaWeights{{1.0}}) == std::vector<double>{-1.0, 1.0});

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uniform(0.05, 1.0);
    for (int n = 1; n <= 6; ++n) {
        std::vector<double> lambda(static_cast<std::size_t>(n));
        for (double& l : lambda) l = uniform(rng);
        const LambdaWeights weights{lambda};
        const std::vector<EigenPair> dense =
            dense_eig_oracle(build_finite_array(Axis::X, weights));
        const std::vector<double> closed = finite_eigs_closed_form(weights);
        REQUIRE(dense.size() == closed.size());
        for (std::size_t i = 0; i < closed.size(); ++i) {
            CHECK(std::abs(dense[i].value.real() - closed[i]) <= 1e-10);
            CHECK(std::abs(dense[i].value.imag()) <= 1e-10);
        }
    }
}

TEST_CASE("haar blocks of a three-qubit array with generic weights") {
    const double l1 = 0.37, l2 = 0.21, l3 = 0.11;
    const Eigen::MatrixXcd h =
        conjugate_to_haar(build_finite_array(Axis::X, LambdaWeights{{l1, l2, l3}})).entries;

    CHECK(std::abs(h(0, 0) - (l1 + l2 + l3)) <= 1e-14);
    CHECK(std::abs(h(1, 1) - (-l1 + l2 + l3)) <= 1e-14);

    Eigen::MatrixXcd pair(2, 2);
    pair << -l2 + l3, l1, l1, -l2 + l3;
    CHECK((h.block(2, 2, 2, 2) - pair).cwiseAbs().maxCoeff() <= 1e-14);

    Eigen::MatrixXcd quad(4, 4);
    quad << 0.0, l2, l1, 0.0,
            l2, 0.0, 0.0, l1,
            l1, 0.0, 0.0, l2,
            0.0, l1, l2, 0.0;
    quad -= l3 * Eigen::MatrixXcd::Identity(4, 4);
    CHECK((h.block(4, 4, 4, 4) - quad).cwiseAbs().maxCoeff() <= 1e-14);

    Eigen::MatrixXcd off = h;
    off(0, 0) = 0.0;
    off(1, 1) = 0.0;
    off.block(2, 2, 2, 2).setZero();
    off.block(4, 4, 4, 4).setZero();
    CHECK(off.cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("projected operators at the smallest resolution") {
    const Eigen::MatrixXcd pminus = build(PeriodizedTag::PMinus, 1).entries;
    CHECK((pminus - Eigen::MatrixXcd::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::MatrixXcd cx = build(PeriodizedTag::CX, 1).entries;
    CHECK((cx - Eigen::MatrixXcd::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::MatrixXcd cz = build(PeriodizedTag::CZ, 2).entries;
    Eigen::VectorXcd diag(4);
    diag << 0.75, 0.25, -0.25, -0.75;
    CHECK((cz - Eigen::MatrixXcd(diag.asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

    // Haar image of the projected PMinus at n=1: the constant function is
    // fixed and the detail space is annihilated.
    const Eigen::MatrixXcd haar_pm =
        conjugate_to_haar(build_projected(PeriodizedKind::plain(PeriodizedTag::PMinus), 1))
            .entries;
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK((haar_pm - expected).cwiseAbs().maxCoeff() <= 1e-15);

    CHECK_THROWS_AS(build(PeriodizedTag::CX, 0), std::out_of_range);
}

TEST_CASE("projection matches the brute-force high-resolution oracle") {
    // Assemble the truncated operator at a much finer resolution and
    // compress; the library's analytic tails must reproduce the limit.
    for (const PeriodizedTag tag :
         {PeriodizedTag::CX, PeriodizedTag::CPlus, PeriodizedTag::CMinus, PeriodizedTag::CY,
          PeriodizedTag::CZ, PeriodizedTag::L, PeriodizedTag::LT, PeriodizedTag::K,
          PeriodizedTag::PMinus, PeriodizedTag::PPlus}) {
        for (int n = 1; n <= 3; ++n) {
            const int m = n + 12;
            const Eigen::MatrixXcd oracle = testing::projection_oracle(tag, n, m);
            const Eigen::MatrixXcd built = build(tag, n).entries;
            CHECK((oracle - built).cwiseAbs().maxCoeff() <= std::ldexp(1.0, -(m - n)));
        }
    }
}

TEST_CASE("truncation error decays geometrically towards the projection") {
    const int n = 2;
    for (const PeriodizedTag tag : {PeriodizedTag::CX, PeriodizedTag::CMinus}) {
        const Eigen::MatrixXcd built = build(tag, n).entries;
        double previous = 1e9;
        for (int extra = 2; extra <= 10; extra += 2) {
            const double gap =
                (testing::projection_oracle(tag, n, n + extra) - built).cwiseAbs().maxCoeff();
            CHECK(gap <= std::ldexp(1.0, -extra));
            CHECK(gap <= previous + 1e-15);
            previous = gap;
        }
    }
}

TEST_CASE("equator operators combine the x and y families") {
    const double theta = 0.9;
    const int n = 3;
    const Eigen::MatrixXcd combined =
        build_projected(PeriodizedKind::equator(PeriodizedTag::CTheta, theta), n).entries;
    const Eigen::MatrixXcd manual = std::cos(theta) * build(PeriodizedTag::CX, n).entries +
                                    std::sin(theta) * build(PeriodizedTag::CY, n).entries;
    CHECK((combined - manual).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::MatrixXcd corrected =
        build_projected(PeriodizedKind::equator(PeriodizedTag::CThetaCorrected, theta), n)
            .entries;
    CHECK((corrected - manual - std::sin(theta) * build(PeriodizedTag::K, n).entries)
              .cwiseAbs()
              .maxCoeff() <= 1e-15);

    const Eigen::MatrixXcd oracle =
        testing::projection_oracle(PeriodizedTag::CThetaCorrected, 2, 14, theta);
    CHECK((oracle - build_projected(
                        PeriodizedKind::equator(PeriodizedTag::CThetaCorrected, theta), 2)
                        .entries)
              .cwiseAbs()
              .maxCoeff() <= std::ldexp(1.0, -12));

    CHECK_THROWS_AS(PeriodizedKind::plain(PeriodizedTag::CTheta), std::invalid_argument);
    CHECK_THROWS_AS(PeriodizedKind::equator(PeriodizedTag::CX, 1.0), std::invalid_argument);
}

TEST_CASE("bloch combinations respect the sphere constraint") {
    const PeriodizedKind point = PeriodizedKind::bloch_point(0.6, 0.0, 0.8);
    const Eigen::MatrixXcd m = build_projected(point, 2).entries;
    const Eigen::MatrixXcd manual = 0.6 * build(PeriodizedTag::CX, 2).entries +
                                    0.8 * build(PeriodizedTag::CZ, 2).entries;
    CHECK((m - manual).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(PeriodizedKind::bloch_point(1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("adjoint pairs and algebraic identities are exact") {
    for (int n = 1; n <= 5; ++n) {
        const Eigen::MatrixXcd cplus = build(PeriodizedTag::CPlus, n).entries;
        const Eigen::MatrixXcd cminus = build(PeriodizedTag::CMinus, n).entries;
        CHECK((cplus - cminus.adjoint()).cwiseAbs().maxCoeff() == 0.0);

        const Eigen::MatrixXcd pplus = build(PeriodizedTag::PPlus, n).entries;
        const Eigen::MatrixXcd pminus = build(PeriodizedTag::PMinus, n).entries;
        CHECK((pplus - pminus.adjoint()).cwiseAbs().maxCoeff() == 0.0);

        const Eigen::MatrixXcd cy = build(PeriodizedTag::CY, n).entries;
        CHECK((cy - kI * (cplus - cminus)).cwiseAbs().maxCoeff() == 0.0);

        for (const PeriodizedTag hermitian :
             {PeriodizedTag::CX, PeriodizedTag::CY, PeriodizedTag::CZ, PeriodizedTag::K}) {
            const Eigen::MatrixXcd h = build(hermitian, n).entries;
            CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        }
        const Eigen::MatrixXcd ell = build(PeriodizedTag::L, n).entries;
        CHECK((ell - ell.adjoint()).cwiseAbs().maxCoeff() > 0.0);
        // L plus its adjoint is the rank-one averaging matrix.
        CHECK((ell + ell.adjoint() -
               Eigen::MatrixXcd::Constant(ell.rows(), ell.cols(), std::ldexp(1.0, -n)))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
}

TEST_CASE("projected operators are compatible across resolutions") {
    std::mt19937_64 rng(32);
    for (const PeriodizedTag tag :
         {PeriodizedTag::CX, PeriodizedTag::CY, PeriodizedTag::PMinus, PeriodizedTag::K}) {
        for (int n = 1; n <= 5; ++n) {
            const DyadicVector v(
                n, testing::random_complex(rng, static_cast<Eigen::Index>(cell_count(n))));
            const Eigen::VectorXcd coarse = build(tag, n).entries * v.coeffs;
            const DyadicVector fine(
                n + 1, build(tag, n + 1).entries * embed(v, n + 1).coeffs);
            CHECK((project(fine, n).coeffs - coarse).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("matrix-free application matches the built matrices") {
    std::mt19937_64 rng(33);
    for (int n = 1; n <= 6; ++n) {
        const DyadicVector v(
            n, testing::random_complex(rng, static_cast<Eigen::Index>(cell_count(n))));
        for (const PeriodizedTag tag :
             {PeriodizedTag::CX, PeriodizedTag::CY, PeriodizedTag::CZ, PeriodizedTag::CPlus,
              PeriodizedTag::CMinus}) {
            const Eigen::VectorXcd direct = apply_periodized(PeriodizedKind::plain(tag), v).coeffs;
            CHECK((direct - build(tag, n).entries * v.coeffs).cwiseAbs().maxCoeff() <= 1e-14);
        }
        const PeriodizedKind equator = PeriodizedKind::equator(PeriodizedTag::CTheta, 1.1);
        CHECK((apply_periodized(equator, v).coeffs -
               build_projected(equator, n).entries * v.coeffs)
                  .cwiseAbs()
                  .maxCoeff() <= 1e-14);
    }
    CHECK_THROWS_AS(
        apply_periodized(PeriodizedKind::plain(PeriodizedTag::L), DyadicVector::constant(2)),
        std::invalid_argument);
}

TEST_CASE("array-wide x fixes the constant function") {
    const DyadicVector chi = DyadicVector::constant(4);
    const DyadicVector mapped = apply_periodized(PeriodizedKind::plain(PeriodizedTag::CX), chi);
    CHECK((mapped.coeffs - chi.coeffs).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("array-wide lowering maps the constant to cell averages of 1-x") {
    const int n = 4;
    const double height = half_power_scale(n);
    const DyadicVector one(
        n, Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(cell_count(n)), height));
    const DyadicVector mapped =
        apply_periodized(PeriodizedKind::plain(PeriodizedTag::CMinus), one);
    for (std::size_t j = 0; j < cell_count(n); ++j) {
        const double midpoint = (static_cast<double>(j) + 0.5) * std::ldexp(1.0, -n);
        const Complex cell_value = mapped.coeffs[static_cast<Eigen::Index>(j)] / height;
        CHECK(std::abs(cell_value - (1.0 - midpoint)) <= 1e-15);
    }
}

TEST_CASE("array-wide lowering acts self-similarly on the half indicators") {
    // On the left half indicator the kernel reproduces a shrunken copy of
    // its action on the constant; the right half additionally spills a
    // plateau into the left half. Cell averages are exact.
    const int n = 4;
    const double height = half_power_scale(n);
    const auto dim = static_cast<Eigen::Index>(cell_count(n));
    const auto kind = PeriodizedKind::plain(PeriodizedTag::CMinus);

    Eigen::VectorXcd left = Eigen::VectorXcd::Zero(dim);
    left.head(dim / 2).setConstant(height);
    const DyadicVector mapped_left = apply_periodized(kind, DyadicVector(n, left));

    Eigen::VectorXcd right = Eigen::VectorXcd::Zero(dim);
    right.tail(dim / 2).setConstant(height);
    const DyadicVector mapped_right = apply_periodized(kind, DyadicVector(n, right));

    for (Eigen::Index j = 0; j < dim; ++j) {
        const double midpoint = (static_cast<double>(j) + 0.5) / static_cast<double>(dim);
        const bool in_left = j < dim / 2;
        const double expected_left = in_left ? 0.5 * (1.0 - 2.0 * midpoint) : 0.0;
        const double expected_right = in_left ? 0.5 : 1.0 - midpoint;
        CHECK(std::abs(mapped_left.coeffs[j] / height - expected_left) <= 1e-15);
        CHECK(std::abs(mapped_right.coeffs[j] / height - expected_right) <= 1e-15);
    }
}

TEST_CASE("multiplier action is plain elementwise scaling") {
    std::mt19937_64 rng(34);
    const int n = 3;
    const DyadicVector v(n, testing::random_complex(rng, 8));
    const DyadicVector scaled = apply_periodized(PeriodizedKind::plain(PeriodizedTag::CZ), v);
    for (std::size_t j = 0; j < cell_count(n); ++j) {
        const double factor = 1.0 - std::ldexp(static_cast<double>(2 * j + 1), -n);
        CHECK(std::abs(scaled.coeffs[static_cast<Eigen::Index>(j)] -
                       factor * v.coeffs[static_cast<Eigen::Index>(j)]) <= 1e-15);
    }
}

TEST_CASE("the constant vector is fixed by both corrected shifts") {
    CHECK(fixed_vector_check(PeriodizedTag::PMinus, 1) == 0.0);
    CHECK(fixed_vector_check(PeriodizedTag::PMinus, 6) <= 1e-12);
    CHECK(fixed_vector_check(PeriodizedTag::PPlus, 6) <= 1e-12);
    CHECK_THROWS_AS(fixed_vector_check(PeriodizedTag::CX, 3), std::invalid_argument);
}

TEST_CASE("operator norms") {
    CHECK(operator_norm(OperatorMatrix::identity(3)) == doctest::Approx(1.0));

    Eigen::MatrixXcd half_x(2, 2);
    half_x << 0.0, 0.5, 0.5, 0.0;
    CHECK(operator_norm(OperatorMatrix(1, Basis::Scaling, half_x)) == doctest::Approx(0.5));

    const OperatorMatrix equator =
        build_projected(PeriodizedKind::equator(PeriodizedTag::CTheta, 1.0), 8);
    CHECK(operator_norm(equator) <= 1.0 + 1e-10);

    // Non-Hermitian path: ||L|| via SVD against an independent dense check.
    const OperatorMatrix ell = build(PeriodizedTag::L, 4);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ell.entries);
    CHECK(operator_norm(ell) == doctest::Approx(svd.singularValues()[0]).epsilon(1e-8));
}

TEST_CASE("the corrected equator norm follows the closed form") {
    // The compression keeps the scale blocks up to n-1, so its norm is the
    // larger of |cos(theta)| and the top block eigenvalue (2^(n-1)-1)/2^(n-1).
    const int n = 5;
    for (const double theta : {0.0, 0.05, 0.7, std::numbers::pi}) {
        const double blocks_norm =
            std::ldexp(static_cast<double>(cell_count(n - 1) - 1), -(n - 1));
        const double expected = std::max(std::abs(std::cos(theta)), blocks_norm);
        const OperatorMatrix corrected =
            build_projected(PeriodizedKind::equator(PeriodizedTag::CThetaCorrected, theta), n);
        CHECK(std::abs(operator_norm(corrected) - expected) <= 1e-12);
    }
}

TEST_CASE("truncated variants exist for qualitative reproduction") {
    const int n = 3;
    const Eigen::MatrixXcd bare = build(PeriodizedTag::CX, n, false).entries;
    const Eigen::MatrixXcd projected = build(PeriodizedTag::CX, n).entries;
    CHECK((projected - bare -
           std::ldexp(1.0, -n) * Eigen::MatrixXcd::Identity(bare.rows(), bare.cols()))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    const Eigen::MatrixXcd counting = build(PeriodizedTag::L, n, false).entries;
    CHECK(counting(0, 1) == Complex(1.0));
    CHECK(counting(1, 0) == Complex(0.0));
    CHECK(counting.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

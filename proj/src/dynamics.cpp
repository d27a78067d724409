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

#include "multires/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace multires {

FlowParams::FlowParams(double coupling, double e) : lambda(coupling), eigenvalue(e) {
    if (!std::isfinite(coupling) || !std::isfinite(e)) {
        throw std::invalid_argument("FlowParams: non-finite parameter");
    }
    if (std::abs(e) > 1.0 + 1e-12) {
        throw std::invalid_argument("FlowParams: array eigenvalues lie in [-1, 1]");
    }
}

Eigenstate eigenstate(int n, int k, int sign, double theta) {
    if (n < 1 || n >= 31) throw std::out_of_range("eigenstate: level out of range");
    if (k < 0 || static_cast<std::size_t>(k) >= cell_count(n - 1)) {
        throw std::out_of_range("eigenstate: rank " + std::to_string(k) +
                                " out of range at level " + std::to_string(n));
    }
    if (sign != 1 && sign != -1) throw std::out_of_range("eigenstate: sign must be +-1");

    const std::vector<EigenPair> pairs = eig_recurrence_theta(n, theta);
    const double target = sign * std::ldexp(static_cast<double>(2 * k + 1), -n);
    const EigenPair* match = nullptr;
    for (const EigenPair& p : pairs) {
        if (p.rank == k && p.sign == sign) {
            match = &p;
            break;
        }
    }
    if (match == nullptr) throw std::runtime_error("eigenstate: label not found");

    // The scale-n detail slot occupies indices [2^n, 2^(n+1)) at resolution n+1.
    HaarVector coeffs = HaarVector::zero(n + 1);
    coeffs.coeffs.segment(static_cast<Eigen::Index>(cell_count(n)),
                          static_cast<Eigen::Index>(cell_count(n))) = match->vector;

    Eigenstate state;
    state.level = n;
    state.rank = k;
    state.sign = sign;
    state.theta = theta;
    state.eigenvalue = target;
    state.sampled_values = haar_inverse(coeffs);
    state.haar_coefficients = std::move(coeffs);
    return state;
}

PhasePoint characteristic_flow(PhasePoint start, double t, const FlowParams& fp) {
    const double shift = fp.lambda * fp.eigenvalue;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double q0 = start.q + shift;
    return {c * q0 - s * start.p - shift, s * q0 + c * start.p};
}

double GaussianState::value(double q, double p) const {
    const double dq = (q - q_center) / sigma_q;
    const double dp = (p - p_center) / sigma_p;
    return std::exp(-0.5 * (dq * dq + dp * dp)) /
           (2.0 * std::numbers::pi * sigma_q * sigma_p);
}

WignerGrid::WignerGrid(GridSpec g, Eigen::MatrixXd samples)
    : spec(g), values(std::move(samples)) {
    if (spec.nq < 2 || spec.np < 2) {
        throw std::invalid_argument("WignerGrid: need at least 2 nodes per axis");
    }
    if (spec.q_max <= spec.q_min || spec.p_max <= spec.p_min) {
        throw std::invalid_argument("WignerGrid: empty ranges");
    }
    if (values.rows() != spec.nq || values.cols() != spec.np) {
        throw std::invalid_argument("WignerGrid: sample shape does not match the grid");
    }
    if (!values.allFinite()) throw std::invalid_argument("WignerGrid: non-finite sample");
    initial_mass = mass();
}

double WignerGrid::q_at(Eigen::Index i) const {
    return spec.q_min + (spec.q_max - spec.q_min) * static_cast<double>(i) /
                            static_cast<double>(spec.nq - 1);
}

double WignerGrid::p_at(Eigen::Index j) const {
    return spec.p_min + (spec.p_max - spec.p_min) * static_cast<double>(j) /
                            static_cast<double>(spec.np - 1);
}

double WignerGrid::mass() const {
    const double dq = (spec.q_max - spec.q_min) / static_cast<double>(spec.nq - 1);
    const double dp = (spec.p_max - spec.p_min) / static_cast<double>(spec.np - 1);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < spec.nq; ++i) {
        const double wq = (i == 0 || i == spec.nq - 1) ? 0.5 : 1.0;
        for (Eigen::Index j = 0; j < spec.np; ++j) {
            const double wp = (j == 0 || j == spec.np - 1) ? 0.5 : 1.0;
            sum += wq * wp * values(i, j);
        }
    }
    return sum * dq * dp;
}

double WignerGrid::sample(double q, double p) const {
    const double dq = (spec.q_max - spec.q_min) / static_cast<double>(spec.nq - 1);
    const double dp = (spec.p_max - spec.p_min) / static_cast<double>(spec.np - 1);
    const double fi = (q - spec.q_min) / dq;
    const double fj = (p - spec.p_min) / dp;
    if (fi < 0.0 || fj < 0.0 || fi > static_cast<double>(spec.nq - 1) ||
        fj > static_cast<double>(spec.np - 1)) {
        return 0.0;
    }
    const auto i0 = static_cast<Eigen::Index>(std::min(std::floor(fi),
                                                       static_cast<double>(spec.nq - 2)));
    const auto j0 = static_cast<Eigen::Index>(std::min(std::floor(fj),
                                                       static_cast<double>(spec.np - 2)));
    const double u = fi - static_cast<double>(i0);
    const double v = fj - static_cast<double>(j0);
    return (1.0 - u) * (1.0 - v) * values(i0, j0) + u * (1.0 - v) * values(i0 + 1, j0) +
           (1.0 - u) * v * values(i0, j0 + 1) + u * v * values(i0 + 1, j0 + 1);
}

WignerGrid rasterize(const GaussianState& f0, const GridSpec& spec) {
    Eigen::MatrixXd samples(spec.nq, spec.np);
    WignerGrid shape(spec, Eigen::MatrixXd::Zero(spec.nq, spec.np));
    for (Eigen::Index i = 0; i < spec.nq; ++i) {
        for (Eigen::Index j = 0; j < spec.np; ++j) {
            samples(i, j) = f0.value(shape.q_at(i), shape.p_at(j));
        }
    }
    return WignerGrid(spec, std::move(samples));
}

double evolve_gaussian_at(const GaussianState& f0, double q, double p, double t,
                          const FlowParams& fp) {
    const PhasePoint back = characteristic_flow({q, p}, -t, fp);
    return f0.value(back.q, back.p);
}

WignerGrid evolve_wigner(const WignerGrid& f0, double t, const FlowParams& fp) {
    Eigen::MatrixXd samples(f0.spec.nq, f0.spec.np);
    for (Eigen::Index i = 0; i < f0.spec.nq; ++i) {
        const double q = f0.q_at(i);
        for (Eigen::Index j = 0; j < f0.spec.np; ++j) {
            const PhasePoint back = characteristic_flow({q, f0.p_at(j)}, -t, fp);
            samples(i, j) = f0.sample(back.q, back.p);
        }
    }
    WignerGrid evolved(f0.spec, std::move(samples));
    evolved.initial_mass = f0.initial_mass;
    return evolved;
}

OperatorMatrix multiplier_V(int n, double omega) {
    if (n < 1) throw std::out_of_range("multiplier_V: resolution must be >= 1");
    if (!std::isfinite(omega)) throw std::invalid_argument("multiplier_V: non-finite omega");
    OperatorMatrix base = build_projected(PeriodizedKind::plain(PeriodizedTag::V), n);
    base.entries *= omega;
    return base;
}

}  // namespace multires

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

#include "multires/spectra.hpp"

namespace multires {

/// Coupling strength and array eigenvalue entering the reduced field
/// dynamics; code units fix hbar = omega = 1, so t is oscillator phase.
struct FlowParams {
    double lambda = 1.0;
    double eigenvalue = 0.0;  // |E| <= 1

    FlowParams(double coupling, double e);
};

struct PhasePoint {
    double q = 0.0;
    double p = 0.0;
};

/// An eigenvector of the corrected equator operator, pinned into the
/// detail scale it lives on and sampled back to cell values.
struct Eigenstate {
    int level = 1;
    int rank = 0;
    int sign = 1;
    double theta = 0.0;
    double eigenvalue = 0.0;
    HaarVector haar_coefficients;
    DyadicVector sampled_values;
};

/// Build the labelled eigenstate: eigenvalue s(2k+1)/2^n, Haar support in
/// the scale-n detail slot at resolution n+1. Throws std::out_of_range for
/// labels outside 1 <= n, 0 <= k < 2^(n-1), s in {+1,-1}.
Eigenstate eigenstate(int n, int k, int sign, double theta);

/// The closed-form characteristic: rotation by angle t about the center
/// (-lambda E, 0). No integration involved.
PhasePoint characteristic_flow(PhasePoint start, double t, const FlowParams& fp);

/// Axis-aligned Gaussian with unit mass.
struct GaussianState {
    double q_center = 0.0;
    double p_center = 0.0;
    double sigma_q = 1.0;
    double sigma_p = 1.0;

    double value(double q, double p) const;
};

struct GridSpec {
    double q_min = -4.0, q_max = 4.0;
    double p_min = -4.0, p_max = 4.0;
    Eigen::Index nq = 128, np = 128;
};

/// Sampled phase-space function; values(i, j) = f(q_i, p_j) on the uniform
/// node grid including both endpoints.
struct WignerGrid {
    GridSpec spec;
    Eigen::MatrixXd values;
    double initial_mass = 0.0;

    WignerGrid(GridSpec g, Eigen::MatrixXd samples);

    double q_at(Eigen::Index i) const;
    double p_at(Eigen::Index j) const;
    /// Trapezoidal integral of the samples.
    double mass() const;
    /// Bilinear interpolation; zero outside the grid.
    double sample(double q, double p) const;
};

/// Sample a Gaussian onto a grid.
WignerGrid rasterize(const GaussianState& f0, const GridSpec& spec);

/// Exact evaluation of the evolved Gaussian at one point: the initial
/// profile pulled back along the inverse characteristic.
double evolve_gaussian_at(const GaussianState& f0, double q, double p, double t,
                          const FlowParams& fp);

/// Semi-Lagrangian transport of a sampled initial condition: every node is
/// pulled back along the exact inverse flow and bilinearly resampled.
/// The returned grid keeps f0's mass as initial_mass so conservation can
/// be reported against mass().
WignerGrid evolve_wigner(const WignerGrid& f0, double t, const FlowParams& fp);

/// Diagonal projected matrix of the qubit-energy multiplier
/// omega * (x - 1/2); equals -(omega/2) times the projected z operator.
OperatorMatrix multiplier_V(int n, double omega);

}  // namespace multires

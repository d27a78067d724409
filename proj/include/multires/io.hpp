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

#include <string>
#include <vector>

#include <json.hpp>

#include "multires/dynamics.hpp"

namespace multires {

// Wire formats. Vectors travel as { "n": int, "re": [...], "im": [...] },
// operators add a "basis" tag and use nested row arrays, block lists carry
// their sizes and off-block residual. All emitters are deterministic:
// identical inputs produce byte-identical text.

void to_json(nlohmann::json& j, const DyadicVector& v);
void from_json(const nlohmann::json& j, DyadicVector& v);

void to_json(nlohmann::json& j, const HaarVector& h);
void from_json(const nlohmann::json& j, HaarVector& h);

void to_json(nlohmann::json& j, const OperatorMatrix& m);
void from_json(const nlohmann::json& j, OperatorMatrix& m);

void to_json(nlohmann::json& j, const BlockList& b);

void to_json(nlohmann::json& j, const WignerGrid& g);

/// Shortest-round-trip-safe decimal rendering used by every CSV emitter.
std::string format_double(double x);

struct SpectrumRow {
    int n = 0;
    int k = 0;
    int s = 0;
    double theta = 0.0;
    double eigenvalue = 0.0;
    double residual = 0.0;
};

/// Header n,k,s,theta,eigenvalue,residual plus one line per row.
std::string spectrum_csv(const std::vector<SpectrumRow>& rows);

/// Header x0,y0,x1,y1,weight_re,weight_im plus one line per segment.
std::string segments_csv(const std::vector<KernelSegment>& segments);

struct TrajectoryPoint {
    double t = 0.0;
    double q = 0.0;
    double p = 0.0;
};

/// Header t,q,p plus one line per point.
std::string trajectory_csv(const std::vector<TrajectoryPoint>& points);

/// Header j,re,im: flat complex coefficients.
std::string vector_csv(const Eigen::VectorXcd& v);

/// Header i,j,re,im: dense complex entries in row-major order.
std::string matrix_csv(const Eigen::MatrixXcd& m);

/// Render a grid as CSV: one row of p values per q node.
std::string grid_csv(const WignerGrid& g);

/// Write the fully rendered text in one shot; existing content is replaced
/// only after rendering has already succeeded.
void write_text_file(const std::string& path, const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace multires

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

#include "multires/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace multires {

namespace {

using nlohmann::json;

json complex_parts(const Eigen::VectorXcd& v) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        re.push_back(v[i].real());
        im.push_back(v[i].imag());
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::VectorXcd parts_to_vector(const json& j) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != im.size()) {
        throw std::invalid_argument("vector JSON: re/im length mismatch");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] =
            Complex(re[i].get<double>(), im[i].get<double>());
    }
    return v;
}

json matrix_parts(const Eigen::MatrixXcd& m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::MatrixXcd parts_to_matrix(const json& j) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != im.size()) {
        throw std::invalid_argument("matrix JSON: re/im shape mismatch");
    }
    const auto rows = static_cast<Eigen::Index>(re.size());
    const auto cols = rows > 0 ? static_cast<Eigen::Index>(re[0].size()) : 0;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& rrow = re[static_cast<std::size_t>(i)];
        const auto& irow = im[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(rrow.size()) != cols ||
            static_cast<Eigen::Index>(irow.size()) != cols) {
            throw std::invalid_argument("matrix JSON: ragged rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(i, c) = Complex(rrow[static_cast<std::size_t>(c)].get<double>(),
                              irow[static_cast<std::size_t>(c)].get<double>());
        }
    }
    return m;
}

std::string basis_name(Basis b) { return b == Basis::Scaling ? "scaling" : "haar"; }

Basis basis_from_name(const std::string& name) {
    if (name == "scaling") return Basis::Scaling;
    if (name == "haar") return Basis::Haar;
    throw std::invalid_argument("unknown basis tag '" + name + "'");
}

}  // namespace

void to_json(json& j, const DyadicVector& v) {
    j = complex_parts(v.coeffs);
    j["n"] = v.n;
}

void from_json(const json& j, DyadicVector& v) {
    v = DyadicVector(j.at("n").get<int>(), parts_to_vector(j));
}

void to_json(json& j, const HaarVector& h) {
    j = complex_parts(h.coeffs);
    j["n"] = h.n;
}

void from_json(const json& j, HaarVector& h) {
    h = HaarVector(j.at("n").get<int>(), parts_to_vector(j));
}

void to_json(json& j, const OperatorMatrix& m) {
    j = matrix_parts(m.entries);
    j["n"] = m.n;
    j["basis"] = basis_name(m.basis);
}

void from_json(const json& j, OperatorMatrix& m) {
    m = OperatorMatrix(j.at("n").get<int>(),
                       basis_from_name(j.at("basis").get<std::string>()),
                       parts_to_matrix(j));
}

void to_json(json& j, const BlockList& b) {
    json blocks = json::array();
    for (const auto& block : b.blocks) blocks.push_back(matrix_parts(block));
    json sizes = json::array();
    for (const auto s : b.sizes()) sizes.push_back(s);
    j = json{{"sizes", std::move(sizes)},
             {"blocks", std::move(blocks)},
             {"off_block_residual", b.off_block_residual}};
}

void to_json(json& j, const WignerGrid& g) {
    json values = json::array();
    for (Eigen::Index i = 0; i < g.spec.nq; ++i) {
        for (Eigen::Index c = 0; c < g.spec.np; ++c) values.push_back(g.values(i, c));
    }
    j = json{{"q_min", g.spec.q_min}, {"q_max", g.spec.q_max},
             {"p_min", g.spec.p_min}, {"p_max", g.spec.p_max},
             {"nq", g.spec.nq},       {"np", g.spec.np},
             {"mass", g.mass()},      {"initial_mass", g.initial_mass},
             {"values", std::move(values)}};
}

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
    std::ostringstream out;
    out << "n,k,s,theta,eigenvalue,residual\n";
    for (const SpectrumRow& r : rows) {
        out << r.n << ',' << r.k << ',' << (r.s >= 0 ? '+' : '-') << ','
            << format_double(r.theta) << ',' << format_double(r.eigenvalue) << ','
            << format_double(r.residual) << '\n';
    }
    return out.str();
}

std::string segments_csv(const std::vector<KernelSegment>& segments) {
    std::ostringstream out;
    out << "x0,y0,x1,y1,weight_re,weight_im\n";
    for (const KernelSegment& s : segments) {
        out << format_double(s.x0) << ',' << format_double(s.y0) << ','
            << format_double(s.x1) << ',' << format_double(s.y1) << ','
            << format_double(s.weight.real()) << ',' << format_double(s.weight.imag())
            << '\n';
    }
    return out.str();
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& points) {
    std::ostringstream out;
    out << "t,q,p\n";
    for (const TrajectoryPoint& p : points) {
        out << format_double(p.t) << ',' << format_double(p.q) << ',' << format_double(p.p)
            << '\n';
    }
    return out.str();
}

std::string vector_csv(const Eigen::VectorXcd& v) {
    std::ostringstream out;
    out << "j,re,im\n";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out << i << ',' << format_double(v[i].real()) << ',' << format_double(v[i].imag())
            << '\n';
    }
    return out.str();
}

std::string matrix_csv(const Eigen::MatrixXcd& m) {
    std::ostringstream out;
    out << "i,j,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << i << ',' << j << ',' << format_double(m(i, j).real()) << ','
                << format_double(m(i, j).imag()) << '\n';
        }
    }
    return out.str();
}

std::string grid_csv(const WignerGrid& g) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < g.spec.nq; ++i) {
        for (Eigen::Index j = 0; j < g.spec.np; ++j) {
            if (j > 0) out << ',';
            out << format_double(g.values(i, j));
        }
        out << '\n';
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("short write to '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace multires

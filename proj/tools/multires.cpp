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

// Command line for the multires library: builds operators, extracts their
// Haar blocks and spectra, emits figure data, evolves the reduced phase
// space model, and runs the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multires/io.hpp"
#include "multires/verify.hpp"

namespace {

using namespace multires;
using nlohmann::json;

constexpr int kDefaultMaxN = 12;

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int resolution_cap() {
    if (const char* raw = std::getenv("MULTIRES_MAX_N")) {
        const int cap = std::atoi(raw);
        if (cap >= 1) return cap;
    }
    return kDefaultMaxN;
}

void check_cap(int n) {
    const int cap = resolution_cap();
    if (n > cap) {
        throw ResourceLimit("resolution " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap) +
                            " (set MULTIRES_MAX_N to override at your own risk)");
    }
    if (n < 1) throw CLI::ValidationError("--n", "resolution must be at least 1");
}

const std::map<std::string, PeriodizedTag>& projected_ops() {
    static const std::map<std::string, PeriodizedTag> ops = {
        {"cx", PeriodizedTag::CX},
        {"cy", PeriodizedTag::CY},
        {"cz", PeriodizedTag::CZ},
        {"cplus", PeriodizedTag::CPlus},
        {"cminus", PeriodizedTag::CMinus},
        {"l", PeriodizedTag::L},
        {"lt", PeriodizedTag::LT},
        {"k", PeriodizedTag::K},
        {"pminus", PeriodizedTag::PMinus},
        {"pplus", PeriodizedTag::PPlus},
        {"ctheta", PeriodizedTag::CTheta},
        {"ctheta-corrected", PeriodizedTag::CThetaCorrected},
        {"v", PeriodizedTag::V},
        {"bloch", PeriodizedTag::Bloch},
    };
    return ops;
}

const std::map<std::string, PauliTag>& gate_ops() {
    static const std::map<std::string, PauliTag> ops = {
        {"x", PauliTag::X},       {"y", PauliTag::Y},         {"z", PauliTag::Z},
        {"plus", PauliTag::Plus}, {"minus", PauliTag::Minus},
    };
    return ops;
}

struct OperatorRequest {
    std::string op = "cx";
    int n = 4;
    double theta = 0.0;
    std::vector<double> bloch{1.0, 0.0, 0.0};
    std::string tail = "on";
    std::vector<double> lambdas;

    OperatorMatrix realize() const {
        if (op == "finite-x" || op == "finite-y" || op == "finite-z") {
            if (lambdas.empty()) {
                throw CLI::ValidationError("--lambdas",
                                           "finite-array operators need explicit weights");
            }
            if (static_cast<int>(lambdas.size()) != n) {
                throw CLI::ValidationError("--lambdas", "expected --n weights");
            }
            const Axis axis = op == "finite-x"   ? Axis::X
                              : op == "finite-y" ? Axis::Y
                                                 : Axis::Z;
            check_cap(n);
            return build_finite_array(axis, LambdaWeights{lambdas});
        }
        check_cap(n);
        const auto it = projected_ops().find(op);
        if (it == projected_ops().end()) {
            throw CLI::ValidationError("--op", "unknown operator '" + op + "'");
        }
        PeriodizedKind kind = PeriodizedKind::plain(PeriodizedTag::CX);
        switch (it->second) {
            case PeriodizedTag::CTheta:
            case PeriodizedTag::CThetaCorrected:
                kind = PeriodizedKind::equator(it->second, theta);
                break;
            case PeriodizedTag::Bloch:
                if (bloch.size() != 3) {
                    throw CLI::ValidationError("--weights", "expected alpha,beta,gamma");
                }
                kind = PeriodizedKind::bloch_point(bloch[0], bloch[1], bloch[2]);
                break;
            default:
                kind = PeriodizedKind::plain(it->second);
        }
        return build_projected(kind, n, tail == "on");
    }
};

void add_operator_flags(CLI::App* cmd, OperatorRequest& req) {
    cmd->add_option("--op", req.op, "Operator name")->required();
    cmd->add_option("--n", req.n, "Resolution (qubits)")->required();
    cmd->add_option("--theta", req.theta, "Equator angle in radians");
    cmd->add_option("--weights", req.bloch, "Bloch weights alpha,beta,gamma")->delimiter(',');
    cmd->add_option("--tail", req.tail, "Include the unresolved-qubit tail")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--lambdas", req.lambdas, "Finite-array weights lambda_1,...")
        ->delimiter(',');
}

std::string render_blocks_csv(const BlockList& blocks) {
    std::string out = "block,i,j,re,im\n";
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
        const auto& m = blocks.blocks[b];
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                out += std::to_string(b) + ',' + std::to_string(i) + ',' + std::to_string(j) +
                       ',' + format_double(m(i, j).real()) + ',' +
                       format_double(m(i, j).imag()) + '\n';
            }
        }
    }
    return out;
}

std::vector<KernelSegment> weighted_support(const std::string& op, int qubit, int depth) {
    if (const auto it = gate_ops().find(op); it != gate_ops().end()) {
        return kernel_support({it->second, qubit});
    }
    PauliTag tag;
    if (op == "cx") tag = PauliTag::X;
    else if (op == "cy") tag = PauliTag::Y;
    else if (op == "cz") tag = PauliTag::Z;
    else if (op == "cplus") tag = PauliTag::Plus;
    else if (op == "cminus") tag = PauliTag::Minus;
    else throw CLI::ValidationError("--op", "no kernel support for '" + op + "'");
    std::vector<KernelSegment> all;
    for (int k = 1; k <= depth; ++k) {
        const double weight = std::ldexp(1.0, -k);
        for (KernelSegment seg : kernel_support({tag, k})) {
            seg.weight *= weight;
            all.push_back(seg);
        }
    }
    return all;
}

std::string eigenstate_csv(const Eigenstate& state) {
    std::string out = "cell,x0,x1,re,im,haar_re,haar_im\n";
    const int n = state.sampled_values.n;
    for (std::size_t j = 0; j < cell_count(n); ++j) {
        const DyadicInterval cell(n, j);
        const Complex sample = state.sampled_values.coeffs[static_cast<Eigen::Index>(j)];
        const Complex haar = state.haar_coefficients.coeffs[static_cast<Eigen::Index>(j)];
        out += std::to_string(j) + ',' + format_double(cell.lower()) + ',' +
               format_double(cell.upper()) + ',' + format_double(sample.real()) + ',' +
               format_double(sample.imag()) + ',' + format_double(haar.real()) + ',' +
               format_double(haar.imag()) + '\n';
    }
    return out;
}

json eigenstate_json(const Eigenstate& state) {
    json j;
    j["n"] = state.level;
    j["k"] = state.rank;
    j["s"] = state.sign > 0 ? "+" : "-";
    j["theta"] = state.theta;
    j["eigenvalue"] = state.eigenvalue;
    j["haar"] = state.haar_coefficients;
    j["samples"] = state.sampled_values;
    return j;
}

int run_verify(const VerifyOptions& options) {
    const auto results = run_verification(options);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-9s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        if (!r.passed) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiresolution qubit-array operators on L2(0,1]"};
    app.require_subcommand(1);
    int exit_code = 0;

    // haar: transform a coefficient vector.
    auto* haar_cmd = app.add_subcommand("haar", "Haar transform of a coefficient vector");
    std::string haar_in, haar_out = "-", haar_format = "json";
    bool haar_invert = false;
    haar_cmd->add_option("--in", haar_in, "Input vector JSON")->required();
    haar_cmd->add_option("--out", haar_out, "Output path ('-' for stdout)");
    haar_cmd->add_flag("--inverse", haar_invert, "Apply the inverse transform");
    haar_cmd->add_option("--format", haar_format)->check(CLI::IsMember({"json", "csv"}));
    haar_cmd->callback([&] {
        const json parsed = json::parse(read_text_file(haar_in));
        std::string rendered;
        if (haar_invert) {
            const DyadicVector v = haar_inverse(parsed.get<HaarVector>());
            rendered = haar_format == "json" ? json(v).dump(2) + "\n" : vector_csv(v.coeffs);
        } else {
            const HaarVector h = haar_forward(parsed.get<DyadicVector>());
            rendered = haar_format == "json" ? json(h).dump(2) + "\n" : vector_csv(h.coeffs);
        }
        if (haar_out == "-") std::fputs(rendered.c_str(), stdout);
        else write_text_file(haar_out, rendered);
    });

    // build: emit an operator matrix.
    auto* build_cmd = app.add_subcommand("build", "Build an operator matrix");
    OperatorRequest build_req;
    std::string build_basis = "scaling", build_out, build_format = "json";
    add_operator_flags(build_cmd, build_req);
    build_cmd->add_option("--basis", build_basis)->check(CLI::IsMember({"scaling", "haar"}));
    build_cmd->add_option("--out", build_out, "Output path")->required();
    build_cmd->add_option("--format", build_format)->check(CLI::IsMember({"json", "csv"}));
    build_cmd->callback([&] {
        OperatorMatrix m = build_req.realize();
        if (build_basis == "haar") m = conjugate_to_haar(m);
        write_text_file(build_out, build_format == "json" ? json(m).dump(2) + "\n"
                                                          : matrix_csv(m.entries));
    });

    // blocks: Haar blocks of an operator.
    auto* blocks_cmd = app.add_subcommand("blocks", "Haar-basis blocks of an operator");
    OperatorRequest blocks_req;
    std::string blocks_out, blocks_format = "json";
    add_operator_flags(blocks_cmd, blocks_req);
    blocks_cmd->add_option("--out", blocks_out)->required();
    blocks_cmd->add_option("--format", blocks_format)->check(CLI::IsMember({"json", "csv"}));
    blocks_cmd->callback([&] {
        const BlockList blocks = extract_blocks(conjugate_to_haar(blocks_req.realize()));
        write_text_file(blocks_out, blocks_format == "json" ? json(blocks).dump(2) + "\n"
                                                            : render_blocks_csv(blocks));
    });

    // spectrum: recurrence eigenpairs of the scale-n block.
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Recurrence eigenpairs of the scale-n block");
    int spectrum_n = 4;
    double spectrum_theta = 0.0;
    std::string spectrum_out = "-", spectrum_format = "csv";
    spectrum_cmd->add_option("--n", spectrum_n, "Scale level")->required();
    spectrum_cmd->add_option("--theta", spectrum_theta);
    spectrum_cmd->add_option("--out", spectrum_out);
    spectrum_cmd->add_option("--format", spectrum_format)
        ->check(CLI::IsMember({"json", "csv"}));
    spectrum_cmd->callback([&] {
        check_cap(spectrum_n);
        const Eigen::MatrixXcd d = recurrence_D_theta(spectrum_n, spectrum_theta);
        std::vector<SpectrumRow> rows;
        for (const EigenPair& p : eig_recurrence_theta(spectrum_n, spectrum_theta)) {
            const double residual = (d * p.vector - p.value * p.vector).norm();
            rows.push_back({p.level, p.rank, p.sign, p.theta, p.value.real(), residual});
        }
        std::string rendered;
        if (spectrum_format == "csv") {
            rendered = spectrum_csv(rows);
        } else {
            json j = json::array();
            for (const SpectrumRow& r : rows) {
                j.push_back({{"n", r.n},
                             {"k", r.k},
                             {"s", r.s > 0 ? "+" : "-"},
                             {"theta", r.theta},
                             {"eigenvalue", r.eigenvalue},
                             {"residual", r.residual}});
            }
            rendered = j.dump(2) + "\n";
        }
        if (spectrum_out == "-") std::fputs(rendered.c_str(), stdout);
        else write_text_file(spectrum_out, rendered);
    });

    // eigenstate: one labelled eigenstate.
    auto* eigen_cmd = app.add_subcommand("eigenstate", "Labelled corrected-equator eigenstate");
    int eig_n = 1, eig_k = 0;
    std::string eig_s = "+", eig_out, eig_format = "json";
    double eig_theta = 0.0;
    eigen_cmd->add_option("--n", eig_n)->required();
    eigen_cmd->add_option("--k", eig_k)->required();
    eigen_cmd->add_option("--s", eig_s)->check(CLI::IsMember({"+", "-"}));
    eigen_cmd->add_option("--theta", eig_theta);
    eigen_cmd->add_option("--out", eig_out)->required();
    eigen_cmd->add_option("--format", eig_format)->check(CLI::IsMember({"json", "csv"}));
    eigen_cmd->callback([&] {
        check_cap(eig_n + 1);
        const Eigenstate state = eigenstate(eig_n, eig_k, eig_s == "+" ? 1 : -1, eig_theta);
        write_text_file(eig_out, eig_format == "json" ? eigenstate_json(state).dump(2) + "\n"
                                                      : eigenstate_csv(state));
    });

    // remainder: off-block part of the Haar image of the y operator.
    auto* rem_cmd = app.add_subcommand("remainder", "Off-block remainder of the y operator");
    int rem_n = 10;
    std::string rem_out, rem_format = "json";
    rem_cmd->add_option("--n", rem_n)->required();
    rem_cmd->add_option("--out", rem_out)->required();
    rem_cmd->add_option("--format", rem_format)->check(CLI::IsMember({"json", "csv"}));
    rem_cmd->callback([&] {
        check_cap(rem_n);
        const RemainderReport report = remainder_matrix(rem_n);
        if (rem_format == "csv") {
            // Magnitude grid, one row per Haar index.
            std::string out;
            const auto& m = report.remainder.entries;
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    if (j > 0) out += ',';
                    out += format_double(std::abs(m(i, j)));
                }
                out += '\n';
            }
            write_text_file(rem_out, out);
        } else {
            json j;
            j["remainder"] = report.remainder;
            j["per_scale_max"] = report.per_scale_max;
            j["max_row"] = report.max_row;
            j["max_col"] = report.max_col;
            j["max_abs"] = report.max_abs;
            j["cancellation_error"] = report.cancellation_error;
            write_text_file(rem_out, j.dump(2) + "\n");
        }
    });

    // qft: Fourier transform of a vector, with an optional oracle check.
    auto* qft_cmd = app.add_subcommand("qft", "Fourier transform of cell coefficients");
    std::string qft_in, qft_out = "-", qft_format = "json";
    bool qft_check = false;
    qft_cmd->add_option("--in", qft_in)->required();
    qft_cmd->add_option("--out", qft_out);
    qft_cmd->add_flag("--check", qft_check, "Also compare with the direct O(N^2) transform");
    qft_cmd->add_option("--format", qft_format)->check(CLI::IsMember({"json", "csv"}));
    qft_cmd->callback([&] {
        const DyadicVector v = json::parse(read_text_file(qft_in)).get<DyadicVector>();
        const DyadicVector f = qft_borel(v);
        if (qft_check) {
            const double gap = (f.coeffs - dft_oracle(v).coeffs).cwiseAbs().maxCoeff();
            std::fprintf(stderr, "fft vs direct transform: %.3e\n", gap);
            if (gap > 1e-12) {
                exit_code = 1;
                return;
            }
        }
        const std::string rendered =
            qft_format == "json" ? json(f).dump(2) + "\n" : vector_csv(f.coeffs);
        if (qft_out == "-") std::fputs(rendered.c_str(), stdout);
        else write_text_file(qft_out, rendered);
    });

    // dynamics: trajectories or evolved Wigner grids.
    auto* dyn_cmd = app.add_subcommand("dynamics", "Reduced field dynamics");
    double dyn_lambda = 1.0, dyn_E = std::nan(""), dyn_theta = 0.0,
           dyn_t = 2.0 * std::numbers::pi;
    int dyn_n = 0, dyn_k = 0, dyn_steps = 128;
    std::string dyn_s = "+", dyn_out, dyn_format = "csv";
    bool dyn_grid = false;
    double dyn_q0 = 1.0, dyn_p0 = 0.0;
    double dyn_qc = 1.0, dyn_pc = 0.0, dyn_sq = 0.5, dyn_sp = 0.5;
    std::vector<double> dyn_range{-4.0, 4.0, -4.0, 4.0};
    int dyn_nodes = 256;
    dyn_cmd->add_option("--lambda", dyn_lambda, "Coupling");
    dyn_cmd->add_option("--E", dyn_E, "Array eigenvalue (overrides labels)");
    dyn_cmd->add_option("--n", dyn_n, "Eigenvalue label: level");
    dyn_cmd->add_option("--k", dyn_k, "Eigenvalue label: rank");
    dyn_cmd->add_option("--s", dyn_s, "Eigenvalue label: sign")
        ->check(CLI::IsMember({"+", "-"}));
    dyn_cmd->add_option("--theta", dyn_theta, "Eigenvalue label: angle (spectrum-neutral)");
    dyn_cmd->add_option("--t", dyn_t, "Evolution time in radians");
    dyn_cmd->add_option("--steps", dyn_steps, "Trajectory samples");
    dyn_cmd->add_option("--q0", dyn_q0);
    dyn_cmd->add_option("--p0", dyn_p0);
    dyn_cmd->add_flag("--grid", dyn_grid, "Evolve a Gaussian on a grid instead");
    dyn_cmd->add_option("--qc", dyn_qc, "Gaussian center q");
    dyn_cmd->add_option("--pc", dyn_pc, "Gaussian center p");
    dyn_cmd->add_option("--sq", dyn_sq, "Gaussian sigma q");
    dyn_cmd->add_option("--sp", dyn_sp, "Gaussian sigma p");
    dyn_cmd->add_option("--range", dyn_range, "Grid range qmin,qmax,pmin,pmax")
        ->delimiter(',');
    dyn_cmd->add_option("--nodes", dyn_nodes, "Grid nodes per axis");
    dyn_cmd->add_option("--out", dyn_out)->required();
    auto* dyn_format_opt =
        dyn_cmd->add_option("--format", dyn_format, "Defaults to csv for trajectories, json for grids")
            ->check(CLI::IsMember({"json", "csv"}));
    dyn_cmd->callback([&] {
        if (dyn_format_opt->count() == 0) dyn_format = dyn_grid ? "json" : "csv";
        double e = dyn_E;
        if (std::isnan(e)) {
            if (dyn_n < 1) {
                throw CLI::ValidationError("--E", "give --E or the labels --n/--k/--s");
            }
            if (dyn_k < 0 || static_cast<std::size_t>(dyn_k) >= cell_count(dyn_n - 1)) {
                throw CLI::ValidationError("--k", "rank out of range for the level");
            }
            e = (dyn_s == "+" ? 1.0 : -1.0) *
                std::ldexp(static_cast<double>(2 * dyn_k + 1), -dyn_n);
        }
        const FlowParams fp(dyn_lambda, e);
        if (dyn_grid) {
            if (dyn_range.size() != 4) {
                throw CLI::ValidationError("--range", "expected qmin,qmax,pmin,pmax");
            }
            const GridSpec spec{dyn_range[0], dyn_range[1], dyn_range[2], dyn_range[3],
                                dyn_nodes, dyn_nodes};
            const WignerGrid evolved =
                evolve_wigner(rasterize({dyn_qc, dyn_pc, dyn_sq, dyn_sp}, spec), dyn_t, fp);
            write_text_file(dyn_out, dyn_format == "csv" ? grid_csv(evolved)
                                                         : json(evolved).dump() + "\n");
        } else {
            std::vector<TrajectoryPoint> points;
            for (int i = 0; i <= dyn_steps; ++i) {
                const double t =
                    dyn_t * static_cast<double>(i) / static_cast<double>(dyn_steps);
                const PhasePoint at = characteristic_flow({dyn_q0, dyn_p0}, t, fp);
                points.push_back({t, at.q, at.p});
            }
            std::string rendered;
            if (dyn_format == "csv") {
                rendered = trajectory_csv(points);
            } else {
                json j = json::array();
                for (const auto& p : points) {
                    j.push_back({{"t", p.t}, {"q", p.q}, {"p", p.p}});
                }
                rendered = j.dump(2) + "\n";
            }
            write_text_file(dyn_out, rendered);
        }
    });

    // support: kernel support segments.
    auto* support_cmd = app.add_subcommand("support", "Kernel support segments");
    std::string sup_op = "x", sup_out = "-";
    int sup_k = 1, sup_depth = 6;
    support_cmd->add_option("--op", sup_op, "x|y|z|plus|minus or cx|cy|cz|cplus|cminus");
    support_cmd->add_option("--k", sup_k, "Qubit slot for single gates");
    support_cmd->add_option("--depth", sup_depth, "Scales for array-wide kernels");
    support_cmd->add_option("--out", sup_out);
    support_cmd->callback([&] {
        const std::string rendered = segments_csv(weighted_support(sup_op, sup_k, sup_depth));
        if (sup_out == "-") std::fputs(rendered.c_str(), stdout);
        else write_text_file(sup_out, rendered);
    });

    // figures: data behind the plots.
    auto* fig_cmd = app.add_subcommand("figures", "Emit plot data files");
    std::string fig_which, fig_dir = ".", fig_op = "cx";
    int fig_n = 3, fig_k = 1, fig_depth = 6;
    double fig_theta = 0.0;
    fig_cmd->add_option("--which", fig_which, "eigenstates|remainder|support|blocks")
        ->required()
        ->check(CLI::IsMember({"eigenstates", "remainder", "support", "blocks"}));
    fig_cmd->add_option("--outdir", fig_dir);
    fig_cmd->add_option("--n", fig_n);
    fig_cmd->add_option("--theta", fig_theta);
    fig_cmd->add_option("--op", fig_op);
    fig_cmd->add_option("--k", fig_k);
    fig_cmd->add_option("--depth", fig_depth);
    fig_cmd->callback([&] {
        if (fig_n < 1) throw CLI::ValidationError("--n", "resolution must be at least 1");
        const std::string prefix = fig_dir + "/";
        if (fig_which == "eigenstates") {
            check_cap(fig_n + 1);
            for (int k = 0; k < static_cast<int>(cell_count(fig_n - 1)); ++k) {
                for (const int sign : {1, -1}) {
                    const Eigenstate state = eigenstate(fig_n, k, sign, fig_theta);
                    const std::string name = prefix + "eigenstate_n" + std::to_string(fig_n) +
                                             "_k" + std::to_string(k) +
                                             (sign > 0 ? "_plus" : "_minus") + ".csv";
                    write_text_file(name, eigenstate_csv(state));
                }
            }
        } else if (fig_which == "remainder") {
            check_cap(fig_n);
            const RemainderReport report = remainder_matrix(fig_n);
            std::string grid;
            const auto& m = report.remainder.entries;
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    if (j > 0) grid += ',';
                    grid += format_double(std::abs(m(i, j)));
                }
                grid += '\n';
            }
            write_text_file(prefix + "remainder_n" + std::to_string(fig_n) + ".csv", grid);
        } else if (fig_which == "support") {
            write_text_file(prefix + "support_" + fig_op + ".csv",
                            segments_csv(weighted_support(fig_op, fig_k, fig_depth)));
        } else {
            check_cap(fig_n);
            OperatorRequest req;
            req.op = fig_op;
            req.n = fig_n;
            req.theta = fig_theta;
            const OperatorMatrix haar_image = conjugate_to_haar(req.realize());
            std::string mask;
            for (Eigen::Index i = 0; i < haar_image.dim(); ++i) {
                for (Eigen::Index j = 0; j < haar_image.dim(); ++j) {
                    if (j > 0) mask += ',';
                    mask += std::abs(haar_image.entries(i, j)) > 1e-12 ? '1' : '0';
                }
                mask += '\n';
            }
            write_text_file(prefix + "mask_" + fig_op + "_n" + std::to_string(fig_n) + ".csv",
                            mask);
        }
    });

    // verify: the acceptance suite.
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    VerifyOptions verify_options;
    std::string criteria_list;
    for (const auto& name : criterion_names()) {
        if (!criteria_list.empty()) criteria_list += "|";
        criteria_list += name;
    }
    verify_cmd->add_option("--only", verify_options.only, "Single criterion: " + criteria_list);
    verify_cmd->add_option("--n", verify_options.max_n, "Override the top resolution");
    verify_cmd->add_option("--seed", verify_options.seed, "Random seed");
    verify_cmd->callback([&] { exit_code = run_verify(verify_options); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ResourceLimit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return exit_code;
}

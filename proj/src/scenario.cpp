// Copyright 2026 The qnet authors
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

#include "qnet/scenario.hpp"

#include "qnet/csv.hpp"
#include "qnet/qops.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qnet {

namespace {

using Json = nlohmann::ordered_json;

void check_keys(const Json& obj, const std::vector<std::string>& allowed,
                const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const auto& k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("config: unknown key '" + item.key() + "' in " + where);
        }
    }
}

std::string kind_name(InitialStateKind k) {
    switch (k) {
        case InitialStateKind::Entangled: return "entangled";
        case InitialStateKind::Mixed: return "mixed";
        case InitialStateKind::ThetaPure: return "theta-pure";
        case InitialStateKind::Ground: return "ground";
        case InitialStateKind::Custom: return "custom";
    }
    throw std::logic_error("unreachable");
}

InitialStateKind kind_from_name(const std::string& s) {
    if (s == "entangled") return InitialStateKind::Entangled;
    if (s == "mixed") return InitialStateKind::Mixed;
    if (s == "theta-pure") return InitialStateKind::ThetaPure;
    if (s == "ground") return InitialStateKind::Ground;
    if (s == "custom") return InitialStateKind::Custom;
    throw std::invalid_argument("config: unknown initial-state kind '" + s + "'");
}

std::string method_name(IntegratorMethod m) {
    return m == IntegratorMethod::FixedRk4 ? "fixed-rk4" : "adaptive-rk45";
}

IntegratorMethod method_from_name(const std::string& s) {
    if (s == "fixed-rk4") return IntegratorMethod::FixedRk4;
    if (s == "adaptive-rk45") return IntegratorMethod::AdaptiveRk45;
    throw std::invalid_argument("config: unknown integrator method '" + s + "'");
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(row);
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& rows) {
    const auto nr = static_cast<Eigen::Index>(rows.size());
    if (nr == 0) return ComplexMatrix();
    const auto nc = static_cast<Eigen::Index>(rows.at(0).size());
    ComplexMatrix m(nr, nc);
    for (Eigen::Index i = 0; i < nr; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != nc) {
            throw std::invalid_argument("config: ragged matrix");
        }
        for (Eigen::Index j = 0; j < nc; ++j) {
            const auto& cell = row.at(static_cast<std::size_t>(j));
            m(i, j) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    return m;
}

} // namespace

bool operator==(const InitialStateSpec& a, const InitialStateSpec& b) {
    if (a.kind != b.kind || a.theta != b.theta) return false;
    if (a.custom.rows() != b.custom.rows() || a.custom.cols() != b.custom.cols()) return false;
    return a.custom.size() == 0 || a.custom == b.custom;
}

bool operator==(const SweepGrids& a, const SweepGrids& b) {
    return a.drive_strength == b.drive_strength && a.dephasing == b.dephasing &&
           a.theta == b.theta && a.drain == b.drain;
}

bool operator==(const OutputSpec& a, const OutputSpec& b) {
    return a.directory == b.directory && a.record_ct == b.record_ct &&
           a.correlations_stride == b.correlations_stride;
}

static bool operator==(const SiteSpec& a, const SiteSpec& b) {
    return a.label == b.label && a.coord == b.coord && a.omega == b.omega;
}

static bool operator==(const DriveSpec& a, const DriveSpec& b) {
    return a.eta_d == b.eta_d && a.omega_d == b.omega_d && a.phi_x == b.phi_x &&
           a.phi_y == b.phi_y && a.r == b.r && a.delta_omega == b.delta_omega &&
           a.theta1 == b.theta1 && a.theta2 == b.theta2;
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    if (a.network.sites.size() != b.network.sites.size()) return false;
    for (std::size_t i = 0; i < a.network.sites.size(); ++i) {
        if (!(a.network.sites[i] == b.network.sites[i])) return false;
    }
    if (!(a.network.drive == b.network.drive)) return false;
    if (a.network.hopping != b.network.hopping) return false;
    if (a.dissipators.gamma_s != b.dissipators.gamma_s ||
        a.dissipators.gamma_d != b.dissipators.gamma_d ||
        a.dissipators.gamma_deph != b.dissipators.gamma_deph ||
        a.dissipators.source_site != b.dissipators.source_site ||
        a.dissipators.drain_site != b.dissipators.drain_site) {
        return false;
    }
    if (a.integrator.method != b.integrator.method || a.integrator.dt != b.integrator.dt ||
        a.integrator.rel_tol != b.integrator.rel_tol ||
        a.integrator.abs_tol != b.integrator.abs_tol ||
        a.integrator.record_every != b.integrator.record_every) {
        return false;
    }
    return a.initial == b.initial && a.horizon == b.horizon && a.sweep == b.sweep &&
           a.outputs == b.outputs;
}

ScenarioConfig default_config() {
    ScenarioConfig cfg;
    cfg.network = four_site_default();
    const double c = cfg.network.reference_hopping();
    cfg.dissipators.gamma_d = c / 100.0;
    cfg.dissipators.gamma_s = 2.0 * cfg.dissipators.gamma_d;
    cfg.dissipators.gamma_deph = {0.0, 0.0, 0.0, 0.0};
    cfg.dissipators.source_site = 1;
    cfg.dissipators.drain_site = 3;
    cfg.integrator.method = IntegratorMethod::FixedRk4;
    cfg.integrator.dt = 0.0;        // derived from the network
    cfg.integrator.record_every = 0; // derived from outputs.record_ct
    cfg.initial.kind = InitialStateKind::Entangled;
    cfg.horizon = 10.0;
    return cfg;
}

ComplexMatrix initial_state(const InitialStateSpec& spec, int n_sites) {
    const Eigen::Index dim = Eigen::Index{1} << n_sites;
    if (spec.kind == InitialStateKind::Ground) {
        ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
        rho(0, 0) = 1.0;
        return rho;
    }
    if (spec.kind == InitialStateKind::Custom) {
        if (spec.custom.rows() != dim || spec.custom.cols() != dim) {
            throw std::invalid_argument("initial_state: custom matrix dimension mismatch");
        }
        validate_density(spec.custom);
        return spec.custom;
    }
    if (n_sites != 4) {
        throw std::invalid_argument("initial_state: pair preparations need a four-site network");
    }
    // one excitation on the control pair: |e at 2> = |gegg> = 4, |e at 4> = |ggge> = 1
    const Eigen::Index up2 = 4, up4 = 1;
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    switch (spec.kind) {
        case InitialStateKind::Entangled: {
            ComplexVector psi = ComplexVector::Zero(dim);
            psi(up2) = 1.0 / std::sqrt(2.0);
            psi(up4) = 1.0 / std::sqrt(2.0);
            rho = psi * psi.adjoint();
            break;
        }
        case InitialStateKind::Mixed:
            rho(up2, up2) = 0.5;
            rho(up4, up4) = 0.5;
            break;
        case InitialStateKind::ThetaPure: {
            if (spec.theta < 0.0 || spec.theta > M_PI / 2.0 + 1e-12) {
                throw std::invalid_argument("initial_state: theta must lie in [0, pi/2]");
            }
            ComplexVector psi = ComplexVector::Zero(dim);
            psi(up2) = std::cos(spec.theta);
            psi(up4) = std::sin(spec.theta);
            rho = psi * psi.adjoint();
            break;
        }
        default:
            throw std::logic_error("unreachable");
    }
    return rho;
}

std::string emit_config(const ScenarioConfig& cfg) {
    Json root;
    Json sites = Json::array();
    for (const auto& s : cfg.network.sites) {
        sites.push_back(Json{{"label", s.label}, {"coord", {s.coord[0], s.coord[1]}},
                             {"omega", s.omega}});
    }
    Json hop = Json::array();
    for (Eigen::Index i = 0; i < cfg.network.hopping.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < cfg.network.hopping.cols(); ++j) {
            row.push_back(cfg.network.hopping(i, j));
        }
        hop.push_back(row);
    }
    root["network"] = Json{
        {"sites", sites},
        {"drive",
         Json{{"eta_d", cfg.network.drive.eta_d},
              {"omega_d", cfg.network.drive.omega_d},
              {"phi_x", cfg.network.drive.phi_x},
              {"phi_y", cfg.network.drive.phi_y},
              {"r", cfg.network.drive.r},
              {"delta_omega", cfg.network.drive.delta_omega},
              {"theta1", cfg.network.drive.theta1},
              {"theta2", cfg.network.drive.theta2}}},
        {"hopping", hop}};
    root["dissipators"] = Json{{"gamma_s", cfg.dissipators.gamma_s},
                               {"gamma_d", cfg.dissipators.gamma_d},
                               {"gamma_deph", cfg.dissipators.gamma_deph},
                               {"source_site", cfg.dissipators.source_site},
                               {"drain_site", cfg.dissipators.drain_site}};
    root["integrator"] = Json{{"method", method_name(cfg.integrator.method)},
                              {"dt", cfg.integrator.dt},
                              {"rel_tol", cfg.integrator.rel_tol},
                              {"abs_tol", cfg.integrator.abs_tol},
                              {"record_every", cfg.integrator.record_every}};
    Json initial = Json{{"kind", kind_name(cfg.initial.kind)}, {"theta", cfg.initial.theta}};
    if (cfg.initial.kind == InitialStateKind::Custom) {
        initial["matrix"] = matrix_to_json(cfg.initial.custom);
    }
    root["initial"] = initial;
    root["horizon"] = cfg.horizon;
    root["sweep"] = Json{{"drive_strength", cfg.sweep.drive_strength},
                         {"dephasing", cfg.sweep.dephasing},
                         {"theta", cfg.sweep.theta},
                         {"drain", cfg.sweep.drain}};
    root["outputs"] = Json{{"directory", cfg.outputs.directory},
                           {"record_ct", cfg.outputs.record_ct},
                           {"correlations_stride", cfg.outputs.correlations_stride}};
    return root.dump(2) + "\n";
}

ScenarioConfig parse_config(const std::string& text) {
    const Json root = Json::parse(text);
    check_keys(root, {"network", "dissipators", "integrator", "initial", "horizon", "sweep",
                      "outputs"},
               "top level");
    ScenarioConfig cfg = default_config();

    if (root.contains("network")) {
        const auto& net = root.at("network");
        check_keys(net, {"sites", "drive", "hopping"}, "network");
        if (net.contains("sites")) {
            cfg.network.sites.clear();
            for (const auto& s : net.at("sites")) {
                check_keys(s, {"label", "coord", "omega"}, "network.sites");
                SiteSpec site;
                site.label = s.at("label").get<int>();
                site.coord = {s.at("coord").at(0).get<int>(), s.at("coord").at(1).get<int>()};
                site.omega = s.at("omega").get<double>();
                cfg.network.sites.push_back(site);
            }
        }
        if (net.contains("drive")) {
            const auto& d = net.at("drive");
            check_keys(d, {"eta_d", "omega_d", "phi_x", "phi_y", "r", "delta_omega", "theta1",
                           "theta2"},
                       "network.drive");
            auto& drive = cfg.network.drive;
            if (d.contains("eta_d")) drive.eta_d = d.at("eta_d").get<double>();
            if (d.contains("omega_d")) drive.omega_d = d.at("omega_d").get<double>();
            if (d.contains("phi_x")) drive.phi_x = d.at("phi_x").get<double>();
            if (d.contains("phi_y")) drive.phi_y = d.at("phi_y").get<double>();
            if (d.contains("r")) drive.r = d.at("r").get<int>();
            if (d.contains("delta_omega")) drive.delta_omega = d.at("delta_omega").get<double>();
            if (d.contains("theta1")) drive.theta1 = d.at("theta1").get<int>();
            if (d.contains("theta2")) drive.theta2 = d.at("theta2").get<int>();
        }
        if (net.contains("hopping")) {
            const auto& rows = net.at("hopping");
            const auto n = static_cast<Eigen::Index>(rows.size());
            cfg.network.hopping.resize(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                const auto& row = rows.at(static_cast<std::size_t>(i));
                if (static_cast<Eigen::Index>(row.size()) != n) {
                    throw std::invalid_argument("config: hopping table must be square");
                }
                for (Eigen::Index j = 0; j < n; ++j) {
                    cfg.network.hopping(i, j) = row.at(static_cast<std::size_t>(j)).get<double>();
                }
            }
        }
    }
    if (root.contains("dissipators")) {
        const auto& d = root.at("dissipators");
        check_keys(d, {"gamma_s", "gamma_d", "gamma_deph", "source_site", "drain_site"},
                   "dissipators");
        if (d.contains("gamma_s")) cfg.dissipators.gamma_s = d.at("gamma_s").get<double>();
        if (d.contains("gamma_d")) cfg.dissipators.gamma_d = d.at("gamma_d").get<double>();
        if (d.contains("gamma_deph")) {
            cfg.dissipators.gamma_deph = d.at("gamma_deph").get<std::vector<double>>();
        }
        if (d.contains("source_site")) cfg.dissipators.source_site = d.at("source_site").get<int>();
        if (d.contains("drain_site")) cfg.dissipators.drain_site = d.at("drain_site").get<int>();
    }
    if (root.contains("integrator")) {
        const auto& in = root.at("integrator");
        check_keys(in, {"method", "dt", "rel_tol", "abs_tol", "record_every"}, "integrator");
        if (in.contains("method")) {
            cfg.integrator.method = method_from_name(in.at("method").get<std::string>());
        }
        if (in.contains("dt")) cfg.integrator.dt = in.at("dt").get<double>();
        if (in.contains("rel_tol")) cfg.integrator.rel_tol = in.at("rel_tol").get<double>();
        if (in.contains("abs_tol")) cfg.integrator.abs_tol = in.at("abs_tol").get<double>();
        if (in.contains("record_every")) {
            cfg.integrator.record_every = in.at("record_every").get<int>();
        }
    }
    if (root.contains("initial")) {
        const auto& in = root.at("initial");
        check_keys(in, {"kind", "theta", "matrix"}, "initial");
        if (in.contains("kind")) cfg.initial.kind = kind_from_name(in.at("kind").get<std::string>());
        if (in.contains("theta")) cfg.initial.theta = in.at("theta").get<double>();
        if (in.contains("matrix")) cfg.initial.custom = matrix_from_json(in.at("matrix"));
    }
    if (root.contains("horizon")) cfg.horizon = root.at("horizon").get<double>();
    if (root.contains("sweep")) {
        const auto& sw = root.at("sweep");
        check_keys(sw, {"drive_strength", "dephasing", "theta", "drain"}, "sweep");
        if (sw.contains("drive_strength")) {
            cfg.sweep.drive_strength = sw.at("drive_strength").get<std::vector<double>>();
        }
        if (sw.contains("dephasing")) cfg.sweep.dephasing = sw.at("dephasing").get<std::vector<double>>();
        if (sw.contains("theta")) cfg.sweep.theta = sw.at("theta").get<std::vector<double>>();
        if (sw.contains("drain")) cfg.sweep.drain = sw.at("drain").get<std::vector<double>>();
    }
    if (root.contains("outputs")) {
        const auto& o = root.at("outputs");
        check_keys(o, {"directory", "record_ct", "correlations_stride"}, "outputs");
        if (o.contains("directory")) cfg.outputs.directory = o.at("directory").get<std::string>();
        if (o.contains("record_ct")) cfg.outputs.record_ct = o.at("record_ct").get<double>();
        if (o.contains("correlations_stride")) {
            cfg.outputs.correlations_stride = o.at("correlations_stride").get<int>();
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Trajectory run_scenario(const ScenarioConfig& cfg) {
    for (const auto& w : cfg.network.validate()) {
        std::cerr << "warning: " << w << "\n";
    }
    if (cfg.horizon <= 0.0) throw std::invalid_argument("scenario: horizon must be > 0");
    const double c_ref = cfg.network.reference_hopping();
    const double scale = (c_ref > 0.0) ? c_ref : 1.0;
    const double t_end = cfg.horizon / scale;

    IntegratorSpec integ = cfg.integrator;
    if (integ.record_every < 1) {
        const double dt_target = (integ.dt > 0.0) ? integ.dt : default_step(cfg.network);
        const auto n_steps =
            static_cast<long>(std::ceil(t_end / dt_target - 1e-12));
        const double h = t_end / static_cast<double>(std::max<long>(n_steps, 1));
        const double rec_dt = cfg.outputs.record_ct / scale;
        integ.record_every = std::max(1, static_cast<int>(std::lround(rec_dt / h)));
    }

    RecordOptions opts;
    opts.record_pair = (cfg.network.size() == 4);
    const ComplexMatrix rho0 = initial_state(cfg.initial, cfg.network.size());
    return evolve(rho0, cfg.network, cfg.dissipators, integ, t_end, opts);
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    if (traj.size() == 0) throw std::invalid_argument("trajectory csv: empty trajectory");
    const auto n_sites = traj.populations.front().size();
    std::vector<std::string> header{"ct"};
    for (Eigen::Index j = 1; j <= n_sites; ++j) {
        header.push_back("p" + std::to_string(j) + std::to_string(j));
    }
    header.emplace_back("trace_drift");
    header.emplace_back("min_eig");
    CsvWriter csv(path, header);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        std::vector<double> row{traj.ct(i)};
        for (Eigen::Index j = 0; j < n_sites; ++j) row.push_back(traj.populations[i](j));
        row.push_back(traj.trace_drift[i]);
        row.push_back(traj.min_eig[i]);
        csv.write_row(row);
    }
}

void write_correlation_csv(const std::string& path,
                           const std::vector<CorrelationSample>& series) {
    CsvWriter csv(path, {"ct", "eof", "discord2", "discord4", "mutual_info"});
    for (const auto& s : series) {
        csv.write_row({s.ct, s.eof, s.discord_2, s.discord_4, s.mutual_info});
    }
}

} // namespace qnet

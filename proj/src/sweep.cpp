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

#include "qnet/sweep.hpp"

#include "qnet/csv.hpp"
#include "qnet/metrics.hpp"

#include <json.hpp>

#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace qnet {

std::vector<std::string> sweep_axis_names(const SweepGrids& grids) {
    std::vector<std::string> names;
    if (!grids.drive_strength.empty()) names.emplace_back("drive_strength");
    if (!grids.dephasing.empty()) names.emplace_back("dephasing");
    if (!grids.theta.empty()) names.emplace_back("theta");
    if (!grids.drain.empty()) names.emplace_back("drain");
    return names;
}

void apply_axis(ScenarioConfig& cfg, const std::string& axis, double value) {
    const double c_ref = cfg.network.reference_hopping();
    if (axis == "drive_strength") {
        if (cfg.network.drive.omega_d <= 0.0) {
            throw std::invalid_argument("sweep: drive axis needs a nonzero drive frequency");
        }
        cfg.network.drive.eta_d = value * c_ref / cfg.network.drive.omega_d;
    } else if (axis == "dephasing") {
        cfg.dissipators.gamma_deph.assign(static_cast<std::size_t>(cfg.network.size()),
                                          value * c_ref);
    } else if (axis == "theta") {
        cfg.initial.kind = InitialStateKind::ThetaPure;
        cfg.initial.theta = value;
    } else if (axis == "drain") {
        cfg.dissipators.gamma_d = value * c_ref;
        cfg.dissipators.gamma_s = 2.0 * cfg.dissipators.gamma_d;
    } else {
        throw std::invalid_argument("sweep: unknown axis '" + axis + "'");
    }
}

std::vector<SweepPoint> expand_sweep(const ScenarioConfig& cfg) {
    const auto names = sweep_axis_names(cfg.sweep);
    if (names.empty()) throw std::invalid_argument("sweep: no grids configured");
    std::vector<const std::vector<double>*> grids;
    for (const auto& n : names) {
        if (n == "drive_strength") grids.push_back(&cfg.sweep.drive_strength);
        if (n == "dephasing") grids.push_back(&cfg.sweep.dephasing);
        if (n == "theta") grids.push_back(&cfg.sweep.theta);
        if (n == "drain") grids.push_back(&cfg.sweep.drain);
    }

    std::vector<SweepPoint> points;
    std::vector<std::size_t> idx(grids.size(), 0);
    while (true) {
        SweepPoint p;
        p.cfg = cfg;
        for (std::size_t a = 0; a < grids.size(); ++a) {
            const double v = (*grids[a])[idx[a]];
            p.coords.push_back(v);
            apply_axis(p.cfg, names[a], v);
        }
        points.push_back(std::move(p));
        // odometer increment, last axis fastest
        std::size_t a = grids.size();
        while (a > 0) {
            --a;
            if (++idx[a] < grids[a]->size()) break;
            idx[a] = 0;
            if (a == 0) return points;
        }
    }
}

SweepRow evaluate_point(const SweepPoint& point) {
    SweepRow row;
    row.coords = point.coords;
    try {
        const Trajectory traj = run_scenario(point.cfg);
        row.p3 = integrated_population(traj, point.cfg.dissipators.drain_site);
        // p3 is integrated over ct, so the drain rate enters per unit ct
        const double gamma_d_ct = point.cfg.dissipators.gamma_d / traj.time_scale;
        row.eta_eff = (gamma_d_ct > 0.0) ? efficiency(row.p3, gamma_d_ct) : 0.0;
    } catch (const std::exception& e) {
        row.p3 = std::numeric_limits<double>::quiet_NaN();
        row.eta_eff = std::numeric_limits<double>::quiet_NaN();
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

std::vector<SweepRow> run_points_ordered(std::size_t n, int threads,
                                         const std::function<SweepRow(std::size_t)>& fn,
                                         const std::function<void(const SweepRow&)>& flush) {
    std::vector<SweepRow> rows(n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            rows[i] = fn(i);
            if (flush) flush(rows[i]);
        }
        return rows;
    }

    std::vector<char> done(n, 0);
    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                SweepRow row = fn(i);
                std::lock_guard lock(mtx);
                rows[i] = std::move(row);
                done[i] = 1;
            } catch (...) {
                std::lock_guard lock(mtx);
                if (!failure) failure = std::current_exception();
                done[i] = 1;
            }
            cv.notify_one();
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    std::size_t flushed = 0;
    {
        std::unique_lock lock(mtx);
        while (flushed < n) {
            cv.wait(lock, [&] { return done[flushed] != 0; });
            while (flushed < n && done[flushed] != 0) {
                if (flush) flush(rows[flushed]);
                ++flushed;
            }
        }
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<std::string> run_sweep(const ScenarioConfig& cfg, int threads,
                                   const std::string& out_dir) {
    const auto points = expand_sweep(cfg);
    std::filesystem::create_directories(out_dir);

    const auto names = sweep_axis_names(cfg.sweep);
    std::vector<std::string> header = names;
    header.emplace_back("p3");
    header.emplace_back("eta_eff");
    header.emplace_back("status");

    const std::string csv_path = out_dir + "/sweep.csv";
    CsvWriter csv(csv_path, header);
    auto flush = [&](const SweepRow& row) {
        std::vector<double> vals = row.coords;
        vals.push_back(row.p3);
        vals.push_back(row.eta_eff);
        csv.write_row(vals, row.status);
        csv.flush();
    };
    run_points_ordered(points.size(), threads,
                       [&](std::size_t i) { return evaluate_point(points[i]); }, flush);

    const std::string manifest_path = out_dir + "/sweep_manifest.json";
    nlohmann::ordered_json manifest;
    manifest["version"] = kVersion;
    manifest["kind"] = "sweep";
    manifest["points"] = points.size();
    manifest["config"] = nlohmann::ordered_json::parse(emit_config(cfg));
    manifest["files"] = {csv_path};
    std::ofstream(manifest_path) << manifest.dump(2) << "\n";
    return {csv_path, manifest_path};
}

} // namespace qnet

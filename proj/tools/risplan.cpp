// SPDX-License-Identifier: Apache-2.0
//
// risplan — deployment planning for RIS-assisted wireless links:
// ergodic-capacity bounds over cascade Rician fading and rotation/location
// optimization of the reflecting surface.
// Copyright (C) 2026 The risplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <risplan/risplan.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace risplan;

std::string num(double x) { return detail::csv_num(x); }

RunConfig load_from_path(const std::string& path) {
    if (path.empty())
        return RunConfig{};
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    return load_config(in);
}

std::string config_echo_string(const RunConfig& c) {
    std::ostringstream os;
    write_config_echo(os, c);
    return os.str();
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    f << payload;
}

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature for the validate-mc density checks
// ---------------------------------------------------------------------------

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, eps, 48);
}

// ---------------------------------------------------------------------------
// subcommand payloads
// ---------------------------------------------------------------------------

int cmd_angles(const RunConfig& cfg, const std::string& out_path) {
    cfg.validate();
    const AnglesReport rep = make_angles_report(cfg.scene);
    std::ostringstream os;
    os << "d_tc = " << num(rep.d_tc_m) << " m\n"
       << "d_cr = " << num(rep.d_cr_m) << " m\n"
       << "alpha = " << num(rep.alpha_deg) << " deg\n"
       << "beta = " << num(rep.beta_deg) << " deg\n"
       << "theta_t0_opt = " << num(rep.theta_t0_opt_deg) << " deg\n"
       << "theta_r0_opt = " << num(rep.theta_r0_opt_deg) << " deg\n"
       << "theta_0_opt = " << num(rep.theta_0_opt_deg) << " deg\n"
       << "theta_0_feasible = (" << num(rep.theta_0_min_deg) << ", "
       << num(rep.theta_0_max_deg) << ") deg\n";
    std::cout << os.str();
    if (!out_path.empty()) {
        json j;
        j["config_echo"] = config_echo_string(cfg);
        j["angles"] = angles_json(rep);
        write_file(out_path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_capacity(const RunConfig& cfg, const std::string& out_path) {
    cfg.validate();
    const PatternConfig pat = cfg.resolved_pattern();
    const AngleSet ang = elevation_angles(cfg.scene);
    const CompositeGain g = ccg_general(cfg.scene, pat, ang, cfg.budget.rho0_linear());

    CapacityReport rep;
    const bool with_mc = cfg.trials > 0;
    if (with_mc) {
        rep = mc_ergodic_capacity(cfg.scene, pat, cfg.rician, cfg.budget, cfg.trials,
                                  cfg.seed, cfg.threads);
    } else {
        rep.upper_bound_bpshz = capacity_upper_bound(g.rho_cc, cfg.rician, cfg.budget);
        rep.expected_snr_db =
            10.0 * std::log10(expected_snr(g.rho_cc, cfg.rician, cfg.budget));
    }

    std::ostringstream os;
    os << "ccg = " << num(g.rho_cc) << " (" << num(10.0 * std::log10(g.rho_cc))
       << " dB)\n"
       << "expected_snr = " << num(rep.expected_snr_db) << " dB\n"
       << "upper_bound = " << num(rep.upper_bound_bpshz) << " bit/s/Hz\n";
    if (with_mc)
        os << "mc_mean = " << num(rep.mc_mean_bpshz) << " bit/s/Hz\n"
           << "mc_stderr = " << num(rep.mc_stderr_bpshz) << " bit/s/Hz\n"
           << "trials = " << rep.trials << "\n";
    std::cout << os.str();

    if (!out_path.empty()) {
        json j;
        j["config_echo"] = config_echo_string(cfg);
        j["ccg"] = g.rho_cc;
        j["capacity"] = capacity_json(rep, with_mc);
        write_file(out_path, j.dump(2) + "\n");
    }
    return 0;
}

void apply_axis(RunConfig& c, const std::string& axis, double v) {
    if (axis == "theta_t0") {
        c.theta_t0_deg = v;
        c.theta_t0_opt = false;
    } else if (axis == "theta_r0") {
        c.theta_r0_deg = v;
        c.theta_r0_opt = false;
    } else if (axis == "theta_0") {
        c.theta_0_deg = v;
        c.theta_0_opt = false;
    } else if (axis == "l") {
        c.scene.l = v;
    } else if (axis == "r") {
        c.scene.r = v;
    } else if (axis == "h") {
        c.scene.h = v;
    } else if (axis == "q_u") {
        c.pattern.q_u = v;
    } else if (axis == "p_t") {
        c.budget.p_t_dbm = v;
    } else if (axis == "n_units") {
        c.budget.n_units = static_cast<int>(std::llround(v));
    } else {
        throw std::invalid_argument("sweep: unknown axis '" + axis + "'");
    }
}

int cmd_sweep(const RunConfig& cfg, const std::string& axis, double from, double to,
              double step, bool with_mc, const std::string& out_path) {
    if (!(step > 0.0))
        throw std::invalid_argument("sweep: step must be positive");
    if (!(from <= to))
        throw std::invalid_argument("sweep: empty range (from > to)");

    std::vector<SweepRow> rows;
    const long count = detail::grid_count(from, to, step);
    for (long i = 0; i < count; ++i) {
        const double v = from + static_cast<double>(i) * step;
        RunConfig c = cfg;
        apply_axis(c, axis, v);
        c.validate();
        const PatternConfig pat = c.resolved_pattern();
        const AngleSet ang = elevation_angles(c.scene);
        const CompositeGain g = ccg_general(c.scene, pat, ang, c.budget.rho0_linear());
        SweepRow row;
        row.axis_value = v;
        row.ccg = g.rho_cc;
        row.expected_snr = expected_snr(g.rho_cc, c.rician, c.budget);
        row.capacity_bpshz = capacity_upper_bound(g.rho_cc, c.rician, c.budget);
        if (with_mc) {
            const CapacityReport rep = mc_ergodic_capacity(
                c.scene, pat, c.rician, c.budget, std::max<long long>(1, c.trials),
                c.seed, c.threads);
            row.has_mc = true;
            row.mc_mean = rep.mc_mean_bpshz;
            row.mc_stderr = rep.mc_stderr_bpshz;
        }
        rows.push_back(row);
    }

    std::ostringstream os;
    write_sweep_csv(os, cfg, axis, rows);
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        write_file(out_path, os.str());
        std::cout << "sweep " << axis << ": " << rows.size() << " rows -> " << out_path
                  << "\n";
    }
    return 0;
}

int cmd_optimize(const RunConfig& cfg, const std::string& out_path) {
    cfg.validate();
    const DeploymentResult res =
        optimize_location(cfg.scene.R, cfg.scene.h_min, cfg.scene.h_max, cfg.grid(),
                          cfg.pattern, cfg.rician, cfg.budget);
    std::ostringstream os;
    os << "r_opt = " << num(res.r_opt_m) << " m (mirror " << num(res.mirror_r_opt_m)
       << " m)\n"
       << "h_opt = " << num(res.h_opt_m) << " m\n"
       << "theta0_opt = " << num(rad2deg(res.theta0_opt_rad)) << " deg\n"
       << "ccg_opt = " << num(res.ccg_opt) << "\n"
       << "capacity_opt = " << num(res.capacity_opt_bpshz) << " bit/s/Hz\n";
    std::cout << os.str();
    if (!out_path.empty()) {
        json j;
        j["config_echo"] = config_echo_string(cfg);
        j["deployment"] = deployment_json(res);
        write_file(out_path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_region(const RunConfig& cfg, const std::string& out_path) {
    cfg.validate();
    const RegionMap map =
        effective_region(cfg.scene.R, cfg.scene.h_min, cfg.scene.h_max, cfg.grid(),
                         cfg.gamma_th_db, cfg.pattern, cfg.rician, cfg.budget);
    std::size_t marked = 0;
    for (const auto& c : map.cells)
        marked += c.effective ? 1u : 0u;

    std::ostringstream os;
    write_region_csv(os, cfg, map);
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        write_file(out_path, os.str());
        std::cout << "region: " << marked << "/" << map.cells.size()
                  << " cells effective -> " << out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// validate-mc: Appendix-style moment checks plus the bound-tightness suite
// ---------------------------------------------------------------------------

struct CheckSink {
    std::ostringstream os;
    bool all_pass = true;
    void line(bool pass, const std::string& text) {
        all_pass = all_pass && pass;
        os << (pass ? "PASS " : "FAIL ") << text << "\n";
    }
};

void check_moments(CheckSink& sink, std::uint64_t seed) {
    constexpr int units = 1000;
    constexpr long long draws = 1000; // units * draws samples per K
    for (const double k : {0.0, 1.0, 5.0, 20.0}) {
        RicianSpec spec{k, k};
        double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
        long long n_samples = 0;
        for (long long t = 0; t < draws; ++t) {
            const ChannelSample s = sample_cascade(1.0, 1.0, spec, units, seed, t);
            for (const double x : s.g_mag) {
                sum += x;
                sum2 += x * x;
                sum4 += x * x * x * x;
                ++n_samples;
            }
        }
        const double nd = static_cast<double>(n_samples);
        const double mean = sum / nd;
        const double mean2 = sum2 / nd;
        const double se_mean = std::sqrt(std::max(0.0, mean2 - mean * mean) / nd);
        const double se_mean2 =
            std::sqrt(std::max(0.0, sum4 / nd - mean2 * mean2) / nd);
        const double b = std::sqrt(1.0 / (1.0 + k));
        const double a = std::sqrt(k / (1.0 + k));
        const AbsMoments m = moment_abs(a, b, k);
        const double z1 = std::abs(mean - m.mean) / se_mean;
        const double z2 = std::abs(mean2 - m.mean_square) / se_mean2;
        sink.line(z1 <= 3.0, "moment-mean K=" + num(k) + ": sample=" + num(mean) +
                                 " closed=" + num(m.mean) + " z=" + num(z1));
        sink.line(z2 <= 3.0, "moment-square K=" + num(k) + ": sample=" + num(mean2) +
                                 " closed=" + num(m.mean_square) + " z=" + num(z2));
    }
}

void check_pdf(CheckSink& sink) {
    for (const double k : {0.0, 5.0}) {
        const double b = std::sqrt(1.0 / (1.0 + k));
        const double upper = b * (std::sqrt(k) + 10.0);
        const auto f = [b, k](double x) { return pdf_abs(x, b, k); };
        const auto xf = [b, k](double x) { return x * pdf_abs(x, b, k); };
        const double total = integrate(f, 0.0, upper, 1e-10);
        const double first = integrate(xf, 0.0, upper, 1e-12);
        const double mean = moment_abs(std::sqrt(k) * b, b, k).mean;
        sink.line(std::abs(total - 1.0) <= 1e-6,
                  "pdf-integral K=" + num(k) + ": " + num(total));
        sink.line(std::abs(first - mean) <= 1e-8, "pdf-first-moment K=" + num(k) + ": " +
                                                      num(first) + " vs " + num(mean));
    }
}

void check_bound_tightness(CheckSink& sink, const RunConfig& base) {
    const double rots[] = {50.0, 60.0};
    const double locs[][2] = {{0.0, 200.0}, {100.0, 200.0}, {0.0, 500.0}, {100.0, 500.0}};
    for (const auto& loc : locs) {
        for (const double rot : rots) {
            for (const int n : {16, 32, 64, 128}) {
                RunConfig c = base;
                c.scene.l = loc[0];
                c.scene.r = loc[1];
                c.scene.h = 100.0;
                c.theta_t0_deg = rot;
                c.theta_r0_deg = -rot;
                c.theta_0_deg = 0.0;
                c.theta_t0_opt = c.theta_r0_opt = c.theta_0_opt = false;
                c.budget.n_units = n;
                c.validate();
                const CapacityReport rep =
                    mc_ergodic_capacity(c.scene, c.resolved_pattern(), c.rician, c.budget,
                                        std::max<long long>(1, c.trials), c.seed,
                                        c.threads);
                const std::string tag = "P(" + num(loc[0]) + "," + num(loc[1]) +
                                        ",100) rot=" + num(rot) + " N=" + std::to_string(n);
                const bool jensen =
                    rep.mc_mean_bpshz - 3.0 * rep.mc_stderr_bpshz <= rep.upper_bound_bpshz;
                sink.line(jensen, "tightness-jensen " + tag + ": bound=" +
                                      num(rep.upper_bound_bpshz) + " mc=" +
                                      num(rep.mc_mean_bpshz) + " se=" +
                                      num(rep.mc_stderr_bpshz));
                if (n == 64) {
                    const double gap =
                        (rep.upper_bound_bpshz - rep.mc_mean_bpshz) / rep.upper_bound_bpshz;
                    sink.line(gap < 0.02,
                              "tightness-gap " + tag + ": rel_gap=" + num(gap) + " (< 0.02)");
                }
            }
        }
    }
}

int cmd_validate_mc(const RunConfig& cfg, const std::string& out_path) {
    cfg.validate();
    CheckSink sink;
    sink.os << "# risplan validate-mc\n";
    write_config_echo(sink.os, cfg, "# ");
    check_moments(sink, cfg.seed);
    check_pdf(sink);
    check_bound_tightness(sink, cfg);
    sink.os << (sink.all_pass ? "ALL CHECKS PASSED\n" : "CHECKS FAILED\n");
    std::cout << sink.os.str();
    if (!out_path.empty())
        write_file(out_path, sink.os.str());
    return sink.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"risplan: capacity bounds and RIS deployment planning"};
    app.require_subcommand(1);

    std::string config_path, out_path, axis;
    double from = 0.0, to = 0.0, step = 1.0;
    bool with_mc = false;
    long long trials_override = 0;
    std::uint64_t seed_override = 0;
    int threads_override = 1;
    double gamma_override = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key-value config file");
        sub->add_option("--out", out_path, "output artifact path");
        sub->add_option("--seed", seed_override, "override config seed");
        sub->add_option("--trials", trials_override, "override config trials");
        sub->add_option("--threads", threads_override, "override config threads");
    };

    CLI::App* angles = app.add_subcommand("angles", "scene angles and optimal rotations");
    add_common(angles);
    CLI::App* capacity = app.add_subcommand("capacity", "capacity bound and Monte Carlo");
    add_common(capacity);
    CLI::App* sweep = app.add_subcommand("sweep", "capacity sweep along one axis (CSV)");
    add_common(sweep);
    sweep->add_option("--axis", axis,
                      "one of theta_t0|theta_r0|theta_0|l|r|h|q_u|p_t|n_units")
        ->required();
    sweep->add_option("--from", from, "first axis value")->required();
    sweep->add_option("--to", to, "last axis value")->required();
    sweep->add_option("--step", step, "axis step")->required();
    sweep->add_flag("--mc", with_mc, "add Monte Carlo columns");
    CLI::App* optimize = app.add_subcommand("optimize", "optimal RIS location (JSON)");
    add_common(optimize);
    CLI::App* region = app.add_subcommand("region", "effective deployment region (CSV)");
    add_common(region);
    region->add_option("--gamma-th", gamma_override, "SNR threshold in dB");
    CLI::App* validate = app.add_subcommand("validate-mc",
                                            "moment and bound-tightness self checks");
    add_common(validate);

    CLI11_PARSE(app, argc, argv);

    CLI::App* active = app.get_subcommands().front();

    try {
        RunConfig cfg = load_from_path(config_path);
        if (active->count("--seed"))
            cfg.seed = seed_override;
        if (active->count("--trials"))
            cfg.trials = trials_override;
        if (active->count("--threads"))
            cfg.threads = threads_override;
        if (active == region && region->count("--gamma-th"))
            cfg.gamma_th_db = gamma_override;

        if (angles->parsed())
            return cmd_angles(cfg, out_path);
        if (capacity->parsed())
            return cmd_capacity(cfg, out_path);
        if (sweep->parsed())
            return cmd_sweep(cfg, axis, from, to, step, with_mc, out_path);
        if (optimize->parsed())
            return cmd_optimize(cfg, out_path);
        if (region->parsed())
            return cmd_region(cfg, out_path);
        if (validate->parsed())
            return cmd_validate_mc(cfg, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

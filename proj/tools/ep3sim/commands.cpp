#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "csv.hpp"
#include "ep3sim/errors.hpp"
#include "ep3sim/kerr_drive.hpp"
#include "ep3sim/params.hpp"
#include "ep3sim/puiseux.hpp"
#include "ep3sim/scattering.hpp"
#include "ep3sim/spectral.hpp"
#include "svg.hpp"

namespace ep3sim::cli {

namespace {

params::PseudoHermitianConfig manifold_config(const Config& cfg) {
    params::PseudoHermitianConfig mc;
    mc.eta = cfg.get_double("eta");
    mc.g1 = cfg.get_double("g1", params::g_ep3(mc.eta));
    mc.delta1_sign = cfg.get_int("delta1_sign", 1);
    return mc;
}

params::PhysicalParams params_from_config(const Config& cfg) {
    const auto mc = manifold_config(cfg);
    auto p = params::derive_pseudo_hermitian(mc, cfg.get_double("kappa_int", 1.0),
                                             cfg.get_double("port_split", 0.5));
    p.delta_k = cfg.get_double("delta_k", 0.0);
    p.validate();
    return p;
}

std::string join(const std::string& dir, const std::string& name) {
    if (dir.empty() || dir == ".") return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

// Optional absolute scale, display only: all files stay in units of gamma2.
void print_mhz_note(const Config& cfg, const char* quantity, double value) {
    if (const auto mhz = cfg.get_optional("gamma2_mhz")) {
        std::printf("  %s = %s gamma2 = %s MHz (gamma2 = %s MHz)\n", quantity,
                    fmt_g(value).c_str(), fmt_g(value * *mhz).c_str(),
                    fmt_g(*mhz).c_str());
    }
}

scattering::Window window_from_config(const Config& cfg,
                                      const params::PhysicalParams& p) {
    const auto def = scattering::default_window(p);
    return {cfg.get_double("window_lo", def.lo), cfg.get_double("window_hi", def.hi)};
}

std::vector<double> log_grid(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) {
        throw ValidationError("log grid needs 0 < min < max and count >= 2");
    }
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    }
    return out;
}

Series trace_series(const scattering::SpectrumTrace& tr, const std::string& label) {
    return {label, tr.nu, tr.s_abs2};
}

}  // namespace

void cmd_ep3(const Config& cfg, const RunOptions& opt) {
    const double eta = cfg.get_double("eta");
    const double g_closed = params::g_ep3(eta);
    const double lo = cfg.get_double("bracket_lo", params::g_min(eta) + 1e-9);
    const double hi = cfg.get_double("bracket_hi", 1.5 * g_closed);
    const double g_numeric = spectral::find_ep3(eta, lo, hi);
    const double w = params::omega_ep3(eta, cfg.get_double("delta_cp", 0.0));
    const auto v = params::ep3_eigenvector(eta);

    CsvWriter out({"quantity", "value"});
    out.kv("eta", eta);
    out.kv("g_min", params::g_min(eta));
    out.kv("g_ep3_closed_form", g_closed);
    out.kv("g_ep3_numeric", g_numeric);
    out.kv("g_ep3_abs_diff", std::abs(g_numeric - g_closed));
    out.kv("omega_ep3", w);
    for (int i = 0; i < 3; ++i) {
        out.kv("eigvec_" + std::to_string(i) + "_re", v[i].real());
        out.kv("eigvec_" + std::to_string(i) + "_im", v[i].imag());
    }
    const auto path = join(opt.out_dir, "ep3_summary.csv");
    out.save(path);
    std::printf("ep3: eta=%s g_EP3=%s (numeric %s, |diff|=%s) Omega_EP3=%s -> %s\n",
                fmt_g(eta).c_str(), fmt_g(g_closed).c_str(), fmt_g(g_numeric).c_str(),
                fmt_g(std::abs(g_numeric - g_closed)).c_str(), fmt_g(w).c_str(),
                path.c_str());
    print_mhz_note(cfg, "g_EP3", g_closed);
}

void cmd_eigen(const Config& cfg, const RunOptions& opt) {
    const double eta = cfg.get_double("eta");
    const double delta_k = cfg.get_double("delta_k", 0.0);
    const double delta_cp = cfg.get_double("delta_cp", 0.0);
    const int sign = cfg.get_int("delta1_sign", 1);
    const double lo = cfg.get_double("g1_min", params::g_min(eta) + 1e-9);
    const double hi = cfg.get_double("g1_max", 3.0);
    const int count = cfg.get_int("g1_count", 601);
    if (!(lo < hi) || count < 2) {
        throw ValidationError("eigen sweep needs g1_min < g1_max and g1_count >= 2");
    }

    CsvWriter out({"g1", "re_minus", "im_minus", "re_zero", "im_zero", "re_plus",
                   "im_plus"});
    spectral::SpectrumTriple prev;
    bool have_prev = false;
    for (int i = 0; i < count; ++i) {
        const double g = lo + (hi - lo) * i / (count - 1);
        params::PseudoHermitianConfig mc;
        mc.eta = eta;
        mc.g1 = g;
        mc.delta1_sign = sign;
        auto p = params::derive_pseudo_hermitian(mc, cfg.get_double("kappa_int", 1.0),
                                                 cfg.get_double("port_split", 0.5));
        p.delta_k = delta_k;
        const auto h = spectral::build_heff(p, delta_cp);
        const auto t = have_prev
                           ? spectral::track_labels(prev, spectral::eigenvalues(h).ordered())
                           : spectral::eigenvalues(h);
        prev = t;
        have_prev = true;
        out.row({g, t.omega_minus.real(), t.omega_minus.imag(), t.omega_zero.real(),
                 t.omega_zero.imag(), t.omega_plus.real(), t.omega_plus.imag()});
    }
    const auto path = join(opt.out_dir, "eigenvalues_vs_g1.csv");
    out.save(path);
    std::printf("eigen: eta=%s sweep g1 in [%s, %s] (%d points) -> %s\n",
                fmt_g(eta).c_str(), fmt_g(lo).c_str(), fmt_g(hi).c_str(), count,
                path.c_str());
}

void cmd_puiseux(const Config& cfg, const RunOptions& opt) {
    const double eta = cfg.get_double("eta");
    const auto sol = puiseux::puiseux_coefficients(eta);

    CsvWriter out({"quantity", "value"});
    out.kv("eta", eta);
    out.kv("lambda1_modulus", std::abs(sol.lambda1[0]));
    static const char* names[] = {"plus", "zero", "minus"};
    for (int l = 0; l < 3; ++l) {
        out.kv(std::string("theta_") + names[l], sol.theta[l]);
        out.kv(std::string("lambda1_") + names[l] + "_re", sol.lambda1[l].real());
        out.kv(std::string("lambda1_") + names[l] + "_im", sol.lambda1[l].imag());
        out.kv(std::string("lambda2_") + names[l] + "_re", sol.lambda2[l].real());
        out.kv(std::string("lambda2_") + names[l] + "_im", sol.lambda2[l].imag());
        out.kv(std::string("f1_residual_") + names[l],
               std::abs(puiseux::f1_residual(eta, sol.lambda1[l])));
        out.kv(std::string("f43_residual_") + names[l],
               std::abs(puiseux::f43_residual(eta, sol.lambda1[l], sol.lambda2[l])));
    }

    const auto fit_grid = log_grid(cfg.get_double("xi_fit_min", 1e-6),
                                   cfg.get_double("xi_fit_max", 1e-3),
                                   cfg.get_int("xi_fit_count", 7));
    const auto fit = puiseux::splitting_exponent_fit(eta, fit_grid);
    out.kv("splitting_fit_slope", fit.slope);
    out.kv("splitting_fit_slope_stderr", fit.slope_stderr);
    out.kv("splitting_fit_intercept", fit.intercept);

    if (const auto xi = cfg.get_optional("xi")) {
        if (puiseux::exceeds_truncation_range(*xi)) {
            std::fprintf(stderr,
                         "warning: xi=%s is beyond the two-term series range "
                         "(xi > %s); values are indicative only\n",
                         fmt_g(*xi).c_str(), fmt_g(puiseux::kTruncationXi).c_str());
        }
        const auto t = puiseux::eigenvalues_near_ep3(eta, cfg.get_double("delta_cp", 0.0), *xi);
        out.kv("omega_plus_re", t.omega_plus.real());
        out.kv("omega_plus_im", t.omega_plus.imag());
        out.kv("omega_zero_re", t.omega_zero.real());
        out.kv("omega_zero_im", t.omega_zero.imag());
        out.kv("omega_minus_re", t.omega_minus.real());
        out.kv("omega_minus_im", t.omega_minus.imag());
    }

    const auto path = join(opt.out_dir, "puiseux_coefficients.csv");
    out.save(path);
    std::printf("puiseux: eta=%s |lambda1|=%s fit slope=%s +- %s -> %s\n",
                fmt_g(eta).c_str(), fmt_g(std::abs(sol.lambda1[0])).c_str(),
                fmt_g(fit.slope).c_str(), fmt_g(fit.slope_stderr).c_str(),
                path.c_str());
}

void cmd_spectrum(const Config& cfg, const RunOptions& opt) {
    const auto p = params_from_config(cfg);
    const auto tr = scattering::scan(p, p.delta_k, window_from_config(cfg, p),
                                     cfg.get_int("n_points", scattering::kDefaultScanPoints));
    CsvWriter out({"delta_cp_over_gamma2", "s_abs2"});
    for (size_t i = 0; i < tr.nu.size(); ++i) out.row({tr.nu[i], tr.s_abs2[i]});
    const auto path = join(opt.out_dir, "spectrum.csv");
    out.save(path);
    std::printf("spectrum: eta=%s delta_k=%s %zu points -> %s\n",
                fmt_g(p.eta()).c_str(), fmt_g(p.delta_k).c_str(), tr.nu.size(),
                path.c_str());
    if (opt.plot) {
        PlotSpec spec;
        spec.title = "output spectrum";
        spec.x_label = "(omega_p - omega_c) / gamma2";
        spec.y_label = "|S|^2";
        spec.log_y = true;
        save_plot(join(opt.out_dir, "spectrum.svg"), spec, {trace_series(tr, "")});
    }
}

void cmd_dips(const Config& cfg, const RunOptions& opt) {
    const auto p = params_from_config(cfg);
    const auto tr = scattering::scan(p, p.delta_k, window_from_config(cfg, p),
                                     cfg.get_int("n_points", scattering::kDefaultScanPoints));
    CsvWriter trace_out({"delta_cp_over_gamma2", "s_abs2"});
    for (size_t i = 0; i < tr.nu.size(); ++i) trace_out.row({tr.nu[i], tr.s_abs2[i]});
    trace_out.save(join(opt.out_dir, "spectrum.csv"));

    const auto r = scattering::find_dips(tr);
    CsvWriter out({"quantity", "value"});
    out.kv("dip1_over_gamma2", r.dip1);
    out.kv("dip2_over_gamma2", r.dip2);
    out.kv("dip1_depth", r.depth1);
    out.kv("dip2_depth", r.depth2);
    out.kv("delta_omega_p_over_gamma2", r.delta_omega_p);
    out.kv("dip_count", r.dip_count);
    out.kv("delta_k_over_gamma2", p.delta_k);
    if (r.enhancement) out.kv("enhancement", *r.enhancement);
    const auto path = join(opt.out_dir, "dip_report.csv");
    out.save(path);
    std::printf("dips: dip1=%s dip2=%s delta_omega_p=%s%s%s -> %s\n",
                fmt_g(r.dip1).c_str(), fmt_g(r.dip2).c_str(),
                fmt_g(r.delta_omega_p).c_str(),
                r.enhancement ? " enhancement=" : "",
                r.enhancement ? fmt_g(*r.enhancement).c_str() : "", path.c_str());
    print_mhz_note(cfg, "delta_omega_p", r.delta_omega_p);
    if (opt.plot) {
        PlotSpec spec;
        spec.title = "output spectrum with dips";
        spec.x_label = "(omega_p - omega_c) / gamma2";
        spec.y_label = "|S|^2";
        spec.log_y = true;
        save_plot(join(opt.out_dir, "spectrum.svg"), spec, {trace_series(tr, "")});
    }
}

void cmd_enhance(const Config& cfg, const RunOptions& opt) {
    const auto etas = cfg.has("eta_list") ? cfg.get_list("eta_list")
                                          : std::vector<double>{1.0, 2.0, 3.0};
    const auto xis = cfg.has("xi_list")
                         ? cfg.get_list("xi_list")
                         : log_grid(cfg.get_double("xi_min", 1e-3),
                                    cfg.get_double("xi_max", 0.3),
                                    cfg.get_int("xi_count", 40));
    const auto rows = scattering::enhancement_curve(
        etas, xis, cfg.get_double("kappa_int", 1.0), cfg.get_double("port_split", 0.5),
        cfg.get_int("n_points", scattering::kDefaultScanPoints));

    CsvWriter out({"eta", "xi", "delta_omega_p_over_gamma2", "enhancement"});
    for (const auto& r : rows) out.row({r.eta, r.xi, r.delta_omega_p, r.enhancement});
    const auto path = join(opt.out_dir, "enhancement.csv");
    out.save(path);
    std::printf("enhance: %zu (eta, xi) cells -> %s\n", rows.size(), path.c_str());

    if (opt.plot) {
        std::vector<Series> dwp, enh;
        for (const double eta : etas) {
            Series a{"eta=" + fmt_g(eta), {}, {}};
            Series b = a;
            for (const auto& r : rows) {
                if (r.eta != eta) continue;
                a.x.push_back(r.xi);
                a.y.push_back(r.delta_omega_p);
                b.x.push_back(r.xi);
                b.y.push_back(r.enhancement);
            }
            dwp.push_back(a);
            enh.push_back(b);
        }
        PlotSpec sa;
        sa.title = "dip distance vs Kerr shift";
        sa.x_label = "Delta_K / gamma2";
        sa.y_label = "delta_omega_p / gamma2";
        sa.log_x = sa.log_y = true;
        save_plot(join(opt.out_dir, "enhancement_delta_omega.svg"), sa, dwp);
        PlotSpec sb;
        sb.title = "sensitivity enhancement factor";
        sb.x_label = "Delta_K / gamma2";
        sb.y_label = "delta_omega_p / Delta_K";
        sb.log_x = true;
        save_plot(join(opt.out_dir, "enhancement_factor.svg"), sb, enh);
    }
}

void cmd_kerr_steady(const Config& cfg, const RunOptions& opt) {
    const auto p = params_from_config(cfg);
    kerr::DriveConfig drive;
    drive.delta_cd = cfg.get_double("delta_cd", 0.0);
    // drive detunings follow the cavity-drive detuning and the magnon offsets
    drive.delta_1d = drive.delta_cd + p.delta1;
    drive.delta_2d = drive.delta_cd + p.delta2;
    drive.kerr_k1 = cfg.get_double("kerr_k1");
    if (!(drive.kerr_k1 >= 0.0)) throw ValidationError("kerr_k1 must be >= 0");

    const double lo = cfg.get_double("omega_d_min", 0.0);
    const double hi = cfg.get_double("omega_d_max");
    const int count = cfg.get_int("omega_d_count", 201);
    if (!(hi > lo) || count < 2) {
        throw ValidationError("kerr sweep needs omega_d_max > omega_d_min and "
                              "omega_d_count >= 2");
    }

    CsvWriter out({"omega_d", "branch_index", "m", "delta_k", "multistable"});
    int multistable_cells = 0;
    for (int i = 0; i < count; ++i) {
        drive.omega_d_rabi = lo + (hi - lo) * i / (count - 1);
        const auto ss = kerr::steady_state(p, drive);
        if (ss.multistable) ++multistable_cells;
        for (size_t b = 0; b < ss.branches.size(); ++b) {
            out.row({drive.omega_d_rabi, static_cast<double>(b), ss.branches[b].m,
                     ss.branches[b].delta_k, ss.multistable ? 1.0 : 0.0});
        }
    }
    const auto path = join(opt.out_dir, "kerr_steady.csv");
    out.save(path);
    std::printf("kerr-steady: omega_d in [%s, %s], %d points, %d multistable -> %s\n",
                fmt_g(lo).c_str(), fmt_g(hi).c_str(), count, multistable_cells,
                path.c_str());
}

std::string fig2_csv(double eta) {
    // Real and imaginary eigenvalue shifts from the two-term series,
    // relative to Omega_EP3, for Delta_K/gamma2 in (0, 0.3].
    CsvWriter out({"xi", "re_plus", "re_zero", "re_minus", "im_plus", "im_zero",
                   "im_minus"});
    const double w = params::omega_ep3(eta, 0.0);
    for (int i = 1; i <= 300; ++i) {
        const double xi = 0.001 * i;
        const auto t = puiseux::eigenvalues_near_ep3(eta, 0.0, xi);
        out.row({xi, t.omega_plus.real() - w, t.omega_zero.real() - w,
                 t.omega_minus.real() - w, t.omega_plus.imag(), t.omega_zero.imag(),
                 t.omega_minus.imag()});
    }
    return out.str();
}

std::string fig3_csv(double delta_k) {
    params::PseudoHermitianConfig mc;
    mc.eta = 1.0;
    mc.g1 = params::g_ep3(1.0);
    auto p = params::derive_pseudo_hermitian(mc, 1.0, 0.5);
    p.delta_k = delta_k;
    const auto tr = scattering::scan(p, delta_k, scattering::default_window(p));
    CsvWriter out({"delta_cp_over_gamma2", "s_abs2"});
    for (size_t i = 0; i < tr.nu.size(); ++i) out.row({tr.nu[i], tr.s_abs2[i]});
    return out.str();
}

std::string fig4_csv() {
    const auto rows = scattering::enhancement_curve({1.0, 2.0, 3.0},
                                                    log_grid(1e-3, 0.3, 40));
    CsvWriter out({"eta", "xi", "delta_omega_p_over_gamma2", "enhancement"});
    for (const auto& r : rows) out.row({r.eta, r.xi, r.delta_omega_p, r.enhancement});
    return out.str();
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw ValidationError("cannot write output file: " + path);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

std::vector<Series> csv_series(const std::string& csv, int x_col,
                               const std::vector<int>& y_cols,
                               const std::vector<std::string>& labels) {
    std::vector<Series> out(y_cols.size());
    for (size_t s = 0; s < y_cols.size(); ++s) out[s].label = labels[s];
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<double> vals;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) vals.push_back(std::atof(cell.c_str()));
        for (size_t s = 0; s < y_cols.size(); ++s) {
            out[s].x.push_back(vals[x_col]);
            out[s].y.push_back(vals[y_cols[s]]);
        }
    }
    return out;
}

}  // namespace

void cmd_reproduce(const std::string& figure, const RunOptions& opt) {
    if (figure == "fig2") {
        const auto eta1 = fig2_csv(1.0);
        const auto eta2 = fig2_csv(2.0);
        write_text(join(opt.out_dir, "fig2_eta1.csv"), eta1);
        write_text(join(opt.out_dir, "fig2_eta2.csv"), eta2);
        std::printf("reproduce fig2 -> fig2_eta1.csv fig2_eta2.csv\n");
        if (opt.plot) {
            const std::vector<std::string> labels = {"Re+", "Re0", "Re-"};
            const std::vector<std::string> labels_im = {"Im+", "Im0", "Im-"};
            PlotSpec re;
            re.title = "eigenvalue shifts near the EP3 (eta=1)";
            re.x_label = "Delta_K / gamma2";
            re.y_label = "(Re Omega - Omega_EP3) / gamma2";
            save_plot(join(opt.out_dir, "fig2_eta1_re.svg"), re,
                      csv_series(eta1, 0, {1, 2, 3}, labels));
            PlotSpec im;
            im.title = "eigenvalue widths near the EP3 (eta=1)";
            im.x_label = "Delta_K / gamma2";
            im.y_label = "Im Omega / gamma2";
            save_plot(join(opt.out_dir, "fig2_eta1_im.svg"), im,
                      csv_series(eta1, 0, {4, 5, 6}, labels_im));
        }
    } else if (figure == "fig3") {
        const auto a = fig3_csv(0.0);
        const auto b = fig3_csv(0.01);
        write_text(join(opt.out_dir, "fig3a_delta_k_0.csv"), a);
        write_text(join(opt.out_dir, "fig3b_delta_k_0p01.csv"), b);
        std::printf("reproduce fig3 -> fig3a_delta_k_0.csv fig3b_delta_k_0p01.csv\n");
        if (opt.plot) {
            PlotSpec spec;
            spec.title = "output spectrum at the EP3";
            spec.x_label = "(omega_p - omega_c) / gamma2";
            spec.y_label = "|S|^2";
            spec.log_y = true;
            auto sa = csv_series(a, 0, {1}, {"Delta_K = 0"});
            auto sb = csv_series(b, 0, {1}, {"Delta_K = 0.01"});
            save_plot(join(opt.out_dir, "fig3a.svg"), spec, sa);
            save_plot(join(opt.out_dir, "fig3b.svg"), spec, sb);
        }
    } else if (figure == "fig4") {
        const auto t = fig4_csv();
        write_text(join(opt.out_dir, "fig4.csv"), t);
        std::printf("reproduce fig4 -> fig4.csv\n");
        if (opt.plot) {
            std::vector<Series> dwp(3), enh(3);
            const double etas[3] = {1.0, 2.0, 3.0};
            std::istringstream in(t);
            std::string line;
            std::getline(in, line);
            while (std::getline(in, line)) {
                double eta, xi, d, e;
                std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &eta, &xi, &d, &e);
                for (int k = 0; k < 3; ++k) {
                    if (eta == etas[k]) {
                        dwp[k].x.push_back(xi);
                        dwp[k].y.push_back(d);
                        enh[k].x.push_back(xi);
                        enh[k].y.push_back(e);
                    }
                }
            }
            for (int k = 0; k < 3; ++k) {
                dwp[k].label = enh[k].label = "eta=" + fmt_g(etas[k]);
            }
            PlotSpec sa;
            sa.title = "dip distance vs Kerr shift";
            sa.x_label = "Delta_K / gamma2";
            sa.y_label = "delta_omega_p / gamma2";
            sa.log_x = sa.log_y = true;
            save_plot(join(opt.out_dir, "fig4a.svg"), sa, dwp);
            PlotSpec sb;
            sb.title = "sensitivity enhancement factor";
            sb.x_label = "Delta_K / gamma2";
            sb.y_label = "delta_omega_p / Delta_K";
            sb.log_x = true;
            save_plot(join(opt.out_dir, "fig4b.svg"), sb, enh);
        }
    } else {
        throw ValidationError("unknown figure '" + figure
                              + "' (expected fig2, fig3 or fig4)");
    }
}

}  // namespace ep3sim::cli

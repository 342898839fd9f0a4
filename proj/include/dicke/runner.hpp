// runner.hpp — orchestration of the five CLI modes (full, envelope,
// analytic, validate, scan), artifact emission, and golden-file generation.
// Exit codes: 0 ok, 2 config error, 3 integration failure, 4 validation
// failure, 5 I/O error (mapped by the CLI entry point).

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dicke/config.hpp"
#include "dicke/csv.hpp"
#include "dicke/demodulation.hpp"
#include "dicke/envelope.hpp"
#include "dicke/full_dynamics.hpp"
#include "dicke/initial_state.hpp"
#include "dicke/observables.hpp"
#include "dicke/svg.hpp"
#include "dicke/validation.hpp"

namespace dicke {

namespace detail {

inline void write_text(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw IoError("write failure on '" + path + "'");
}

inline std::string join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

} // namespace detail

// Sample the closed-form solution and its observables on the fast grid.
// Channels: slow variables, field/dipole carriers, and the beat-scale energy
// reservoirs (photon fast-averaged, coupling instantaneous, Zeeman).
inline TimeSeries sample_analytic(const RunConfig& cfg) {
    const AnalyticSolution sol(cfg.solution_case, cfg.modulus, cfg.params);
    const double t_end = cfg.resolved_t_end();
    const double sample_dt = 2.0 * M_PI / cfg.params.omega /
                             static_cast<double>(cfg.solver.samples_per_period);
    const auto n = static_cast<long>(std::llround(t_end / sample_dt));
    TimeSeries out({"t", "g0", "g0_dot", "theta", "s_y_envelope", "s_z", "electric_field",
                    "dipole_moment", "photon_energy", "coupling_energy", "zeeman_energy"});
    for (long i = 0; i <= n; ++i) {
        const double t = cfg.t0 + sample_dt * static_cast<double>(i);
        const AnalyticPoint p = sol.evaluate(t);
        const double ef = electric_field(t, p.g0, cfg.params, cfg.geometry);
        const double dm = dipole_moment(t, p.s_y_envelope, cfg.params.omega, cfg.geometry);
        const EnergyBreakdown eb = energy_breakdown_envelope(t, p.g0, p.s_y_envelope, p.s_z,
                                                             cfg.params, cfg.geometry);
        out.push_sample(t, {t, p.g0, p.g0_dot, p.theta, p.s_y_envelope, p.s_z, ef, dm,
                            eb.photon, eb.dipole_coupling, eb.zeeman});
    }
    return out;
}

inline TimeSeries run_envelope_series(const RunConfig& cfg) {
    const auto init = initial_state(cfg.params, cfg.solution_case, cfg.modulus, cfg.t0);
    SolverConfig scfg = cfg.solver;
    scfg.t_end = cfg.resolved_t_end();
    return integrate_envelope(init.envelope, cfg.params, scfg, cfg.t0);
}

// Config-driven validation suite. Checks tied to pinned regimes (the
// linear-regime system comparison, the adiabatic-window demodulation, and
// static fixed points) use their own parameter points; the envelope,
// conservation and energy checks run on the configured branch.
inline ValidationReport run_validation(const RunConfig& cfg) {
    ValidationReport rep;
    rep.provenance = cfg.echo;
    const DickeParams& pr = cfg.params;
    const EllipticModulus& k = cfg.modulus;

    rep.checks.push_back(check_elliptic_kernel());
    rep.checks.push_back(check_analytic_ode_residual(pr, cfg.solution_case,
                                                     {0.3, 0.7, 0.95, 1.0 - 1e-6}));
    const EnvelopeComparison env = check_envelope_vs_analytic(pr, cfg.solution_case, k);
    rep.checks.push_back(env.match);
    rep.checks.push_back(env.drift);
    rep.checks.push_back(check_beat_periodicity(pr, {k.k()}));
    rep.checks.push_back(check_canonical_conservation(pr, cfg.solution_case, k));
    rep.checks.push_back(check_second_order_vs_canonical(pr));
    rep.checks.push_back(check_demod_vs_analytic(pr));
    if (cfg.solution_case == SolutionCase::Cn)
        rep.checks.push_back(check_envelope_sign_flip(pr, k));
    else
        rep.checks.push_back(check_envelope_positivity(pr, k));
    rep.checks.push_back(check_energy_sloshing(pr, k));
    rep.checks.push_back(check_static_fixed_points(pr));
    rep.checks.push_back(check_determinism(pr, cfg.solution_case, k));
    return rep;
}

// --- Golden artifacts ------------------------------------------------------
// Three pinned configurations regenerated only on explicit request.

// Decoupled oscillator: g = 0, fixed-step RK4 at dt = T/1000 over 10 fast
// periods; p(0) = 1 with the spin at the pole.
inline std::string golden_decoupled_csv() {
    const DickeParams pr = make_params(1.0, 1.0, 0.0, 10.0);
    CanonicalState init{0.0, 1.0, 0.0, 0.0, pr.s};
    SolverConfig scfg;
    scfg.method = Method::FixedRk4;
    scfg.dt = 2.0 * M_PI / 1000.0;
    scfg.t_end = 10.0 * 2.0 * M_PI;
    scfg.samples_per_period = 40;
    return to_csv(integrate_canonical(init, pr, scfg));
}

inline RunConfig golden_config() {
    RunConfig cfg;
    cfg.mode = RunMode::Analytic;
    cfg.params = make_params(1.0, 1.0, 2.0 * std::sqrt(0.1), 10.0);
    cfg.solution_case = SolutionCase::Cn;
    cfg.modulus = EllipticModulus(0.99);
    cfg.solver.rel_tol = 1e-10;
    cfg.solver.abs_tol = 1e-12;
    cfg.solver.samples_per_period = 40;
    cfg.beat_periods = 1.0;
    return cfg;
}

inline std::string golden_analytic_csv() { return to_csv(sample_analytic(golden_config())); }

inline std::string golden_envelope_csv() {
    return to_csv(run_envelope_series(golden_config()));
}

inline void write_golden(const std::string& dir) {
    std::filesystem::create_directories(dir);
    detail::write_text(detail::join(dir, "decoupled_oscillator.csv"),
                       golden_decoupled_csv());
    detail::write_text(detail::join(dir, "cn_k099_analytic.csv"), golden_analytic_csv());
    detail::write_text(detail::join(dir, "cn_k099_envelope.csv"), golden_envelope_csv());
}

// --- Mode implementations --------------------------------------------------

inline void run_full(const RunConfig& cfg, const std::string& out_dir) {
    const auto init = initial_state(cfg.params, cfg.solution_case, cfg.modulus, cfg.t0);
    SolverConfig scfg = cfg.solver;
    const double period = 2.0 * M_PI / cfg.params.omega;
    scfg.t_end = cfg.resolved_t_end() + 2.0 * period;  // margin for demod trimming

    const bool canonical = cfg.system == FastSystem::Canonical;
    const TimeSeries traj =
        canonical ? integrate_canonical(init.canonical, cfg.params, scfg, cfg.t0)
                  : integrate_second_order(init.second_order, cfg.params, scfg, cfg.t0);
    emit_csv(traj, detail::join(out_dir, canonical ? "full_canonical.csv" : "full_second_order.csv"));

    DemodConfig dcfg;
    dcfg.carrier_frequency = cfg.params.omega;
    dcfg.phase = CarrierPhase::Cos;
    const TimeSeries env = extract_envelope(traj, "p", dcfg);
    TimeSeries env_out({"t", "envelope", "g0_estimate"});
    {
        const auto& t = env.times();
        const auto& e = env.channel("envelope");
        const double scale = -std::sqrt(2.0 * cfg.params.omega);
        for (std::size_t i = 0; i < t.size(); ++i)
            env_out.push_sample(t[i], {t[i], e[i], e[i] / scale});
    }
    emit_csv(env_out, detail::join(out_dir, "full_envelope.csv"));

    SvgPlot plot("Fast momentum with demodulated envelope", "t", "p");
    SvgSeries carrier{"p(t)", &traj.times(), &traj.channel("p"), false, "#1f3d7a"};
    SvgSeries envelope{"envelope", &env_out.times(), &env_out.channel("envelope"), true,
                       "#b03030"};
    plot.add_series(carrier);
    plot.add_series(envelope);
    plot.write(detail::join(out_dir, "full.svg"));
}

inline void run_envelope_mode(const RunConfig& cfg, const std::string& out_dir) {
    const TimeSeries run = run_envelope_series(cfg);
    emit_csv(run, detail::join(out_dir, "envelope.csv"));
    SvgPlot plot("Averaged envelope flow", "t", "g0, theta");
    SvgSeries g0{"g0(t)", &run.times(), &run.channel("g0"), false, "#1f3d7a"};
    SvgSeries th{"theta(t)", &run.times(), &run.channel("theta"), true, "#b03030"};
    plot.add_series(g0);
    plot.add_series(th);
    plot.write(detail::join(out_dir, "envelope.svg"));
}

inline void run_analytic_mode(const RunConfig& cfg, const std::string& out_dir) {
    const TimeSeries run = sample_analytic(cfg);
    emit_csv(run, detail::join(out_dir, "analytic.csv"));

    // Field plot: carrier solid, +/- envelope dashed.
    TimeSeries envpm({"t", "plus", "minus"});
    {
        const auto& t = run.times();
        const auto& g0 = run.channel("g0");
        const double pref = 2.0 * std::sqrt(cfg.params.omega / cfg.geometry.volume);
        for (std::size_t i = 0; i < t.size(); ++i)
            envpm.push_sample(t[i], {t[i], pref * g0[i], -pref * g0[i]});
    }
    SvgPlot field("Cavity field with elliptic envelope", "t", "E");
    SvgSeries e{"E(t)", &run.times(), &run.channel("electric_field"), false, "#1f3d7a"};
    SvgSeries ep{"+envelope", &envpm.times(), &envpm.channel("plus"), true, "#b03030"};
    SvgSeries em{"-envelope", &envpm.times(), &envpm.channel("minus"), true, "#b03030"};
    field.add_series(e);
    field.add_series(ep);
    field.add_series(em);
    field.write(detail::join(out_dir, "analytic_field.svg"));

    // Energy plot: the three reservoirs over the beat.
    SvgPlot energy("Energy reservoirs over the beat", "t", "energy");
    SvgSeries ph{"photon (fast-averaged)", &run.times(), &run.channel("photon_energy"),
                 false, "#1f3d7a"};
    SvgSeries ze{"Zeeman", &run.times(), &run.channel("zeeman_energy"), true, "#b03030"};
    SvgSeries cp{"-E.d", &run.times(), &run.channel("coupling_energy"), true, "#207040"};
    energy.add_series(ph);
    energy.add_series(ze);
    energy.add_series(cp);
    energy.write(detail::join(out_dir, "analytic_energy.svg"));
}

// Returns overall validation success.
inline bool run_validate_mode(const RunConfig& cfg, const std::string& out_dir) {
    const ValidationReport rep = run_validation(cfg);
    detail::write_text(detail::join(out_dir, "report.txt"), rep.render());
    emit_csv(sample_analytic(cfg), detail::join(out_dir, "analytic.csv"));
    emit_csv(run_envelope_series(cfg), detail::join(out_dir, "envelope.csv"));
    return rep.overall();
}

inline void run_scan_mode(const RunConfig& cfg, const std::string& out_dir) {
    TimeSeries out({"t", "value", "k", "invariant_C", "quarter_period_K", "beat_omega",
                    "omega_ratio", "adiabatic_margin", "adiabatic_ok", "g0_min", "g0_max"});
    for (long i = 0; i < cfg.scan_points; ++i) {
        const double frac =
            static_cast<double>(i) / static_cast<double>(cfg.scan_points - 1);
        const double value = cfg.scan_start + frac * (cfg.scan_stop - cfg.scan_start);

        DickeParams pr = cfg.params;
        EllipticModulus k = cfg.modulus;
        if (cfg.scan_variable == ScanVariable::Modulus)
            k = EllipticModulus(value);
        else
            pr = make_params(cfg.params.omega, cfg.params.e_j,
                             value * cfg.params.g_c, cfg.params.s);

        const AdiabaticWindow win = adiabatic_window(pr, k);
        // k = 1 has a divergent quarter period; report the soliton limit with
        // zero sentinels for K and Omega.
        double quarter = 0.0, beat_w = 0.0;
        if (!k.is_one()) {
            quarter = complete_elliptic_k(k);
            beat_w = beat_frequency(pr, k);
        }
        const AnalyticSolution sol(cfg.solution_case, k, pr);
        const double span = k.is_one() ? 20.0 / std::max(sol.arg_rate(), 1e-12)
                                       : 2.0 * M_PI / std::max(beat_w, 1e-300);
        double g0_min = 1e300, g0_max = -1e300;
        for (int j = 0; j <= 400; ++j) {
            const double g0 = sol.evaluate(span * static_cast<double>(j) / 400.0).g0;
            g0_min = std::min(g0_min, g0);
            g0_max = std::max(g0_max, g0);
        }
        out.push_sample(static_cast<double>(i),
                        {static_cast<double>(i), value, k.k(), invariant_of_case(cfg.solution_case, k),
                         quarter, beat_w, win.omega_ratio, win.margin,
                         win.ok ? 1.0 : 0.0, g0_min, g0_max});
    }
    emit_csv(out, detail::join(out_dir, "scan.csv"));
}

// Entry point used by the CLI: returns the process exit code for
// successfully handled runs; configuration/integration/I-O failures
// propagate as exceptions and are mapped by the caller.
inline int run(const RunConfig& cfg, const std::string& out_dir, bool regenerate_golden) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");

    if (regenerate_golden) write_golden(detail::join(out_dir, "golden"));

    switch (cfg.mode) {
        case RunMode::Full: run_full(cfg, out_dir); return 0;
        case RunMode::Envelope: run_envelope_mode(cfg, out_dir); return 0;
        case RunMode::Analytic: run_analytic_mode(cfg, out_dir); return 0;
        case RunMode::Validate: return run_validate_mode(cfg, out_dir) ? 0 : 4;
        case RunMode::Scan: run_scan_mode(cfg, out_dir); return 0;
    }
    throw ConfigError("unreachable mode");
}

} // namespace dicke

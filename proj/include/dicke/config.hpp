// config.hpp — flat `key = value` run configuration with `#` comments.
// Unknown keys are rejected; parse errors carry the key name and line
// number. The full key list with units is documented in the README.

#pragma once

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "dicke/analytic.hpp"
#include "dicke/elliptic.hpp"
#include "dicke/errors.hpp"
#include "dicke/full_dynamics.hpp"
#include "dicke/model.hpp"
#include "dicke/observables.hpp"
#include "dicke/ode.hpp"

namespace dicke {

enum class RunMode { Full, Envelope, Analytic, Validate, Scan };

inline const char* to_string(RunMode m) {
    switch (m) {
        case RunMode::Full: return "full";
        case RunMode::Envelope: return "envelope";
        case RunMode::Analytic: return "analytic";
        case RunMode::Validate: return "validate";
        case RunMode::Scan: return "scan";
    }
    return "?";
}

enum class ScanVariable { Modulus, CouplingRatio };

struct RunConfig {
    RunMode mode = RunMode::Validate;
    DickeParams params{};
    SolutionCase solution_case = SolutionCase::Cn;
    EllipticModulus modulus{0.0};
    FastSystem system = FastSystem::Canonical;
    SolverConfig solver{};
    CavityGeometry geometry{};
    double t0 = 0.0;
    double beat_periods = 1.0;  // used when solver.t_end is left at 0 (auto)

    ScanVariable scan_variable = ScanVariable::Modulus;
    double scan_start = 0.0;
    double scan_stop = 0.0;
    long scan_points = 0;

    // Raw `key = value` pairs in file order, echoed into report provenance.
    std::vector<std::pair<std::string, std::string>> echo;

    // Resolved t_end: explicit value, or beat_periods beats of the
    // configured branch.
    double resolved_t_end() const {
        if (solver.t_end > 0.0) return solver.t_end;
        if (!(params.g > 0.0))
            throw ConfigError("config: t_end must be given explicitly when g = 0");
        const double beat = 2.0 * M_PI / beat_frequency(params, modulus);
        return beat_periods * beat;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_real(const std::string& key, const std::string& value, int line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || !std::isfinite(v))
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "' expects a finite number, got '" + value + "'");
    return v;
}

inline long parse_long(const std::string& key, const std::string& value, int line) {
    const double v = parse_real(key, value, line);
    const long l = std::lround(v);
    if (static_cast<double>(l) != v)
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "' expects an integer, got '" + value + "'");
    return l;
}

} // namespace detail

// Parse the documented flat key-value format. See README for the key list.
inline RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
    std::vector<std::pair<std::string, std::string>> echo;
    {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value', got '" + line + "'");
            const std::string key = detail::trim(line.substr(0, eq));
            const std::string value = detail::trim(line.substr(eq + 1));
            if (key.empty() || value.empty())
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": empty key or value");
            if (kv.count(key))
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": duplicate key '" + key + "'");
            kv[key] = {value, lineno};
            echo.emplace_back(key, value);
        }
    }

    auto take = [&](const char* key) -> const std::pair<std::string, int>* {
        auto it = kv.find(key);
        if (it == kv.end()) return nullptr;
        static thread_local std::pair<std::string, int> slot;
        slot = it->second;
        kv.erase(it);
        return &slot;
    };
    auto real_or = [&](const char* key, double dflt) {
        const auto* e = take(key);
        return e ? detail::parse_real(key, e->first, e->second) : dflt;
    };

    RunConfig cfg;
    cfg.echo = std::move(echo);

    const auto* mode = take("mode");
    if (!mode) throw ConfigError("config: missing required key 'mode'");
    if (mode->first == "full") cfg.mode = RunMode::Full;
    else if (mode->first == "envelope") cfg.mode = RunMode::Envelope;
    else if (mode->first == "analytic") cfg.mode = RunMode::Analytic;
    else if (mode->first == "validate") cfg.mode = RunMode::Validate;
    else if (mode->first == "scan") cfg.mode = RunMode::Scan;
    else
        throw ConfigError("config line " + std::to_string(mode->second) +
                          ": key 'mode' must be one of full|envelope|analytic|validate|scan, "
                          "got '" + mode->first + "'");

    const double omega = real_or("omega", 1.0);
    const double e_j = real_or("e_j", 1.0);
    const double s = real_or("s", 10.0);
    const auto* g_entry = take("g");
    const auto* ratio_entry = take("g_ratio");
    if (g_entry && ratio_entry)
        throw ConfigError("config line " + std::to_string(ratio_entry->second) +
                          ": keys 'g' and 'g_ratio' are mutually exclusive");
    double g;
    if (g_entry) {
        g = detail::parse_real("g", g_entry->first, g_entry->second);
    } else if (ratio_entry) {
        const double r = detail::parse_real("g_ratio", ratio_entry->first, ratio_entry->second);
        g = r * std::sqrt(e_j / s);
    } else {
        throw ConfigError("config: missing required key 'g' (or 'g_ratio')");
    }
    cfg.params = make_params(omega, e_j, g, s);

    if (const auto* c = take("case")) {
        if (c->first == "cn") cfg.solution_case = SolutionCase::Cn;
        else if (c->first == "dn") cfg.solution_case = SolutionCase::Dn;
        else
            throw ConfigError("config line " + std::to_string(c->second) +
                              ": key 'case' must be cn or dn, got '" + c->first + "'");
    }

    const auto* k_entry = take("k");
    const auto* c_entry = take("c");
    if (k_entry && c_entry)
        throw ConfigError("config line " + std::to_string(c_entry->second) +
                          ": keys 'k' and 'c' are mutually exclusive (supply exactly one)");
    if (k_entry) {
        const double k = detail::parse_real("k", k_entry->first, k_entry->second);
        if (!(k >= 0.0 && k <= 1.0))
            throw ConfigError("config line " + std::to_string(k_entry->second) +
                              ": key 'k' must lie in [0, 1]");
        cfg.modulus = EllipticModulus(k);
    } else if (c_entry) {
        const double c = detail::parse_real("c", c_entry->first, c_entry->second);
        try {
            cfg.modulus = modulus_from_invariant(c, cfg.solution_case);
        } catch (const std::domain_error& ex) {
            throw ConfigError("config line " + std::to_string(c_entry->second) +
                              ": key 'c': " + ex.what());
        }
    } else if (cfg.mode != RunMode::Scan) {
        throw ConfigError("config: supply exactly one of 'k' or 'c'");
    }

    if (const auto* sys = take("system")) {
        if (sys->first == "second_order") cfg.system = FastSystem::SecondOrder;
        else if (sys->first == "canonical") cfg.system = FastSystem::Canonical;
        else
            throw ConfigError("config line " + std::to_string(sys->second) +
                              ": key 'system' must be second_order or canonical, got '" +
                              sys->first + "'");
    }

    if (const auto* m = take("method")) {
        if (m->first == "rk4") cfg.solver.method = Method::FixedRk4;
        else if (m->first == "rk45") cfg.solver.method = Method::AdaptiveRk45;
        else
            throw ConfigError("config line " + std::to_string(m->second) +
                              ": key 'method' must be rk4 or rk45, got '" + m->first + "'");
    }
    cfg.solver.dt = real_or("dt", cfg.solver.dt);
    cfg.solver.abs_tol = real_or("abs_tol", cfg.solver.abs_tol);
    cfg.solver.rel_tol = real_or("rel_tol", cfg.solver.rel_tol);
    cfg.solver.t_end = real_or("t_end", 0.0);
    if (const auto* spp = take("samples_per_period"))
        cfg.solver.samples_per_period =
            static_cast<int>(detail::parse_long("samples_per_period", spp->first, spp->second));
    cfg.beat_periods = real_or("beat_periods", 1.0);
    if (!(cfg.beat_periods > 0.0))
        throw ConfigError("config: key 'beat_periods' must be positive");

    cfg.geometry.volume = real_or("volume", 1.0);
    cfg.geometry.thickness = real_or("thickness", 1.0);
    cfg.geometry.charge = real_or("charge", 1.0);
    cfg.geometry.validate();
    cfg.t0 = real_or("t0", 0.0);

    if (const auto* sv = take("scan_variable")) {
        if (sv->first == "k") cfg.scan_variable = ScanVariable::Modulus;
        else if (sv->first == "g_ratio") cfg.scan_variable = ScanVariable::CouplingRatio;
        else
            throw ConfigError("config line " + std::to_string(sv->second) +
                              ": key 'scan_variable' must be k or g_ratio, got '" +
                              sv->first + "'");
    }
    cfg.scan_start = real_or("scan_start", 0.0);
    cfg.scan_stop = real_or("scan_stop", 0.0);
    if (const auto* sp = take("scan_points"))
        cfg.scan_points = detail::parse_long("scan_points", sp->first, sp->second);

    if (!kv.empty()) {
        const auto& first = *kv.begin();
        throw ConfigError("config line " + std::to_string(first.second.second) +
                          ": unknown key '" + first.first + "'");
    }

    // Mode-level requirements.
    const bool needs_envelope_ansatz = cfg.mode == RunMode::Full ||
                                       cfg.mode == RunMode::Envelope ||
                                       cfg.mode == RunMode::Analytic ||
                                       cfg.mode == RunMode::Validate;
    if (needs_envelope_ansatz && !cfg.params.is_resonant())
        throw ConfigError("config: mode '" + std::string(to_string(cfg.mode)) +
                          "' requires resonance (omega = e_j)");
    if (cfg.mode == RunMode::Scan) {
        if (cfg.scan_points < 2)
            throw ConfigError("config: scan mode requires 'scan_points' >= 2");
        if (!(cfg.scan_stop > cfg.scan_start))
            throw ConfigError("config: scan mode requires scan_stop > scan_start");
        if (cfg.scan_variable == ScanVariable::Modulus &&
            !(cfg.scan_start >= 0.0 && cfg.scan_stop <= 1.0))
            throw ConfigError("config: scan over k requires the grid inside [0, 1]");
        if (cfg.scan_variable == ScanVariable::CouplingRatio && !(cfg.scan_start > 0.0))
            throw ConfigError("config: scan over g_ratio requires scan_start > 0");
    }
    return cfg;
}

} // namespace dicke

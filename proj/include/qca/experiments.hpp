#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qca/hamiltonians.hpp"
#include "qca/io.hpp"
#include "qca/margolus.hpp"
#include "qca/momentum.hpp"
#include "qca/observables.hpp"
#include "qca/two_particle.hpp"
#include "qca/version.hpp"

namespace qca {

namespace detail {

inline void stamp(Table& t, const std::string& experiment) {
    t.add_metadata("experiment", experiment);
    t.add_metadata("artifact_version", kVersion);
}

/// Clamp a probability into [0, 1], counting clamp events for the caller's log.
inline double clamp_probability(double p, long& clamp_count) {
    if (p < 0.0 || p > 1.0) {
        ++clamp_count;
        return std::min(1.0, std::max(0.0, p));
    }
    return p;
}

} // namespace detail

// ---- refraction curve -------------------------------------------------------

struct RefractionConfig {
    int samples = 101;
};

/// zeta = sqrt(1 - (m/planck_mass)^2) on a uniform mass-ratio grid.
inline Table run_refraction_curve(const RefractionConfig& cfg) {
    if (cfg.samples < 2) throw std::invalid_argument("refraction-curve: samples must be >= 2");
    Table t;
    detail::stamp(t, "refraction-curve");
    t.add_metadata("samples", format_int(cfg.samples));
    t.add_column("m_over_mp", ColumnKind::Real);
    t.add_column("zeta", ColumnKind::Real);
    for (int i = 0; i < cfg.samples; ++i) {
        const double ratio = static_cast<double>(i) / (cfg.samples - 1);
        t.add_row({ratio, coupling_from_mass(ratio).s});
    }
    return t;
}

// ---- single-particle runs ---------------------------------------------------

struct PacketConfig {
    double theta = M_PI / 8;
    int sites = 64;
    int steps = 180;
    int n0 = 0;
    double delta = 2.0;
    int k = 8;
    int sign = +1;
    int threads = 1;
};

struct StepStat {
    int t;
    double norm;
    double x_mean; // circular mean position
    double x_star; // typical-path site
    double x_var;  // variance around the circular mean
};

struct SingleParticleRun {
    Table table; // t, site, prob_plus, prob_minus
    std::vector<StepStat> stats;
    double zeta = 0.0;
    double max_norm_drift = 0.0;
    double max_abs_slope = 0.0;           // minimal-image displacement of x_mean per step
    double max_mirror_residual = 0.0;     // only filled by the double-slit run
    long clamp_count = 0;
};

namespace detail {

inline SingleParticleRun record_run(const AutomatonParams& params, SpinorState state, int steps,
                                    const std::string& experiment, bool track_mirror) {
    const BandUnitary u = build_band_unitary(params);
    SingleParticleRun run;
    run.zeta = params.zeta();
    detail::stamp(run.table, experiment);
    run.table.add_metadata("theta", format_double(params.theta));
    run.table.add_metadata("sites", format_int(params.n_sites));
    run.table.add_metadata("steps", format_int(steps));
    run.table.add_column("t", ColumnKind::Int);
    run.table.add_column("site", ColumnKind::Int);
    run.table.add_column("prob_plus", ColumnKind::Real);
    run.table.add_column("prob_minus", ColumnKind::Real);

    double prev_x = 0.0;
    for (int t = 0; t <= steps; ++t) {
        if (t > 0) state = apply_step(u, state);
        StepStat stat;
        stat.t = t;
        stat.norm = state.norm();
        stat.x_mean = circular_mean_position(state, params);
        stat.x_var = circular_variance(state, params);
        std::vector<SpinorState> snapshot{state};
        stat.x_star = typical_path(snapshot, params)[0].x_star;
        run.stats.push_back(stat);

        run.max_norm_drift = std::max(run.max_norm_drift, std::abs(stat.norm - 1.0));
        if (t > 0) {
            const double slope =
                wrap_displacement((stat.x_mean - prev_x) / params.units.a, params.n_sites) *
                params.units.a;
            run.max_abs_slope = std::max(run.max_abs_slope, std::abs(slope));
        }
        prev_x = stat.x_mean;

        for (int site = 0; site < params.n_sites; ++site) {
            const double pp =
                detail::clamp_probability(std::norm(state.amps(2 * site)), run.clamp_count);
            const double pm =
                detail::clamp_probability(std::norm(state.amps(2 * site + 1)), run.clamp_count);
            run.table.add_row({static_cast<double>(t), static_cast<double>(site), pp, pm});
        }
        if (track_mirror) {
            for (int site = 0; site < params.n_sites; ++site) {
                const int mirror = (params.n_sites - site) % params.n_sites;
                run.max_mirror_residual =
                    std::max(run.max_mirror_residual,
                             std::abs(state.site_probability(site) -
                                      state.site_probability(mirror)));
            }
        }
    }
    return run;
}

} // namespace detail

inline SingleParticleRun run_packet(const PacketConfig& cfg) {
    AutomatonParams params(cfg.theta, cfg.sites);
    SpinorState initial = gaussian_packet(params, cfg.n0, cfg.delta, cfg.k, cfg.sign);
    return detail::record_run(params, std::move(initial), cfg.steps, "packet", false);
}

struct DoubleSlitConfig {
    double theta = M_PI / 10;
    int sites = 64;
    int steps = 80;
    int slit_n = 10;
    int threads = 1;
};

inline SingleParticleRun run_double_slit(const DoubleSlitConfig& cfg) {
    AutomatonParams params(cfg.theta, cfg.sites);
    SpinorState initial = double_slit_state(params, cfg.slit_n);
    return detail::record_run(params, std::move(initial), cfg.steps, "double-slit", true);
}

// ---- two-particle collision -------------------------------------------------

struct CollisionConfig {
    double theta = M_PI / 8;
    int sites = 64;
    int steps = 60;
    int x0 = 10;
    double delta = 2.0;
    int k = 8;
    int dump_every = 10;
    int threads = 1;
};

struct CollisionRun {
    Table table; // t, i, j, prob over flat modes at dumped steps
    std::vector<int> dumped_steps;
    double max_norm_drift = 0.0;
    double max_antisymmetry_residual = 0.0;
    double max_symmetry_residual = 0.0; // |prob(i,j) - prob(j,i)| at dumps
    double initial_diagonal_max = 0.0;
    long clamp_count = 0;
};

/// Two Gaussian packets at +-x0 with opposite carriers, antisymmetrized and
/// evolved; dumps the mode-level probability matrix |Psi_ij|^2 every
/// dump_every steps.
inline CollisionRun run_collision(const CollisionConfig& cfg) {
    AutomatonParams params(cfg.theta, cfg.sites);
    if (cfg.dump_every < 1) throw std::invalid_argument("collide: dump_every must be >= 1");
    SpinorState a = gaussian_packet(params, cfg.x0, cfg.delta, cfg.k, +1);
    SpinorState b = gaussian_packet(params, (cfg.sites - cfg.x0) % cfg.sites, cfg.delta, -cfg.k, +1);
    TwoParticleState state = two_particle_from_singles(a, b);

    CollisionRun run;
    detail::stamp(run.table, "collide");
    run.table.add_metadata("theta", format_double(params.theta));
    run.table.add_metadata("sites", format_int(cfg.sites));
    run.table.add_metadata("steps", format_int(cfg.steps));
    run.table.add_metadata("dump_every", format_int(cfg.dump_every));
    run.table.add_column("t", ColumnKind::Int);
    run.table.add_column("i", ColumnKind::Int);
    run.table.add_column("j", ColumnKind::Int);
    run.table.add_column("prob", ColumnKind::Real);

    const int m = state.n_modes();
    auto dump = [&](int t) {
        run.dumped_steps.push_back(t);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                run.table.add_row({static_cast<double>(t), static_cast<double>(i),
                                   static_cast<double>(j),
                                   detail::clamp_probability(std::norm(state.amps(i, j)),
                                                             run.clamp_count)});
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                run.max_symmetry_residual =
                    std::max(run.max_symmetry_residual,
                             std::abs(std::norm(state.amps(i, j)) - std::norm(state.amps(j, i))));
    };

    for (int i = 0; i < m; ++i)
        run.initial_diagonal_max = std::max(run.initial_diagonal_max, std::abs(state.amps(i, i)));
    dump(0);
    for (int t = 1; t <= cfg.steps; ++t) {
        state = evolve_two_particle(state, params, 1, cfg.threads);
        run.max_norm_drift = std::max(run.max_norm_drift, std::abs(state.norm() - 1.0));
        run.max_antisymmetry_residual =
            std::max(run.max_antisymmetry_residual, state.antisymmetry_residual());
        if (t % cfg.dump_every == 0 || t == cfg.steps) dump(t);
    }
    return run;
}

// ---- dispersion -------------------------------------------------------------

struct DispersionConfig {
    double theta = M_PI / 8;
    int samples = 256;
};

struct DispersionRun {
    Table table; // phi, energy, group_velocity
    double zeta = 0.0;
    double max_velocity = 0.0;
};

inline DispersionRun run_dispersion(const DispersionConfig& cfg) {
    AutomatonParams params(cfg.theta, 4);
    DispersionRun run;
    run.zeta = params.zeta();
    detail::stamp(run.table, "dispersion");
    run.table.add_metadata("theta", format_double(cfg.theta));
    run.table.add_metadata("samples", format_int(cfg.samples));
    run.table.add_column("phi", ColumnKind::Real);
    run.table.add_column("energy", ColumnKind::Real);
    run.table.add_column("group_velocity", ColumnKind::Real);
    for (const DispersionSample& s : dispersion_scan(params, cfg.samples)) {
        run.table.add_row({s.phi, s.energy, s.group_velocity});
        run.max_velocity = std::max(run.max_velocity, std::abs(s.group_velocity));
    }
    // The analytic maximizer phi = pi/2 need not sit on the grid.
    const double sc = params.s() * std::cos(M_PI / 2);
    const double xi = std::sqrt(1.0 - sc * sc);
    run.max_velocity = std::max(run.max_velocity, std::abs(params.s() * std::sin(M_PI / 2) / xi));
    return run;
}

} // namespace qca

#pragma once

#include <cmath>
#include <vector>

#include "qca/packets.hpp"

namespace qca {

/// Signed, centered site coordinate in units of the effective spacing d:
/// site n maps to n for n < N/2 and n - N otherwise.
inline double signed_site_coordinate(int site, int n_sites) {
    return (site < (n_sites + 1) / 2) ? static_cast<double>(site)
                                      : static_cast<double>(site - n_sites);
}

struct PositionMomentum {
    double x_mean = 0.0;
    double p_mean = 0.0;
    double x_var = 0.0;
};

/// Position and momentum expectations of a normalized single-particle state.
/// X uses the signed centered coordinate d*n; P is the symmetric difference
/// -i hbar (Psi_{n+1} - Psi_{n-1}) / (2 d), with d = a.
inline PositionMomentum position_momentum_expect(const SpinorState& state,
                                                 const AutomatonParams& params) {
    const int n = state.n_sites;
    const double d = params.units.a;
    const double hbar = params.units.hbar;
    PositionMomentum out;

    double x1 = 0.0, x2 = 0.0;
    for (int site = 0; site < n; ++site) {
        const double rho = state.site_probability(site);
        const double x = d * signed_site_coordinate(site, n);
        x1 += rho * x;
        x2 += rho * x * x;
    }
    out.x_mean = x1;
    out.x_var = x2 - x1 * x1;

    cxd p(0.0, 0.0);
    for (int site = 0; site < n; ++site) {
        for (int comp = 0; comp < 2; ++comp) {
            cxd up(0.0, 0.0), down(0.0, 0.0);
            if (params.boundary == Boundary::Periodic) {
                up = state.amps(2 * ((site + 1) % n) + comp);
                down = state.amps(2 * ((site - 1 + n) % n) + comp);
            } else {
                if (site + 1 < n) up = state.amps(2 * (site + 1) + comp);
                if (site - 1 >= 0) down = state.amps(2 * (site - 1) + comp);
            }
            const cxd deriv = cxd(0.0, -hbar) * (up - down) / (2.0 * d);
            p += std::conj(state.amps(2 * site + comp)) * deriv;
        }
    }
    out.p_mean = p.real();
    return out;
}

/// Circular mean position on the periodic ring, in units of d, in [-N/2, N/2).
/// Continuous through the wrap, unlike the sawtooth coordinate mean.
inline double circular_mean_position(const SpinorState& state, const AutomatonParams& params) {
    const int n = state.n_sites;
    cxd resultant(0.0, 0.0);
    for (int site = 0; site < n; ++site)
        resultant += state.site_probability(site) * std::exp(cxd(0.0, 2.0 * M_PI * site / n));
    double x = std::arg(resultant) * n / (2.0 * M_PI);
    return wrap_displacement(x, n) * params.units.a;
}

/// Variance around the circular mean using minimal-image displacements.
inline double circular_variance(const SpinorState& state, const AutomatonParams& params) {
    const int n = state.n_sites;
    const double center = circular_mean_position(state, params) / params.units.a;
    double acc = 0.0;
    for (int site = 0; site < n; ++site) {
        const double dx = wrap_displacement(site - center, n);
        acc += state.site_probability(site) * dx * dx;
    }
    return acc * params.units.a * params.units.a;
}

struct PathPoint {
    int t;
    double x_star;  // argmax-probability site, signed coordinate
    double x_mean;  // circular mean position
};

/// Maximum-probability trajectory of a state history. Ties are broken toward
/// smaller |x|, then toward the nonnegative coordinate.
inline std::vector<PathPoint> typical_path(const std::vector<SpinorState>& history,
                                           const AutomatonParams& params) {
    if (history.empty()) throw std::invalid_argument("typical_path: empty history");
    std::vector<PathPoint> path;
    path.reserve(history.size());
    for (std::size_t t = 0; t < history.size(); ++t) {
        const SpinorState& st = history[t];
        int best_site = 0;
        double best_rho = -1.0;
        for (int site = 0; site < st.n_sites; ++site) {
            const double rho = st.site_probability(site);
            const double x = signed_site_coordinate(site, st.n_sites);
            const double bx = signed_site_coordinate(best_site, st.n_sites);
            bool better = rho > best_rho + 1e-15;
            if (!better && std::abs(rho - best_rho) <= 1e-15) {
                if (std::abs(x) < std::abs(bx) - 1e-12) better = true;
                else if (std::abs(std::abs(x) - std::abs(bx)) <= 1e-12 && x > bx) better = true;
            }
            if (better) {
                best_rho = rho;
                best_site = site;
            }
        }
        PathPoint p;
        p.t = static_cast<int>(t);
        p.x_star = params.units.a * signed_site_coordinate(best_site, st.n_sites);
        p.x_mean = circular_mean_position(st, params);
        path.push_back(p);
    }
    return path;
}

} // namespace qca

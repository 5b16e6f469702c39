#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "qca/band_unitary.hpp"

namespace qca {

/// Momentum-space symbol of the band unitary at phase phi in (-pi, pi]:
///   u(phi) = [[s e^{i phi}, -i c], [-i c, s e^{-i phi}]],
/// eigenvalues s cos(phi) -/+ i xi = e^{-/+ i E}, E = arccos(s cos(phi)).
struct MomentumMode {
    double phi = 0.0;
    Eigen::Matrix2cd u_phi;
    double xi = 0.0;            // sqrt(1 - s^2 cos^2 phi) = sin E
    double eigenphase = 0.0;    // E in [0, pi]
    cxd lambda_plus, lambda_minus;          // e^{-iE}, e^{+iE}
    Eigen::Vector2cd v_plus, v_minus;       // unit eigenvectors

    cxd lambda(Component alpha) const {
        return alpha == Component::Plus ? lambda_plus : lambda_minus;
    }
    const Eigen::Vector2cd& eigvec(Component alpha) const {
        return alpha == Component::Plus ? v_plus : v_minus;
    }
};

namespace detail {

// Eigenvector of a 2x2 matrix for eigenvalue lambda via the adjugate of
// (u - lambda I); used when the closed-form spinor degenerates.
inline Eigen::Vector2cd eigvec_from_adjugate(const Eigen::Matrix2cd& u, cxd lambda,
                                             Component alpha) {
    Eigen::Vector2cd cand1(u(0, 1), lambda - u(0, 0));
    Eigen::Vector2cd cand2(lambda - u(1, 1), u(1, 0));
    Eigen::Vector2cd v = (cand1.norm() >= cand2.norm()) ? cand1 : cand2;
    if (v.norm() < 1e-14) {
        // Fully degenerate (u proportional to identity): pick a fixed basis.
        v = (alpha == Component::Plus) ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
    }
    return v.normalized();
}

} // namespace detail

inline MomentumMode momentum_unitary(const AutomatonParams& params, double phi) {
    const double c = params.c();
    const double s = params.s();
    MomentumMode mode;
    mode.phi = phi;
    const cxd mic(0.0, -c);
    mode.u_phi << s * std::exp(cxd(0.0, phi)), mic, mic, s * std::exp(cxd(0.0, -phi));
    const double sc = s * std::cos(phi);
    mode.xi = std::sqrt(std::max(0.0, 1.0 - sc * sc));
    mode.eigenphase = std::acos(std::clamp(sc, -1.0, 1.0));
    mode.lambda_plus = cxd(sc, -mode.xi);
    mode.lambda_minus = cxd(sc, mode.xi);
    // Closed-form spinor (alpha xi - s sin phi, c); adjugate fallback where it
    // degenerates (massless limit).
    const double a = s * std::sin(phi);
    for (Component alpha : {Component::Plus, Component::Minus}) {
        const double salpha = (alpha == Component::Plus) ? 1.0 : -1.0;
        Eigen::Vector2cd v(cxd(salpha * mode.xi - a, 0.0), cxd(c, 0.0));
        Eigen::Vector2cd& dst = (alpha == Component::Plus) ? mode.v_plus : mode.v_minus;
        if (v.norm() > 1e-8) {
            dst = v.normalized();
        } else {
            dst = detail::eigvec_from_adjugate(mode.u_phi, mode.lambda(alpha), alpha);
        }
    }
    return mode;
}

/// Lattice momentum eigenstate Psi_n = v_alpha(phi) e^{i n phi} / sqrt(N).
/// phi must be commensurate, phi = 2 pi k / N.
inline SpinorState invariant_state(const AutomatonParams& params, double phi, Component alpha) {
    if (params.boundary != Boundary::Periodic)
        throw std::invalid_argument("invariant_state: requires periodic boundary");
    const int n = params.n_sites;
    const double k = phi * n / (2.0 * M_PI);
    if (std::abs(k - std::round(k)) > 1e-9)
        throw std::invalid_argument("invariant_state: phi is not commensurate with the lattice");
    MomentumMode mode = momentum_unitary(params, phi);
    SpinorState st(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int site = 0; site < n; ++site) {
        cxd wave = std::exp(cxd(0.0, phi * site)) * scale;
        st.amps(2 * site) = mode.eigvec(alpha)(0) * wave;
        st.amps(2 * site + 1) = mode.eigvec(alpha)(1) * wave;
    }
    return st;
}

struct DispersionSample {
    double phi;
    double energy;          // E(phi) = arccos(s cos phi)
    double group_velocity;  // dE/dphi = s sin(phi) / xi
};

/// Uniform scan of the dispersion relation over (-pi, pi].
inline std::vector<DispersionSample> dispersion_scan(const AutomatonParams& params,
                                                     int n_samples) {
    if (n_samples < 2)
        throw std::invalid_argument("dispersion_scan: need at least two samples");
    const double s = params.s();
    std::vector<DispersionSample> table;
    table.reserve(n_samples);
    for (int j = 0; j < n_samples; ++j) {
        const double phi = -M_PI + 2.0 * M_PI * (j + 1) / n_samples;
        const double sc = s * std::cos(phi);
        const double xi = std::sqrt(std::max(0.0, 1.0 - sc * sc));
        DispersionSample row;
        row.phi = phi;
        row.energy = std::acos(std::clamp(sc, -1.0, 1.0));
        row.group_velocity = (xi > 0.0) ? s * std::sin(phi) / xi : 0.0;
        table.push_back(row);
    }
    return table;
}

} // namespace qca

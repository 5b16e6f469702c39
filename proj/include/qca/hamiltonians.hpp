#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qca/momentum.hpp"

namespace qca {

/// Emergent Hamiltonian HH = (i hbar / 2 tau)(U - U^dag), a width-one band
/// Hermitian with momentum symbol (hbar/tau) [[-s sin phi, c], [c, s sin phi]].
struct EmergentH {
    Eigen::Matrix2cd h_minus, h_zero, h_plus;
    AutomatonParams params;

    Eigen::Matrix2cd symbol(double phi) const {
        return h_minus * std::exp(cxd(0.0, phi)) + h_zero +
               h_plus * std::exp(cxd(0.0, -phi));
    }

    Eigen::MatrixXcd dense() const {
        const int n = params.n_sites;
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        auto put = [&](int m, int col, const Eigen::Matrix2cd& blk) {
            h.block<2, 2>(2 * m, 2 * col) += blk;
        };
        for (int col = 0; col < n; ++col) {
            put(col, col, h_zero);
            if (params.boundary == Boundary::Periodic) {
                put((col - 1 + n) % n, col, h_minus);
                put((col + 1) % n, col, h_plus);
            } else {
                if (col - 1 >= 0) put(col - 1, col, h_minus);
                if (col + 1 < n) put(col + 1, col, h_plus);
            }
        }
        return h;
    }

    void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
        band_apply_blocks(h_minus, h_zero, h_plus, params.boundary, in, out);
    }
};

inline EmergentH emergent_h(const AutomatonParams& params) {
    const BandUnitary u = build_band_unitary(params);
    const cxd pref(0.0, params.units.hbar / (2.0 * params.units.tau)); // i hbar / (2 tau)
    EmergentH h;
    h.params = params;
    h.h_minus = pref * (u.a_minus - u.a_plus.adjoint());
    h.h_zero = pref * (u.a_zero - u.a_zero.adjoint());
    h.h_plus = pref * (u.a_plus - u.a_minus.adjoint());
    return h;
}

/// Three-point update Psi(t+tau) = Psi(t-tau) - (2 i tau / hbar) HH Psi(t).
/// On a consistent trajectory this equals a forward band step applied to
/// Psi(t), up to roundoff.
inline SpinorState three_point_step(const SpinorState& state_t, const SpinorState& state_t_minus,
                                    const EmergentH& h) {
    if (state_t.n_sites != state_t_minus.n_sites || state_t.n_sites != h.params.n_sites)
        throw std::invalid_argument("three_point_step: size mismatch");
    SpinorState out(state_t.n_sites);
    Eigen::VectorXcd hpsi;
    h.apply(state_t.amps, hpsi);
    const cxd factor = cxd(0.0, -2.0 * h.params.units.tau / h.params.units.hbar);
    out.amps = state_t_minus.amps + factor * hpsi;
    return out;
}

/// Time-reversed form: Psi(t-tau) = Psi(t+tau) + (2 i tau / hbar) HH Psi(t).
inline SpinorState three_point_step_reversed(const SpinorState& state_t,
                                             const SpinorState& state_t_plus,
                                             const EmergentH& h) {
    if (state_t.n_sites != state_t_plus.n_sites || state_t.n_sites != h.params.n_sites)
        throw std::invalid_argument("three_point_step_reversed: size mismatch");
    SpinorState out(state_t.n_sites);
    Eigen::VectorXcd hpsi;
    h.apply(state_t.amps, hpsi);
    const cxd factor = cxd(0.0, 2.0 * h.params.units.tau / h.params.units.hbar);
    out.amps = state_t_plus.amps + factor * hpsi;
    return out;
}

struct ExponentialCheck {
    double phi = 0.0;
    double eigenphase = 0.0;   // E = arccos(s cos phi)
    double residual = 0.0;     // max |exp(-i asin(HH tau/hbar)) - u(phi)|
    bool branch_valid = false; // s cos phi >= 0, i.e. E <= pi/2
    bool matched = false;
};

/// Per-mode check of the discrete exponential map
/// U(phi) =? exp(-i asin(HH(phi) tau / hbar)) with the principal arcsin branch.
/// M = HH(phi) tau/hbar squares to xi^2 I, and asin is odd, so the spectral
/// calculus collapses to exp(-i asin(M)) = sqrt(1 - xi^2) I - i M exactly.
/// The branch inverts only eigenphases E <= pi/2; modes with s cos phi < 0 are
/// reported as expected branch failures, not errors.
inline ExponentialCheck discrete_exponential_check(const AutomatonParams& params, double phi) {
    const MomentumMode mode = momentum_unitary(params, phi);
    const EmergentH h = emergent_h(params);
    const Eigen::Matrix2cd m = h.symbol(phi) * (params.units.tau / params.units.hbar);

    const double cos_asin = std::sqrt(std::max(0.0, 1.0 - mode.xi * mode.xi));
    const Eigen::Matrix2cd expm =
        cos_asin * Eigen::Matrix2cd::Identity() - cxd(0.0, 1.0) * m;

    ExponentialCheck out;
    out.phi = phi;
    out.eigenphase = mode.eigenphase;
    out.residual = (expm - mode.u_phi).cwiseAbs().maxCoeff();
    out.branch_valid = params.s() * std::cos(phi) >= -1e-12;
    out.matched = out.residual <= 1e-12;
    return out;
}

/// Time-interpolating Hamiltonian: the Hermitian generator with
/// exp(-i Ht tau / hbar) = U, built per momentum mode from the principal
/// logarithm of u(phi) and inverse-transformed to position space. Generally
/// couples the whole lattice.
struct InterpolatingH {
    Eigen::MatrixXcd matrix; // dense 2N x 2N Hermitian
    AutomatonParams params;
    bool branch_warning = false; // some mode sat at the E = pi log branch point
};

inline InterpolatingH interpolating_h(const AutomatonParams& params) {
    if (params.boundary != Boundary::Periodic)
        throw std::invalid_argument("interpolating_h: requires periodic boundary");
    const int n = params.n_sites;
    const double scale = params.units.hbar / params.units.tau;

    InterpolatingH out;
    out.params = params;

    std::vector<Eigen::Matrix2cd> symbols(n);
    for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * M_PI * k / n;
        MomentumMode mode = momentum_unitary(params, phi);
        double e = mode.eigenphase;
        if (e > M_PI - 1e-12) {
            e = M_PI - 1e-12; // log branch point (s = 1, phi = pi)
            out.branch_warning = true;
        }
        symbols[k] = scale * e *
                     (mode.v_plus * mode.v_plus.adjoint() - mode.v_minus * mode.v_minus.adjoint());
    }

    // Block-circulant inverse transform: block(j) = (1/N) sum_k symbol(k) e^{i j phi_k}.
    out.matrix = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        Eigen::Matrix2cd blk = Eigen::Matrix2cd::Zero();
        for (int k = 0; k < n; ++k)
            blk += symbols[k] * std::exp(cxd(0.0, 2.0 * M_PI * j * k / n));
        blk /= static_cast<double>(n);
        for (int col = 0; col < n; ++col)
            out.matrix.block<2, 2>(2 * ((col + j) % n), 2 * col) = blk;
    }
    return out;
}

/// exp(-i H tau / hbar) of a dense Hermitian, via its eigendecomposition.
inline Eigen::MatrixXcd hermitian_propagator(const Eigen::MatrixXcd& h, double tau_over_hbar) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const cxd phase = std::exp(cxd(0.0, -tau_over_hbar * es.eigenvalues()(i)));
        out += phase * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
    return out;
}

struct LocalityProfile {
    std::vector<double> max_coupling; // indexed by circular block offset 0..N/2
    int max_offset = 0;               // largest offset with coupling >= threshold
};

/// Largest block offset carrying coupling magnitude at or above the threshold,
/// for a dense Hermitian over the 2-component site lattice.
inline LocalityProfile locality_profile(const Eigen::MatrixXcd& h, double threshold) {
    if (h.rows() != h.cols() || h.rows() % 2 != 0)
        throw std::invalid_argument("locality_profile: expected an even-dimensional square matrix");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("locality_profile: input is not Hermitian");
    const int n = static_cast<int>(h.rows()) / 2;
    LocalityProfile out;
    out.max_coupling.assign(n / 2 + 1, 0.0);
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const int fwd = (row - col + n) % n;
            const int offset = std::min(fwd, n - fwd);
            const double mag = h.block<2, 2>(2 * row, 2 * col).cwiseAbs().maxCoeff();
            if (mag > out.max_coupling[offset]) out.max_coupling[offset] = mag;
        }
    }
    for (int off = 0; off <= n / 2; ++off)
        if (out.max_coupling[off] >= threshold) out.max_offset = off;
    return out;
}

} // namespace qca

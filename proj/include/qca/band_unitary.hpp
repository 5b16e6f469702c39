#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "qca/spinor_state.hpp"

namespace qca {

enum class Direction { Forward, Backward };

/// One-step evolution of the Dirac automaton as a width-one band matrix of
/// 2x2 blocks. The ket-space action is
///   U|n,+> = s|n-1,+> - i c|n,->,    U|n,-> = -i c|n,+> + s|n+1,->,
/// site arithmetic mod N under periodic boundary. Equivalently
///   U|psi_n> = a_minus|psi_{n-1}> + a_zero|psi_n> + a_plus|psi_{n+1}>.
struct BandUnitary {
    Eigen::Matrix2cd a_minus, a_zero, a_plus;
    int n_sites = 0;
    Boundary boundary = Boundary::Periodic;

    /// Dense 2N x 2N matrix in flat mode order.
    Eigen::MatrixXcd dense() const {
        const int n = n_sites;
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        auto put = [&](int m, int col, const Eigen::Matrix2cd& blk) {
            u.block<2, 2>(2 * m, 2 * col) += blk;
        };
        for (int col = 0; col < n; ++col) {
            put(col, col, a_zero);
            if (boundary == Boundary::Periodic) {
                put((col - 1 + n) % n, col, a_minus);
                put((col + 1) % n, col, a_plus);
            } else {
                if (col - 1 >= 0) put(col - 1, col, a_minus);
                if (col + 1 < n) put(col + 1, col, a_plus);
            }
        }
        return u;
    }
};

inline BandUnitary build_band_unitary(const AutomatonParams& params) {
    const double c = params.c();
    const double s = params.s();
    const cxd mic(0.0, -c); // -i c
    BandUnitary u;
    u.n_sites = params.n_sites;
    u.boundary = params.boundary;
    u.a_minus << s, 0.0, 0.0, 0.0;
    u.a_zero << 0.0, mic, mic, 0.0;
    u.a_plus << 0.0, 0.0, 0.0, s;
    return u;
}

/// Apply a site-banded operator with blocks (bm, bz, bp) acting as
/// O|psi_n> = bm|psi_{n-1}> + bz|psi_n> + bp|psi_{n+1}> to a flat mode vector:
/// out_m = bm in_{m+1} + bz in_m + bp in_{m-1}.
inline void band_apply_blocks(const Eigen::Matrix2cd& bm, const Eigen::Matrix2cd& bz,
                              const Eigen::Matrix2cd& bp, Boundary boundary,
                              const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    const int n = static_cast<int>(in.size()) / 2;
    out.resize(2 * n);
    for (int m = 0; m < n; ++m) {
        Eigen::Vector2cd acc = bz * in.segment<2>(2 * m);
        if (boundary == Boundary::Periodic) {
            acc += bm * in.segment<2>(2 * ((m + 1) % n));
            acc += bp * in.segment<2>(2 * ((m - 1 + n) % n));
        } else {
            if (m + 1 < n) acc += bm * in.segment<2>(2 * (m + 1));
            if (m - 1 >= 0) acc += bp * in.segment<2>(2 * (m - 1));
        }
        out.segment<2>(2 * m) = acc;
    }
}

inline void apply_step_modes(const BandUnitary& u, const Eigen::VectorXcd& in,
                             Eigen::VectorXcd& out, Direction dir) {
    if (in.size() != 2 * u.n_sites)
        throw std::invalid_argument("apply_step: state size does not match the band unitary");
    if (dir == Direction::Forward) {
        band_apply_blocks(u.a_minus, u.a_zero, u.a_plus, u.boundary, in, out);
    } else {
        // Adjoint: blocks of U^dag are (a_plus^dag, a_zero^dag, a_minus^dag).
        band_apply_blocks(u.a_plus.adjoint(), u.a_zero.adjoint(), u.a_minus.adjoint(),
                          u.boundary, in, out);
    }
}

inline SpinorState apply_step(const BandUnitary& u, const SpinorState& state,
                              Direction dir = Direction::Forward) {
    if (state.n_sites != u.n_sites)
        throw std::invalid_argument("apply_step: state size does not match the band unitary");
    SpinorState out(state.n_sites);
    apply_step_modes(u, state.amps, out.amps, dir);
    return out;
}

/// Max-norm unitarity residual of the dense band matrix.
/// Open boundaries are not unitary at the edges; requiring exactness there
/// is an error by contract.
inline double unitarity_residual(const BandUnitary& u, bool require_exact = false) {
    if (require_exact && u.boundary == Boundary::Open)
        throw std::domain_error(
            "unitarity_residual: open boundary band step is not unitary at the lattice edges");
    Eigen::MatrixXcd d = u.dense();
    Eigen::MatrixXcd r = d.adjoint() * d - Eigen::MatrixXcd::Identity(d.rows(), d.cols());
    return r.cwiseAbs().maxCoeff();
}

} // namespace qca

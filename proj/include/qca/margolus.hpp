#pragma once

#include <Eigen/Dense>

#include "qca/band_unitary.hpp"

namespace qca {

/// Two-site gates of the Margolus decomposition:
///   A = [[c, i s], [i s, c]]   mixes (psi^-_{n-1}, psi^+_n),
///   B = [[0, -i], [-i, 0]]     mixes (psi^+_n, psi^-_n).
struct GatePair {
    Eigen::Matrix2cd gate_a;
    Eigen::Matrix2cd gate_b;
};

inline GatePair margolus_gates(const AutomatonParams& params) {
    const double c = params.c();
    const double s = params.s();
    GatePair g;
    g.gate_a << c, cxd(0.0, s), cxd(0.0, s), c;
    g.gate_b << 0.0, cxd(0.0, -1.0), cxd(0.0, -1.0), 0.0;
    return g;
}

/// One automaton step as two rows of independent gates: the A row acts on the
/// pairs (psi^-_{n-1}, psi^+_n), then the B row acts on the on-site pairs
/// (psi^+_n, psi^-_n). The composition equals the band unitary exactly; the
/// row order and pairing offset are fixed by that equality.
inline SpinorState margolus_step(const AutomatonParams& params, const SpinorState& state) {
    if (params.boundary != Boundary::Periodic)
        throw std::invalid_argument("margolus_step: requires periodic boundary");
    const int n = params.n_sites;
    if (n % 2 != 0) throw std::invalid_argument("margolus_step: requires even n_sites");
    if (state.n_sites != n) throw std::invalid_argument("margolus_step: state size mismatch");

    GatePair g = margolus_gates(params);
    Eigen::VectorXcd v = state.amps;

    auto mix = [&](const Eigen::Matrix2cd& gate, int mode_a, int mode_b) {
        const cxd a = v(mode_a), b = v(mode_b);
        v(mode_a) = gate(0, 0) * a + gate(0, 1) * b;
        v(mode_b) = gate(1, 0) * a + gate(1, 1) * b;
    };

    // A row: (psi^-_{n-1}, psi^+_n) = flat modes (2n-1 mod 2N, 2n).
    for (int site = 0; site < n; ++site)
        mix(g.gate_a, (2 * site - 1 + 2 * n) % (2 * n), 2 * site);
    // B row: on-site (psi^+_n, psi^-_n) = (2n, 2n+1).
    for (int site = 0; site < n; ++site)
        mix(g.gate_b, 2 * site, 2 * site + 1);

    SpinorState out(n);
    out.amps = std::move(v);
    return out;
}

} // namespace qca

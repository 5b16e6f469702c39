#pragma once

#include <cmath>

#include "qca/spinor_state.hpp"

namespace qca {

/// Minimal-image displacement on the periodic site ring, in [-N/2, N/2).
inline double wrap_displacement(double delta, int n_sites) {
    double n = static_cast<double>(n_sites);
    double d = std::fmod(delta, n);
    if (d < -n / 2.0) d += n;
    if (d >= n / 2.0) d -= n;
    return d;
}

/// Gaussian wave packet
///   Psi_n ∝ exp(i 2 pi n / k - (n - n0)^2 / (2 Delta^2)) (|n,+> ± |n,->),
/// with the envelope centered through the minimal-image displacement so the
/// state is well defined on the ring. Carrier momentum phi0 = 2 pi / k.
inline SpinorState gaussian_packet(const AutomatonParams& params, int n0, double delta, int k,
                                   int sign = +1) {
    if (delta <= 0.0) throw std::invalid_argument("gaussian_packet: delta must be positive");
    if (k == 0) throw std::invalid_argument("gaussian_packet: k must be nonzero");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("gaussian_packet: sign must be +1 or -1");
    const int n = params.n_sites;
    SpinorState st(n);
    for (int site = 0; site < n; ++site) {
        const double d = wrap_displacement(site - n0, n);
        const double env = std::exp(-d * d / (2.0 * delta * delta));
        const cxd amp = env * std::exp(cxd(0.0, 2.0 * M_PI * site / k));
        st.amps(2 * site) = amp;
        st.amps(2 * site + 1) = static_cast<double>(sign) * amp;
    }
    st.normalize();
    return st;
}

/// Four equal amplitudes 1/2 at sites +-n, both components.
inline SpinorState double_slit_state(const AutomatonParams& params, int n) {
    const int N = params.n_sites;
    if (!(n > 0 && 2 * n < N))
        throw std::invalid_argument("double_slit_state: need 0 < n < N/2");
    SpinorState st(N);
    st.at(n, Component::Plus) = 0.5;
    st.at(n, Component::Minus) = 0.5;
    st.at(N - n, Component::Plus) = 0.5;
    st.at(N - n, Component::Minus) = 0.5;
    return st;
}

} // namespace qca

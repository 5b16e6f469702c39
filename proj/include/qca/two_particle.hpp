#pragma once

#include <Eigen/Dense>

#include "qca/band_unitary.hpp"
#include "qca/threading.hpp"

namespace qca {

/// Antisymmetric two-particle amplitudes Psi_{ij} over flat modes, M = 2N.
/// Normalization: Frobenius norm 1, i.e. 2 sum_{i<j} |Psi_{ij}|^2 = 1.
struct TwoParticleState {
    int n_sites = 0;
    Eigen::MatrixXcd amps; // M x M, antisymmetric

    TwoParticleState() = default;
    explicit TwoParticleState(int n)
        : n_sites(n), amps(Eigen::MatrixXcd::Zero(2 * n, 2 * n)) {}

    int n_modes() const { return 2 * n_sites; }
    double norm() const { return amps.norm(); }
    double antisymmetry_residual() const {
        return (amps + amps.transpose()).cwiseAbs().maxCoeff();
    }
    /// Site-level probability p(n, m) summed over components.
    double site_probability(int site_a, int site_b) const {
        double acc = 0.0;
        for (int ca = 0; ca < 2; ++ca)
            for (int cb = 0; cb < 2; ++cb)
                acc += std::norm(amps(2 * site_a + ca, 2 * site_b + cb));
        return acc;
    }
};

/// Antisymmetrized Kronecker product of two normalized single-particle states,
/// Psi_{ij} ∝ a_i b_j - a_j b_i. Parallel inputs have no antisymmetric part
/// and are rejected.
inline TwoParticleState two_particle_from_singles(const SpinorState& a, const SpinorState& b) {
    if (a.n_sites != b.n_sites)
        throw std::invalid_argument("two_particle_from_singles: size mismatch");
    TwoParticleState st(a.n_sites);
    st.amps = a.amps * b.amps.transpose() - b.amps * a.amps.transpose();
    const double n = st.amps.norm();
    if (n < 1e-12)
        throw std::invalid_argument(
            "two_particle_from_singles: inputs are parallel (vanishing antisymmetrization)");
    st.amps /= n;
    return st;
}

/// Evolve Psi -> U Psi U^T via one-sided band applications on columns of Psi
/// and of Psi^T. O(N^2) per step; antisymmetry and norm are preserved.
inline TwoParticleState evolve_two_particle(const TwoParticleState& state,
                                            const AutomatonParams& params, int steps,
                                            int n_threads = 1) {
    if (state.n_sites != params.n_sites)
        throw std::invalid_argument("evolve_two_particle: size mismatch");
    const BandUnitary u = build_band_unitary(params);
    const int m = state.n_modes();
    TwoParticleState out = state;
    Eigen::MatrixXcd work(m, m);
    for (int step = 0; step < steps; ++step) {
        // Left multiply: columns evolve as mode vectors.
        parallel_for(m, n_threads, [&](int lo, int hi) {
            Eigen::VectorXcd tmp;
            for (int j = lo; j < hi; ++j) {
                apply_step_modes(u, out.amps.col(j), tmp, Direction::Forward);
                work.col(j) = tmp;
            }
        });
        // Right multiply by U^T: evolve columns of the transpose.
        out.amps = work.transpose();
        parallel_for(m, n_threads, [&](int lo, int hi) {
            Eigen::VectorXcd tmp;
            for (int j = lo; j < hi; ++j) {
                apply_step_modes(u, out.amps.col(j), tmp, Direction::Forward);
                work.col(j) = tmp;
            }
        });
        out.amps = work.transpose();
    }
    return out;
}

} // namespace qca

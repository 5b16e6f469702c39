#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "qca/params.hpp"

namespace qca {

using cxd = std::complex<double>;

/// Single-particle sector amplitudes Psi_{n,alpha} over N field sites,
/// stored flat in mode order (2n for +, 2n+1 for -).
struct SpinorState {
    int n_sites = 0;
    Eigen::VectorXcd amps;

    SpinorState() = default;
    explicit SpinorState(int n) : n_sites(n), amps(Eigen::VectorXcd::Zero(2 * n)) {
        if (n <= 0) throw std::invalid_argument("SpinorState: n_sites must be positive");
    }

    cxd& at(int site, Component alpha) { return amps(mode_index(site, alpha, n_sites)); }
    cxd at(int site, Component alpha) const { return amps(mode_index(site, alpha, n_sites)); }

    double norm() const { return amps.norm(); }
    double site_probability(int site) const {
        return std::norm(amps(2 * site)) + std::norm(amps(2 * site + 1));
    }

    void normalize() {
        double n = norm();
        if (n == 0.0) throw std::domain_error("SpinorState::normalize: zero state");
        amps /= n;
    }

    static SpinorState delta(int n_sites, int site, Component alpha) {
        SpinorState st(n_sites);
        st.at(site, alpha) = 1.0;
        return st;
    }
};

} // namespace qca

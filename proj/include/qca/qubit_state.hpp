#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qca {

inline constexpr int kMaxQubits = 24; // dense-vector memory guard

/// Dense state over 2^n computational basis states. Qubit j is flat mode j;
/// bit j of the basis index is 1 for |up> (occupied) and 0 for |down>.
/// The all-down vacuum is index 0.
struct QubitState {
    int n_qubits = 0;
    Eigen::VectorXcd amps;

    QubitState() = default;
    explicit QubitState(int n) : n_qubits(n) {
        if (n < 1 || n > kMaxQubits)
            throw std::invalid_argument("QubitState: qubit count outside [1, 24]");
        amps = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
    }

    static QubitState vacuum(int n) {
        QubitState st(n);
        st.amps(0) = 1.0;
        return st;
    }

    static QubitState basis(int n, std::uint64_t index) {
        QubitState st(n);
        if (index >= (std::uint64_t(1) << n))
            throw std::out_of_range("QubitState::basis: index out of range");
        st.amps(static_cast<std::int64_t>(index)) = 1.0;
        return st;
    }

    std::int64_t dim() const { return amps.size(); }
    double norm() const { return amps.norm(); }
    void normalize() {
        double n = norm();
        if (n == 0.0) throw std::domain_error("QubitState::normalize: zero state");
        amps /= n;
    }
};

} // namespace qca

#pragma once

#include <bit>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qca/params.hpp"

namespace qca {

using cxd = std::complex<double>;

inline constexpr int kMaxFockModes = 24;

/// Dense amplitudes over occupation bitmasks of M fermionic modes, in the
/// fixed total mode order of the flat mode index. Basis convention:
/// |mask> = phi_{j1}^dag phi_{j2}^dag ... |0> with j1 < j2 < ..., so
/// creation picks up (-1)^{number of occupied modes below j}.
struct FockState {
    int n_modes = 0;
    Eigen::VectorXcd amps;

    FockState() = default;
    explicit FockState(int m) : n_modes(m) {
        if (m < 1 || m > kMaxFockModes)
            throw std::invalid_argument("FockState: mode count outside [1, 24]");
        amps = Eigen::VectorXcd::Zero(std::int64_t(1) << m);
    }

    static FockState vacuum(int m) {
        FockState st(m);
        st.amps(0) = 1.0;
        return st;
    }

    std::int64_t dim() const { return amps.size(); }
    double norm() const { return amps.norm(); }
};

enum class FermionOp { Create, Annihilate };

namespace detail {

inline double jw_parity(std::uint64_t mask, int j) {
    const std::uint64_t below = mask & ((std::uint64_t(1) << j) - 1);
    return (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
}

} // namespace detail

/// Occupation-basis action of phi_j^dag / phi_j with the standard parity sign.
inline FockState fermion_apply(FermionOp op, int j, const FockState& in) {
    if (j < 0 || j >= in.n_modes) throw std::out_of_range("fermion_apply: mode out of range");
    FockState out(in.n_modes);
    const std::uint64_t bit = std::uint64_t(1) << j;
    for (std::int64_t idx = 0; idx < in.dim(); ++idx) {
        const cxd amp = in.amps(idx);
        if (amp == cxd(0.0, 0.0)) continue;
        const std::uint64_t mask = static_cast<std::uint64_t>(idx);
        if (op == FermionOp::Create) {
            if (mask & bit) continue;
            out.amps(static_cast<std::int64_t>(mask | bit)) += detail::jw_parity(mask, j) * amp;
        } else {
            if (!(mask & bit)) continue;
            out.amps(static_cast<std::int64_t>(mask & ~bit)) += detail::jw_parity(mask, j) * amp;
        }
    }
    return out;
}

/// Dense matrix of a single mode operator (for algebra checks at small M).
inline Eigen::MatrixXcd fermion_dense(FermionOp op, int j, int n_modes) {
    const std::int64_t dim = std::int64_t(1) << n_modes;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        FockState e(n_modes);
        e.amps(col) = 1.0;
        m.col(col) = fermion_apply(op, j, e).amps;
    }
    return m;
}

/// Masks of Hamming weight S in increasing numeric order.
inline std::vector<std::uint64_t> sector_masks(int n_modes, int weight) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n_modes); ++mask)
        if (std::popcount(mask) == weight) masks.push_back(mask);
    return masks;
}

struct SectorAmplitudes {
    std::vector<std::uint64_t> masks;
    Eigen::VectorXcd amps;
};

inline SectorAmplitudes sector_project(const FockState& state, int weight) {
    if (weight < 0 || weight > state.n_modes)
        throw std::invalid_argument("sector_project: weight out of range");
    SectorAmplitudes out;
    out.masks = sector_masks(state.n_modes, weight);
    out.amps.resize(static_cast<std::int64_t>(out.masks.size()));
    for (std::size_t i = 0; i < out.masks.size(); ++i)
        out.amps(static_cast<std::int64_t>(i)) =
            state.amps(static_cast<std::int64_t>(out.masks[i]));
    return out;
}

namespace detail {

/// Anti-Hermitian quadratic generator sum_{jk} K_{jk} phi_j^dag phi_k
/// restricted to one fixed-particle-number sector, as a dense matrix over
/// the sector's mask basis.
inline Eigen::MatrixXcd sector_generator(const Eigen::MatrixXcd& k_mat,
                                         const std::vector<std::uint64_t>& masks) {
    const int dim = static_cast<int>(masks.size());
    const int n_modes = static_cast<int>(k_mat.rows());
    std::vector<std::int64_t> position(std::size_t(1) << n_modes, -1);
    for (int i = 0; i < dim; ++i) position[masks[i]] = i;

    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const std::uint64_t mask = masks[col];
        for (int k = 0; k < n_modes; ++k) {
            if (!(mask & (std::uint64_t(1) << k))) continue;
            const double sign_k = jw_parity(mask, k);
            const std::uint64_t removed = mask & ~(std::uint64_t(1) << k);
            for (int j = 0; j < n_modes; ++j) {
                if (removed & (std::uint64_t(1) << j)) continue;
                if (std::abs(k_mat(j, k)) < 1e-300) continue;
                const double sign_j = jw_parity(removed, j);
                const std::uint64_t target = removed | (std::uint64_t(1) << j);
                g(position[target], col) += k_mat(j, k) * sign_j * sign_k;
            }
        }
    }
    return g;
}

} // namespace detail

struct BilinearEvolveResult {
    FockState state;
    bool branch_warning = false; // mode eigenphase pinned away from pi
};

/// Apply the Fock-space unitary whose Heisenberg action on modes is the
/// unitary matrix 'modes' (Gamma(modes)): the generator is the principal
/// matrix logarithm of 'modes' lifted to a quadratic form and exponentiated
/// sector by sector. Deliberately shares no code path with the gate-level
/// evolutions it cross-checks.
inline BilinearEvolveResult bilinear_evolve(const FockState& state,
                                            const Eigen::MatrixXcd& modes) {
    const int m = state.n_modes;
    if (modes.rows() != m || modes.cols() != m)
        throw std::invalid_argument("bilinear_evolve: mode matrix size mismatch");
    if ((modes.adjoint() * modes - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() >
        1e-12)
        throw std::invalid_argument("bilinear_evolve: mode matrix is not unitary");

    BilinearEvolveResult out;

    // Principal logarithm through the Schur form (diagonal for a unitary).
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(modes);
    Eigen::MatrixXcd q = schur.matrixU();
    Eigen::VectorXcd diag = schur.matrixT().diagonal();
    Eigen::VectorXcd log_diag(m);
    for (int i = 0; i < m; ++i) {
        double phase = std::arg(diag(i) / std::abs(diag(i)));
        if (std::abs(phase) > M_PI - 1e-12) {
            phase = std::copysign(M_PI - 1e-12, phase);
            out.branch_warning = true;
        }
        log_diag(i) = cxd(0.0, phase);
    }
    Eigen::MatrixXcd k_mat = q * log_diag.asDiagonal() * q.adjoint();

    out.state = FockState(m);
    for (int weight = 0; weight <= m; ++weight) {
        SectorAmplitudes sector = sector_project(state, weight);
        if (sector.amps.norm() < 1e-15) continue;
        Eigen::MatrixXcd g = detail::sector_generator(k_mat, sector.masks);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(cxd(0.0, 1.0) * g);
        Eigen::VectorXcd evolved = Eigen::VectorXcd::Zero(sector.amps.size());
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            const cxd phase = std::exp(cxd(0.0, -es.eigenvalues()(i)));
            evolved += phase * es.eigenvectors().col(i) *
                       (es.eigenvectors().col(i).adjoint() * sector.amps);
        }
        for (std::size_t i = 0; i < sector.masks.size(); ++i)
            out.state.amps(static_cast<std::int64_t>(sector.masks[i])) =
                evolved(static_cast<std::int64_t>(i));
    }
    return out;
}

/// Expectation of the quadratic form phi^dag H phi on a Fock state.
inline cxd quadratic_expectation(const FockState& state, const Eigen::MatrixXcd& h) {
    cxd acc(0.0, 0.0);
    for (int j = 0; j < state.n_modes; ++j) {
        for (int k = 0; k < state.n_modes; ++k) {
            if (std::abs(h(j, k)) < 1e-15) continue;
            FockState v = fermion_apply(FermionOp::Create, j,
                                        fermion_apply(FermionOp::Annihilate, k, state));
            acc += h(j, k) * state.amps.dot(v.amps);
        }
    }
    return acc;
}

} // namespace qca

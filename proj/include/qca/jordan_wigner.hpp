#pragma once

#include <bit>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qca/hamiltonians.hpp"
#include "qca/pauli.hpp"
#include "qca/two_particle.hpp"

namespace qca {

/// Fermion mode operator phi_j = prod_{k<j}(-sigma_k^3) sigma_j^-,
/// or its dagger. The pairwise minus signs make the string a plain
/// Z_0...Z_{j-1} product times (-1)^j.
inline PauliOperator jw_fermion(int j, bool dagger, int n_q) {
    if (j < 0 || j >= n_q) throw std::out_of_range("jw_fermion: mode out of range");
    std::map<int, Pauli> string;
    for (int k = 0; k < j; ++k) string.emplace(k, Pauli::Z);
    const cxd sign = (j % 2 == 0) ? 1.0 : -1.0;
    PauliOperator prefix(PauliString(sign, string));
    return prefix * (dagger ? sigma_plus_op(j) : sigma_minus_op(j));
}

/// Dense residual of the string identity
///   phi_{j+l}^dag phi_j = (-1)^{l+1} sigma_j^- S_j^l sigma_{j+l}^+,
///   S_j^l = prod_{j<k<j+l} sigma_k^3.
/// The sign exponent l+1 (rather than l) is forced by sigma^3 sigma^- =
/// -sigma^-; see the two-mode case phi_1^dag phi_0 = +sigma_0^- sigma_1^+.
inline double string_identity_residual(int j, int l, int n_q) {
    if (l < 1 || j < 0 || j + l >= n_q)
        throw std::out_of_range("string_identity_residual: indices out of range");
    PauliOperator lhs = jw_fermion(j + l, true, n_q) * jw_fermion(j, false, n_q);
    std::map<int, Pauli> s;
    for (int k = j + 1; k < j + l; ++k) s.emplace(k, Pauli::Z);
    const cxd sign = (l % 2 == 0) ? -1.0 : 1.0; // (-1)^{l+1}
    PauliOperator rhs = PauliOperator(PauliString(sign, s)) * sigma_minus_op(j) *
                        sigma_plus_op(j + l);
    return (dense(lhs, n_q) - dense(rhs, n_q)).cwiseAbs().maxCoeff();
}

/// Hopping generator phi_p^dag phi_q + phi_q^dag phi_p as a qubit operator.
/// Adjacent modes give (X X + Y Y)/2; a wrapped pair carries the full string.
inline PauliOperator hop_generator(int p, int q, int n_q) {
    return jw_fermion(p, true, n_q) * jw_fermion(q, false, n_q) +
           jw_fermion(q, true, n_q) * jw_fermion(p, false, n_q);
}

/// exp(i gamma G) for a hopping generator, using G^3 = G:
/// exp(i gamma G) = I + (cos gamma - 1) G^2 + i sin gamma G.
inline Eigen::MatrixXcd hop_exponential_dense(const PauliOperator& g, double gamma, int n_q) {
    Eigen::MatrixXcd gd = dense(g, n_q);
    const std::int64_t dim = gd.rows();
    return Eigen::MatrixXcd::Identity(dim, dim) + (std::cos(gamma) - 1.0) * (gd * gd) +
           cxd(0.0, std::sin(gamma)) * gd;
}

/// Dense two-qubit gate unitaries of the automaton on a 2N-qubit register:
///   A_n = exp[ i theta (phi_{2n}^dag phi_{2n-1} + h.c.) ],
///   B_n = exp[ -i pi/2 (phi_{2n}^dag phi_{2n+1} + h.c.) ].
/// In qubit letters the bulk generators are (X X + Y Y)/2 on adjacent qubits.
/// The exponent signs are fixed by the single-particle sector equivalence
/// with the band unitary (A restricted to one excitation is [[c, is],[is, c]]).
inline std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> gate_unitaries_qubit(
    const AutomatonParams& params, int n, int n_q) {
    if (n_q < 2 || n_q % 2 != 0)
        throw std::invalid_argument("gate_unitaries_qubit: need an even register");
    const int a = ((2 * n - 1) % n_q + n_q) % n_q;
    const int b = (2 * n) % n_q;
    const int b2 = (2 * n + 1) % n_q;
    PauliOperator ga = hop_generator(b, a, n_q);
    PauliOperator gb = hop_generator(b, b2, n_q);
    return {hop_exponential_dense(ga, params.theta, n_q),
            hop_exponential_dense(gb, -M_PI / 2.0, n_q)};
}

namespace detail {

/// In-place two-mode mixing gate on a state vector: for basis states holding
/// exactly one excitation among modes (a, b), apply [[d0, od], [od, d0]] in
/// the ordering (excitation at a, excitation at b). string_mask marks the
/// qubits whose occupation parity signs the off-diagonal (JW string of a
/// wrapped pair; zero for adjacent pairs).
inline void mix_pair(QubitState& st, int a, int b, cxd d0, cxd od,
                     std::uint64_t string_mask) {
    const std::uint64_t bit_a = std::uint64_t(1) << a;
    const std::uint64_t bit_b = std::uint64_t(1) << b;
    const std::int64_t dim = st.dim();
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        const std::uint64_t u = static_cast<std::uint64_t>(idx);
        if ((u & bit_a) && !(u & bit_b)) {
            const std::int64_t partner = static_cast<std::int64_t>(u ^ bit_a ^ bit_b);
            const double sign =
                (std::popcount(u & string_mask) % 2 == 0) ? 1.0 : -1.0;
            const cxd va = st.amps(idx);
            const cxd vb = st.amps(partner);
            st.amps(idx) = d0 * va + sign * od * vb;
            st.amps(partner) = sign * od * va + d0 * vb;
        }
    }
}

} // namespace detail

/// One MQCA step on the 2N-qubit register: the A-gate row on mode pairs
/// (2n-1, 2n), then the B-gate row on (2n, 2n+1), matching the Margolus
/// composition of the band unitary. Under periodic boundary the wrapped A
/// pair (2N-1, 0) carries the JW string parity, so the step is the exact
/// Fock-space image of the band unitary in every excitation sector.
inline QubitState mqca_step(const AutomatonParams& params, const QubitState& state) {
    const int n_q = state.n_qubits;
    if (n_q != 2 * params.n_sites)
        throw std::invalid_argument("mqca_step: register must hold 2 * n_sites qubits");
    if (params.n_sites % 2 != 0)
        throw std::invalid_argument("mqca_step: requires even n_sites");

    const double c = params.c();
    const double s = params.s();
    QubitState out = state;

    // A row: exp(i theta G) restricted to the swap subspace is [[c, is],[is, c]].
    for (int site = 0; site < params.n_sites; ++site) {
        const int b = 2 * site;
        if (site == 0) {
            if (params.boundary != Boundary::Periodic) continue;
            const int a = n_q - 1;
            std::uint64_t middle = ((std::uint64_t(1) << (n_q - 1)) - 1) & ~std::uint64_t(1);
            detail::mix_pair(out, a, b, c, cxd(0.0, s), middle);
        } else {
            detail::mix_pair(out, 2 * site - 1, b, c, cxd(0.0, s), 0);
        }
    }
    // B row: exp(-i pi/2 G) = [[0, -i], [-i, 0]] on the swap subspace.
    for (int site = 0; site < params.n_sites; ++site)
        detail::mix_pair(out, 2 * site, 2 * site + 1, 0.0, cxd(0.0, -1.0), 0);
    return out;
}

/// Materialize any state map as a dense matrix by acting on basis states.
template <typename StepFn>
inline Eigen::MatrixXcd dense_from_action(int n_q, StepFn&& step) {
    const std::int64_t dim = std::int64_t(1) << n_q;
    Eigen::MatrixXcd m(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        QubitState e = QubitState::basis(n_q, static_cast<std::uint64_t>(col));
        m.col(col) = step(e).amps;
    }
    return m;
}

inline Eigen::MatrixXcd total_sz_dense(int n_q) {
    const std::int64_t dim = std::int64_t(1) << n_q;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t idx = 0; idx < dim; ++idx)
        m(idx, idx) = 2.0 * std::popcount(static_cast<std::uint64_t>(idx)) - n_q;
    return m;
}

// ---- Fixed-excitation sector dictionary -----------------------------------
// Mode j maps to the basis state with only qubit j up; a two-particle
// amplitude Psi_{ij} (Frobenius-normalized, antisymmetric) maps to the
// weight-2 basis state {i, j} with amplitude -sqrt(2) Psi_{ij} for i < j
// (the sign from phi_j^dag phi_i^dag |Omega> = -|{i,j}>).

inline QubitState sector_embed_single(const SpinorState& psi) {
    QubitState st(2 * psi.n_sites);
    for (int j = 0; j < 2 * psi.n_sites; ++j)
        st.amps(std::int64_t(1) << j) = psi.amps(j);
    return st;
}

inline SpinorState sector_extract_single(const QubitState& st, int n_sites) {
    SpinorState psi(n_sites);
    for (int j = 0; j < 2 * n_sites; ++j) psi.amps(j) = st.amps(std::int64_t(1) << j);
    return psi;
}

inline QubitState sector_embed_two(const TwoParticleState& psi) {
    const int m = psi.n_modes();
    QubitState st(m);
    const double root2 = std::sqrt(2.0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            st.amps((std::int64_t(1) << i) | (std::int64_t(1) << j)) = -root2 * psi.amps(i, j);
    return st;
}

inline TwoParticleState sector_extract_two(const QubitState& st, int n_sites) {
    TwoParticleState psi(n_sites);
    const double root2 = std::sqrt(2.0);
    for (int i = 0; i < 2 * n_sites; ++i) {
        for (int j = i + 1; j < 2 * n_sites; ++j) {
            const cxd a = st.amps((std::int64_t(1) << i) | (std::int64_t(1) << j));
            psi.amps(i, j) = -a / root2;
            psi.amps(j, i) = a / root2;
        }
    }
    return psi;
}

/// Norm of the component of the state outside the Hamming-weight-S sector.
inline double sector_leakage(const QubitState& st, int weight) {
    double acc = 0.0;
    for (std::int64_t idx = 0; idx < st.dim(); ++idx)
        if (std::popcount(static_cast<std::uint64_t>(idx)) != weight)
            acc += std::norm(st.amps(idx));
    return std::sqrt(acc);
}

// ---- Vacuum theorem --------------------------------------------------------

struct VacuumCheck {
    double annihilation_residual = 0.0; // max_n || phi_n |Omega> ||
    int kernel_dim = 0;                 // dimension of the joint kernel of all phi_n
    double creation_identity_residual = 0.0; // max_n || phi_n^dag|O> - sigma_n^+|O> ||
};

/// Verifies that the all-down product state is the unique joint vacuum.
inline VacuumCheck vacuum_theorem_check(int n_q) {
    if (n_q < 1 || n_q > 12) throw std::invalid_argument("vacuum_theorem_check: need 1..12 qubits");
    const std::int64_t dim = std::int64_t(1) << n_q;
    QubitState vac = QubitState::vacuum(n_q);
    VacuumCheck out;

    Eigen::MatrixXcd stacked(n_q * dim, dim);
    for (int j = 0; j < n_q; ++j) {
        PauliOperator phi = jw_fermion(j, false, n_q);
        Eigen::MatrixXcd d = dense(phi, n_q);
        stacked.middleRows(j * dim, dim) = d;
        out.annihilation_residual =
            std::max(out.annihilation_residual, (d * vac.amps).norm());

        QubitState created = apply(jw_fermion(j, true, n_q), vac);
        QubitState raised = apply(sigma_plus_op(j), vac);
        out.creation_identity_residual = std::max(
            out.creation_identity_residual, (created.amps - raised.amps).norm());
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
    const auto& sv = svd.singularValues();
    const double tol = 1e-10 * sv(0);
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < tol) ++out.kernel_dim;
    return out;
}

// ---- Spin-model form of the emergent Hamiltonian ---------------------------

/// The emergent Hamiltonian psi^dag HH psi on an open chain of n_q = 2N qubits,
/// written in spin language:
///   H = sum_j (-1)^j (i hbar c_causal zeta / 2a) sigma^+_j sigma^3_{j-1} sigma^-_{j-2} + h.c.
///     + hbar omega sum_m (sigma^+_{2m} sigma^-_{2m+1} + h.c.).
/// The staggered sign and the 1/2 come from the sigma^3 structure and the
/// symmetric finite difference inside HH.
inline Eigen::MatrixXcd spin_model_h(const AutomatonParams& params, int n_q) {
    if (n_q < 4 || n_q % 2 != 0)
        throw std::invalid_argument("spin_model_h: need an even register of at least 4 qubits");
    const double hbar = params.units.hbar;
    const double hop = hbar * params.units.causal_speed() * params.zeta() / (2.0 * params.units.a);
    const double mass = hbar * params.omega();

    PauliOperator h = PauliOperator::zero();
    for (int j = 2; j < n_q; ++j) {
        const cxd coeff = cxd(0.0, hop) * ((j % 2 == 0) ? 1.0 : -1.0);
        PauliOperator term = coeff * (sigma_plus_op(j) * sigma_z_op(j - 1) * sigma_minus_op(j - 2));
        h += term + term.dagger();
    }
    for (int m = 0; 2 * m + 1 < n_q; ++m) {
        PauliOperator term = cxd(mass) * (sigma_plus_op(2 * m) * sigma_minus_op(2 * m + 1));
        h += term + term.dagger();
    }
    h.simplify();
    return dense(h, n_q);
}

/// Dense JW image of psi^dag HH psi on the same open chain, for comparison.
/// Built symbolically in the Pauli algebra, then materialized once.
inline Eigen::MatrixXcd spin_model_from_fields(const AutomatonParams& params, int n_q) {
    AutomatonParams open = params;
    open.n_sites = n_q / 2;
    open.boundary = Boundary::Open;
    Eigen::MatrixXcd hh = emergent_h(open).dense();
    PauliOperator h = PauliOperator::zero();
    for (int j = 0; j < n_q; ++j)
        for (int k = 0; k < n_q; ++k)
            if (std::abs(hh(j, k)) > 1e-15)
                h += hh(j, k) * (jw_fermion(j, true, n_q) * jw_fermion(k, false, n_q));
    h.simplify();
    return dense(h, n_q);
}

} // namespace qca

#pragma once

#include "qca/jordan_wigner.hpp"

namespace qca {

/// Majorana partners of mode p: phi^1 = phi^dag + phi, phi^2 = i(phi^dag - phi).
inline PauliOperator majorana_op(int p, int nu, int n_q) {
    PauliOperator creat = jw_fermion(p, true, n_q);
    PauliOperator annih = jw_fermion(p, false, n_q);
    if (nu == 1) return creat + annih;
    if (nu == 2) return cxd(0.0, 1.0) * (creat - annih);
    throw std::invalid_argument("majorana_op: nu must be 1 or 2");
}

/// P_{ij} = i phi^1_i phi^2_j; self-adjoint and squaring to the identity.
inline PauliOperator p_observable_1d(int i, int j, int n_q) {
    if (i == j) throw std::invalid_argument("p_observable_1d: indices must differ");
    PauliOperator p = cxd(0.0, 1.0) * (majorana_op(i, 1, n_q) * majorana_op(j, 2, n_q));
    p.simplify();
    return p;
}

struct MajoranaIdentityCheck {
    Eigen::MatrixXcd p;                 // dense P_{j+2l+1, j+1}
    double self_adjoint_residual = 0.0;
    double square_residual = 0.0;       // || P^2 - I ||_max
    double identity_residual = 0.0;     // four-operator identity
};

/// Dirac modes sit at even chain positions, Majorana auxiliaries at odd ones.
/// Verifies P^dag = P, P^2 = I and the four-operator identity
///   phi_{j+2l}^dag phi_j P_{j+2l+1, j+1}
///     = -i sigma_j^- sigma_{j+2l}^+ sigma^2_{j+1} sigma^1_{j+2l+1},
/// with the plain Pauli letters sigma^1 = X and sigma^2 = Y.
inline MajoranaIdentityCheck majorana_p_observables_1d(int j, int l, int n_q) {
    if (j % 2 != 0) throw std::invalid_argument("majorana_p_observables_1d: j must be even");
    if (l < 1 || j + 2 * l + 1 >= n_q)
        throw std::out_of_range("majorana_p_observables_1d: indices out of range");

    const int maj_hi = j + 2 * l + 1;
    const int maj_lo = j + 1;
    PauliOperator p = p_observable_1d(maj_hi, maj_lo, n_q);

    MajoranaIdentityCheck out;
    out.p = dense(p, n_q);
    out.self_adjoint_residual = (out.p - out.p.adjoint()).cwiseAbs().maxCoeff();
    out.square_residual =
        (out.p * out.p - Eigen::MatrixXcd::Identity(out.p.rows(), out.p.cols()))
            .cwiseAbs()
            .maxCoeff();

    PauliOperator lhs = jw_fermion(j + 2 * l, true, n_q) * jw_fermion(j, false, n_q) * p;
    PauliOperator rhs = cxd(0.0, -1.0) * (sigma_minus_op(j) * sigma_plus_op(j + 2 * l) *
                                          sigma_y_op(maj_lo) * sigma_x_op(maj_hi));
    out.identity_residual = (dense(lhs, n_q) - dense(rhs, n_q)).cwiseAbs().maxCoeff();
    return out;
}

} // namespace qca

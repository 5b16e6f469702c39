#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "qca/majorana.hpp"

namespace qca {

struct Vec2i {
    int x = 0;
    int y = 0;
    bool operator==(const Vec2i&) const = default;
};

/// Finite patch of the square lattice. Each site carries a Dirac fermion
/// (sigma qubit) and an auxiliary fermion (tau qubit); the faithful underlying
/// representation is a single JW chain over all 2*S modes in row-major site
/// order, sigma before tau at each site.
struct Lattice2D {
    int width = 0;
    int height = 0;

    Lattice2D(int w, int h) : width(w), height(h) {
        if (w < 1 || h < 1) throw std::invalid_argument("Lattice2D: degenerate size");
        if (w * h > 7)
            throw std::invalid_argument("Lattice2D: dense-oracle guard allows at most 7 sites");
    }

    int n_sites() const { return width * height; }
    int n_qubits() const { return 2 * n_sites(); }
    bool contains(Vec2i p) const {
        return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height;
    }
    int site_index(Vec2i p) const { return p.y * width + p.x; }
    Vec2i site_at(int idx) const { return {idx % width, idx / width}; }
    int sigma_qubit(Vec2i p) const { return 2 * site_index(p); }
    int tau_qubit(Vec2i p) const { return 2 * site_index(p) + 1; }
};

/// Half-plane step function: 0 when k points into the upper half-plane
/// (including the positive x-axis), pi otherwise. k = 0 is rejected; the
/// coincident-site case is handled by the caller (alpha_n^(n) = 0).
inline double step_phase(Vec2i k) {
    if (k.x == 0 && k.y == 0) throw std::invalid_argument("step_phase: zero vector");
    const bool upper = (k.y > 0) || (k.y == 0 && k.x > 0);
    return upper ? 0.0 : M_PI;
}

/// alpha_m^(n): the phase a fermion at site m picks up when crossing the
/// phase factor anchored at n. Antisymmetric mod pi: alpha_m^(n) = alpha_n^(m) + pi.
inline double alpha_phase(Vec2i m, Vec2i n) {
    if (m == n) return 0.0;
    return step_phase({m.x - n.x, m.y - n.y});
}

/// Phi(n) = exp[i sum_m (phi^dag phi + theta^dag theta)_m alpha_m^(n)]:
/// a product of Z letters on both qubits of every site strictly below the
/// horizontal axis through n, and of sites left of n on its own row.
/// Self-adjoint and squaring to the identity by construction.
inline PauliString phase_factor_2d(Vec2i n, const Lattice2D& lat) {
    if (!lat.contains(n)) throw std::out_of_range("phase_factor_2d: site outside lattice");
    PauliString out;
    for (int idx = 0; idx < lat.n_sites(); ++idx) {
        const Vec2i m = lat.site_at(idx);
        if (alpha_phase(m, n) != 0.0) {
            out.letters.emplace(lat.sigma_qubit(m), Pauli::Z);
            out.letters.emplace(lat.tau_qubit(m), Pauli::Z);
        }
    }
    return out;
}

inline PauliOperator dirac_fermion_2d(Vec2i n, const Lattice2D& lat, bool dagger) {
    return jw_fermion(lat.sigma_qubit(n), dagger, lat.n_qubits());
}
inline PauliOperator aux_fermion_2d(Vec2i n, const Lattice2D& lat, bool dagger) {
    return jw_fermion(lat.tau_qubit(n), dagger, lat.n_qubits());
}

struct DressedSite {
    PauliOperator sigma_plus; // phi_n^dag Phi(n)
    PauliOperator tau_plus;   // theta_n^dag Phi(n)
};

/// Dressed one-site raising operators. Dressed sigma operators at different
/// sites commute (that is the point of the construction).
inline DressedSite dressed_operators_2d(Vec2i n, const Lattice2D& lat) {
    PauliOperator phase{phase_factor_2d(n, lat)};
    DressedSite out;
    out.sigma_plus = dirac_fermion_2d(n, lat, true) * phase;
    out.tau_plus = aux_fermion_2d(n, lat, true) * phase;
    return out;
}

/// Majorana partners of the auxiliary fermion at site n.
inline PauliOperator aux_majorana_2d(Vec2i n, int nu, const Lattice2D& lat) {
    return majorana_op(lat.tau_qubit(n), nu, lat.n_qubits());
}

/// P_{mn} = i theta^1_m theta^2_n over auxiliary Majoranas.
inline PauliOperator p_observable_2d(Vec2i m, Vec2i n, const Lattice2D& lat) {
    if (m == n) throw std::invalid_argument("p_observable_2d: sites must differ");
    PauliOperator p = cxd(0.0, 1.0) * (aux_majorana_2d(m, 1, lat) * aux_majorana_2d(n, 2, lat));
    p.simplify();
    return p;
}

struct LinkInstance {
    Vec2i from;
    Vec2i to;
};

struct OrientedLinks {
    bool accepted = false;
    std::string reason;                // on rejection
    std::vector<Vec2i> directions;     // canonically oriented link vectors
    std::vector<LinkInstance> instances; // all in-lattice links
    double max_commutator_norm = 0.0;
};

/// Orient the link set into the upper half-plane, drop +-l duplicates, reject
/// distinct parallel directions, and verify that the family {P_{n, n+l}}
/// over all in-lattice instances is mutually commuting. Families that fail
/// the commutation check (any two links sharing a source or a target) are
/// rejected with a diagnostic rather than silently accepted.
inline OrientedLinks oriented_links(const Lattice2D& lat, const std::vector<Vec2i>& link_set) {
    OrientedLinks out;
    if (link_set.empty()) {
        out.reason = "empty link set";
        return out;
    }
    for (Vec2i l : link_set) {
        if (l.x == 0 && l.y == 0) {
            out.reason = "zero link vector";
            return out;
        }
        Vec2i oriented = (step_phase(l) == 0.0) ? l : Vec2i{-l.x, -l.y};
        if (std::find(out.directions.begin(), out.directions.end(), oriented) ==
            out.directions.end())
            out.directions.push_back(oriented);
    }
    for (std::size_t i = 0; i < out.directions.size(); ++i) {
        for (std::size_t j = i + 1; j < out.directions.size(); ++j) {
            const Vec2i a = out.directions[i], b = out.directions[j];
            if (a.x * b.y - a.y * b.x == 0) {
                out.reason = "distinct parallel link vectors";
                return out;
            }
        }
    }
    for (int idx = 0; idx < lat.n_sites(); ++idx) {
        const Vec2i n = lat.site_at(idx);
        for (Vec2i l : out.directions) {
            const Vec2i m{n.x + l.x, n.y + l.y};
            if (lat.contains(m)) out.instances.push_back({n, m});
        }
    }
    if (out.instances.empty()) {
        out.reason = "no link fits inside the lattice";
        return out;
    }
    for (std::size_t i = 0; i < out.instances.size(); ++i) {
        PauliOperator pi = p_observable_2d(out.instances[i].from, out.instances[i].to, lat);
        for (std::size_t j = i + 1; j < out.instances.size(); ++j) {
            PauliOperator pj = p_observable_2d(out.instances[j].from, out.instances[j].to, lat);
            out.max_commutator_norm =
                std::max(out.max_commutator_norm, commutator(pi, pj).one_norm());
        }
    }
    if (out.max_commutator_norm > 1e-12) {
        out.reason = "link observables do not commute (links share a source or target site)";
        return out;
    }
    out.accepted = true;
    return out;
}

struct JointVacuum {
    QubitState state;
    std::vector<int> eigenvalues;   // per link instance, +-1
    std::vector<double> residuals;  // ||(P - p I)|Omega>|| per link
    double sigma_trace_distance = 0.0; // sigma-reduced state vs all-down projector
    double tau_max_entropy = 0.0;      // max bipartite entropy over tau cuts, nats
};

namespace detail {

inline double entanglement_entropy(const Eigen::VectorXcd& amps, int n_total,
                                   std::uint64_t subset_mask) {
    const int n_a = std::popcount(subset_mask);
    const int n_b = n_total - n_a;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(std::int64_t(1) << n_a, std::int64_t(1) << n_b);
    for (std::int64_t idx = 0; idx < amps.size(); ++idx) {
        std::int64_t ia = 0, ib = 0;
        int pa = 0, pb = 0;
        for (int q = 0; q < n_total; ++q) {
            const bool bit = (idx >> q) & 1;
            if ((subset_mask >> q) & 1) {
                ia |= std::int64_t(bit) << pa++;
            } else {
                ib |= std::int64_t(bit) << pb++;
            }
        }
        m(ia, ib) = amps(idx);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double s = 0.0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        const double p = svd.singularValues()(i) * svd.singularValues()(i);
        if (p > 1e-15) s -= p * std::log(p);
    }
    return s;
}

} // namespace detail

/// Simultaneous eigenvector of the commuting link observables over the
/// sigma-vacuum slice (all sigma qubits down). Deterministic construction:
/// start from the all-down basis state and greedily project by eigenvalue
/// branch of larger overlap (ties toward +1), recording the signs.
inline JointVacuum joint_vacuum_2d(const Lattice2D& lat, const OrientedLinks& links) {
    if (!links.accepted)
        throw std::invalid_argument("joint_vacuum_2d: link set was not accepted");
    const int n_q = lat.n_qubits();
    JointVacuum out;
    out.state = QubitState::vacuum(n_q);

    for (const LinkInstance& link : links.instances) {
        PauliOperator p = p_observable_2d(link.from, link.to, lat);
        QubitState pv = apply(p, out.state);
        QubitState plus(n_q), minus(n_q);
        plus.amps = 0.5 * (out.state.amps + pv.amps);
        minus.amps = 0.5 * (out.state.amps - pv.amps);
        const int sign = (minus.norm() > plus.norm() + 1e-12) ? -1 : +1;
        out.state = (sign > 0) ? plus : minus;
        out.state.normalize();
        out.eigenvalues.push_back(sign);
    }
    for (std::size_t i = 0; i < links.instances.size(); ++i) {
        PauliOperator p = p_observable_2d(links.instances[i].from, links.instances[i].to, lat);
        QubitState pv = apply(p, out.state);
        out.residuals.push_back(
            (pv.amps - static_cast<double>(out.eigenvalues[i]) * out.state.amps).norm());
    }

    // sigma-reduced density matrix against the all-down projector.
    const int s_sites = lat.n_sites();
    const std::int64_t dim_sigma = std::int64_t(1) << s_sites;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_sigma, dim_sigma);
    Eigen::VectorXcd tau_amps = Eigen::VectorXcd::Zero(std::int64_t(1) << s_sites);
    for (std::int64_t idx = 0; idx < out.state.dim(); ++idx) {
        // split interleaved qubits: even positions sigma, odd tau
        std::int64_t is = 0, it = 0;
        for (int k = 0; k < s_sites; ++k) {
            is |= ((idx >> (2 * k)) & 1) << k;
            it |= ((idx >> (2 * k + 1)) & 1) << k;
        }
        if (is == 0) tau_amps(it) = out.state.amps(idx);
    }
    for (std::int64_t idx1 = 0; idx1 < out.state.dim(); ++idx1) {
        if (out.state.amps(idx1) == cxd(0.0, 0.0)) continue;
        for (std::int64_t idx2 = 0; idx2 < out.state.dim(); ++idx2) {
            if (out.state.amps(idx2) == cxd(0.0, 0.0)) continue;
            std::int64_t s1 = 0, t1 = 0, s2 = 0, t2 = 0;
            for (int k = 0; k < s_sites; ++k) {
                s1 |= ((idx1 >> (2 * k)) & 1) << k;
                t1 |= ((idx1 >> (2 * k + 1)) & 1) << k;
                s2 |= ((idx2 >> (2 * k)) & 1) << k;
                t2 |= ((idx2 >> (2 * k + 1)) & 1) << k;
            }
            if (t1 == t2) rho(s1, s2) += out.state.amps(idx1) * std::conj(out.state.amps(idx2));
        }
    }
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(dim_sigma, dim_sigma);
    target(0, 0) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho - target);
    out.sigma_trace_distance = 0.5 * es.eigenvalues().cwiseAbs().sum();

    // Entanglement of the tau sector over every nontrivial bipartition.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << s_sites); ++mask)
        out.tau_max_entropy = std::max(
            out.tau_max_entropy, detail::entanglement_entropy(tau_amps, s_sites, mask));
    return out;
}

struct LocalityIdentity2D {
    double operator_identity_residual = 0.0; // phi_n^dag phi_m P_nm = -i s+ s- t1 t2
    double on_vacuum_residual = 0.0;
    int sign = 0; // the +- in the on-vacuum identity; equals the recorded eigenvalue
};

/// The hopping localization identity on an oriented link. The exact operator
/// identity phi_n^dag phi_m P_{nm} = -i sigma_n^+ sigma_m^- tau_n^1 tau_m^2
/// holds with tau^1 = tau^+ + tau^-, tau^2 = i(tau^+ - tau^-). Since
/// hop = (hop P) P, on the joint vacuum the hopping term equals the recorded
/// P eigenvalue times the localized form -i(s_n^+ s_m^- - s_m^+ s_n^-) t1 t2.
inline LocalityIdentity2D locality_identity_2d(Vec2i n, Vec2i l, const Lattice2D& lat,
                                               const OrientedLinks& links,
                                               const JointVacuum& vac) {
    const Vec2i m{n.x + l.x, n.y + l.y};
    int link_idx = -1;
    for (std::size_t i = 0; i < links.instances.size(); ++i)
        if (links.instances[i].from == n && links.instances[i].to == m)
            link_idx = static_cast<int>(i);
    if (link_idx < 0)
        throw std::invalid_argument("locality_identity_2d: sites not joined by an oriented link");

    DressedSite dn = dressed_operators_2d(n, lat);
    DressedSite dm = dressed_operators_2d(m, lat);
    PauliOperator tau1_n = dn.tau_plus + dn.tau_plus.dagger();
    PauliOperator tau2_m = cxd(0.0, 1.0) * (dm.tau_plus - dm.tau_plus.dagger());
    PauliOperator p = p_observable_2d(n, m, lat);

    PauliOperator lhs = dirac_fermion_2d(n, lat, true) * dirac_fermion_2d(m, lat, false) * p;
    PauliOperator rhs =
        cxd(0.0, -1.0) * (dn.sigma_plus * dm.sigma_plus.dagger() * tau1_n * tau2_m);
    LocalityIdentity2D out;
    out.operator_identity_residual = (lhs - rhs).one_norm();

    // On-vacuum form: (phi_n^dag phi_m + phi_m^dag phi_n)|O> =
    //   sign * [-i(sigma_n^+ sigma_m^- - sigma_m^+ sigma_n^-) tau_n^1 tau_m^2]|O>.
    out.sign = vac.eigenvalues[link_idx];
    PauliOperator hop = dirac_fermion_2d(n, lat, true) * dirac_fermion_2d(m, lat, false) +
                        dirac_fermion_2d(m, lat, true) * dirac_fermion_2d(n, lat, false);
    PauliOperator local =
        cxd(0.0, -1.0) * ((dn.sigma_plus * dm.sigma_plus.dagger() -
                           dm.sigma_plus * dn.sigma_plus.dagger()) *
                          tau1_n * tau2_m);
    QubitState lhs_v = apply(hop, vac.state);
    QubitState rhs_v = apply(local, vac.state);
    out.on_vacuum_residual =
        (lhs_v.amps - static_cast<double>(out.sign) * rhs_v.amps).norm();
    return out;
}

} // namespace qca

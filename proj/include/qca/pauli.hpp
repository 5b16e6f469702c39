#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qca/qubit_state.hpp"

namespace qca {

using cxd = std::complex<double>;

enum class Pauli : int { X = 1, Y = 2, Z = 3 };

/// A scalar coefficient times a sparse product of single-qubit Pauli letters.
/// The empty map is the identity. Qubit convention: bit 1 = |up>, bit 0 =
/// |down>; Z|up> = +|up>, Y|up> = i|down>, Y|down> = -i|up>.
struct PauliString {
    cxd coeff{1.0, 0.0};
    std::map<int, Pauli> letters;

    PauliString() = default;
    explicit PauliString(cxd c) : coeff(c) {}
    PauliString(cxd c, std::map<int, Pauli> l) : coeff(c), letters(std::move(l)) {}

    static PauliString identity() { return PauliString(); }
    static PauliString single(cxd c, int qubit, Pauli p) {
        return PauliString(c, {{qubit, p}});
    }

    PauliString dagger() const { return PauliString(std::conj(coeff), letters); }

    int max_qubit() const { return letters.empty() ? -1 : letters.rbegin()->first; }
};

namespace detail {

// Product of two single-qubit letters: (phase, result letter or 0 for identity).
inline std::pair<cxd, int> letter_mul(Pauli a, Pauli b) {
    const int ia = static_cast<int>(a), ib = static_cast<int>(b);
    if (ia == ib) return {cxd(1.0, 0.0), 0};
    // X Y = i Z and cyclic; reversed order flips the sign.
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    const int ic = third[ia][ib];
    const bool cyclic = (ib - ia + 3) % 3 == 1; // XY, YZ, ZX
    return {cyclic ? cxd(0.0, 1.0) : cxd(0.0, -1.0), ic};
}

} // namespace detail

inline PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    PauliString out;
    out.coeff = a.coeff * b.coeff;
    auto ia = a.letters.begin();
    auto ib = b.letters.begin();
    while (ia != a.letters.end() || ib != b.letters.end()) {
        if (ib == b.letters.end() || (ia != a.letters.end() && ia->first < ib->first)) {
            out.letters.emplace(ia->first, ia->second);
            ++ia;
        } else if (ia == a.letters.end() || ib->first < ia->first) {
            out.letters.emplace(ib->first, ib->second);
            ++ib;
        } else {
            auto [phase, letter] = detail::letter_mul(ia->second, ib->second);
            out.coeff *= phase;
            if (letter != 0) out.letters.emplace(ia->first, static_cast<Pauli>(letter));
            ++ia;
            ++ib;
        }
    }
    return out;
}

/// Apply the string to a dense state (accumulating into out).
inline void pauli_accumulate(const PauliString& str, const QubitState& in, QubitState& out) {
    if (str.max_qubit() >= in.n_qubits)
        throw std::invalid_argument("pauli_accumulate: letter outside the register");
    std::uint64_t flip = 0;
    for (auto& [q, p] : str.letters)
        if (p != Pauli::Z) flip |= std::uint64_t(1) << q;
    const std::int64_t dim = in.dim();
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        const cxd amp = in.amps(idx);
        if (amp == cxd(0.0, 0.0)) continue;
        cxd factor = str.coeff;
        for (auto& [q, p] : str.letters) {
            const bool up = (idx >> q) & 1;
            switch (p) {
                case Pauli::X: break;
                case Pauli::Y: factor *= up ? cxd(0.0, 1.0) : cxd(0.0, -1.0); break;
                case Pauli::Z: factor *= up ? 1.0 : -1.0; break;
            }
        }
        out.amps(static_cast<std::int64_t>(idx ^ flip)) += factor * amp;
    }
}

/// A sum of Pauli strings. Kept canonical (sorted unique letter maps) by
/// simplify(); small enough everywhere in this project that the quadratic-ish
/// bookkeeping never matters.
struct PauliOperator {
    std::vector<PauliString> terms;

    PauliOperator() = default;
    PauliOperator(const PauliString& s) : terms{s} {}

    static PauliOperator zero() { return PauliOperator(); }
    static PauliOperator identity(cxd c = 1.0) { return PauliOperator(PauliString(c)); }

    PauliOperator& operator+=(const PauliOperator& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    PauliOperator& operator-=(const PauliOperator& o) {
        for (const auto& t : o.terms) {
            PauliString neg = t;
            neg.coeff = -neg.coeff;
            terms.push_back(neg);
        }
        return *this;
    }
    PauliOperator& operator*=(cxd c) {
        for (auto& t : terms) t.coeff *= c;
        return *this;
    }

    PauliOperator dagger() const {
        PauliOperator out;
        out.terms.reserve(terms.size());
        for (const auto& t : terms) out.terms.push_back(t.dagger());
        return out;
    }

    void simplify(double drop_tol = 1e-15) {
        std::map<std::map<int, Pauli>, cxd> acc;
        for (const auto& t : terms) acc[t.letters] += t.coeff;
        terms.clear();
        for (auto& [letters, c] : acc)
            if (std::abs(c) > drop_tol) terms.push_back(PauliString(c, letters));
    }

    /// Sum of |coeff| after canonicalization; zero iff the operator vanishes.
    double one_norm() const {
        PauliOperator copy = *this;
        copy.simplify(0.0);
        double acc = 0.0;
        for (const auto& t : copy.terms) acc += std::abs(t.coeff);
        return acc;
    }

    int max_qubit() const {
        int m = -1;
        for (const auto& t : terms) m = std::max(m, t.max_qubit());
        return m;
    }
};

inline PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
inline PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
inline PauliOperator operator*(cxd c, PauliOperator a) { return a *= c; }

inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    PauliOperator out;
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) out.terms.push_back(pauli_mul(ta, tb));
    out.simplify();
    return out;
}

inline PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
    return a * b - b * a;
}
inline PauliOperator anticommutator(const PauliOperator& a, const PauliOperator& b) {
    return a * b + b * a;
}

inline QubitState apply(const PauliOperator& op, const QubitState& in) {
    QubitState out(in.n_qubits);
    for (const auto& t : op.terms) pauli_accumulate(t, in, out);
    return out;
}

inline Eigen::MatrixXcd dense(const PauliOperator& op, int n_qubits) {
    if (op.max_qubit() >= n_qubits)
        throw std::invalid_argument("dense: operator letter outside the register");
    const std::int64_t dim = std::int64_t(1) << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        QubitState e = QubitState::basis(n_qubits, static_cast<std::uint64_t>(col));
        QubitState out = apply(op, e);
        m.col(col) = out.amps;
    }
    return m;
}

// Single-qubit building blocks.
inline PauliOperator sigma_x_op(int q) { return PauliOperator(PauliString::single(1.0, q, Pauli::X)); }
inline PauliOperator sigma_y_op(int q) { return PauliOperator(PauliString::single(1.0, q, Pauli::Y)); }
inline PauliOperator sigma_z_op(int q) { return PauliOperator(PauliString::single(1.0, q, Pauli::Z)); }
/// sigma^+ = (X + iY)/2 raises |down> -> |up>.
inline PauliOperator sigma_plus_op(int q) {
    return PauliOperator(PauliString::single(0.5, q, Pauli::X)) +
           PauliOperator(PauliString::single(cxd(0.0, 0.5), q, Pauli::Y));
}
inline PauliOperator sigma_minus_op(int q) {
    return PauliOperator(PauliString::single(0.5, q, Pauli::X)) +
           PauliOperator(PauliString::single(cxd(0.0, -0.5), q, Pauli::Y));
}
/// The Majorana-paired second component i(sigma^+ - sigma^-) = -Y.
inline PauliOperator sigma_two_op(int q) {
    return PauliOperator(PauliString::single(-1.0, q, Pauli::Y));
}

} // namespace qca

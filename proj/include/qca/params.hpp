#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qca/units.hpp"

namespace qca {

enum class Boundary { Periodic, Open };

enum class Component : int { Plus = 0, Minus = 1 };

/// Flat mode index of (site, component): psi^+_n -> 2n, psi^-_n -> 2n+1.
inline int mode_index(int site, Component alpha, int n_sites) {
    if (site < 0 || site >= n_sites)
        throw std::out_of_range("mode_index: site out of range");
    return 2 * site + static_cast<int>(alpha);
}

inline int mode_site(int mode) { return mode / 2; }
inline Component mode_component(int mode) {
    return (mode % 2 == 0) ? Component::Plus : Component::Minus;
}

/// Mass coupling of the automaton. theta = 0 is the stationary (Planck-mass)
/// limit, theta = pi/2 the massless one.
struct AutomatonParams {
    double theta = 0.0;
    int n_sites = 0;
    Boundary boundary = Boundary::Periodic;
    UnitSystem units{};

    AutomatonParams() = default;
    AutomatonParams(double theta_, int n_sites_, Boundary boundary_ = Boundary::Periodic,
                    UnitSystem units_ = {})
        : theta(theta_), n_sites(n_sites_), boundary(boundary_), units(units_) {
        constexpr double half_pi = 1.5707963267948966;
        if (!(theta >= 0.0 && theta <= half_pi + 1e-12))
            throw std::invalid_argument("AutomatonParams: theta must lie in [0, pi/2]");
        if (n_sites <= 0)
            throw std::invalid_argument("AutomatonParams: n_sites must be positive");
    }

    double c() const { return std::cos(theta); }      // = m / planck_mass
    double s() const { return std::sin(theta); }      // = zeta, renormalized speed
    double zeta() const { return s(); }
    double mass() const { return c() * units.planck_mass(); }
    // Compton wavelength; infinite in the massless limit.
    double compton_wavelength() const {
        double cc = c();
        if (cc == 0.0) return std::numeric_limits<double>::infinity();
        return units.a / cc;
    }
    double omega() const { return units.causal_speed() / compton_wavelength(); }
};

struct Coupling {
    double theta;
    double c;
    double s;
};

/// Invert the mass ratio m / planck_mass into the automaton angle.
inline Coupling coupling_from_mass(double m_ratio) {
    if (!(m_ratio >= 0.0 && m_ratio <= 1.0))
        throw std::domain_error("coupling_from_mass: m_ratio must lie in [0, 1]");
    Coupling out;
    out.c = m_ratio;
    out.s = std::sqrt(1.0 - m_ratio * m_ratio);
    out.theta = std::acos(m_ratio);
    return out;
}

} // namespace qca

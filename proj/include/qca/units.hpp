#pragma once

#include <stdexcept>

namespace qca {

/// Physical unit constants of the automaton. Natural units a = tau = hbar = 1
/// by default, so every dynamical formula reduces to the pure numbers
/// c = cos(theta), s = sin(theta) and the momentum phase phi.
struct UnitSystem {
    double a = 1.0;    // lattice spacing
    double tau = 1.0;  // duration of one step
    double hbar = 1.0; // action quantum

    UnitSystem() = default;
    UnitSystem(double a_, double tau_, double hbar_) : a(a_), tau(tau_), hbar(hbar_) {
        if (a <= 0 || tau <= 0 || hbar <= 0)
            throw std::invalid_argument("UnitSystem: a, tau, hbar must be strictly positive");
    }

    // Maximal propagation speed of one step.
    double causal_speed() const { return a / tau; }
    // Mass at which information flow halts.
    double planck_mass() const { return hbar / (a * causal_speed()); }
};

} // namespace qca

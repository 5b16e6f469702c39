#include <catch2/catch_amalgamated.hpp>

#include "qca/params.hpp"
#include "qca/spinor_state.hpp"

using namespace qca;

TEST_CASE("unit system derived constants") {
    UnitSystem u;
    REQUIRE(u.causal_speed() == 1.0);
    REQUIRE(u.planck_mass() == 1.0);

    UnitSystem metric(2.0, 4.0, 3.0);
    REQUIRE(metric.causal_speed() == Catch::Approx(0.5));
    REQUIRE(metric.planck_mass() == Catch::Approx(3.0 / (2.0 * 0.5)));

    REQUIRE_THROWS_AS(UnitSystem(0.0, 1.0, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(UnitSystem(1.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("coupling from mass ratio") {
    Coupling massless = coupling_from_mass(0.0);
    REQUIRE(massless.c == 0.0);
    REQUIRE(massless.s == 1.0);
    REQUIRE(massless.theta == Catch::Approx(M_PI / 2));

    // Information flow halts entirely at the Planck mass.
    Coupling planck = coupling_from_mass(1.0);
    REQUIRE(planck.c == 1.0);
    REQUIRE(planck.s == 0.0);
    REQUIRE(planck.theta == 0.0);

    // theta = pi/8 sits at roughly 0.92 of the Planck mass.
    AutomatonParams p(M_PI / 8, 4);
    REQUIRE(p.c() == Catch::Approx(0.9238795325112867).margin(1e-15));

    REQUIRE_THROWS_AS(coupling_from_mass(-0.1), std::domain_error);
    REQUIRE_THROWS_AS(coupling_from_mass(1.1), std::domain_error);
}

TEST_CASE("coupling round trip recovers the mass ratio") {
    for (int i = 0; i <= 100; ++i) {
        const double ratio = i / 100.0;
        Coupling c = coupling_from_mass(ratio);
        REQUIRE(std::abs(std::cos(c.theta) - ratio) <= 1e-15);
        REQUIRE(std::abs(c.c * c.c + c.s * c.s - 1.0) <= 1e-15);
    }
}

TEST_CASE("mode index dictionary") {
    REQUIRE(mode_index(0, Component::Plus, 4) == 0);
    REQUIRE(mode_index(0, Component::Minus, 4) == 1);
    REQUIRE(mode_index(3, Component::Plus, 4) == 6);
    REQUIRE_THROWS_AS(mode_index(4, Component::Plus, 4), std::out_of_range);
    REQUIRE_THROWS_AS(mode_index(-1, Component::Minus, 4), std::out_of_range);
}

TEST_CASE("mode index is a bijection") {
    const int n = 64;
    std::vector<bool> seen(2 * n, false);
    for (int site = 0; site < n; ++site) {
        for (Component alpha : {Component::Plus, Component::Minus}) {
            const int j = mode_index(site, alpha, n);
            REQUIRE(!seen[j]);
            seen[j] = true;
            REQUIRE(mode_site(j) == site);
            REQUIRE(mode_component(j) == alpha);
        }
    }
}

TEST_CASE("automaton parameters") {
    AutomatonParams p(M_PI / 8, 16);
    REQUIRE(std::abs(p.c() * p.c() + p.s() * p.s() - 1.0) <= 1e-15);
    REQUIRE(p.mass() == Catch::Approx(std::cos(M_PI / 8)));
    REQUIRE(p.compton_wavelength() == Catch::Approx(1.0 / std::cos(M_PI / 8)));
    REQUIRE(p.omega() == Catch::Approx(std::cos(M_PI / 8)));

    AutomatonParams massless(M_PI / 2, 4);
    REQUIRE(std::isinf(massless.compton_wavelength()));
    REQUIRE(massless.omega() == 0.0);

    REQUIRE_THROWS_AS(AutomatonParams(-0.1, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(AutomatonParams(2.0, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(AutomatonParams(0.1, 0), std::invalid_argument);
}

TEST_CASE("spinor state basics") {
    SpinorState st = SpinorState::delta(8, 3, Component::Minus);
    REQUIRE(st.norm() == 1.0);
    REQUIRE(st.amps(7) == cxd(1.0, 0.0));
    REQUIRE(st.site_probability(3) == 1.0);

    st.amps *= 2.0;
    st.normalize();
    REQUIRE(st.norm() == Catch::Approx(1.0));

    SpinorState zero(4);
    REQUIRE_THROWS_AS(zero.normalize(), std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cardsim/inductance.hpp"
#include "neumann_oracle.hpp"

using namespace cardsim;

TEST_CASE("straight wire self-inductance matches the textbook formula") {
    const double l = 0.08, r = 56e-6;
    const double expected = kMu0 * l / (2.0 * M_PI) * (std::log(2.0 * l / r) - 0.75);
    CHECK(wire_self_inductance(l, r) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("self term agrees with the GMD-regularized Neumann integral") {
    using namespace cardsim::testing;
    const double l = 0.05, r = 56e-6;
    const double gmd2 = std::pow(r * std::exp(-0.25), 2.0);
    const double oracle = neumann_pair({0, 0, 0}, {l, 0, 0}, {0, 0, 0}, {l, 0, 0}, gmd2, 256);
    CHECK(wire_self_inductance(l, r) == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("parallel filament mutual is symmetric and sign-correct") {
    // Two equal filaments side by side.
    const double m = parallel_filament_mutual(0.05, 0.0, 0.05, 0.002);
    CHECK(m > 0.0);
    // Reversing the second filament flips nothing here (geometry term only);
    // directionality is applied by the caller. Offset symmetry:
    const double m_shift = parallel_filament_mutual(0.05, 0.01, 0.06, 0.002);
    const double m_shift_mirror = parallel_filament_mutual(0.05, -0.01, 0.04, 0.002);
    CHECK(m_shift == doctest::Approx(m_shift_mirror).epsilon(1e-12));
    // Mutual falls off with distance.
    CHECK(parallel_filament_mutual(0.05, 0.0, 0.05, 0.01) < m);
}

TEST_CASE("filament mutual matches the Neumann oracle") {
    using namespace cardsim::testing;
    const double l = 0.08, d = 0.003;
    const double oracle = neumann_pair({0, 0, 0}, {l, 0, 0}, {0.01, d, 0}, {0.06, d, 0}, 0.0, 256);
    CHECK(parallel_filament_mutual(l, 0.01, 0.06, d) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("perpendicular segments contribute nothing") {
    using namespace cardsim::testing;
    CHECK(neumann_pair({0, 0, 0}, {0.05, 0, 0}, {0.02, 0.001, 0}, {0.02, 0.04, 0}) == 0.0);
}

TEST_CASE("loop inductance matches the Neumann double-integral oracle within 5%") {
    using namespace cardsim::testing;
    const double outlines[][2] = {{80e-3, 34e-3}, {74e-3, 22e-3}, {80e-3, 49e-3}};
    for (const auto& wh : outlines) {
        for (int turns : {1, 2, 4, 5}) {
            AntennaGeometry g;
            g.width = wh[0];
            g.height = wh[1];
            g.turns = turns;
            CAPTURE(g.width);
            CAPTURE(g.height);
            CAPTURE(turns);
            const double fast = loop_inductance(g);
            const double oracle = neumann_loop_inductance(g);
            CHECK(std::abs(fast - oracle) / oracle < 0.05);
        }
    }
}

TEST_CASE("inductance grows superlinearly with turns") {
    AntennaGeometry g;
    g.width = 80e-3;
    g.height = 34e-3;
    g.turns = 1;
    const double l1 = loop_inductance(g);
    g.turns = 4;
    const double l4 = loop_inductance(g);
    CHECK(l4 > 4.0 * l1);   // mutual coupling adds to the series sum
    CHECK(l4 < 16.0 * l1);  // but the turns are not perfectly coupled
}

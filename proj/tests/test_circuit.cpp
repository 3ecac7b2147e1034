#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cardsim/circuit.hpp"

using namespace cardsim;
using cplx = std::complex<double>;

namespace {

// Independent impedance oracle: literal parallel/series combination written
// from scratch, no shared helpers with the production code.
cplx oracle_parallel(cplx a, cplx b) { return a * b / (a + b); }

cplx oracle_input_impedance(const EquivalentCircuit& c, double f) {
    const double w = 2.0 * M_PI * f;
    const cplx jwC_chip(0.0, w * c.C_chip);
    cplx load = oracle_parallel(cplx(c.R_chip, 0.0), 1.0 / jwC_chip);
    if (c.R_shunt) load = oracle_parallel(load, cplx(*c.R_shunt, 0.0));

    cplx gap(0.0, 0.0);
    if (c.C_bridge) {
        // Finger bridge: gap C, bridge C and bridge R all sit across the
        // same pair of points.
        cplx z = 1.0 / cplx(0.0, w * (*c.C_bridge + c.C_cut_total.value_or(0.0)));
        gap = c.R_series_extra > 0.0 ? oracle_parallel(z, cplx(c.R_series_extra, 0.0)) : z;
    } else {
        if (c.C_cut_total) gap += 1.0 / cplx(0.0, w * *c.C_cut_total);
        gap += cplx(c.R_series_extra, 0.0);
    }
    return cplx(c.R_ant, 0.0) + cplx(0.0, w * c.L) + gap + load;
}

EquivalentCircuit random_circuit(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    EquivalentCircuit c;
    c.L = 0.5e-6 + 4e-6 * u(rng);
    c.R_ant = 0.2 + 3.0 * u(rng);
    c.C_chip = 5e-12 + 100e-12 * u(rng);
    c.R_chip = 500.0 + 8000.0 * u(rng);
    if (u(rng) < 0.3) c.C_cut_total = 0.2e-12 + 3e-12 * u(rng);
    if (u(rng) < 0.3) {
        c.C_bridge = 20e-12 + 400e-12 * u(rng);
        c.R_series_extra = 1e3 + 1e5 * u(rng);
    } else if (u(rng) < 0.2) {
        c.R_series_extra = 0.01 + 0.2 * u(rng);
    }
    if (u(rng) < 0.2) c.R_shunt = 1e-3 + 10.0 * u(rng);
    return c;
}

}  // namespace

TEST_CASE("input impedance matches the algebraic oracle on random circuits") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> freq(1e6, 250e6);
    for (int i = 0; i < 50; ++i) {
        const EquivalentCircuit c = random_circuit(rng);
        for (int j = 0; j < 10; ++j) {
            const double f = freq(rng);
            const cplx got = input_impedance(c, f);
            const cplx want = oracle_input_impedance(c, f);
            CAPTURE(i);
            CAPTURE(f);
            CHECK(std::abs(got - want) / std::abs(want) < 1e-9);
        }
    }
}

TEST_CASE("closed-form resonance round-trips the calibration") {
    EquivalentCircuit c;
    c.L = 2.2e-6;
    c.C_chip = calibrate_chip_capacitance(c.L, 14.49e6);
    CHECK(resonant_frequency_closed_form(c) == doctest::Approx(14.49e6).epsilon(1e-12));
}

TEST_CASE("closed-form refuses shunted topologies") {
    EquivalentCircuit c;
    c.L = 2.2e-6;
    c.C_chip = 50e-12;
    c.R_shunt = 1e-3;
    CHECK_THROWS_AS(resonant_frequency_closed_form(c), UnsupportedTopologyError);
}

TEST_CASE("sweep-detected resonance agrees with closed form within 2%") {
    EquivalentCircuit c;
    c.L = 2.2e-6;
    for (double f0 : {13.56e6, 15.0e6, 18.0e6, 29.0e6}) {
        c.C_chip = calibrate_chip_capacitance(c.L, f0);
        ProbeSetup p;
        const auto sweep = s11_sweep(p, c, 5e6, 60e6, 2001);
        const auto detected = detect_resonance(sweep, 0.02);
        REQUIRE(detected.has_value());
        CAPTURE(f0);
        CHECK(std::abs(*detected - resonant_frequency_closed_form(c)) / f0 < 0.02);
    }
}

TEST_CASE("S11 magnitude never exceeds one (passive network)") {
    std::mt19937 rng(11);
    ProbeSetup p;
    for (int i = 0; i < 50; ++i) {
        const EquivalentCircuit c = random_circuit(rng);
        const auto sweep = s11_sweep(p, c, 1e6, 250e6, 501);
        for (const auto& pt : sweep.points) {
            CHECK(std::abs(pt.s11) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("bare probe baseline: zero coupling leaves nothing to detect") {
    EquivalentCircuit c;
    c.L = 2.2e-6;
    c.C_chip = calibrate_chip_capacitance(c.L, 15e6);
    ProbeSetup p;
    p.k = 0.0;
    const auto sweep = s11_sweep(p, c, 5e6, 60e6, 501);
    CHECK_FALSE(detect_resonance(sweep, 0.02).has_value());
}

TEST_CASE("coupled resonances match the quadratic-root oracle") {
    EquivalentCircuit c1, c2;
    c1.L = 2.2e-6;
    c1.C_chip = calibrate_chip_capacitance(c1.L, 14e6);
    c2.L = 1.1e-6;
    c2.C_chip = calibrate_chip_capacitance(c2.L, 16e6);
    for (double k : {0.05, 0.2, 0.5}) {
        const auto [lo, hi] = coupled_resonances(c1, c2, k);
        // Oracle: solve the characteristic polynomial numerically via the
        // standard quadratic formula in x = omega^2.
        const double a = (1.0 - k * k) * c1.L * c1.C_chip * c2.L * c2.C_chip;
        const double b = -(c1.L * c1.C_chip + c2.L * c2.C_chip);
        const double disc = std::sqrt(b * b - 4.0 * a);
        const double x1 = (-b - disc) / (2.0 * a);
        const double x2 = (-b + disc) / (2.0 * a);
        const double f_lo = std::sqrt(x1) / (2.0 * M_PI);
        const double f_hi = std::sqrt(x2) / (2.0 * M_PI);
        CAPTURE(k);
        CHECK(lo == doctest::Approx(f_lo).epsilon(1e-6));
        CHECK(hi == doctest::Approx(f_hi).epsilon(1e-6));
        CHECK(lo < hi);
    }
}

TEST_CASE("identical resonators split as f0/sqrt(1 +- k)") {
    EquivalentCircuit c;
    c.L = 2.0e-6;
    c.C_chip = calibrate_chip_capacitance(c.L, 13.56e6);
    const double k = 0.3;
    const auto [lo, hi] = coupled_resonances(c, c, k);
    CHECK(lo == doctest::Approx(13.56e6 / std::sqrt(1.0 + k)).epsilon(1e-9));
    CHECK(hi == doctest::Approx(13.56e6 / std::sqrt(1.0 - k)).epsilon(1e-9));
}

TEST_CASE("zero coupling degenerates to the individual resonances") {
    EquivalentCircuit c1, c2;
    c1.L = 2.2e-6;
    c1.C_chip = calibrate_chip_capacitance(c1.L, 14e6);
    c2.L = 0.15e-6;
    c2.C_chip = calibrate_chip_capacitance(c2.L, 13.56e6);
    const auto [lo, hi] = coupled_resonances(c1, c2, 0.0);
    CHECK(std::abs(lo - 13.56e6) / 13.56e6 < 1e-9);
    CHECK(std::abs(hi - 14e6) / 14e6 < 1e-9);
}

TEST_CASE("delivered power ratio is one for a retuned intact circuit") {
    EquivalentCircuit c;
    c.L = 2.2e-6;
    c.C_chip = calibrate_chip_capacitance(c.L, kOperatingFrequency);
    CHECK(delivered_power_ratio(c, kOperatingFrequency) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("detuning and shunting both reduce delivered power") {
    EquivalentCircuit tuned;
    tuned.L = 2.2e-6;
    tuned.C_chip = calibrate_chip_capacitance(tuned.L, kOperatingFrequency);

    EquivalentCircuit detuned = tuned;
    detuned.C_chip = calibrate_chip_capacitance(tuned.L, 40e6);
    CHECK(delivered_power_ratio(detuned, kOperatingFrequency) < 0.5);

    EquivalentCircuit shunted = tuned;
    shunted.R_shunt = 1e-3;
    CHECK(delivered_power_ratio(shunted, kOperatingFrequency) < 1e-6);
}

TEST_CASE("circuit validation rejects nonphysical values") {
    EquivalentCircuit c;
    c.L = -1.0;
    c.C_chip = 50e-12;
    CHECK_THROWS_AS(c.validate(), ModelError);
    ProbeSetup p;
    p.k = 1.5;
    CHECK_THROWS_AS(p.validate(), ModelError);
}

TEST_CASE("sweep csv format: header and 9-significant-digit columns") {
    EquivalentCircuit c;
    c.L = 2.2e-6;
    c.C_chip = calibrate_chip_capacitance(c.L, 15e6);
    ProbeSetup p;
    const auto sweep = s11_sweep(p, c, 10e6, 20e6, 11);
    const std::string csv = sweep_csv(sweep);
    CHECK(csv.rfind("freq_hz,s11_re,s11_im,s11_mag\n", 0) == 0);
    std::size_t rows = 0;
    for (char ch : csv) rows += ch == '\n';
    CHECK(rows == 12);
    CHECK(csv.find("10000000,") != std::string::npos);
}

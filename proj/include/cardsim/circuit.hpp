#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cardsim/errors.hpp"

namespace cardsim {

inline constexpr double kOperatingFrequency = 13.56e6;  // Hz

/// Lumped resonator: series loop (L, R_ant, optional gap element) terminated
/// by the chip load (R_chip parallel C_chip, optionally shunted).
///
/// Gap element semantics: C_cut_total is the series capacitance of the broken
/// loop. When C_bridge is present, R_series_extra acts as a bridging resistor
/// in parallel across the gap (finger contact); otherwise R_series_extra is a
/// plain series resistance (closed metal switch).
struct EquivalentCircuit {
    double L = 0.0;            // H
    double R_ant = 1.0;        // Ohm
    double C_chip = 0.0;       // F
    double R_chip = 4000.0;    // Ohm
    std::optional<double> C_cut_total;   // F; absent = uncut loop
    double R_series_extra = 0.0;         // Ohm
    std::optional<double> C_bridge;      // F
    std::optional<double> R_shunt;       // Ohm, across the chip terminals

    void validate() const;
};

/// Single-loop measurement probe inductively coupled to the card under test.
struct ProbeSetup {
    double L_probe = 1e-6;  // H
    double k = 0.1;         // coupling coefficient, 0 < k < 1
    double Z0 = 50.0;       // Ohm

    void validate() const;
};

struct SweepPoint {
    double freq = 0.0;               // Hz
    std::complex<double> s11{0, 0};
};

struct FrequencySweep {
    std::vector<SweepPoint> points;
    double f_start = 0.0;
    double f_stop = 0.0;
    int n_points = 0;
    ProbeSetup probe;  // setup the sweep was taken with (baseline reference)
};

/// Impedance of the chip load branch (R_chip || C_chip || R_shunt).
std::complex<double> chip_load_impedance(const EquivalentCircuit& c, double f);

/// Impedance of the gap element (zero for an intact loop).
std::complex<double> gap_impedance(const EquivalentCircuit& c, double f);

/// Series loop impedance seen by the induced EMF: R_ant + jwL + gap + load.
std::complex<double> input_impedance(const EquivalentCircuit& c, double f);

/// 1/(2*pi*sqrt(L*C_eff)). Refuses shunted topologies.
double resonant_frequency_closed_form(const EquivalentCircuit& c);

/// Chip capacitance that makes an inductance L resonate at f_measured.
double calibrate_chip_capacitance(double L, double f_measured);

/// Probe-coupled reflection sweep, frequencies linearly spaced inclusive.
FrequencySweep s11_sweep(const ProbeSetup& p, const EquivalentCircuit& c,
                         double f_start, double f_stop, int n_points);

/// S11 of the bare probe loop (card removed) at one frequency.
std::complex<double> bare_probe_s11(const ProbeSetup& p, double f);

/// Frequency of maximum deviation from the bare-probe baseline, if it
/// exceeds the noise floor.
std::optional<double> detect_resonance(const FrequencySweep& s, double noise_floor);

/// Eigen-frequencies (f_low, f_high) of two magnetically coupled LC
/// resonators, 0 <= k < 1.
std::pair<double, double> coupled_resonances(const EquivalentCircuit& c1,
                                             const EquivalentCircuit& c2, double k);

/// Power into R_chip relative to the intact circuit retuned to f_op, both
/// driven by a fixed-amplitude EMF in series with the loop.
double delivered_power_ratio(const EquivalentCircuit& c, double f_op);

/// CSV export: freq_hz,s11_re,s11_im,s11_mag at 9 significant digits.
std::string sweep_csv(const FrequencySweep& s);

}  // namespace cardsim

#include "cardsim/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace cardsim {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kJ{0.0, 1.0};

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw ModelError(std::string(name) + " must be positive");
    }
}

double power_into_chip(const EquivalentCircuit& c, double f) {
    // 1 V EMF in series with the loop; power dissipated in R_chip.
    const std::complex<double> z_total = input_impedance(c, f);
    const std::complex<double> i_loop = 1.0 / z_total;
    const std::complex<double> v_load = i_loop * chip_load_impedance(c, f);
    return std::norm(v_load) / c.R_chip;
}

}  // namespace

void EquivalentCircuit::validate() const {
    require_positive(L, "L");
    require_positive(C_chip, "C_chip");
    require_positive(R_chip, "R_chip");
    if (R_ant < 0.0) throw ModelError("R_ant must be non-negative");
    if (R_series_extra < 0.0) throw ModelError("R_series_extra must be non-negative");
    if (C_cut_total && !(*C_cut_total > 0.0)) throw ModelError("C_cut_total must be positive");
    if (C_bridge && !(*C_bridge > 0.0)) throw ModelError("C_bridge must be positive");
    if (R_shunt && !(*R_shunt > 0.0)) throw ModelError("R_shunt must be positive");
}

void ProbeSetup::validate() const {
    require_positive(L_probe, "L_probe");
    require_positive(Z0, "Z0");
    if (!(k >= 0.0) || !(k < 1.0)) {
        throw ModelError("coupling coefficient must satisfy 0 <= k < 1");
    }
}

std::complex<double> chip_load_impedance(const EquivalentCircuit& c, double f) {
    const double w = 2.0 * kPi * f;
    std::complex<double> y = 1.0 / c.R_chip + kJ * w * c.C_chip;
    if (c.R_shunt) y += 1.0 / *c.R_shunt;
    return 1.0 / y;
}

std::complex<double> gap_impedance(const EquivalentCircuit& c, double f) {
    const double w = 2.0 * kPi * f;
    std::complex<double> z{0.0, 0.0};
    std::complex<double> y{0.0, 0.0};
    if (c.C_cut_total) y += kJ * w * *c.C_cut_total;
    if (c.C_bridge) {
        y += kJ * w * *c.C_bridge;
        if (c.R_series_extra > 0.0) y += 1.0 / c.R_series_extra;
    } else {
        z += c.R_series_extra;
    }
    if (y != std::complex<double>{0.0, 0.0}) z += 1.0 / y;
    return z;
}

std::complex<double> input_impedance(const EquivalentCircuit& c, double f) {
    const double w = 2.0 * kPi * f;
    return c.R_ant + kJ * w * c.L + gap_impedance(c, f) + chip_load_impedance(c, f);
}

double resonant_frequency_closed_form(const EquivalentCircuit& c) {
    c.validate();
    if (c.R_shunt) {
        throw UnsupportedTopologyError(
            "closed-form resonance is undefined with a shunt across the terminals; "
            "use a sweep");
    }
    double c_eff = c.C_chip;
    double c_gap = 0.0;
    if (c.C_cut_total) c_gap += *c.C_cut_total;
    if (c.C_bridge) c_gap += *c.C_bridge;
    if (c_gap > 0.0) {
        c_eff = c_gap * c.C_chip / (c_gap + c.C_chip);
    }
    return 1.0 / (2.0 * kPi * std::sqrt(c.L * c_eff));
}

double calibrate_chip_capacitance(double L, double f_measured) {
    require_positive(L, "L");
    require_positive(f_measured, "f_measured");
    const double w = 2.0 * kPi * f_measured;
    return 1.0 / (w * w * L);
}

std::complex<double> bare_probe_s11(const ProbeSetup& p, double f) {
    const double w = 2.0 * kPi * f;
    const std::complex<double> z_in = kJ * w * p.L_probe;
    return (z_in - p.Z0) / (z_in + p.Z0);
}

FrequencySweep s11_sweep(const ProbeSetup& p, const EquivalentCircuit& c,
                         double f_start, double f_stop, int n_points) {
    p.validate();
    c.validate();
    if (!(f_start > 0.0) || !(f_start < f_stop) || n_points < 2) {
        throw ModelError("sweep requires 0 < f_start < f_stop and n_points >= 2");
    }
    FrequencySweep sweep;
    sweep.f_start = f_start;
    sweep.f_stop = f_stop;
    sweep.n_points = n_points;
    sweep.probe = p;
    sweep.points.reserve(static_cast<std::size_t>(n_points));
    const double m = p.k * std::sqrt(p.L_probe * c.L);
    for (int i = 0; i < n_points; ++i) {
        const double f = f_start + (f_stop - f_start) * i / (n_points - 1);
        const double w = 2.0 * kPi * f;
        const std::complex<double> z_card = input_impedance(c, f);
        const std::complex<double> z_in =
            kJ * w * p.L_probe + (w * m) * (w * m) / z_card;
        sweep.points.push_back({f, (z_in - p.Z0) / (z_in + p.Z0)});
    }
    return sweep;
}

std::optional<double> detect_resonance(const FrequencySweep& s, double noise_floor) {
    if (s.points.empty()) throw ModelError("sweep is empty");
    if (!(noise_floor > 0.0) || !(noise_floor < 1.0)) {
        throw ModelError("noise floor must lie in (0, 1)");
    }
    double best_dev = -1.0;
    double best_freq = 0.0;
    for (const SweepPoint& pt : s.points) {
        const double dev = std::abs(pt.s11 - bare_probe_s11(s.probe, pt.freq));
        if (dev > best_dev) {
            best_dev = dev;
            best_freq = pt.freq;
        }
    }
    if (best_dev > noise_floor) return best_freq;
    return std::nullopt;
}

std::pair<double, double> coupled_resonances(const EquivalentCircuit& c1,
                                             const EquivalentCircuit& c2, double k) {
    c1.validate();
    c2.validate();
    if (c1.C_cut_total || c2.C_cut_total || c1.R_shunt || c2.R_shunt) {
        throw UnsupportedTopologyError("coupled resonances require uncut, unshunted loops");
    }
    if (!(k >= 0.0) || !(k < 1.0)) throw ModelError("coupling must satisfy 0 <= k < 1");
    // Characteristic equation in x = w^2:
    //   (1-k^2) L1 C1 L2 C2 x^2 - (L1 C1 + L2 C2) x + 1 = 0
    const double p1 = c1.L * c1.C_chip;
    const double p2 = c2.L * c2.C_chip;
    const double a = (1.0 - k * k) * p1 * p2;
    const double b = -(p1 + p2);
    const double cq = 1.0;
    const double disc = std::sqrt(b * b - 4.0 * a * cq);
    // Stable quadratic roots.
    const double q = -0.5 * (b - disc);  // b < 0, so this is the large root path
    const double x_high = q / a;
    const double x_low = cq / q;
    const double f_low = std::sqrt(x_low) / (2.0 * kPi);
    const double f_high = std::sqrt(x_high) / (2.0 * kPi);
    return {f_low, f_high};
}

double delivered_power_ratio(const EquivalentCircuit& c, double f_op) {
    c.validate();
    require_positive(f_op, "f_op");
    EquivalentCircuit ref = c;
    ref.C_cut_total.reset();
    ref.C_bridge.reset();
    ref.R_shunt.reset();
    ref.R_series_extra = 0.0;
    ref.C_chip = calibrate_chip_capacitance(ref.L, f_op);
    return power_into_chip(c, f_op) / power_into_chip(ref, f_op);
}

std::string sweep_csv(const FrequencySweep& s) {
    std::string out = "freq_hz,s11_re,s11_im,s11_mag\n";
    char line[160];
    for (const SweepPoint& pt : s.points) {
        std::snprintf(line, sizeof(line), "%.9g,%.9g,%.9g,%.9g\n", pt.freq,
                      pt.s11.real(), pt.s11.imag(), std::abs(pt.s11));
        out += line;
    }
    return out;
}

}  // namespace cardsim

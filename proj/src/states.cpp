#include "cardsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cardsim {

ChipProfile mifare_classic_profile() { return {"mifare_classic", 0.01, false}; }
ChipProfile dual_interface_profile() { return {"dual_interface", 0.05, true}; }

ChipProfile chip_profile_by_name(const std::string& name) {
    if (name == "mifare_classic") return mifare_classic_profile();
    if (name == "dual_interface") return dual_interface_profile();
    throw ModelError("unknown chip profile: " + name);
}

ReaderClass standard_reader() { return {ReaderKind::standard_reader, 0.02, kOperatingFrequency}; }
ReaderClass smartphone_reader() { return {ReaderKind::smartphone, 0.02, kOperatingFrequency}; }
ReaderClass special_hardware_reader() {
    return {ReaderKind::special_hardware, 0.001, kOperatingFrequency};
}

ReaderClass reader_by_name(const std::string& name) {
    if (name == "standard_reader") return standard_reader();
    if (name == "smartphone") return smartphone_reader();
    if (name == "special_hardware") return special_hardware_reader();
    throw ModelError("unknown reader class: " + name);
}

EquivalentCircuit apply_state(const EquivalentCircuit& c, const PhysicalState& s,
                              int turns, const ModelDefaults& d) {
    if (s.cuts < 0) throw InvalidStateError("cut count must be non-negative");
    if (turns >= 0 && s.cuts > turns) {
        throw InvalidStateError("cannot cut more windings than the antenna has");
    }
    EquivalentCircuit out = c;

    // n cuts at one slit create n gaps in series.
    std::vector<double> gap_caps;
    if (s.cuts > 0) gap_caps.push_back(d.C_cut / s.cuts);
    switch (s.series_switch) {
        case SeriesSwitch::absent:
            break;
        case SeriesSwitch::open:
            gap_caps.push_back(d.C_switch_gap);
            break;
        case SeriesSwitch::closed_metal:
            out.R_series_extra += d.R_metal;
            break;
        case SeriesSwitch::finger_bridge:
            gap_caps.push_back(d.C_switch_gap);
            out.C_bridge = d.C_finger;
            out.R_series_extra += d.R_finger;
            break;
    }
    if (!gap_caps.empty()) {
        double inv = 0.0;
        for (double cap : gap_caps) inv += 1.0 / cap;
        out.C_cut_total = 1.0 / inv;
    }
    if (s.shunt_switch == ShuntSwitch::closed) out.R_shunt = d.R_shunt_closed;
    return out;
}

Readability readability(const EquivalentCircuit& c, const PhysicalState& s,
                        const ChipProfile& chip, const ReaderClass& reader,
                        int turns, const ModelDefaults& d) {
    const double threshold = std::max(chip.min_power_ratio, reader.min_power_ratio);

    if (s.module_antenna && reader.name == ReaderKind::special_hardware) {
        // The module keeps its own intact loop; card-antenna cuts and the
        // series switch sit in the (now irrelevant) booster loop. A shunt at
        // the chip terminals still kills the module path.
        EquivalentCircuit module;
        module.L = d.module_L;
        module.R_ant = d.module_R_ant;
        module.R_chip = c.R_chip;
        module.C_chip = calibrate_chip_capacitance(module.L, reader.f_op);
        PhysicalState module_state = s;
        module_state.cuts = 0;
        module_state.series_switch = SeriesSwitch::absent;
        const EquivalentCircuit effective = apply_state(module, module_state, -1, d);
        const double rho =
            d.module_coupling_efficiency * delivered_power_ratio(effective, reader.f_op);
        return rho >= threshold ? Readability::readable : Readability::unreadable;
    }

    // Fully severed loop: no closed turn remains, no current path.
    if (turns >= 0 && s.cuts >= turns && s.cuts > 0) return Readability::unreadable;

    const EquivalentCircuit effective = apply_state(c, s, turns, d);
    const double rho = delivered_power_ratio(effective, reader.f_op);
    return rho >= threshold ? Readability::readable : Readability::unreadable;
}

double calibrate_cut_capacitance(const EquivalentCircuit& c, double f_target) {
    c.validate();
    const double f0 = resonant_frequency_closed_form(c);
    if (!(f_target > f0)) {
        throw ModelError("cut calibration target must exceed the intact resonance");
    }
    // Series gap C_gap with C_chip: f_target = f0 * sqrt(C_chip/C_eff).
    const double c_eff = c.C_chip * (f0 / f_target) * (f0 / f_target);
    return 1.0 / (1.0 / c_eff - 1.0 / c.C_chip);
}

std::vector<CutProgressionRow> cut_progression(const EquivalentCircuit& c, int turns,
                                               const SweepConfig& cfg,
                                               const ModelDefaults& d) {
    if (turns < 1) throw InvalidStateError("cut progression requires at least one winding");
    std::vector<CutProgressionRow> rows;
    rows.reserve(static_cast<std::size_t>(turns) + 1);
    for (int cuts = 0; cuts <= turns; ++cuts) {
        PhysicalState s;
        s.cuts = cuts;
        const EquivalentCircuit effective = apply_state(c, s, turns, d);
        ProbeSetup probe = cfg.probe;
        if (cuts == turns) probe.k = 0.0;
        const FrequencySweep sweep =
            s11_sweep(probe, effective, cfg.f_start, cfg.f_stop, cfg.n_points);
        rows.push_back({cuts, detect_resonance(sweep, cfg.noise_floor)});
    }
    return rows;
}

std::string cut_progression_csv(const std::vector<CutProgressionRow>& rows) {
    std::string out = "cuts,f_detected_hz\n";
    char line[64];
    for (const CutProgressionRow& row : rows) {
        if (row.detected_f0) {
            std::snprintf(line, sizeof(line), "%d,%.9g\n", row.cuts, *row.detected_f0);
        } else {
            std::snprintf(line, sizeof(line), "%d,\n", row.cuts);
        }
        out += line;
    }
    return out;
}

std::string to_string(SeriesSwitch s) {
    switch (s) {
        case SeriesSwitch::absent: return "absent";
        case SeriesSwitch::open: return "open";
        case SeriesSwitch::closed_metal: return "closed_metal";
        case SeriesSwitch::finger_bridge: return "finger_bridge";
    }
    return "?";
}

std::string to_string(ShuntSwitch s) {
    switch (s) {
        case ShuntSwitch::absent: return "absent";
        case ShuntSwitch::open: return "open";
        case ShuntSwitch::closed: return "closed";
    }
    return "?";
}

std::string to_string(ReaderKind k) {
    switch (k) {
        case ReaderKind::standard_reader: return "standard_reader";
        case ReaderKind::smartphone: return "smartphone";
        case ReaderKind::special_hardware: return "special_hardware";
    }
    return "?";
}

std::string to_string(Readability r) {
    return r == Readability::readable ? "readable" : "unreadable";
}

}  // namespace cardsim

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardsim/circuit.hpp"

namespace cardsim {

enum class SeriesSwitch { absent, open, closed_metal, finger_bridge };
enum class ShuntSwitch { absent, open, closed };

/// Physical interventions applied to a card.
struct PhysicalState {
    int cuts = 0;
    SeriesSwitch series_switch = SeriesSwitch::absent;
    ShuntSwitch shunt_switch = ShuntSwitch::absent;
    bool module_antenna = false;       // coil-on-module: chip has its own tiny loop
    bool hardware_pin_enabled = true;  // dedicated switching input of the chip
};

/// Minimum delivered-power fraction a chip needs to start up.
struct ChipProfile {
    std::string name;
    double min_power_ratio = 0.0;
    bool dual_interface = false;
};

enum class ReaderKind { standard_reader, smartphone, special_hardware };

struct ReaderClass {
    ReaderKind name = ReaderKind::standard_reader;
    double min_power_ratio = 0.0;
    double f_op = kOperatingFrequency;
};

/// Model constants the physical interventions map onto. Calibrated so the
/// model reproduces the observed readability outcomes; not physics.
struct ModelDefaults {
    double C_cut = 1e-12;          // per-cut gap capacitance
    double C_switch_gap = 0.3e-12; // open series switch gap
    double R_metal = 0.05;         // closed metal bridge
    double R_finger = 50e3;        // finger bridge, resistive path
    double C_finger = 220e-12;     // finger bridge, capacitive path
    double R_shunt_closed = 1e-3;  // closed shunt switch
    double noise_floor = 0.02;
    // Coil-on-module: factory-tuned module resonator and its net coupling
    // penalty relative to a galvanic card antenna.
    double module_L = 150e-9;
    double module_R_ant = 0.2;
    double module_coupling_efficiency = 0.1;
};

ChipProfile mifare_classic_profile();
ChipProfile dual_interface_profile();
ChipProfile chip_profile_by_name(const std::string& name);

ReaderClass standard_reader();
ReaderClass smartphone_reader();
ReaderClass special_hardware_reader();
ReaderClass reader_by_name(const std::string& name);

/// Maps a physical state onto circuit elements. `turns` (when >= 0) bounds
/// the cut count.
EquivalentCircuit apply_state(const EquivalentCircuit& c, const PhysicalState& s,
                              int turns = -1, const ModelDefaults& d = {});

enum class Readability { readable, unreadable };

/// Power-threshold verdict for one reader class and chip profile. `turns`
/// (when >= 0) lets the model recognize a fully severed loop.
Readability readability(const EquivalentCircuit& c, const PhysicalState& s,
                        const ChipProfile& chip, const ReaderClass& reader,
                        int turns = -1, const ModelDefaults& d = {});

/// Gap capacitance that puts the 1-cut resonance at f_target.
double calibrate_cut_capacitance(const EquivalentCircuit& c, double f_target);

struct CutProgressionRow {
    int cuts = 0;
    std::optional<double> detected_f0;  // Hz
};

struct SweepConfig {
    ProbeSetup probe;
    double f_start = 10e6;
    double f_stop = 250e6;
    int n_points = 1001;
    double noise_floor = 0.02;
};

/// Applies cuts = 0..turns, sweeping and detecting the resonance each time.
/// A fully severed loop no longer encloses flux, so the probe decouples.
std::vector<CutProgressionRow> cut_progression(const EquivalentCircuit& c, int turns,
                                               const SweepConfig& cfg,
                                               const ModelDefaults& d = {});

/// CSV: cuts,f_detected_hz with an empty field when nothing was detected.
std::string cut_progression_csv(const std::vector<CutProgressionRow>& rows);

std::string to_string(SeriesSwitch s);
std::string to_string(ShuntSwitch s);
std::string to_string(ReaderKind k);
std::string to_string(Readability r);

}  // namespace cardsim

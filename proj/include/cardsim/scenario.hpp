#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cardsim/card.hpp"
#include "cardsim/catalog.hpp"
#include "cardsim/mgmt_applet.hpp"

namespace cardsim {

/// Partial physical-state update; absent fields keep their current value.
struct PhysicalDelta {
    std::optional<int> cuts;
    std::optional<SeriesSwitch> series_switch;
    std::optional<ShuntSwitch> shunt_switch;
    std::optional<bool> module_antenna;
    std::optional<bool> hardware_pin_enabled;
};

struct SetPhysicalStep { PhysicalDelta delta; };
struct PowerOnStep { Interface iface = Interface::contact; std::string reader = "standard_reader"; };
struct TransmitStep { Interface iface = Interface::contact; Bytes apdu; };
struct ExpectSwStep { std::uint16_t sw = 0; };
struct ExpectDataStep { Bytes data; };
struct ExpectNoResponseStep {};
struct ExpectReadabilityStep { std::string reader = "standard_reader"; Readability outcome = Readability::readable; };

using Step = std::variant<SetPhysicalStep, PowerOnStep, TransmitStep, ExpectSwStep,
                          ExpectDataStep, ExpectNoResponseStep, ExpectReadabilityStep>;

struct ScenarioApplet {
    Bytes aid;
    std::string type = "demo";  // "demo" or "mgmt"
    bool contactless_enabled = true;
};

struct ScenarioCardConfig {
    std::optional<std::string> catalog_id;
    std::optional<AntennaGeometry> geometry;
    std::optional<double> measured_f0;  // Hz; defaults to the catalog entry's
    std::string chip_profile = "dual_interface";
    std::vector<ScenarioApplet> applets;
    std::optional<MgmtConfig> mgmt;  // required when an applet has type "mgmt"
    bool card_contactless_enabled = true;
};

enum class ScenarioExpectation { pass, demonstrates_attack };

struct Scenario {
    std::string name;
    ScenarioExpectation expected = ScenarioExpectation::pass;
    ScenarioCardConfig card;
    PhysicalState initial_physical;
    std::vector<Step> steps;
};

struct StepResult {
    std::size_t index = 0;
    std::string description;
    bool ok = true;
    std::string detail;  // transcript fragment: response hex, verdicts, failures
};

struct ScenarioReport {
    std::string name;
    ScenarioExpectation expected = ScenarioExpectation::pass;
    std::vector<StepResult> steps;
    bool passed = true;

    std::string transcript() const;
};

/// Parses the JSON scenario form; throws ScenarioParseError with step/field
/// context. load_scenario(save_scenario(s)) round-trips.
Scenario load_scenario(const std::string& text);
std::string save_scenario(const Scenario& s);

/// Structural checks shared by load_scenario and run: step ordering, known
/// ids/profiles, resolvable SELECT targets. Throws ScenarioParseError.
void validate_scenario(const Scenario& s);

/// Builds the configured card (catalog lookup, inductance, calibration,
/// applet installation).
std::unique_ptr<VirtualCard> build_card(const ScenarioCardConfig& cfg,
                                        const ModelDefaults& d = {});

/// Executes all steps against a fresh card. The first failed expectation
/// marks the run failed; execution continues to collect the transcript.
ScenarioReport run(const Scenario& s, const ModelDefaults& d = {});

const std::vector<Scenario>& builtin_scenarios();
std::vector<std::string> list_builtin();
std::optional<Scenario> find_builtin(const std::string& name);

}  // namespace cardsim

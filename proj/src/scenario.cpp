#include "cardsim/scenario.hpp"

#include <json.hpp>

#include "cardsim/demo_applet.hpp"
#include "cardsim/inductance.hpp"

namespace cardsim {

using json = nlohmann::ordered_json;

namespace {

Interface interface_from_string(const std::string& s) {
    if (s == "contact") return Interface::contact;
    if (s == "contactless") return Interface::contactless;
    throw ScenarioParseError("unknown interface: " + s);
}

SeriesSwitch series_switch_from_string(const std::string& s) {
    if (s == "absent") return SeriesSwitch::absent;
    if (s == "open") return SeriesSwitch::open;
    if (s == "closed_metal") return SeriesSwitch::closed_metal;
    if (s == "finger_bridge") return SeriesSwitch::finger_bridge;
    throw ScenarioParseError("unknown series_switch value: " + s);
}

ShuntSwitch shunt_switch_from_string(const std::string& s) {
    if (s == "absent") return ShuntSwitch::absent;
    if (s == "open") return ShuntSwitch::open;
    if (s == "closed") return ShuntSwitch::closed;
    throw ScenarioParseError("unknown shunt_switch value: " + s);
}

std::uint16_t sw_from_hex(const std::string& text) {
    const Bytes bytes = from_hex(text);
    if (bytes.size() != 2) throw ScenarioParseError("status word must be 2 octets: " + text);
    return static_cast<std::uint16_t>((bytes[0] << 8) | bytes[1]);
}

std::string sw_to_hex(std::uint16_t sw) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02X %02X", sw >> 8, sw & 0xFF);
    return buf;
}

PhysicalDelta parse_delta(const json& j) {
    PhysicalDelta d;
    for (const auto& [key, value] : j.items()) {
        if (key == "cuts") d.cuts = value.get<int>();
        else if (key == "series_switch") d.series_switch = series_switch_from_string(value.get<std::string>());
        else if (key == "shunt_switch") d.shunt_switch = shunt_switch_from_string(value.get<std::string>());
        else if (key == "module_antenna") d.module_antenna = value.get<bool>();
        else if (key == "hardware_pin_enabled") d.hardware_pin_enabled = value.get<bool>();
        else throw ScenarioParseError("unknown physical field: " + key);
    }
    return d;
}

json delta_to_json(const PhysicalDelta& d) {
    json j = json::object();
    if (d.cuts) j["cuts"] = *d.cuts;
    if (d.series_switch) j["series_switch"] = to_string(*d.series_switch);
    if (d.shunt_switch) j["shunt_switch"] = to_string(*d.shunt_switch);
    if (d.module_antenna) j["module_antenna"] = *d.module_antenna;
    if (d.hardware_pin_enabled) j["hardware_pin_enabled"] = *d.hardware_pin_enabled;
    return j;
}

PhysicalState parse_physical(const json& j) {
    PhysicalState s;
    for (const auto& [key, value] : j.items()) {
        if (key == "cuts") s.cuts = value.get<int>();
        else if (key == "series_switch") s.series_switch = series_switch_from_string(value.get<std::string>());
        else if (key == "shunt_switch") s.shunt_switch = shunt_switch_from_string(value.get<std::string>());
        else if (key == "module_antenna") s.module_antenna = value.get<bool>();
        else if (key == "hardware_pin_enabled") s.hardware_pin_enabled = value.get<bool>();
        else throw ScenarioParseError("unknown physical field: " + key);
    }
    return s;
}

json physical_to_json(const PhysicalState& s) {
    return {{"cuts", s.cuts},
            {"series_switch", to_string(s.series_switch)},
            {"shunt_switch", to_string(s.shunt_switch)},
            {"module_antenna", s.module_antenna},
            {"hardware_pin_enabled", s.hardware_pin_enabled}};
}

Step parse_step(const json& j, std::size_t index) {
    if (!j.is_object() || j.size() != 1) {
        throw ScenarioParseError("step " + std::to_string(index) +
                                 ": expected exactly one step kind");
    }
    const std::string kind = j.begin().key();
    const json& body = j.begin().value();
    try {
        if (kind == "set_physical") return SetPhysicalStep{parse_delta(body)};
        if (kind == "power_on") {
            PowerOnStep s;
            s.iface = interface_from_string(body.at("interface").get<std::string>());
            if (body.contains("reader")) s.reader = body.at("reader").get<std::string>();
            reader_by_name(s.reader);
            return s;
        }
        if (kind == "transmit") {
            TransmitStep s;
            s.iface = interface_from_string(body.at("interface").get<std::string>());
            s.apdu = from_hex(body.at("apdu").get<std::string>());
            return s;
        }
        if (kind == "expect_sw") return ExpectSwStep{sw_from_hex(body.get<std::string>())};
        if (kind == "expect_data") return ExpectDataStep{from_hex(body.get<std::string>())};
        if (kind == "expect_no_response") return ExpectNoResponseStep{};
        if (kind == "expect_readability") {
            ExpectReadabilityStep s;
            s.reader = body.at("reader").get<std::string>();
            reader_by_name(s.reader);
            const std::string outcome = body.at("outcome").get<std::string>();
            if (outcome == "readable") s.outcome = Readability::readable;
            else if (outcome == "unreadable") s.outcome = Readability::unreadable;
            else throw ScenarioParseError("unknown readability outcome: " + outcome);
            return s;
        }
    } catch (const json::exception& e) {
        throw ScenarioParseError("step " + std::to_string(index) + " (" + kind + "): " +
                                 e.what());
    } catch (const ApduParseError& e) {
        throw ScenarioParseError("step " + std::to_string(index) + " (" + kind + "): " +
                                 e.what());
    } catch (const ModelError& e) {
        throw ScenarioParseError("step " + std::to_string(index) + " (" + kind + "): " +
                                 e.what());
    }
    throw ScenarioParseError("step " + std::to_string(index) + ": unknown kind '" + kind + "'");
}

json step_to_json(const Step& step) {
    json j = json::object();
    if (const auto* s = std::get_if<SetPhysicalStep>(&step)) {
        j["set_physical"] = delta_to_json(s->delta);
    } else if (const auto* s = std::get_if<PowerOnStep>(&step)) {
        j["power_on"] = {{"interface", to_string(s->iface)}, {"reader", s->reader}};
    } else if (const auto* s = std::get_if<TransmitStep>(&step)) {
        j["transmit"] = {{"interface", to_string(s->iface)}, {"apdu", to_hex(s->apdu)}};
    } else if (const auto* s = std::get_if<ExpectSwStep>(&step)) {
        j["expect_sw"] = sw_to_hex(s->sw);
    } else if (const auto* s = std::get_if<ExpectDataStep>(&step)) {
        j["expect_data"] = to_hex(s->data);
    } else if (std::get_if<ExpectNoResponseStep>(&step)) {
        j["expect_no_response"] = true;
    } else if (const auto* s = std::get_if<ExpectReadabilityStep>(&step)) {
        j["expect_readability"] = {{"reader", s->reader},
                                   {"outcome", to_string(s->outcome)}};
    }
    return j;
}

ScenarioCardConfig parse_card_config(const json& j) {
    ScenarioCardConfig cfg;
    if (j.contains("catalog_id")) cfg.catalog_id = j.at("catalog_id").get<std::string>();
    if (j.contains("geometry")) {
        const json& g = j.at("geometry");
        AntennaGeometry geom;
        geom.width = g.at("width_mm").get<double>() * 1e-3;
        geom.height = g.at("height_mm").get<double>() * 1e-3;
        geom.turns = g.at("turns").get<int>();
        if (g.contains("pitch_mm")) geom.pitch = g.at("pitch_mm").get<double>() * 1e-3;
        if (g.contains("wire_radius_um")) geom.wire_radius = g.at("wire_radius_um").get<double>() * 1e-6;
        cfg.geometry = geom;
    }
    if (j.contains("measured_f0_mhz")) cfg.measured_f0 = j.at("measured_f0_mhz").get<double>() * 1e6;
    if (j.contains("chip")) cfg.chip_profile = j.at("chip").get<std::string>();
    for (const json& a : j.value("applets", json::array())) {
        ScenarioApplet applet;
        applet.aid = from_hex(a.at("aid").get<std::string>());
        applet.type = a.value("type", "demo");
        applet.contactless_enabled = a.value("contactless_enabled", true);
        cfg.applets.push_back(std::move(applet));
    }
    if (j.contains("mgmt")) {
        const json& m = j.at("mgmt");
        MgmtConfig mc;
        mc.pin = from_hex(m.at("pin").get<std::string>());
        mc.max_retries = m.value("max_retries", 3);
        if (m.contains("interfaces")) {
            mc.mgmt_interfaces.clear();
            for (const json& i : m.at("interfaces")) {
                mc.mgmt_interfaces.insert(interface_from_string(i.get<std::string>()));
            }
        }
        mc.require_pin = m.value("require_pin", true);
        cfg.mgmt = std::move(mc);
    }
    if (j.contains("card_contactless_enabled")) {
        cfg.card_contactless_enabled = j.at("card_contactless_enabled").get<bool>();
    }
    return cfg;
}

json card_config_to_json(const ScenarioCardConfig& cfg) {
    json j = json::object();
    if (cfg.catalog_id) j["catalog_id"] = *cfg.catalog_id;
    if (cfg.geometry) {
        j["geometry"] = {{"width_mm", cfg.geometry->width * 1e3},
                         {"height_mm", cfg.geometry->height * 1e3},
                         {"turns", cfg.geometry->turns},
                         {"pitch_mm", cfg.geometry->pitch * 1e3},
                         {"wire_radius_um", cfg.geometry->wire_radius * 1e6}};
    }
    if (cfg.measured_f0) j["measured_f0_mhz"] = *cfg.measured_f0 * 1e-6;
    j["chip"] = cfg.chip_profile;
    json applets = json::array();
    for (const ScenarioApplet& a : cfg.applets) {
        applets.push_back({{"aid", to_hex(a.aid)},
                           {"type", a.type},
                           {"contactless_enabled", a.contactless_enabled}});
    }
    j["applets"] = std::move(applets);
    if (cfg.mgmt) {
        json interfaces = json::array();
        for (Interface i : cfg.mgmt->mgmt_interfaces) interfaces.push_back(to_string(i));
        j["mgmt"] = {{"pin", to_hex(cfg.mgmt->pin)},
                     {"max_retries", cfg.mgmt->max_retries},
                     {"interfaces", std::move(interfaces)},
                     {"require_pin", cfg.mgmt->require_pin}};
    }
    if (!cfg.card_contactless_enabled) j["card_contactless_enabled"] = false;
    return j;
}

}  // namespace

void validate_scenario(const Scenario& s) {
    if (s.steps.empty()) throw ScenarioParseError("scenario has no steps");
    if (!s.card.catalog_id && !s.card.geometry) {
        throw ScenarioParseError("card config needs a catalog_id or an explicit geometry");
    }
    if (s.card.catalog_id && !find_catalog_entry(*s.card.catalog_id)) {
        throw ScenarioParseError("unknown catalog id: " + *s.card.catalog_id);
    }
    try {
        chip_profile_by_name(s.card.chip_profile);
    } catch (const ModelError& e) {
        throw ScenarioParseError(e.what());
    }
    bool has_mgmt_applet = false;
    for (const ScenarioApplet& a : s.card.applets) {
        if (a.type == "mgmt") has_mgmt_applet = true;
        else if (a.type != "demo") throw ScenarioParseError("unknown applet type: " + a.type);
    }
    if (has_mgmt_applet && !s.card.mgmt) {
        throw ScenarioParseError("a mgmt applet is configured without a mgmt section");
    }
    auto aid_known = [&](const Bytes& aid) {
        for (const ScenarioApplet& a : s.card.applets) {
            if (a.aid == aid) return true;
        }
        return false;
    };
    bool powered_seen[kInterfaceCount] = {false, false};
    bool action_seen = false;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const Step& step = s.steps[i];
        if (const auto* t = std::get_if<TransmitStep>(&step)) {
            if (!powered_seen[iface_index(t->iface)]) {
                throw ScenarioParseError("step " + std::to_string(i) +
                                         ": transmit without a prior power_on on " +
                                         to_string(t->iface));
            }
            // SELECT-by-AID targets must exist in the applet set.
            if (t->apdu.size() >= 5 && t->apdu[1] == 0xA4 && t->apdu[2] == 0x04) {
                const CommandApdu cmd = parse_command(t->apdu);
                if (!aid_known(cmd.data)) {
                    throw ScenarioParseError("step " + std::to_string(i) +
                                             ": unknown AID " + to_hex(cmd.data));
                }
            }
            action_seen = true;
        } else if (const auto* p = std::get_if<PowerOnStep>(&step)) {
            powered_seen[iface_index(p->iface)] = true;
            action_seen = true;
        } else if (std::get_if<SetPhysicalStep>(&step)) {
            action_seen = true;
        } else if (std::get_if<ExpectReadabilityStep>(&step)) {
            // Evaluates the physical state directly; needs no prior action.
        } else if (!action_seen) {
            throw ScenarioParseError("step " + std::to_string(i) +
                                     ": expectation before any action step");
        }
    }
}

namespace {

std::string describe(const Step& step) {
    if (const auto* s = std::get_if<SetPhysicalStep>(&step)) {
        return "set_physical " + delta_to_json(s->delta).dump();
    }
    if (const auto* s = std::get_if<PowerOnStep>(&step)) {
        return "power_on " + to_string(s->iface) + " (" + s->reader + ")";
    }
    if (const auto* s = std::get_if<TransmitStep>(&step)) {
        return "transmit " + to_string(s->iface) + ": " + to_hex(s->apdu);
    }
    if (const auto* s = std::get_if<ExpectSwStep>(&step)) {
        return "expect_sw " + sw_to_hex(s->sw);
    }
    if (const auto* s = std::get_if<ExpectDataStep>(&step)) {
        return "expect_data " + to_hex(s->data);
    }
    if (std::get_if<ExpectNoResponseStep>(&step)) return "expect_no_response";
    if (const auto* s = std::get_if<ExpectReadabilityStep>(&step)) {
        return "expect_readability " + s->reader + " -> " + to_string(s->outcome);
    }
    return "?";
}

}  // namespace

std::string ScenarioReport::transcript() const {
    std::string out = "scenario: " + name + "\n";
    for (const StepResult& r : steps) {
        out += "  [" + std::string(r.ok ? "ok" : "FAIL") + "] step " +
               std::to_string(r.index) + ": " + r.description;
        if (!r.detail.empty()) out += " | " + r.detail;
        out += "\n";
    }
    out += passed ? "result: PASS\n" : "result: FAIL\n";
    return out;
}

Scenario load_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioParseError(std::string("invalid JSON: ") + e.what());
    }
    Scenario s;
    try {
        s.name = j.at("name").get<std::string>();
        const std::string expected = j.value("expected", "pass");
        if (expected == "pass") s.expected = ScenarioExpectation::pass;
        else if (expected == "demonstrates-attack") s.expected = ScenarioExpectation::demonstrates_attack;
        else throw ScenarioParseError("unknown expected tag: " + expected);
        s.card = parse_card_config(j.at("card"));
        if (j.contains("initial_physical")) s.initial_physical = parse_physical(j.at("initial_physical"));
        const json& steps = j.at("steps");
        for (std::size_t i = 0; i < steps.size(); ++i) {
            s.steps.push_back(parse_step(steps[i], i));
        }
    } catch (const json::exception& e) {
        throw ScenarioParseError(std::string("scenario structure: ") + e.what());
    } catch (const ApduParseError& e) {
        throw ScenarioParseError(e.what());
    }
    validate_scenario(s);
    return s;
}

std::string save_scenario(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["expected"] = s.expected == ScenarioExpectation::pass ? "pass" : "demonstrates-attack";
    j["card"] = card_config_to_json(s.card);
    j["initial_physical"] = physical_to_json(s.initial_physical);
    json steps = json::array();
    for (const Step& step : s.steps) steps.push_back(step_to_json(step));
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

std::unique_ptr<VirtualCard> build_card(const ScenarioCardConfig& cfg,
                                        const ModelDefaults& d) {
    AntennaGeometry geometry;
    double measured_f0 = 0.0;
    if (cfg.catalog_id) {
        const auto entry = find_catalog_entry(*cfg.catalog_id);
        if (!entry) throw ScenarioParseError("unknown catalog id: " + *cfg.catalog_id);
        geometry = entry->geometry;
        measured_f0 = entry->measured_f0;
    }
    if (cfg.geometry) geometry = *cfg.geometry;
    if (cfg.measured_f0) measured_f0 = *cfg.measured_f0;
    if (!(measured_f0 > 0.0)) {
        throw ScenarioParseError("card config needs a measured resonant frequency");
    }
    EquivalentCircuit circuit;
    circuit.L = loop_inductance(geometry);
    circuit.C_chip = calibrate_chip_capacitance(circuit.L, measured_f0);
    auto card = std::make_unique<VirtualCard>(circuit, geometry.turns,
                                              chip_profile_by_name(cfg.chip_profile), d);
    for (const ScenarioApplet& a : cfg.applets) {
        std::shared_ptr<AppletBehavior> behavior;
        if (a.type == "mgmt") {
            if (!cfg.mgmt) throw ScenarioParseError("mgmt applet without mgmt config");
            behavior = std::make_shared<MgmtApplet>(*cfg.mgmt);
        } else {
            behavior = std::make_shared<DemoApplet>();
        }
        card->install_applet(a.aid, std::move(behavior), a.contactless_enabled);
    }
    card->set_card_contactless(cfg.card_contactless_enabled);
    return card;
}

ScenarioReport run(const Scenario& s, const ModelDefaults& d) {
    validate_scenario(s);
    ScenarioReport report;
    report.name = s.name;
    report.expected = s.expected;

    std::unique_ptr<VirtualCard> card = build_card(s.card, d);
    card->set_physical(s.initial_physical);

    // Last action outcome the expect_* steps refer to.
    std::optional<Bytes> last_response;
    bool last_was_response = false;

    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const Step& step = s.steps[i];
        StepResult result;
        result.index = i;
        result.description = describe(step);
        try {
            if (const auto* sp = std::get_if<SetPhysicalStep>(&step)) {
                PhysicalState p = card->physical();
                if (sp->delta.cuts) p.cuts = *sp->delta.cuts;
                if (sp->delta.series_switch) p.series_switch = *sp->delta.series_switch;
                if (sp->delta.shunt_switch) p.shunt_switch = *sp->delta.shunt_switch;
                if (sp->delta.module_antenna) p.module_antenna = *sp->delta.module_antenna;
                if (sp->delta.hardware_pin_enabled) p.hardware_pin_enabled = *sp->delta.hardware_pin_enabled;
                card->set_physical(p);
            } else if (const auto* po = std::get_if<PowerOnStep>(&step)) {
                last_response = card->power_on(po->iface, reader_by_name(po->reader));
                last_was_response = true;
                result.detail = last_response ? "atr: " + to_hex(*last_response) : "no response";
            } else if (const auto* tr = std::get_if<TransmitStep>(&step)) {
                last_response = card->transmit(tr->iface, tr->apdu);
                last_was_response = true;
                result.detail = last_response ? "resp: " + to_hex(*last_response) : "no response";
            } else if (const auto* ex = std::get_if<ExpectSwStep>(&step)) {
                if (!last_was_response || !last_response || last_response->size() < 2) {
                    result.ok = false;
                    result.detail = "no response to inspect";
                } else {
                    const ResponseApdu resp = parse_response(*last_response);
                    result.ok = resp.sw == ex->sw;
                    result.detail = "got " + sw_to_hex(resp.sw);
                }
            } else if (const auto* ex = std::get_if<ExpectDataStep>(&step)) {
                if (!last_was_response || !last_response || last_response->size() < 2) {
                    result.ok = false;
                    result.detail = "no response to inspect";
                } else {
                    const ResponseApdu resp = parse_response(*last_response);
                    result.ok = resp.data == ex->data;
                    result.detail = "got " + to_hex(resp.data);
                }
            } else if (std::get_if<ExpectNoResponseStep>(&step)) {
                result.ok = last_was_response && !last_response;
                result.detail = last_response ? "got a response" : "silent";
            } else if (const auto* ex = std::get_if<ExpectReadabilityStep>(&step)) {
                const Readability verdict = card->rf_readability(reader_by_name(ex->reader));
                result.ok = verdict == ex->outcome;
                result.detail = "got " + to_string(verdict);
            }
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("error: ") + e.what();
        }
        if (!result.ok) report.passed = false;
        report.steps.push_back(std::move(result));
    }
    return report;
}

namespace {

const char* kDemoAid = "A0 00 00 00 63 50 41 59";
const char* kMgmtAid = "F0 49 46 4D 47 54";
const char* kPin = "31 32 33 34";      // "1234"
const char* kWrongPin = "39 39 39 39"; // "9999"

std::string select_apdu(const char* aid_hex) {
    const Bytes aid = from_hex(aid_hex);
    Bytes apdu = {0x00, 0xA4, 0x04, 0x00, static_cast<std::uint8_t>(aid.size())};
    apdu.insert(apdu.end(), aid.begin(), aid.end());
    return to_hex(apdu);
}

ScenarioCardConfig default_card(const std::string& catalog_id, double f0_mhz,
                                const std::string& chip) {
    ScenarioCardConfig cfg;
    cfg.catalog_id = catalog_id;
    cfg.measured_f0 = f0_mhz * 1e6;
    cfg.chip_profile = chip;
    cfg.applets.push_back({from_hex(kDemoAid), "demo", true});
    cfg.applets.push_back({from_hex(kMgmtAid), "mgmt", true});
    MgmtConfig mc;
    mc.pin = from_hex(kPin);
    cfg.mgmt = mc;
    return cfg;
}

ScenarioCardConfig prototype_card(double width_mm, double height_mm, int turns,
                                  double f0_mhz, const std::string& chip) {
    ScenarioCardConfig cfg;
    AntennaGeometry g;
    g.width = width_mm * 1e-3;
    g.height = height_mm * 1e-3;
    g.turns = turns;
    cfg.geometry = g;
    cfg.measured_f0 = f0_mhz * 1e6;
    cfg.chip_profile = chip;
    cfg.applets.push_back({from_hex(kDemoAid), "demo", true});
    return cfg;
}

SetPhysicalStep cuts_step(int cuts) {
    SetPhysicalStep s;
    s.delta.cuts = cuts;
    return s;
}

SetPhysicalStep series_step(SeriesSwitch sw) {
    SetPhysicalStep s;
    s.delta.series_switch = sw;
    return s;
}

SetPhysicalStep shunt_step(ShuntSwitch sw) {
    SetPhysicalStep s;
    s.delta.shunt_switch = sw;
    return s;
}

TransmitStep tx(Interface iface, const std::string& hex) {
    return TransmitStep{iface, from_hex(hex)};
}

// The wire-by-wire cut experiment: contactless access dies at the first cut,
// the contact interface keeps working through all of them.
Scenario make_cut_progression() {
    Scenario s;
    s.name = "cut-progression";
    s.card = default_card("card-d", 15.0, "dual_interface");
    s.steps = {
        ExpectReadabilityStep{"standard_reader", Readability::readable},
        PowerOnStep{Interface::contact, "standard_reader"},
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
        tx(Interface::contact, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
        cuts_step(1),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        ExpectReadabilityStep{"smartphone", Readability::unreadable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        ExpectNoResponseStep{},
        tx(Interface::contact, "00 CA 00 00 01"),
        ExpectDataStep{{0x01}},
        cuts_step(2),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        tx(Interface::contact, "00 B0 00 00 02"),
        ExpectSwStep{0x9000},
        cuts_step(3),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        cuts_step(4),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        ExpectReadabilityStep{"special_hardware", Readability::unreadable},
        tx(Interface::contact, "00 CA 00 00 01"),
        ExpectDataStep{{0x01}},
        ExpectSwStep{0x9000},
    };
    return s;
}

// Normally-open series switch: dead until pressed, alive with the button
// bridged by metal.
Scenario make_clipped_antenna_button() {
    Scenario s;
    s.name = "clipped-antenna-button";
    s.card = prototype_card(80, 49, 4, 14.0, "mifare_classic");
    s.initial_physical.series_switch = SeriesSwitch::open;
    s.steps = {
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        ExpectNoResponseStep{},
        series_step(SeriesSwitch::closed_metal),
        ExpectReadabilityStep{"standard_reader", Readability::readable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
        series_step(SeriesSwitch::open),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
    };
    return s;
}

// Prototype 1: the MIFARE Classic chip starts up even through the lossy
// finger bridge.
Scenario make_finger_bridge_mifare() {
    Scenario s;
    s.name = "finger-bridge-mifare";
    s.card = prototype_card(80, 49, 4, 14.0, "mifare_classic");
    s.initial_physical.series_switch = SeriesSwitch::open;
    s.steps = {
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        series_step(SeriesSwitch::finger_bridge),
        ExpectReadabilityStep{"standard_reader", Readability::readable},
        ExpectReadabilityStep{"smartphone", Readability::readable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
    };
    return s;
}

// Prototype 3: the dual-interface processor needs more power than the finger
// bridge passes; only the metal bridge revives it.
Scenario make_finger_bridge_dualinterface() {
    Scenario s;
    s.name = "finger-bridge-dualinterface";
    s.card = prototype_card(74, 22, 4, 14.0, "dual_interface");
    s.initial_physical.series_switch = SeriesSwitch::open;
    s.steps = {
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        series_step(SeriesSwitch::finger_bridge),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        ExpectNoResponseStep{},
        series_step(SeriesSwitch::closed_metal),
        ExpectReadabilityStep{"standard_reader", Readability::readable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
    };
    return s;
}

// Normally-closed shunt across the chip terminals: shorted means silent on
// every reader class, the contact interface is untouched.
Scenario make_shunt_switch() {
    Scenario s;
    s.name = "shunt-switch";
    s.card = default_card("card-d", 15.0, "dual_interface");
    s.initial_physical.shunt_switch = ShuntSwitch::closed;
    s.steps = {
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        ExpectReadabilityStep{"special_hardware", Readability::unreadable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        ExpectNoResponseStep{},
        PowerOnStep{Interface::contact, "standard_reader"},
        tx(Interface::contact, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
        shunt_step(ShuntSwitch::open),
        ExpectReadabilityStep{"standard_reader", Readability::readable},
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
    };
    return s;
}

// A malicious contact terminal fires the enable command blindly; without the
// PIN it bounces off, and the contactless side stays dark.
Scenario make_malicious_contact_terminal() {
    Scenario s;
    s.name = "malicious-contact-terminal";
    s.card = default_card("card-d", 15.0, "dual_interface");
    s.card.card_contactless_enabled = false;
    s.steps = {
        PowerOnStep{Interface::contact, "standard_reader"},
        tx(Interface::contact, select_apdu(kMgmtAid)),
        ExpectSwStep{0x9000},
        tx(Interface::contact, "80 40 00 01"),
        ExpectSwStep{0x6982},
        tx(Interface::contact, "80 42 00 00 01"),
        ExpectDataStep{{0x00}},
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x6A82},
    };
    return s;
}

// Management applet reachable over contactless with no PIN requirement: the
// attacker re-enables the hidden applet before using it.
Scenario make_relay_over_contactless_mgmt() {
    Scenario s;
    s.name = "relay-over-contactless-mgmt";
    s.expected = ScenarioExpectation::demonstrates_attack;
    s.card = default_card("card-d", 15.0, "dual_interface");
    s.card.applets[0].contactless_enabled = false;  // user "protected" the demo applet
    s.card.mgmt->mgmt_interfaces = {Interface::contact, Interface::contactless};
    s.card.mgmt->require_pin = false;
    const std::string enable_demo = "80 40 01 01 08 " + std::string(kDemoAid);
    s.steps = {
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x6A82},
        tx(Interface::contactless, select_apdu(kMgmtAid)),
        ExpectSwStep{0x9000},
        tx(Interface::contactless, enable_demo),  // unauthorized enable succeeds
        ExpectSwStep{0x9000},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
    };
    return s;
}

// Same deployment with the PIN requirement on: the activation command is
// refused and the applet stays hidden.
Scenario make_relay_over_contactless_mgmt_pin() {
    Scenario s;
    s.name = "relay-over-contactless-mgmt-pin-protected";
    s.card = default_card("card-d", 15.0, "dual_interface");
    s.card.applets[0].contactless_enabled = false;
    s.card.mgmt->mgmt_interfaces = {Interface::contact, Interface::contactless};
    const std::string enable_demo = "80 40 01 01 08 " + std::string(kDemoAid);
    s.steps = {
        PowerOnStep{Interface::contactless, "standard_reader"},
        tx(Interface::contactless, select_apdu(kMgmtAid)),
        ExpectSwStep{0x9000},
        tx(Interface::contactless, enable_demo),
        ExpectSwStep{0x6982},
        tx(Interface::contactless, "80 20 00 00 04 " + std::string(kWrongPin)),
        ExpectSwStep{0x63C2},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x6A82},
    };
    return s;
}

// Coil-on-module card: the module loop survives a fully cut body antenna,
// so special reader hardware can still reach the chip.
Scenario make_coil_on_module() {
    Scenario s;
    s.name = "coil-on-module";
    s.card = default_card("card-d", 15.0, "dual_interface");
    s.initial_physical.module_antenna = true;
    s.steps = {
        cuts_step(4),
        ExpectReadabilityStep{"standard_reader", Readability::unreadable},
        ExpectReadabilityStep{"special_hardware", Readability::readable},
        PowerOnStep{Interface::contactless, "special_hardware"},
        tx(Interface::contactless, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
        PowerOnStep{Interface::contact, "standard_reader"},
        tx(Interface::contact, select_apdu(kDemoAid)),
        ExpectSwStep{0x9000},
    };
    return s;
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> scenarios = [] {
        std::vector<Scenario> v;
        v.push_back(make_cut_progression());
        v.push_back(make_clipped_antenna_button());
        v.push_back(make_finger_bridge_mifare());
        v.push_back(make_finger_bridge_dualinterface());
        v.push_back(make_shunt_switch());
        v.push_back(make_malicious_contact_terminal());
        v.push_back(make_relay_over_contactless_mgmt());
        v.push_back(make_relay_over_contactless_mgmt_pin());
        v.push_back(make_coil_on_module());
        for (const Scenario& s : v) validate_scenario(s);
        return v;
    }();
    return scenarios;
}

std::vector<std::string> list_builtin() {
    std::vector<std::string> names;
    for (const Scenario& s : builtin_scenarios()) names.push_back(s.name);
    return names;
}

std::optional<Scenario> find_builtin(const std::string& name) {
    for (const Scenario& s : builtin_scenarios()) {
        if (s.name == name) return s;
    }
    return std::nullopt;
}

}  // namespace cardsim

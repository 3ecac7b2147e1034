#include "cardsim/card.hpp"

#include <algorithm>

namespace cardsim {

std::string to_string(Interface i) {
    return i == Interface::contact ? "contact" : "contactless";
}

VirtualCard::VirtualCard(EquivalentCircuit circuit, int antenna_turns, ChipProfile chip,
                         ModelDefaults defaults)
    : circuit_(std::move(circuit)),
      antenna_turns_(antenna_turns),
      chip_(std::move(chip)),
      defaults_(defaults) {
    circuit_.validate();
    // Opaque answer-to-reset token: historical-byte prefix plus a fixed
    // 4-byte anticollision identifier.
    atr_ = {0x3B, 0x80, 0x01, 0x04, 0x9A, 0x1E, 0x5C};
}

void VirtualCard::install_applet(Bytes aid, std::shared_ptr<AppletBehavior> applet,
                                 bool contactless_enabled) {
    if (aid.size() < 5 || aid.size() > 16) throw ModelError("AID must be 5-16 bytes");
    if (find_applet(aid)) throw ModelError("AID already registered: " + to_hex(aid));
    applets_.push_back({std::move(aid), std::move(applet), contactless_enabled});
}

std::optional<Bytes> VirtualCard::power_on(Interface iface, const ReaderClass& reader) {
    deselect_current(iface);
    selected_[iface_index(iface)].reset();
    if (iface == Interface::contactless) {
        const bool rf_ok = rf_readability(reader) == Readability::readable;
        if (!rf_ok || !physical_.hardware_pin_enabled) {
            powered_[iface_index(iface)] = false;
            return std::nullopt;
        }
    }
    powered_[iface_index(iface)] = true;
    return atr_;
}

void VirtualCard::power_off(Interface iface) {
    deselect_current(iface);
    selected_[iface_index(iface)].reset();
    powered_[iface_index(iface)] = false;
}

bool VirtualCard::powered(Interface iface) const { return powered_[iface_index(iface)]; }

std::optional<Bytes> VirtualCard::transmit(Interface iface, const Bytes& raw) {
    if (!powered(iface)) return std::nullopt;
    CommandApdu cmd;
    try {
        cmd = parse_command(raw);
    } catch (const ApduParseError&) {
        return serialize_response({{}, sw::kWrongLength});
    }
    return serialize_response(dispatch(iface, cmd));
}

ResponseApdu VirtualCard::dispatch(Interface iface, const CommandApdu& cmd) {
    const int idx = iface_index(iface);
    const bool is_select = cmd.cla == 0x00 && cmd.ins == 0xA4;

    if (is_select && cmd.p1 == 0x04) {
        if (cmd.data.size() < 5 || cmd.data.size() > 16) return {{}, sw::kWrongLength};
        AppletEntry* entry = find_applet(cmd.data);
        // A policy-hidden applet answers exactly like a missing one.
        if (!entry) return {{}, sw::kFileNotFound};
        if (iface == Interface::contactless &&
            (!card_contactless_enabled_ || !entry->contactless_enabled)) {
            return {{}, sw::kFileNotFound};
        }
        deselect_current(iface);
        selected_[idx] = entry->aid;
        entry->applet->on_select(iface);
        return entry->applet->select_response(iface);
    }
    if (is_select) return {{}, sw::kInsNotSupported};

    if (!selected_[idx]) return {{}, sw::kConditionsNotSatisfied};
    AppletEntry* entry = find_applet(*selected_[idx]);
    // Mid-session contactless disable: routing fails from the next command.
    if (iface == Interface::contactless &&
        (!card_contactless_enabled_ || !entry->contactless_enabled)) {
        return {{}, sw::kConditionsNotSatisfied};
    }
    return entry->applet->process(cmd, iface, *this);
}

void VirtualCard::deselect_current(Interface iface) {
    const int idx = iface_index(iface);
    if (selected_[idx]) {
        if (AppletEntry* entry = find_applet(*selected_[idx])) {
            entry->applet->on_deselect(iface);
        }
        selected_[idx].reset();
    }
}

void VirtualCard::set_card_contactless(bool enabled) { card_contactless_enabled_ = enabled; }
bool VirtualCard::card_contactless() const { return card_contactless_enabled_; }

void VirtualCard::set_applet_contactless(const Bytes& aid, bool enabled) {
    AppletEntry* entry = find_applet(aid);
    if (!entry) throw ModelError("unknown AID: " + to_hex(aid));
    entry->contactless_enabled = enabled;
}

std::optional<bool> VirtualCard::applet_contactless(const Bytes& aid) const {
    const AppletEntry* entry = find_applet(aid);
    if (!entry) return std::nullopt;
    return entry->contactless_enabled;
}

void VirtualCard::set_physical(const PhysicalState& s) {
    if (s.cuts < 0 || s.cuts > antenna_turns_) {
        throw InvalidStateError("cut count outside [0, turns]");
    }
    physical_ = s;
}

Readability VirtualCard::rf_readability(const ReaderClass& reader) const {
    return readability(circuit_, physical_, chip_, reader, antenna_turns_, defaults_);
}

VirtualCard::AppletEntry* VirtualCard::find_applet(const Bytes& aid) {
    auto it = std::find_if(applets_.begin(), applets_.end(),
                           [&](const AppletEntry& e) { return e.aid == aid; });
    return it == applets_.end() ? nullptr : &*it;
}

const VirtualCard::AppletEntry* VirtualCard::find_applet(const Bytes& aid) const {
    auto it = std::find_if(applets_.begin(), applets_.end(),
                           [&](const AppletEntry& e) { return e.aid == aid; });
    return it == applets_.end() ? nullptr : &*it;
}

}  // namespace cardsim

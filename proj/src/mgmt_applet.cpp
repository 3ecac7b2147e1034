#include "cardsim/mgmt_applet.hpp"

#include <algorithm>

namespace cardsim {

void MgmtConfig::validate() const {
    if (pin.size() < 4 || pin.size() > 12) throw ModelError("PIN must be 4-12 octets");
    if (std::find(pin.begin(), pin.end(), 0xFF) != pin.end()) {
        throw ModelError("PIN octets must not be 0xFF");
    }
    if (max_retries < 1 || max_retries > 10) throw ModelError("max_retries outside [1, 10]");
    if (mgmt_interfaces.empty()) throw ModelError("mgmt_interfaces must be nonempty");
}

MgmtApplet::MgmtApplet(MgmtConfig config) : config_(std::move(config)) {
    config_.validate();
    pin_ = config_.pin;
    retry_counter_ = config_.max_retries;
}

ResponseApdu MgmtApplet::process(const CommandApdu& cmd, Interface source,
                                 CardServices& card) {
    // Interface policy first: a forbidden interface learns nothing about
    // PIN or blocking state.
    if (!config_.mgmt_interfaces.count(source)) {
        return {{}, sw::kConditionsNotSatisfied};
    }
    if (cmd.cla != kCla) return {{}, sw::kClaNotSupported};
    switch (cmd.ins) {
        case kInsVerifyPin: return verify_pin(cmd, source);
        case kInsChangePin: return change_pin(cmd);
        case kInsSetInterfaceState: return set_interface_state(cmd, source, card);
        case kInsGetInterfaceState: return get_interface_state(cmd, card);
        default: return {{}, sw::kInsNotSupported};
    }
}

void MgmtApplet::on_deselect(Interface source) {
    authenticated_[iface_index(source)] = false;
}

ResponseApdu MgmtApplet::pin_mismatch() {
    --retry_counter_;
    if (retry_counter_ <= 0) {
        retry_counter_ = 0;
        blocked_ = true;
    }
    return {{}, static_cast<std::uint16_t>(sw::kRetryBase | retry_counter_)};
}

ResponseApdu MgmtApplet::verify_pin(const CommandApdu& cmd, Interface source) {
    if (blocked_) return {{}, sw::kAuthMethodBlocked};
    if (cmd.data.empty()) return {{}, sw::kWrongLength};
    if (cmd.data == pin_) {
        retry_counter_ = config_.max_retries;
        authenticated_[iface_index(source)] = true;
        return {{}, sw::kOk};
    }
    return pin_mismatch();
}

ResponseApdu MgmtApplet::change_pin(const CommandApdu& cmd) {
    if (blocked_) return {{}, sw::kAuthMethodBlocked};
    const auto delim = std::find(cmd.data.begin(), cmd.data.end(), 0xFF);
    if (delim == cmd.data.end()) return {{}, sw::kWrongLength};
    const Bytes old_pin(cmd.data.begin(), delim);
    const Bytes new_pin(delim + 1, cmd.data.end());
    if (new_pin.size() < 4 || new_pin.size() > 12) return {{}, sw::kWrongLength};
    if (std::find(new_pin.begin(), new_pin.end(), 0xFF) != new_pin.end()) {
        return {{}, sw::kWrongLength};
    }
    if (old_pin != pin_) return pin_mismatch();
    pin_ = new_pin;
    retry_counter_ = config_.max_retries;
    return {{}, sw::kOk};
}

ResponseApdu MgmtApplet::set_interface_state(const CommandApdu& cmd, Interface source,
                                             CardServices& card) {
    if (config_.require_pin && !authenticated_[iface_index(source)]) {
        return {{}, sw::kSecurityStatusNotSatisfied};
    }
    if (cmd.p2 != 0x00 && cmd.p2 != 0x01) return {{}, sw::kIncorrectP1P2};
    const bool enable = cmd.p2 == 0x01;
    if (cmd.p1 == 0x00) {
        if (!cmd.data.empty()) return {{}, sw::kWrongLength};
        card.set_card_contactless(enable);
        return {{}, sw::kOk};
    }
    if (cmd.p1 == 0x01) {
        if (!card.applet_contactless(cmd.data)) return {{}, sw::kReferenceNotFound};
        card.set_applet_contactless(cmd.data, enable);
        return {{}, sw::kOk};
    }
    return {{}, sw::kIncorrectP1P2};
}

ResponseApdu MgmtApplet::get_interface_state(const CommandApdu& cmd, CardServices& card) {
    if (cmd.p1 == 0x00) {
        return {{static_cast<std::uint8_t>(card.card_contactless() ? 0x01 : 0x00)}, sw::kOk};
    }
    if (cmd.p1 == 0x01) {
        const std::optional<bool> enabled = card.applet_contactless(cmd.data);
        if (!enabled) return {{}, sw::kReferenceNotFound};
        return {{static_cast<std::uint8_t>(*enabled ? 0x01 : 0x00)}, sw::kOk};
    }
    return {{}, sw::kIncorrectP1P2};
}

}  // namespace cardsim

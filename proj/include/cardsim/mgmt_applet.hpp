#pragma once

#include <set>

#include "cardsim/card.hpp"

namespace cardsim {

/// Interface-management applet wire contract (CLA 0x80):
///   INS 0x20 VERIFY_PIN           data = PIN
///   INS 0x24 CHANGE_PIN           data = old || 0xFF || new
///   INS 0x40 SET_INTERFACE_STATE  p1 = 0x00 card / 0x01 applet (AID in data),
///                                 p2 = 0x01 enable / 0x00 disable
///   INS 0x42 GET_INTERFACE_STATE  p1/p2 as SET; returns one status octet
/// Commands arriving over an interface outside mgmt_interfaces are rejected
/// with 0x6985 before any other processing. PIN octets must not be 0xFF
/// (the CHANGE_PIN delimiter).
struct MgmtConfig {
    Bytes pin;
    int max_retries = 3;
    std::set<Interface> mgmt_interfaces = {Interface::contact};
    // Deliberately insecure variant used by attack scenarios: SET commands
    // require no prior VERIFY.
    bool require_pin = true;

    void validate() const;
};

class MgmtApplet : public AppletBehavior {
public:
    explicit MgmtApplet(MgmtConfig config);

    ResponseApdu process(const CommandApdu& cmd, Interface source,
                         CardServices& card) override;
    void on_deselect(Interface source) override;

    int retry_counter() const { return retry_counter_; }
    bool blocked() const { return blocked_; }
    bool authenticated(Interface iface) const { return authenticated_[iface_index(iface)]; }

    static constexpr std::uint8_t kCla = 0x80;
    static constexpr std::uint8_t kInsVerifyPin = 0x20;
    static constexpr std::uint8_t kInsChangePin = 0x24;
    static constexpr std::uint8_t kInsSetInterfaceState = 0x40;
    static constexpr std::uint8_t kInsGetInterfaceState = 0x42;

private:
    ResponseApdu verify_pin(const CommandApdu& cmd, Interface source);
    ResponseApdu change_pin(const CommandApdu& cmd);
    ResponseApdu set_interface_state(const CommandApdu& cmd, Interface source,
                                     CardServices& card);
    ResponseApdu get_interface_state(const CommandApdu& cmd, CardServices& card);
    ResponseApdu pin_mismatch();

    MgmtConfig config_;
    Bytes pin_;
    int retry_counter_;
    bool blocked_ = false;
    bool authenticated_[kInterfaceCount] = {false, false};
};

}  // namespace cardsim

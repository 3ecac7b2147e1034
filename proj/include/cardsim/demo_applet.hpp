#pragma once

#include "cardsim/card.hpp"

namespace cardsim {

/// Stand-in for a protected application (payment stub). INS 0xCA reports the
/// source interface (0x01 contact / 0x02 contactless), INS 0xB0 returns a
/// fixed payload.
class DemoApplet : public AppletBehavior {
public:
    ResponseApdu process(const CommandApdu& cmd, Interface source,
                         CardServices&) override {
        if (cmd.cla != 0x00) return {{}, sw::kClaNotSupported};
        if (cmd.ins == 0xCA) {
            const std::uint8_t tag = source == Interface::contact ? 0x01 : 0x02;
            return {{tag}, sw::kOk};
        }
        if (cmd.ins == 0xB0) {
            return {{0xCA, 0xFE}, sw::kOk};
        }
        return {{}, sw::kInsNotSupported};
    }
};

}  // namespace cardsim

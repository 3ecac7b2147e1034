#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cardsim/apdu.hpp"
#include "cardsim/states.hpp"

namespace cardsim {

enum class Interface { contact, contactless };

inline constexpr int kInterfaceCount = 2;

inline int iface_index(Interface i) { return i == Interface::contact ? 0 : 1; }
std::string to_string(Interface i);

/// Card-level services an applet may call while processing a command.
class CardServices {
public:
    virtual ~CardServices() = default;
    virtual void set_card_contactless(bool enabled) = 0;
    virtual bool card_contactless() const = 0;
    /// Throws ModelError for an unknown AID.
    virtual void set_applet_contactless(const Bytes& aid, bool enabled) = 0;
    virtual std::optional<bool> applet_contactless(const Bytes& aid) const = 0;
};

/// Behavioral contract of an installed applet. Implementations own their
/// state; anything volatile must be dropped in on_deselect (which the card
/// also issues on power-off of the interface).
class AppletBehavior {
public:
    virtual ~AppletBehavior() = default;
    virtual ResponseApdu process(const CommandApdu& cmd, Interface source,
                                 CardServices& card) = 0;
    virtual void on_select(Interface /*source*/) {}
    virtual void on_deselect(Interface /*source*/) {}
    virtual ResponseApdu select_response(Interface /*source*/) { return {{}, sw::kOk}; }
};

/// Virtual dual-interface card: applet registry, interface routing and
/// contactless gating. Sequential: one in-flight command at a time.
class VirtualCard : public CardServices {
public:
    VirtualCard(EquivalentCircuit circuit, int antenna_turns, ChipProfile chip,
                ModelDefaults defaults = {});

    void install_applet(Bytes aid, std::shared_ptr<AppletBehavior> applet,
                        bool contactless_enabled = true);

    /// Contact always answers. Contactless answers iff the RF path is
    /// readable for the given reader and the hardware pin is enabled.
    /// Powering on clears that interface's session.
    std::optional<Bytes> power_on(Interface iface, const ReaderClass& reader);
    void power_off(Interface iface);
    bool powered(Interface iface) const;

    /// Routes one raw APDU. Returns nothing when the interface is unpowered.
    std::optional<Bytes> transmit(Interface iface, const Bytes& raw);

    // CardServices
    void set_card_contactless(bool enabled) override;
    bool card_contactless() const override;
    void set_applet_contactless(const Bytes& aid, bool enabled) override;
    std::optional<bool> applet_contactless(const Bytes& aid) const override;

    void set_physical(const PhysicalState& s);
    const PhysicalState& physical() const { return physical_; }
    const EquivalentCircuit& circuit() const { return circuit_; }
    const ChipProfile& chip() const { return chip_; }
    int antenna_turns() const { return antenna_turns_; }
    const ModelDefaults& defaults() const { return defaults_; }

    Readability rf_readability(const ReaderClass& reader) const;

private:
    struct AppletEntry {
        Bytes aid;
        std::shared_ptr<AppletBehavior> applet;
        bool contactless_enabled = true;
    };

    AppletEntry* find_applet(const Bytes& aid);
    const AppletEntry* find_applet(const Bytes& aid) const;
    ResponseApdu dispatch(Interface iface, const CommandApdu& cmd);
    void deselect_current(Interface iface);

    EquivalentCircuit circuit_;
    int antenna_turns_;
    ChipProfile chip_;
    ModelDefaults defaults_;
    PhysicalState physical_;
    std::vector<AppletEntry> applets_;
    bool card_contactless_enabled_ = true;
    bool powered_[kInterfaceCount] = {false, false};
    std::optional<Bytes> selected_[kInterfaceCount];
    Bytes atr_;
};

}  // namespace cardsim

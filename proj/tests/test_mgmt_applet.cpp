#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "cardsim/demo_applet.hpp"
#include "cardsim/inductance.hpp"
#include "cardsim/mgmt_applet.hpp"

using namespace cardsim;

namespace {

const Bytes kMgmtAid = from_hex("F0 49 46 4D 47 54");
const Bytes kDemoAid = from_hex("A0 00 00 00 63 50 41 59");
const Bytes kPin = from_hex("31 32 33 34");

struct Fixture {
    VirtualCard card;
    std::shared_ptr<MgmtApplet> mgmt;

    explicit Fixture(MgmtConfig config = default_config())
        : card(make_circuit(), 4, dual_interface_profile()),
          mgmt(std::make_shared<MgmtApplet>(std::move(config))) {
        card.install_applet(kMgmtAid, mgmt);
        card.install_applet(kDemoAid, std::make_shared<DemoApplet>());
        card.power_on(Interface::contact, standard_reader());
        card.power_on(Interface::contactless, standard_reader());
    }

    static EquivalentCircuit make_circuit() {
        AntennaGeometry g;
        g.width = 74e-3;
        g.height = 22e-3;
        g.turns = 4;
        EquivalentCircuit c;
        c.L = loop_inductance(g);
        c.C_chip = calibrate_chip_capacitance(c.L, 14e6);
        return c;
    }

    static MgmtConfig default_config() {
        MgmtConfig mc;
        mc.pin = kPin;
        return mc;
    }

    std::uint16_t tx(Interface iface, const std::string& hex) {
        const auto resp = card.transmit(iface, from_hex(hex));
        REQUIRE(resp.has_value());
        return parse_response(*resp).sw;
    }

    ResponseApdu tx_full(Interface iface, const std::string& hex) {
        const auto resp = card.transmit(iface, from_hex(hex));
        REQUIRE(resp.has_value());
        return parse_response(*resp);
    }

    void select_mgmt(Interface iface) {
        REQUIRE(tx(iface, "00 A4 04 00 06 F0 49 46 4D 47 54") == sw::kOk);
    }
};

}  // namespace

TEST_CASE("verify with the correct PIN authenticates; wrong PIN decrements") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 39 39 39 39") == 0x63C2);
    CHECK(f.mgmt->retry_counter() == 2);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    CHECK(f.mgmt->authenticated(Interface::contact));
    CHECK(f.mgmt->retry_counter() == 3);  // success restores the counter
}

TEST_CASE("retry exhaustion blocks permanently") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 39 39 39 39") == 0x63C2);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 39 39 39 39") == 0x63C1);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 39 39 39 39") == 0x63C0);
    CHECK(f.mgmt->blocked());
    // Even the correct PIN is refused forever after.
    for (int i = 0; i < 5; ++i) {
        CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kAuthMethodBlocked);
    }
    // And state changes stay locked out.
    CHECK(f.tx(Interface::contact, "80 40 00 00") == sw::kSecurityStatusNotSatisfied);
}

TEST_CASE("contact-only policy rejects contactless management before PIN processing") {
    Fixture f;
    f.select_mgmt(Interface::contactless);
    const int before = f.mgmt->retry_counter();
    CHECK(f.tx(Interface::contactless, "80 20 00 00 04 39 39 39 39") ==
          sw::kConditionsNotSatisfied);
    CHECK(f.mgmt->retry_counter() == before);  // wrong PIN was not even looked at
    CHECK(f.tx(Interface::contactless, "80 40 00 01") == sw::kConditionsNotSatisfied);
}

TEST_CASE("set interface state requires prior verify") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 40 00 00") == sw::kSecurityStatusNotSatisfied);
    CHECK(f.card.card_contactless());
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    CHECK(f.tx(Interface::contact, "80 40 00 00") == sw::kOk);
    CHECK_FALSE(f.card.card_contactless());
    CHECK(f.tx(Interface::contact, "80 40 00 01") == sw::kOk);
    CHECK(f.card.card_contactless());
}

TEST_CASE("per-applet enable/disable by AID") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    CHECK(f.tx(Interface::contact, "80 40 01 00 08 A0 00 00 00 63 50 41 59") == sw::kOk);
    CHECK(f.card.applet_contactless(kDemoAid) == std::optional<bool>(false));
    CHECK(f.tx(Interface::contact, "80 40 01 01 08 A0 00 00 00 63 50 41 59") == sw::kOk);
    CHECK(f.card.applet_contactless(kDemoAid) == std::optional<bool>(true));
    // Unknown AID reference.
    CHECK(f.tx(Interface::contact, "80 40 01 00 05 01 02 03 04 05") == sw::kReferenceNotFound);
}

TEST_CASE("get interface state needs no PIN and returns one status octet") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    auto r = f.tx_full(Interface::contact, "80 42 00 00 01");
    CHECK(r.sw == sw::kOk);
    CHECK(r.data == Bytes{0x01});
    auto applet = f.tx_full(Interface::contact, "80 42 01 00 08 A0 00 00 00 63 50 41 59");
    CHECK(applet.sw == sw::kOk);
    CHECK(applet.data == Bytes{0x01});
}

TEST_CASE("parameter validation: bad P1/P2 and wrong lengths") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    CHECK(f.tx(Interface::contact, "80 40 02 00") == sw::kIncorrectP1P2);
    CHECK(f.tx(Interface::contact, "80 40 00 07") == sw::kIncorrectP1P2);
    // Card-level SET must not carry data.
    CHECK(f.tx(Interface::contact, "80 40 00 00 02 AA BB") == sw::kWrongLength);
    // Applet-level SET without an AID references nothing.
    CHECK(f.tx(Interface::contact, "80 40 01 00") == sw::kReferenceNotFound);
    // Unknown INS and CLA.
    CHECK(f.tx(Interface::contact, "80 77 00 00") == sw::kInsNotSupported);
    CHECK(f.tx(Interface::contact, "90 20 00 00 04 31 32 33 34") == sw::kClaNotSupported);
}

TEST_CASE("change PIN swaps the reference PIN") {
    Fixture f;
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    // old || 0xFF || new
    CHECK(f.tx(Interface::contact, "80 24 00 00 09 31 32 33 34 FF 35 36 37 38") == sw::kOk);
    // Old PIN now fails, new one succeeds.
    CHECK((f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") & 0xFFF0) == 0x63C0);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 35 36 37 38") == sw::kOk);
    // Wrong old PIN in a change attempt decrements like a failed verify.
    const int before = f.mgmt->retry_counter();
    CHECK((f.tx(Interface::contact, "80 24 00 00 09 31 32 33 34 FF 39 39 39 39") & 0xFFF0) ==
          0x63C0);
    CHECK(f.mgmt->retry_counter() == before - 1);
}

TEST_CASE("authentication is per interface and volatile") {
    MgmtConfig mc = Fixture::default_config();
    mc.mgmt_interfaces = {Interface::contact, Interface::contactless};
    Fixture f(mc);
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    CHECK(f.mgmt->authenticated(Interface::contact));
    // The other interface is still unauthenticated.
    f.select_mgmt(Interface::contactless);
    CHECK(f.tx(Interface::contactless, "80 40 00 01") == sw::kSecurityStatusNotSatisfied);
    // Selecting another applet on the contact interface drops that auth.
    CHECK(f.tx(Interface::contact, "00 A4 04 00 08 A0 00 00 00 63 50 41 59") == sw::kOk);
    CHECK_FALSE(f.mgmt->authenticated(Interface::contact));
    // Power cycling likewise.
    f.select_mgmt(Interface::contact);
    CHECK(f.tx(Interface::contact, "80 20 00 00 04 31 32 33 34") == sw::kOk);
    f.card.power_off(Interface::contact);
    CHECK_FALSE(f.mgmt->authenticated(Interface::contact));
}

TEST_CASE("require_pin=false variant mutates state without verify") {
    MgmtConfig mc = Fixture::default_config();
    mc.require_pin = false;
    mc.mgmt_interfaces = {Interface::contact, Interface::contactless};
    Fixture f(mc);
    f.select_mgmt(Interface::contactless);
    CHECK(f.tx(Interface::contactless, "80 40 00 00") == sw::kOk);
    CHECK_FALSE(f.card.card_contactless());
}

TEST_CASE("config validation") {
    MgmtConfig mc;
    mc.pin = from_hex("31 32 33");  // too short
    CHECK_THROWS_AS(mc.validate(), ModelError);
    mc.pin = from_hex("31 32 FF 34");  // contains the delimiter
    CHECK_THROWS_AS(mc.validate(), ModelError);
    mc.pin = from_hex("31 32 33 34");
    mc.max_retries = 0;
    CHECK_THROWS_AS(mc.validate(), ModelError);
    mc.max_retries = 3;
    CHECK_NOTHROW(mc.validate());
}

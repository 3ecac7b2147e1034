#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cardsim/apdu.hpp"

using namespace cardsim;

TEST_CASE("case 1: header only") {
    const auto cmd = parse_command(from_hex("00 A4 04 00"));
    CHECK(cmd.cla == 0x00);
    CHECK(cmd.ins == 0xA4);
    CHECK(cmd.p1 == 0x04);
    CHECK(cmd.p2 == 0x00);
    CHECK(cmd.data.empty());
    CHECK_FALSE(cmd.le.has_value());
}

TEST_CASE("case 2: header plus Le; 0x00 decodes to 256") {
    const auto cmd = parse_command(from_hex("80 42 00 00 01"));
    CHECK(cmd.data.empty());
    REQUIRE(cmd.le.has_value());
    CHECK(*cmd.le == 1);
    const auto max = parse_command(from_hex("00 B0 00 00 00"));
    REQUIRE(max.le.has_value());
    CHECK(*max.le == 256);
}

TEST_CASE("case 3: header, Lc, data") {
    const auto cmd = parse_command(from_hex("80 20 00 00 04 31 32 33 34"));
    CHECK(cmd.data == from_hex("31 32 33 34"));
    CHECK_FALSE(cmd.le.has_value());
}

TEST_CASE("case 4: header, Lc, data, Le") {
    const auto cmd = parse_command(from_hex("00 A4 04 00 02 AA BB 00"));
    CHECK(cmd.data == from_hex("AA BB"));
    REQUIRE(cmd.le.has_value());
    CHECK(*cmd.le == 256);
}

TEST_CASE("malformed commands are rejected") {
    CHECK_THROWS_AS(parse_command(from_hex("00 A4 04")), ApduParseError);      // short header
    CHECK_THROWS_AS(parse_command(from_hex("")), ApduParseError);              // empty
    CHECK_THROWS_AS(parse_command(from_hex("00 A4 04 00 05 AA")), ApduParseError);  // truncated
    CHECK_THROWS_AS(parse_command(from_hex("00 A4 04 00 01 AA BB CC")), ApduParseError);  // extra
    // Lc = 0 is not a valid short form (that byte pattern is case 2 / extended).
    CHECK_THROWS_AS(parse_command(from_hex("00 A4 04 00 00 AA")), ApduParseError);
}

TEST_CASE("response serialization places the status word last, big-endian") {
    const ResponseApdu r{from_hex("01 02"), 0x9000};
    CHECK(serialize_response(r) == from_hex("01 02 90 00"));
    const auto parsed = parse_response(from_hex("01 02 90 00"));
    CHECK(parsed == r);
    CHECK_THROWS_AS(parse_response(from_hex("90")), ApduParseError);
}

TEST_CASE("hex helpers round-trip and reject junk") {
    CHECK(to_hex(from_hex("00 a4 04 00")) == "00 A4 04 00");
    CHECK(from_hex("00A40400") == from_hex("00 A4 04 00"));
    CHECK_THROWS_AS(from_hex("0"), ApduParseError);
    CHECK_THROWS_AS(from_hex("zz"), ApduParseError);
}

namespace {

CommandApdu random_command(std::mt19937& rng) {
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> kind(1, 4);
    CommandApdu c;
    c.cla = static_cast<std::uint8_t>(byte(rng));
    c.ins = static_cast<std::uint8_t>(byte(rng));
    c.p1 = static_cast<std::uint8_t>(byte(rng));
    c.p2 = static_cast<std::uint8_t>(byte(rng));
    const int k = kind(rng);
    if (k == 3 || k == 4) {
        std::uniform_int_distribution<int> len(1, 255);
        c.data.resize(static_cast<std::size_t>(len(rng)));
        for (auto& b : c.data) b = static_cast<std::uint8_t>(byte(rng));
    }
    if (k == 2 || k == 4) {
        std::uniform_int_distribution<int> le(1, 256);
        c.le = le(rng);
    }
    return c;
}

}  // namespace

TEST_CASE("randomized round-trip: parse(serialize(c)) == c") {
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const CommandApdu c = random_command(rng);
        CAPTURE(i);
        CHECK(parse_command(serialize_command(c)) == c);
    }
}

TEST_CASE("randomized mutations: length-corrupted commands are rejected") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> byte(0, 255);
    int rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        Bytes raw = serialize_command(random_command(rng));
        // Corrupt by changing the length: drop or append bytes.
        if (i % 2 == 0 && raw.size() > 4) {
            raw.pop_back();
            if (raw.size() == 4) raw.pop_back();  // header-only is valid, cut deeper
        } else {
            raw.push_back(static_cast<std::uint8_t>(byte(rng)));
            raw.push_back(static_cast<std::uint8_t>(byte(rng)));
        }
        try {
            const CommandApdu reparsed = parse_command(raw);
            // A mutation may still hit another valid encoding; it must then
            // re-serialize to the mutated bytes, not the original.
            CHECK(serialize_command(reparsed) == raw);
        } catch (const ApduParseError&) {
            ++rejected;
        }
    }
    CHECK(rejected > 500);
}

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cardsim/errors.hpp"

namespace cardsim {

using Bytes = std::vector<std::uint8_t>;

/// ISO 7816-4 short command APDU (cases 1-4). `le` holds the decoded
/// expected length, 1..256 (an encoded 0x00 means 256).
struct CommandApdu {
    std::uint8_t cla = 0;
    std::uint8_t ins = 0;
    std::uint8_t p1 = 0;
    std::uint8_t p2 = 0;
    Bytes data;
    std::optional<int> le;

    bool operator==(const CommandApdu&) const = default;
};

struct ResponseApdu {
    Bytes data;
    std::uint16_t sw = 0;

    bool operator==(const ResponseApdu&) const = default;
};

// Status words used by the card runtime and the management applet.
namespace sw {
inline constexpr std::uint16_t kOk = 0x9000;
inline constexpr std::uint16_t kWrongLength = 0x6700;
inline constexpr std::uint16_t kSecurityStatusNotSatisfied = 0x6982;
inline constexpr std::uint16_t kAuthMethodBlocked = 0x6983;
inline constexpr std::uint16_t kConditionsNotSatisfied = 0x6985;
inline constexpr std::uint16_t kFileNotFound = 0x6A82;
inline constexpr std::uint16_t kIncorrectP1P2 = 0x6A86;
inline constexpr std::uint16_t kReferenceNotFound = 0x6A88;
inline constexpr std::uint16_t kInsNotSupported = 0x6D00;
inline constexpr std::uint16_t kClaNotSupported = 0x6E00;
inline constexpr std::uint16_t kRetryBase = 0x63C0;  // low nibble = retries left
}  // namespace sw

/// Strict short-APDU parse: exact length, no trailing bytes tolerated.
/// Throws ApduParseError on malformed input.
CommandApdu parse_command(std::span<const std::uint8_t> bytes);

Bytes serialize_command(const CommandApdu& c);
Bytes serialize_response(const ResponseApdu& r);
ResponseApdu parse_response(std::span<const std::uint8_t> bytes);

/// Space-separated uppercase octets, e.g. "00 A4 04 00".
std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts optional whitespace between octets.
Bytes from_hex(const std::string& text);

}  // namespace cardsim

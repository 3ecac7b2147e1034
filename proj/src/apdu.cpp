#include "cardsim/apdu.hpp"

#include <cctype>

namespace cardsim {

CommandApdu parse_command(std::span<const std::uint8_t> bytes) {
    const std::size_t n = bytes.size();
    if (n < 4) throw ApduParseError("APDU shorter than the 4-byte header");
    CommandApdu cmd;
    cmd.cla = bytes[0];
    cmd.ins = bytes[1];
    cmd.p1 = bytes[2];
    cmd.p2 = bytes[3];
    if (n == 4) return cmd;  // case 1
    if (n == 5) {            // case 2
        cmd.le = bytes[4] == 0 ? 256 : bytes[4];
        return cmd;
    }
    const std::size_t lc = bytes[4];
    if (lc == 0) throw ApduParseError("extended-length APDUs are not supported");
    if (n == 5 + lc) {  // case 3
        cmd.data.assign(bytes.begin() + 5, bytes.end());
        return cmd;
    }
    if (n == 6 + lc) {  // case 4
        cmd.data.assign(bytes.begin() + 5, bytes.begin() + 5 + lc);
        cmd.le = bytes[n - 1] == 0 ? 256 : bytes[n - 1];
        return cmd;
    }
    throw ApduParseError("Lc inconsistent with APDU length");
}

Bytes serialize_command(const CommandApdu& c) {
    if (c.data.size() > 255) throw ApduParseError("command data exceeds 255 bytes");
    if (c.le && (*c.le < 1 || *c.le > 256)) throw ApduParseError("Le out of range");
    Bytes out{c.cla, c.ins, c.p1, c.p2};
    if (!c.data.empty()) {
        out.push_back(static_cast<std::uint8_t>(c.data.size()));
        out.insert(out.end(), c.data.begin(), c.data.end());
    }
    if (c.le) {
        out.push_back(static_cast<std::uint8_t>(*c.le == 256 ? 0 : *c.le));
    }
    return out;
}

Bytes serialize_response(const ResponseApdu& r) {
    Bytes out = r.data;
    out.push_back(static_cast<std::uint8_t>(r.sw >> 8));
    out.push_back(static_cast<std::uint8_t>(r.sw & 0xFF));
    return out;
}

ResponseApdu parse_response(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2) throw ApduParseError("response shorter than the status word");
    ResponseApdu r;
    r.data.assign(bytes.begin(), bytes.end() - 2);
    r.sw = static_cast<std::uint16_t>((bytes[bytes.size() - 2] << 8) |
                                      bytes[bytes.size() - 1]);
    return r;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char digits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(bytes.size() * 3);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(digits[bytes[i] >> 4]);
        out.push_back(digits[bytes[i] & 0xF]);
    }
    return out;
}

Bytes from_hex(const std::string& text) {
    Bytes out;
    int hi = -1;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (hi >= 0) throw ApduParseError("dangling hex nibble in: " + text);
            continue;
        }
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw ApduParseError(std::string("invalid hex character '") + ch + "'");
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<std::uint8_t>((hi << 4) | v));
            hi = -1;
        }
    }
    if (hi >= 0) throw ApduParseError("odd number of hex digits in: " + text);
    return out;
}

}  // namespace cardsim

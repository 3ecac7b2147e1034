#include "cardsim/geometry.hpp"

#include <cmath>
#include <string>

namespace cardsim {

void AntennaGeometry::validate() const {
    if (!(width > 0.0) || width > kId1Width) {
        throw InvalidGeometryError("antenna width " + std::to_string(width) +
                                   " m outside (0, 0.0856] m");
    }
    if (!(height > 0.0) || height > kId1Height) {
        throw InvalidGeometryError("antenna height " + std::to_string(height) +
                                   " m outside (0, 0.05398] m");
    }
    if (turns < 1) {
        throw InvalidGeometryError("turns must be >= 1, got " + std::to_string(turns));
    }
    if (!(wire_radius > 0.0)) {
        throw InvalidGeometryError("wire radius must be positive");
    }
    if (!(pitch > 2.0 * wire_radius)) {
        throw InvalidGeometryError("pitch must exceed the wire diameter");
    }
    const double min_extent = width < height ? width : height;
    if (!(2.0 * turns * pitch < min_extent)) {
        throw InvalidGeometryError("windings do not fit: 2*turns*pitch >= min(width, height)");
    }
}

bool AntennaGeometry::is_valid() const {
    try {
        validate();
        return true;
    } catch (const InvalidGeometryError&) {
        return false;
    }
}

double Segment::length() const {
    return std::hypot(x2 - x1, y2 - y1);
}

std::vector<Segment> segment_decomposition(const AntennaGeometry& g) {
    g.validate();
    std::vector<Segment> segments;
    segments.reserve(4 * static_cast<std::size_t>(g.turns));
    for (int i = 0; i < g.turns; ++i) {
        const double hw = g.width / 2.0 - i * g.pitch;
        const double hh = g.height / 2.0 - i * g.pitch;
        // Counterclockwise, starting at the lower-left corner.
        segments.push_back({-hw, -hh, hw, -hh});
        segments.push_back({hw, -hh, hw, hh});
        segments.push_back({hw, hh, -hw, hh});
        segments.push_back({-hw, hh, -hw, -hh});
    }
    return segments;
}

double total_wire_length(const AntennaGeometry& g) {
    double total = 0.0;
    for (const Segment& s : segment_decomposition(g)) {
        total += s.length();
    }
    return total;
}

}  // namespace cardsim

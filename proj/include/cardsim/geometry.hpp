#pragma once

#include <vector>

#include "cardsim/errors.hpp"

namespace cardsim {

// ID-1 card body, ISO/IEC 7810.
inline constexpr double kId1Width = 0.0856;
inline constexpr double kId1Height = 0.05398;

/// Rectangular spiral loop antenna. All lengths in meters; width/height are
/// the outer extent measured center-of-wire.
struct AntennaGeometry {
    double width = 0.0;
    double height = 0.0;
    int turns = 0;
    double pitch = 0.5e-3;        // center-to-center winding spacing
    double wire_radius = 56e-6;   // 112 um enameled wire

    void validate() const;
    bool is_valid() const;
};

/// Oriented straight wire segment in the card plane (meters).
struct Segment {
    double x1 = 0.0, y1 = 0.0;
    double x2 = 0.0, y2 = 0.0;

    double length() const;
};

/// Concentric-rectangle approximation of the spiral: turn i becomes a closed
/// rectangle shrunk by 2*i*pitch on each axis. Returns 4*turns segments, all
/// sharing the same circulation sense.
std::vector<Segment> segment_decomposition(const AntennaGeometry& g);

/// Total laid-wire length of the decomposition.
double total_wire_length(const AntennaGeometry& g);

}  // namespace cardsim

#pragma once

#include "cardsim/geometry.hpp"

namespace cardsim {

inline constexpr double kMu0 = 1.25663706212e-6;  // H/m

/// Partial self-inductance of a straight round wire, uniform current.
double wire_self_inductance(double length, double wire_radius);

/// Mutual inductance of two parallel filaments. `axial_offset_*` are the
/// endpoints of the second filament projected onto the first one's axis
/// (first filament spans [0, length1]); `d` is the line-to-line distance.
double parallel_filament_mutual(double length1, double axial_start2, double axial_end2,
                                double d);

/// Greenhouse-style estimate: sum of segment self-inductances plus signed
/// mutual terms over every parallel segment pair of the spiral decomposition.
double loop_inductance(const AntennaGeometry& g);

}  // namespace cardsim

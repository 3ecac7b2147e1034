#include "cardsim/inductance.hpp"

#include <cmath>
#include <numbers>

namespace cardsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Antiderivative kernel for the filament-pair integral.
double filament_kernel(double u, double d) {
    return u * std::asinh(u / d) - std::hypot(u, d);
}

struct SegmentVec {
    double ax, ay, bx, by;
    double dx, dy;  // unit direction
    double len;
};

SegmentVec to_vec(const Segment& s) {
    SegmentVec v{s.x1, s.y1, s.x2, s.y2, 0.0, 0.0, s.length()};
    v.dx = (s.x2 - s.x1) / v.len;
    v.dy = (s.y2 - s.y1) / v.len;
    return v;
}

}  // namespace

double wire_self_inductance(double length, double wire_radius) {
    return kMu0 * length / (2.0 * kPi) *
           (std::log(2.0 * length / wire_radius) - 0.75);
}

double parallel_filament_mutual(double length1, double axial_start2, double axial_end2,
                                double d) {
    const double a2 = axial_start2 < axial_end2 ? axial_start2 : axial_end2;
    const double b2 = axial_start2 < axial_end2 ? axial_end2 : axial_start2;
    const double sum = filament_kernel(length1 - a2, d) - filament_kernel(-a2, d) -
                       filament_kernel(length1 - b2, d) + filament_kernel(-b2, d);
    return kMu0 / (4.0 * kPi) * sum;
}

double loop_inductance(const AntennaGeometry& g) {
    const std::vector<Segment> segments = segment_decomposition(g);
    std::vector<SegmentVec> vecs;
    vecs.reserve(segments.size());
    for (const Segment& s : segments) vecs.push_back(to_vec(s));

    double total = 0.0;
    for (const SegmentVec& v : vecs) {
        total += wire_self_inductance(v.len, g.wire_radius);
    }
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            const SegmentVec& p = vecs[i];
            const SegmentVec& q = vecs[j];
            const double dot = p.dx * q.dx + p.dy * q.dy;
            if (std::abs(dot) < 0.5) continue;  // perpendicular pair, no coupling
            // Lateral distance between the two parallel lines.
            const double rx = q.ax - p.ax;
            const double ry = q.ay - p.ay;
            const double d = std::abs(rx * p.dy - ry * p.dx);
            if (d < g.wire_radius) continue;  // collinear; absent in rectangle stacks
            // Project q's endpoints onto p's axis (p spans [0, len]).
            const double t1 = rx * p.dx + ry * p.dy;
            const double t2 = (q.bx - p.ax) * p.dx + (q.by - p.ay) * p.dy;
            const double m = parallel_filament_mutual(p.len, t1, t2, d);
            total += 2.0 * (dot > 0.0 ? m : -m);
        }
    }
    return total;
}

}  // namespace cardsim

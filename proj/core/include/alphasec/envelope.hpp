#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphasec/core.hpp"
#include "alphasec/section.hpp"

namespace alphasec {

/// Direction labels per the velocity interval V: forwards when V reaches
/// above +eps_v, backwards when it reaches below -eps_v, zero when it meets
/// [-eps_v, eps_v]. Labels may overlap at singular directions.
enum DirectionLabel : uint8_t {
    kForwards = 1,
    kBackwards = 2,
    kZero = 4,
};

uint8_t classify_velocity(const VelocityInterval& v, double eps_v);
std::vector<std::string> label_names(uint8_t labels);

struct EnvelopeSample {
    Angle theta;
    Point m;
    VelocityInterval v;
    uint8_t labels = 0;
    bool singular = false;
};

struct EnvelopeCurve {
    double alpha = 0.0;
    std::vector<EnvelopeSample> samples; // strictly increasing theta over [0, 2*pi)
    bool closed = true;
};

struct FBZInterval {
    double theta_start = 0.0;
    double theta_end = 0.0; // may exceed 2*pi for the wrapping interval
    uint8_t labels = 0;
};

struct FBZReport {
    double alpha = 0.0;
    std::vector<FBZInterval> intervals; // partition of S^1, adjacent label sets differ
    std::vector<Point> cusps;
    // directions where the parallel-supporting-line test disagrees with the
    // V-based zero test (logged, not reconciled)
    std::vector<double> support_test_mismatches;
};

/// Sample the envelope of alpha-sections: n uniform base directions plus the
/// vertex passages, refined by bisection (depth 20) wherever the label set
/// changes or the midpoint moves further than the velocities predict.
/// Requires 0 < alpha < 1 and n >= 16.
EnvelopeCurve sample_envelope(const ConvexBody& body, double alpha, int n);

uint8_t classify_direction(const ConvexBody& body, double alpha, Angle theta);

/// Merge the refined sampling into intervals of constant label set and locate
/// the cusps (zero-set crossings with a forwards/backwards flip), each cusp
/// direction refined to 1e-10.
FBZReport fbz_partition(const ConvexBody& body, double alpha, int n);

/// One step of the outer (dual) billiard around a core region or point:
/// reflect x through the tangency point of its right tangent to the table.
/// Ties at a polygon table break toward the smaller vertex index.
Point outer_billiard_step(const CoreResult& table, Point x);

} // namespace alphasec

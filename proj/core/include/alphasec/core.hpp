#pragma once

#include <optional>
#include <vector>

#include "alphasec/section.hpp"

namespace alphasec {

/// A family of oriented tangent lines point + R*u(theta), thetas strictly
/// increasing within [0, 2*pi). This is the general "curve parametrized by
/// its tangent" input: the core below works for any such family, not only
/// for alpha-section envelopes.
struct TangentLineEntry {
    Angle theta;
    Point point;
    std::optional<VelocityInterval> v;
};

struct TangentLineFamily {
    std::vector<TangentLineEntry> entries;
};

enum class CoreKind { Region, SinglePoint, Empty };

/// Intersection of the left half-planes of a tangent line family: a strictly
/// convex region, a single point, or empty.
struct CoreResult {
    CoreKind kind = CoreKind::Empty;
    std::optional<ConvexBody> region; // set when kind == Region
    Point point{};                    // set when kind == SinglePoint
    double inradius_estimate = 0.0;

    bool empty() const { return kind == CoreKind::Empty; }
};

struct CriticalValues {
    double alpha_B = 0.0;
    double alpha_Z = 0.0;
    double alpha_K = 0.0;
    std::optional<Point> T;
    double tol = 0.0;
    // one-sided membership of the zero set at alpha_Z -+ tol (whether I_Z is
    // closed at its endpoint is numerically undecidable)
    bool z_nonempty_below = false;
    bool z_nonempty_above = false;
};

/// Classification margin separating region / point / empty cores.
inline double core_eps(double diameter) { return 1e-7 * diameter; }

/// Intersect the left half-planes {<x, u'(theta)> >= <point, u'(theta)>} of
/// the family. Requires at least 3 entries whose directions span more than a
/// half turn (else InsufficientFamily). Constraints are relaxed by eps_core
/// when testing feasibility, so "empty" means infeasible by more than
/// eps_core; a nonempty intersection of diameter <= 4 * eps_core collapses
/// to a point.
CoreResult core_of_family(const TangentLineFamily& family, double eps_core);

TangentLineFamily family_from_sections(const ConvexBody& body, double alpha, int n);

/// The alpha-core: intersection of the left half-planes of all
/// alpha-sections, sampled over n refined directions plus vertex passages.
/// Empty for alpha > 1/2. Requires 0 < alpha < 1 and n >= 64.
CoreResult alpha_core(const ConvexBody& body, double alpha, int n);

/// Smallest alpha with a nonempty backwards set, by bisection of the
/// monotone predicate B(alpha) != {} (refined scan, vertex passages
/// injected). 1/2 exactly for centrally symmetric bodies.
double critical_alpha_B(const ConvexBody& body, double tol);

/// Smallest alpha with a nonempty zero set; I_Z is an interval around 1/2,
/// which justifies the bisection.
double critical_alpha_Z(const ConvexBody& body, double tol);

/// Largest alpha with a nonempty core, together with the point the core
/// collapses to there.
std::pair<double, std::optional<Point>> critical_alpha_K(const ConvexBody& body, double tol);

CriticalValues critical_values(const ConvexBody& body, double tol);

// scan used by the critical-value predicates; exposed for tests
struct VelocityScan {
    double min_v = 0.0;        // most negative velocity seen
    double max_v = 0.0;        // most positive velocity seen
    double zero_gap = 0.0;     // smallest distance from any V interval to 0
    bool sign_change = false;  // a regular sign change was bracketed
};
VelocityScan scan_velocities(const ConvexBody& body, double alpha, int n);

} // namespace alphasec

#pragma once

#include <vector>

#include "alphasec/body.hpp"

namespace alphasec {

// relative area residual accepted when solving for an alpha-section
inline constexpr double kSectionEps = 1e-12;

/// A chord record for one alpha-section. Endpoints are ordered along u(theta),
/// so <c - b, u> > 0; m is the midpoint and h the half-length. The four angles
/// are measured against u(theta) from the boundary tangent cones: beta at b
/// between the incoming/outgoing tangent and u, gamma at c between u and the
/// tangent. Left and right values differ exactly when the endpoint is a
/// corner, and always satisfy beta_r <= beta_l and gamma_l <= gamma_r.
struct Chord {
    OrientedLine line;
    Point b, c, m;
    double h = 0.0;
    double beta_l = 0.0, beta_r = 0.0;
    double gamma_l = 0.0, gamma_r = 0.0;

    bool b_is_corner() const { return beta_l != beta_r; }
    bool c_is_corner() const { return gamma_l != gamma_r; }
    bool singular() const { return b_is_corner() || c_is_corner(); }
};

/// The pair of one-sided envelope velocities (signed radii of curvature).
/// The segment V spans [min, max]; both sides coincide at regular directions.
struct VelocityInterval {
    double v_l = 0.0;
    double v_r = 0.0;

    double min() const { return v_l < v_r ? v_l : v_r; }
    double max() const { return v_l < v_r ? v_r : v_l; }
    bool contains(double w) const { return min() <= w && w <= max(); }
};

/// The unique alpha-section of direction theta: the oriented line (theta, t)
/// with |right part of K| = alpha * |K|. Solved by monotone bisection on t
/// over the support interval; the area residual is at most kSectionEps * |K|.
/// Throws AlphaOutOfRange unless 0 < alpha < 1.
OrientedLine alpha_section(const ConvexBody& body, double alpha, Angle theta);

/// Chord record of a line meeting the body interior. Endpoints within
/// boundary_eps() of a polygon vertex snap to that vertex, so corner angles
/// come from the vertex cone. Throws NoIntersection for a miss or a
/// tangency.
Chord chord(const ConvexBody& body, const OrientedLine& line);

/// Envelope velocity of the alpha-section at theta:
/// v = (h/2)(cot beta + cot gamma), one-sided values at corners.
VelocityInterval velocity(const ConvexBody& body, double alpha, Angle theta);
VelocityInterval velocity_of_chord(const Chord& ch);

/// Directions at which the alpha-section passes through a polygon vertex,
/// sorted in [0, 2*pi). Empty for discs. These are the singular directions
/// of the alpha-envelope.
std::vector<Angle> vertex_passages(const ConvexBody& body, double alpha, int grid = 512);

} // namespace alphasec

#pragma once

#include <optional>
#include <vector>

#include "alphasec/geometry.hpp"

namespace alphasec {

struct Disc {
    Point center;
    double radius = 0.0;
};

/// Where a point sits on a polygon boundary: either in the interior of an
/// edge (vertex i -> vertex i+1) or at vertex i itself.
struct BoundaryLocation {
    bool at_vertex = false;
    int index = -1; // edge index or vertex index
};

/// A planar convex body: a canonical strictly convex polygon (vertices in
/// counterclockwise order) or an analytic disc. Immutable after construction;
/// every operation on it is a pure function.
class ConvexBody {
public:
    bool is_polygon() const { return !vertices_.empty(); }
    bool is_disc() const { return vertices_.empty(); }

    const std::vector<Point>& vertices() const { return vertices_; }
    const Disc& disc() const { return disc_; }

    double area() const { return area_; }
    double diameter() const { return diameter_; }
    Point bbox_min() const { return bbox_min_; }
    Point bbox_max() const { return bbox_max_; }

    // boundary membership tolerance used for chord endpoint snapping
    double boundary_eps() const { return 1e-9 * diameter_; }

    friend ConvexBody make_polygon(std::vector<Point> pts, double collapse_eps_rel);
    friend ConvexBody make_disc(Point center, double radius);

private:
    ConvexBody() = default;

    std::vector<Point> vertices_; // empty for discs
    Disc disc_{};
    double area_ = 0.0;
    double diameter_ = 0.0;
    Point bbox_min_{}, bbox_max_{};
};

/// Build a canonical convex polygon from at least three points. The convex
/// hull of the input is taken, so the input order is not preserved; duplicate
/// and collinear hull vertices are collapsed (cross products below
/// collapse_eps_rel * bounding-box area are treated as zero, so remaining
/// corners are always genuine). Throws DegenerateInput when the hull area
/// vanishes.
ConvexBody make_polygon(std::vector<Point> pts, double collapse_eps_rel = 1e-12);

ConvexBody make_disc(Point center, double radius);

/// Area of the part of the body on the right of the oriented line,
/// |right half-plane ∩ K|. Exact clipping for polygons, the circular
/// segment formula for discs. 0 if the body lies entirely left, area() if
/// entirely right.
double area_right(const ConvexBody& body, const OrientedLine& line);

/// Left- and right-tangent directions of the boundary at a boundary point,
/// following the counterclockwise traversal. Equal iff the point is regular.
struct TangentCone {
    Point at;
    Angle dir_left;  // incoming direction (limit from the ccw-earlier side)
    Angle dir_right; // outgoing direction
    bool is_corner() const;
};

/// Throws NotOnBoundary if p is farther than boundary_eps() from the boundary.
TangentCone tangent_cone(const ConvexBody& body, Point p);

Point mass_center(const ConvexBody& body);

/// Center of central symmetry if the body has one within tol, otherwise
/// nullopt. A polygon qualifies when it has an even vertex count and all
/// opposite vertex pairs average to a common point.
std::optional<Point> symmetry_center(const ConvexBody& body, double tol);

// -- boundary and membership queries ----------------------------------------

bool contains(const ConvexBody& body, Point p, double tol = 0.0);
double distance_to_boundary(const ConvexBody& body, Point p);
BoundaryLocation locate_boundary(const ConvexBody& body, Point p);

// support function h(dir) = max_{x in K} <x, dir>, dir need not be unit
double support(const ConvexBody& body, Vec2 dir);

/// Intersection of the line with the body as a parameter interval along the
/// line direction; empty (s_lo > s_hi) when the line misses the body.
struct LineSpan {
    double s_lo = 1.0;
    double s_hi = 0.0;
    bool hit() const { return s_lo <= s_hi; }
};
LineSpan clip_line(const ConvexBody& body, const OrientedLine& line);

/// Hausdorff distance between two convex bodies (exact up to the support
/// breakpoint structure of the two normal fans).
double hausdorff(const ConvexBody& a, const ConvexBody& b);

} // namespace alphasec

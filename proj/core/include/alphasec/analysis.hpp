#pragma once

#include <array>
#include <vector>

#include "alphasec/core.hpp"
#include "alphasec/section.hpp"

namespace alphasec {

/// A chord whose midpoint is the query point, together with the area
/// fraction it cuts off (reported with the convention 0 < alpha <= 1/2; the
/// stored line is oriented so its right part has that fraction).
struct BisectedChord {
    Angle theta;
    double alpha = 0.0;
    Chord chord;
};

struct BisectedChords {
    bool continuum = false; // every chord through p is bisected (central symmetry)
    std::vector<BisectedChord> chords;
};

/// All chords of the body whose midpoint is p (NotInterior if p is not
/// strictly inside). The signed midpoint offset along the chord is scanned
/// over 2048 directions of [0, pi) and each sign change is bisected to 1e-12;
/// duplicate roots within 1e-8 merge. If the offset vanishes identically the
/// continuum flag is set instead.
BisectedChords chords_bisected_by(const ConvexBody& body, Point p);

/// min alpha / max alpha over the chords bisected by the mass center;
/// 1 for the continuum case.
double asymmetry_quotient(const ConvexBody& body);

/// Conic fitted through five envelope samples inside the window, with the
/// residual of twenty held-out samples. For a polygon whose chord endpoints
/// stay on one fixed pair of non-parallel edges the fit is an exact
/// hyperbola.
struct ConicFit {
    // a x^2 + b xy + c y^2 + d x + e y + f = 0, normalized to max |coeff| = 1
    std::array<double, 6> coeffs{};
    double residual = 0.0;
    double discriminant = 0.0; // b^2 - 4ac, positive for a hyperbola
    bool is_hyperbola() const { return discriminant > 0.0; }
};

/// Throws RegimeChange if the endpoint edge pair changes inside the window
/// and ParallelEdges if the pair is parallel (the midpoints are then
/// collinear and the conic degenerates).
ConicFit hyperbola_arc_check(const ConvexBody& body, double alpha, Angle window_start,
                             Angle window_end);

/// Whether the alpha-core of `outer` is contained in the alpha-core of
/// `inner` (empty cores are contained in everything). NotNested if inner is
/// not inside outer.
bool core_containment(const ConvexBody& inner, const ConvexBody& outer, double alpha, int n);

/// The critical containment threshold for the inscribed-disc-in-equilateral-
/// triangle pair: solves 1 - (3/2)(1 - sqrt(1 - 2a)) = cos t together with
/// a = (t - cos t sin t)/pi, to 1e-10.
double solve_alpha1();

struct ConjectureWitness {
    bool found = false;
    bool disjoint = false; // the section misses the inner body's interior
    double theta = 0.0;
    double beta = 0.0; // right-part fraction of the inner body
};

/// Scan the alpha-sections of `outer` for one that misses the interior of
/// `inner` or cuts it with fraction beta <= alpha + 1e-9. Returns the first
/// witness in theta order; when none exists the minimizing direction is
/// returned with found = false (a violation candidate).
ConjectureWitness conjecture_check(const ConvexBody& inner, const ConvexBody& outer, double alpha,
                                   int n);

} // namespace alphasec

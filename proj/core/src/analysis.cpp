#include "alphasec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphasec/errors.hpp"

namespace alphasec {

namespace {

// signed offset of p from the midpoint of the full chord through p of
// direction phi, measured along u(phi); zero iff p bisects the chord
double midpoint_offset(const ConvexBody& body, Point p, double phi) {
    OrientedLine line = OrientedLine::through(p, Angle(phi));
    LineSpan span = clip_line(body, line);
    return line.param_of(p) - 0.5 * (span.s_lo + span.s_hi);
}

bool body_inside(const ConvexBody& inner, const ConvexBody& outer, double tol) {
    if (inner.is_polygon()) {
        for (const Point& v : inner.vertices())
            if (!contains(outer, v, tol)) return false;
        return true;
    }
    const Disc& d = inner.disc();
    if (outer.is_disc())
        return dist(d.center, outer.disc().center) + d.radius <= outer.disc().radius + tol;
    const std::vector<Point>& v = outer.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        Vec2 e = v[(i + 1) % v.size()] - v[i];
        if (cross(e, d.center - v[i]) / norm(e) < d.radius - tol) return false;
    }
    return true;
}

} // namespace

BisectedChords chords_bisected_by(const ConvexBody& body, Point p) {
    const double eps = body.boundary_eps();
    if (!contains(body, p, -eps) || distance_to_boundary(body, p) <= eps)
        fail(ErrorKind::NotInterior, "point not strictly inside the body");

    const int grid = 2048;
    BisectedChords out;

    double max_abs = 0.0;
    std::vector<double> f(grid + 1);
    for (int k = 0; k <= grid; ++k) {
        f[static_cast<size_t>(k)] = midpoint_offset(body, p, kPi * k / grid);
        max_abs = std::max(max_abs, std::fabs(f[static_cast<size_t>(k)]));
    }
    if (max_abs < 1e-10 * body.diameter()) {
        out.continuum = true;
        return out;
    }

    std::vector<double> roots;
    for (int k = 0; k < grid; ++k) {
        double lo = kPi * k / grid, hi = kPi * (k + 1) / grid;
        double flo = f[static_cast<size_t>(k)], fhi = f[static_cast<size_t>(k + 1)];
        if (flo == 0.0) {
            roots.push_back(lo);
            continue;
        }
        if (flo * fhi > 0.0) continue;
        while (hi - lo > 1e-12) {
            double mid = 0.5 * (lo + hi);
            double fm = midpoint_offset(body, p, mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0)
                hi = mid;
            else {
                lo = mid;
                flo = fm;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return b - a < 1e-8; }),
                roots.end());
    // a root at pi duplicates the one at 0
    while (roots.size() > 1 && roots.back() > kPi - 1e-8 && roots.front() < 1e-8) roots.pop_back();

    for (double phi : roots) {
        OrientedLine line = OrientedLine::through(p, Angle(phi));
        double frac = area_right(body, line) / body.area();
        if (frac > 0.5) {
            line = line.reversed();
            frac = 1.0 - frac;
        }
        BisectedChord bc;
        bc.theta = line.theta;
        bc.alpha = frac;
        bc.chord = chord(body, line);
        out.chords.push_back(bc);
    }
    return out;
}

double asymmetry_quotient(const ConvexBody& body) {
    BisectedChords bc = chords_bisected_by(body, mass_center(body));
    if (bc.continuum) return 1.0;
    double lo = 1.0, hi = 0.0;
    for (const BisectedChord& c : bc.chords) {
        lo = std::min(lo, c.alpha);
        hi = std::max(hi, c.alpha);
    }
    return lo / hi;
}

ConicFit hyperbola_arc_check(const ConvexBody& body, double alpha, Angle window_start,
                             Angle window_end) {
    if (!body.is_polygon()) fail(ErrorKind::BadInput, "hyperbola arcs need a polygon body");

    const int count = 25;
    const double span = Angle::canonical(window_end.rad() - window_start.rad());
    std::vector<Point> pts(count);
    BoundaryLocation b0, c0;
    for (int k = 0; k < count; ++k) {
        Angle th(window_start.rad() + span * k / (count - 1));
        Chord ch = chord(body, alpha_section(body, alpha, th));
        BoundaryLocation lb = locate_boundary(body, ch.b);
        BoundaryLocation lc = locate_boundary(body, ch.c);
        if (lb.at_vertex || lc.at_vertex)
            fail(ErrorKind::RegimeChange, "chord endpoint crosses a vertex inside the window");
        if (k == 0) {
            b0 = lb;
            c0 = lc;
        } else if (lb.index != b0.index || lc.index != c0.index) {
            fail(ErrorKind::RegimeChange, "endpoint edge pair changes inside the window");
        }
        pts[static_cast<size_t>(k)] = ch.m;
    }

    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    Vec2 eb = v[(static_cast<size_t>(b0.index) + 1) % n] - v[static_cast<size_t>(b0.index)];
    Vec2 ec = v[(static_cast<size_t>(c0.index) + 1) % n] - v[static_cast<size_t>(c0.index)];
    if (std::fabs(cross(normalized(eb), normalized(ec))) < 1e-9)
        fail(ErrorKind::ParallelEdges, "endpoint edges are parallel, midpoints are collinear");

    // fit the conic through five spread samples: nullspace of a 5x6 system
    const int pick[5] = {0, 6, 12, 18, 24};
    double mat[5][6];
    for (int r = 0; r < 5; ++r) {
        Point q = pts[static_cast<size_t>(pick[r])];
        mat[r][0] = q.x * q.x;
        mat[r][1] = q.x * q.y;
        mat[r][2] = q.y * q.y;
        mat[r][3] = q.x;
        mat[r][4] = q.y;
        mat[r][5] = 1.0;
    }
    int col_of_row[5];
    bool used[6] = {false, false, false, false, false, false};
    for (int r = 0; r < 5; ++r) {
        // full pivoting over the remaining rows and columns
        int pr = -1, pc = -1;
        double best = 0.0;
        for (int rr = r; rr < 5; ++rr)
            for (int c = 0; c < 6; ++c)
                if (!used[c] && std::fabs(mat[rr][c]) > best) {
                    best = std::fabs(mat[rr][c]);
                    pr = rr;
                    pc = c;
                }
        if (pc < 0 || best < 1e-14)
            fail(ErrorKind::ToleranceFailure, "conic fit is rank deficient");
        for (int c = 0; c < 6; ++c) std::swap(mat[r][c], mat[pr][c]);
        used[pc] = true;
        col_of_row[r] = pc;
        double inv = 1.0 / mat[r][pc];
        for (int c = 0; c < 6; ++c) mat[r][c] *= inv;
        for (int rr = 0; rr < 5; ++rr) {
            if (rr == r) continue;
            double factor = mat[rr][pc];
            for (int c = 0; c < 6; ++c) mat[rr][c] -= factor * mat[r][c];
        }
    }
    int free_col = 0;
    while (used[free_col]) ++free_col;
    std::array<double, 6> coeffs{};
    coeffs[static_cast<size_t>(free_col)] = 1.0;
    for (int r = 0; r < 5; ++r)
        coeffs[static_cast<size_t>(col_of_row[r])] = -mat[r][free_col];
    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::fabs(c));
    for (double& c : coeffs) c /= scale;

    ConicFit fit;
    fit.coeffs = coeffs;
    fit.discriminant = coeffs[1] * coeffs[1] - 4.0 * coeffs[0] * coeffs[2];
    for (int k = 0; k < count; ++k) {
        bool held_out = true;
        for (int p5 : pick)
            if (p5 == k) held_out = false;
        if (!held_out) continue;
        Point q = pts[static_cast<size_t>(k)];
        double val = coeffs[0] * q.x * q.x + coeffs[1] * q.x * q.y + coeffs[2] * q.y * q.y +
                     coeffs[3] * q.x + coeffs[4] * q.y + coeffs[5];
        fit.residual = std::max(fit.residual, std::fabs(val));
    }
    return fit;
}

bool core_containment(const ConvexBody& inner, const ConvexBody& outer, double alpha, int n) {
    if (!body_inside(inner, outer, outer.boundary_eps()))
        fail(ErrorKind::NotNested, "inner body not contained in outer body");
    CoreResult co = alpha_core(outer, alpha, n);
    if (co.kind == CoreKind::Empty) return true;
    CoreResult ci = alpha_core(inner, alpha, n);
    if (ci.kind == CoreKind::Empty) return false;
    const double tol = 1e-6 * outer.diameter();
    if (ci.kind == CoreKind::SinglePoint) {
        if (co.kind == CoreKind::SinglePoint) return dist(co.point, ci.point) <= tol;
        return false;
    }
    if (co.kind == CoreKind::SinglePoint) return contains(*ci.region, co.point, tol);
    for (const Point& v : co.region->vertices())
        if (!contains(*ci.region, v, tol)) return false;
    return true;
}

double solve_alpha1() {
    auto segment_alpha = [](double t) { return (t - std::cos(t) * std::sin(t)) / kPi; };
    auto g = [&](double t) {
        double a = segment_alpha(t);
        return 1.0 - 1.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 2.0 * a))) - std::cos(t);
    };
    double lo = 0.5, hi = 0.5 * kPi; // brackets the nontrivial root
    double glo = g(lo);
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-13) break;
    }
    return segment_alpha(0.5 * (lo + hi));
}

ConjectureWitness conjecture_check(const ConvexBody& inner, const ConvexBody& outer, double alpha,
                                   int n) {
    if (!body_inside(inner, outer, outer.boundary_eps()))
        fail(ErrorKind::NotNested, "inner body not contained in outer body");
    const double eps = 1e-9;

    auto beta_of = [&](double th) -> std::pair<bool, double> {
        OrientedLine line = alpha_section(outer, alpha, Angle(th));
        LineSpan span = clip_line(inner, line);
        if (!span.hit() || span.s_hi - span.s_lo <= 2.0 * inner.boundary_eps())
            return {true, 0.0}; // misses the interior
        return {false, area_right(inner, line) / inner.area()};
    };

    ConjectureWitness best;
    best.beta = std::numeric_limits<double>::max();
    for (int k = 0; k < n; ++k) {
        double th = kTwoPi * k / n;
        auto [disjoint, beta] = beta_of(th);
        if (disjoint) return {true, true, th, 0.0};
        if (beta <= alpha + eps) return {true, false, th, beta};
        if (beta < best.beta) {
            best.theta = th;
            best.beta = beta;
        }
    }
    // squeeze the minimum by golden-section around the best sample
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = best.theta - kTwoPi / n, hi = best.theta + kTwoPi / n;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    auto value = [&](double th) {
        auto [disjoint, beta] = beta_of(th);
        return disjoint ? 0.0 : beta;
    };
    double f1 = value(x1), f2 = value(x2);
    for (int iter = 0; iter < 80; ++iter) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = value(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = value(x2);
        }
    }
    double th = 0.5 * (lo + hi);
    auto [disjoint, beta] = beta_of(th);
    if (disjoint) return {true, true, Angle::canonical(th), 0.0};
    if (beta <= alpha + eps) return {true, false, Angle::canonical(th), beta};
    best.found = false;
    best.theta = Angle::canonical(th);
    best.beta = beta;
    return best;
}

} // namespace alphasec

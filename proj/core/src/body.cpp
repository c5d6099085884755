#include "alphasec/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphasec/errors.hpp"

namespace alphasec {

namespace {

double shoelace(const std::vector<Point>& v) {
    double a = 0.0;
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % n];
        a += cross(p, q);
    }
    return 0.5 * a;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper chain
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// max pairwise vertex distance by rotating calipers
double polygon_diameter(const std::vector<Point>& v) {
    const size_t n = v.size();
    if (n < 2) return 0.0;
    double best = 0.0;
    size_t j = 1;
    for (size_t i = 0; i < n; ++i) {
        Vec2 e = v[(i + 1) % n] - v[i];
        while (std::fabs(cross(e, v[(j + 1) % n] - v[i])) >
               std::fabs(cross(e, v[j] - v[i]))) {
            j = (j + 1) % n;
        }
        best = std::max(best, dist(v[i], v[j]));
        best = std::max(best, dist(v[(i + 1) % n], v[j]));
    }
    return best;
}

double point_segment_dist(Point p, Point a, Point b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 <= 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

} // namespace

ConvexBody make_polygon(std::vector<Point> pts, double collapse_eps_rel) {
    for (const Point& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            fail(ErrorKind::BadInput, "non-finite polygon vertex");
    }
    if (pts.size() < 3) fail(ErrorKind::DegenerateInput, "polygon needs at least 3 points");

    std::vector<Point> hull = convex_hull(std::move(pts));

    Point lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Point hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Point& p : hull) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    const double bbox_area = (hi.x - lo.x) * (hi.y - lo.y);
    const double eps_area = collapse_eps_rel * std::max(bbox_area, 1e-300);

    if (hull.size() < 3 || shoelace(hull) <= eps_area)
        fail(ErrorKind::DegenerateInput, "hull area vanishes");

    // drop vertices whose corner is flat within eps_area (cross product is
    // twice the corner triangle area)
    std::vector<Point> out;
    out.reserve(hull.size());
    for (size_t pass = 0; pass < hull.size(); ++pass) {
        out.clear();
        const size_t n = hull.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& prev = hull[(i + n - 1) % n];
            const Point& cur = hull[i];
            const Point& next = hull[(i + 1) % n];
            if (std::fabs(cross(cur - prev, next - cur)) > 2.0 * eps_area) out.push_back(cur);
        }
        if (out.size() == hull.size() || out.size() < 3) break;
        hull = out;
    }
    if (out.size() >= 3) hull = out;
    if (hull.size() < 3) fail(ErrorKind::DegenerateInput, "polygon collapses to a segment");

    // canonical start: lexicographically smallest vertex first
    size_t start = 0;
    for (size_t i = 1; i < hull.size(); ++i) {
        if (hull[i].x < hull[start].x || (hull[i].x == hull[start].x && hull[i].y < hull[start].y))
            start = i;
    }
    std::rotate(hull.begin(), hull.begin() + static_cast<long>(start), hull.end());

    ConvexBody body;
    body.vertices_ = std::move(hull);
    body.area_ = shoelace(body.vertices_);
    body.diameter_ = polygon_diameter(body.vertices_);
    body.bbox_min_ = lo;
    body.bbox_max_ = hi;
    return body;
}

ConvexBody make_disc(Point center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.x) ||
        !std::isfinite(center.y))
        fail(ErrorKind::BadInput, "disc needs a finite center and radius > 0");
    ConvexBody body;
    body.disc_ = Disc{center, radius};
    body.area_ = kPi * radius * radius;
    body.diameter_ = 2.0 * radius;
    body.bbox_min_ = {center.x - radius, center.y - radius};
    body.bbox_max_ = {center.x + radius, center.y + radius};
    return body;
}

double area_right(const ConvexBody& body, const OrientedLine& line) {
    if (body.is_disc()) {
        const Disc& d = body.disc();
        const double R = d.radius;
        double s = (line.offset - dot(d.center, line.normal())) / R;
        if (s <= -1.0) return 0.0;
        if (s >= 1.0) return body.area();
        return R * R * (std::acos(-s) + s * std::sqrt(1.0 - s * s));
    }
    // clip the vertex chain against {signed_dist <= 0} and take the area
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    std::vector<Point> kept;
    kept.reserve(n + 2);
    double dprev = line.signed_dist(v[0]);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        double da = dprev;
        double db = line.signed_dist(b);
        dprev = db;
        if (da <= 0.0) kept.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            double t = da / (da - db);
            kept.push_back(a + t * (b - a));
        }
    }
    if (kept.size() < 3) return 0.0; // fully left or touching
    return shoelace(kept);
}

bool TangentCone::is_corner() const { return angular_dist(dir_left.rad(), dir_right.rad()) > 1e-12; }

TangentCone tangent_cone(const ConvexBody& body, Point p) {
    const double eps = body.boundary_eps();
    if (body.is_disc()) {
        const Disc& d = body.disc();
        if (std::fabs(dist(p, d.center) - d.radius) > eps)
            fail(ErrorKind::NotOnBoundary, "point not on the disc boundary");
        Vec2 radial = normalized(p - d.center);
        Angle tangent(std::atan2(radial.x, -radial.y)); // angle of rot90ccw(radial)
        return {p, tangent, tangent};
    }
    BoundaryLocation loc = locate_boundary(body, p);
    if (loc.index < 0) fail(ErrorKind::NotOnBoundary, "point not on the polygon boundary");
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    if (loc.at_vertex) {
        const size_t i = static_cast<size_t>(loc.index);
        Vec2 din = v[i] - v[(i + n - 1) % n];
        Vec2 dout = v[(i + 1) % n] - v[i];
        return {v[i], Angle(std::atan2(din.y, din.x)), Angle(std::atan2(dout.y, dout.x))};
    }
    const size_t i = static_cast<size_t>(loc.index);
    Vec2 e = v[(i + 1) % n] - v[i];
    Angle dir(std::atan2(e.y, e.x));
    return {p, dir, dir};
}

Point mass_center(const ConvexBody& body) {
    if (body.is_disc()) return body.disc().center;
    const std::vector<Point>& v = body.vertices();
    // triangle fan from v[0]
    double area2 = 0.0;
    Vec2 acc{0.0, 0.0};
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        double c = cross(v[i] - v[0], v[i + 1] - v[0]);
        area2 += c;
        acc += c * (v[0] + v[i] + v[i + 1]);
    }
    return {acc.x / (3.0 * area2), acc.y / (3.0 * area2)};
}

std::optional<Point> symmetry_center(const ConvexBody& body, double tol) {
    if (body.is_disc()) return body.disc().center;
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    if (n % 2 != 0) return std::nullopt;
    const size_t half = n / 2;
    Point c = 0.5 * (v[0] + v[half]);
    for (size_t i = 1; i < half; ++i) {
        if (dist(0.5 * (v[i] + v[i + half]), c) > tol) return std::nullopt;
    }
    return c;
}

bool contains(const ConvexBody& body, Point p, double tol) {
    if (body.is_disc()) return dist(p, body.disc().center) <= body.disc().radius + tol;
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 e = v[(i + 1) % n] - v[i];
        if (cross(e, p - v[i]) < -tol * norm(e)) return false;
    }
    return true;
}

double distance_to_boundary(const ConvexBody& body, Point p) {
    if (body.is_disc()) return std::fabs(dist(p, body.disc().center) - body.disc().radius);
    const std::vector<Point>& v = body.vertices();
    double best = std::numeric_limits<double>::max();
    for (size_t i = 0; i < v.size(); ++i)
        best = std::min(best, point_segment_dist(p, v[i], v[(i + 1) % v.size()]));
    return best;
}

BoundaryLocation locate_boundary(const ConvexBody& body, Point p) {
    if (body.is_disc()) return {false, 0};
    const double eps = body.boundary_eps();
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        if (dist(p, v[i]) <= eps) return {true, static_cast<int>(i)};
    }
    int best = -1;
    double best_d = eps;
    for (size_t i = 0; i < n; ++i) {
        double d = point_segment_dist(p, v[i], v[(i + 1) % n]);
        if (d <= best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return {false, best};
}

double support(const ConvexBody& body, Vec2 dir) {
    if (body.is_disc()) return dot(body.disc().center, dir) + body.disc().radius * norm(dir);
    double best = std::numeric_limits<double>::lowest();
    for (const Point& p : body.vertices()) best = std::max(best, dot(p, dir));
    return best;
}

LineSpan clip_line(const ConvexBody& body, const OrientedLine& line) {
    if (body.is_disc()) {
        const Disc& d = body.disc();
        double off = line.offset - dot(d.center, line.normal());
        double disc2 = d.radius * d.radius - off * off;
        if (disc2 < 0.0) return {};
        double half = std::sqrt(disc2);
        double mid = dot(d.center, line.dir());
        return {mid - half, mid + half};
    }
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    double lo = std::numeric_limits<double>::lowest();
    double hi = std::numeric_limits<double>::max();
    const Point base = line.at(0.0);
    const Vec2 u = line.dir();
    for (size_t i = 0; i < n; ++i) {
        // interior is left of each ccw edge: cross(e, x - v_i) >= 0
        Vec2 e = v[(i + 1) % n] - v[i];
        double a = cross(e, u);              // slope of the constraint in s
        double b = cross(e, base - v[i]);    // value at s = 0
        if (std::fabs(a) < 1e-300) {
            if (b < 0.0) return {};
        } else if (a > 0.0) {
            lo = std::max(lo, -b / a);
        } else {
            hi = std::min(hi, -b / a);
        }
    }
    if (lo > hi) return {};
    return {lo, hi};
}

double hausdorff(const ConvexBody& a, const ConvexBody& b) {
    // sup over directions of |h_a - h_b|; the difference is piecewise
    // sinusoidal with breakpoints at both normal fans, so evaluating at the
    // breakpoints plus per-interval interior extrema is exact for polygons.
    std::vector<double> angles;
    auto add_normals = [&angles](const ConvexBody& body) {
        if (body.is_disc()) return;
        const std::vector<Point>& v = body.vertices();
        for (size_t i = 0; i < v.size(); ++i) {
            Vec2 e = v[(i + 1) % v.size()] - v[i];
            angles.push_back(Angle(std::atan2(-e.x, e.y) + kPi).rad()); // outward normal
        }
    };
    add_normals(a);
    add_normals(b);
    if (angles.empty()) {
        // two discs
        return dist(a.disc().center, b.disc().center) +
               std::fabs(a.disc().radius - b.disc().radius);
    }
    // fall back to a fine grid when a disc is involved (support difference is
    // then smooth between polygon breakpoints)
    const int grid = a.is_disc() || b.is_disc() ? 4096 : 0;
    for (int k = 0; k < grid; ++k) angles.push_back(kTwoPi * k / grid);
    std::sort(angles.begin(), angles.end());

    auto support_pt = [](const ConvexBody& body, Vec2 dir) -> Point {
        if (body.is_disc()) return body.disc().center + body.disc().radius * normalized(dir);
        Point best = body.vertices()[0];
        for (const Point& p : body.vertices())
            if (dot(p, dir) > dot(best, dir)) best = p;
        return best;
    };

    double worst = 0.0;
    const size_t m = angles.size();
    for (size_t i = 0; i < m; ++i) {
        double t0 = angles[i];
        double t1 = angles[(i + 1) % m] + (i + 1 == m ? kTwoPi : 0.0);
        Vec2 u0{std::cos(t0), std::sin(t0)};
        worst = std::max(worst, std::fabs(support(a, u0) - support(b, u0)));
        // interior extremum where the fixed support points face the direction
        double tm = 0.5 * (t0 + t1);
        Vec2 um{std::cos(tm), std::sin(tm)};
        Vec2 diffv = support_pt(a, um) - support_pt(b, um);
        double tc = std::atan2(diffv.y, diffv.x);
        for (double t : {tc, tc + kPi}) {
            double tt = Angle::canonical(t);
            if (tt < t0) tt += kTwoPi;
            if (tt > t0 && tt < t1) {
                Vec2 uc{std::cos(tt), std::sin(tt)};
                worst = std::max(worst, std::fabs(support(a, uc) - support(b, uc)));
            }
        }
    }
    return worst;
}

} // namespace alphasec

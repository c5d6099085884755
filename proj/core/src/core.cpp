#include "alphasec/core.hpp"
#include <cstdio>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "alphasec/errors.hpp"
#include "alphasec/parallel.hpp"

namespace alphasec {

namespace {

struct HalfPlane {
    double theta = 0.0;
    Vec2 n{};       // u'(theta)
    double t = 0.0; // {x : <x, n> >= t}
};

std::optional<Point> intersect(const HalfPlane& a, const HalfPlane& b) {
    double det = cross(a.n, b.n);
    if (std::fabs(det) < 1e-14) return std::nullopt;
    return Point{(a.t * b.n.y - b.t * a.n.y) / det, (b.t * a.n.x - a.t * b.n.x) / det};
}

bool violates(Point p, const HalfPlane& h, double slack) { return dot(p, h.n) - h.t < -slack; }

// intersection of half-planes sorted by direction, classic deque sweep
std::vector<Point> halfplane_intersection(const std::vector<HalfPlane>& planes, double slack) {
    // merge same-direction planes, keeping the tightest
    std::vector<HalfPlane> hp;
    hp.reserve(planes.size());
    for (const HalfPlane& h : planes) {
        if (!hp.empty() && h.theta - hp.back().theta < 1e-12) {
            if (h.t > hp.back().t) hp.back() = h;
        } else {
            hp.push_back(h);
        }
    }

    std::deque<HalfPlane> dq;
    auto back_vertex = [&dq]() { return intersect(dq[dq.size() - 2], dq[dq.size() - 1]); };
    auto front_vertex = [&dq]() { return intersect(dq[0], dq[1]); };

    for (const HalfPlane& h : hp) {
        while (dq.size() >= 2) {
            auto v = back_vertex();
            if (v && !violates(*v, h, slack)) break;
            if (!v) break; // near-parallel neighbours, let the final filter decide
            dq.pop_back();
        }
        while (dq.size() >= 2) {
            auto v = front_vertex();
            if (v && !violates(*v, h, slack)) break;
            if (!v) break;
            dq.pop_front();
        }
        dq.push_back(h);
    }
    while (dq.size() >= 3) {
        auto v = back_vertex();
        if (v && !violates(*v, dq.front(), slack)) break;
        dq.pop_back();
    }
    while (dq.size() >= 3) {
        auto v = front_vertex();
        if (v && !violates(*v, dq.back(), slack)) break;
        dq.pop_front();
    }
    if (dq.size() < 3) return {};

    std::vector<Point> verts;
    verts.reserve(dq.size());
    for (size_t i = 0; i < dq.size(); ++i) {
        auto v = intersect(dq[i], dq[(i + 1) % dq.size()]);
        if (v) verts.push_back(*v);
    }
    return verts;
}

double family_scale(const TangentLineFamily& family) {
    Point lo = family.entries.front().point, hi = lo;
    for (const TangentLineEntry& e : family.entries) {
        lo.x = std::min(lo.x, e.point.x);
        lo.y = std::min(lo.y, e.point.y);
        hi.x = std::max(hi.x, e.point.x);
        hi.y = std::max(hi.y, e.point.y);
    }
    return norm(hi - lo);
}

} // namespace

CoreResult core_of_family(const TangentLineFamily& family, double eps_core) {
    const std::vector<TangentLineEntry>& es = family.entries;
    if (es.size() < 3) fail(ErrorKind::InsufficientFamily, "need at least 3 tangent lines");
    double max_gap = 0.0;
    for (size_t i = 0; i < es.size(); ++i) {
        double next =
            i + 1 < es.size() ? es[i + 1].theta.rad() : es[0].theta.rad() + kTwoPi;
        double gap = next - es[i].theta.rad();
        if (gap < 0.0 && i + 1 < es.size())
            fail(ErrorKind::InsufficientFamily, "thetas must be strictly increasing");
        max_gap = std::max(max_gap, gap);
    }
    if (max_gap >= kPi)
        fail(ErrorKind::InsufficientFamily, "directions span at most a half turn");

    if (eps_core <= 0.0) eps_core = core_eps(std::max(family_scale(family), 1e-12));

    std::vector<HalfPlane> planes;
    planes.reserve(es.size());
    for (const TangentLineEntry& e : es) {
        Vec2 n = e.theta.normal();
        planes.push_back({e.theta.rad(), n, dot(e.point, n)});
    }

    std::vector<Point> verts = halfplane_intersection(planes, eps_core);
    fprintf(stderr, "DBG verts=%zu eps=%g\n", verts.size(), eps_core);

    CoreResult res;
    if (verts.size() < 3) {
        res.kind = CoreKind::Empty;
        return res;
    }

    auto cloud_diag = [](const std::vector<Point>& pts) {
        Point lo = pts[0], hi = pts[0];
        for (const Point& p : pts) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
        return norm(hi - lo);
    };
    auto min_violation = [&planes](Point p) {
        double worst = std::numeric_limits<double>::max();
        for (const HalfPlane& h : planes) worst = std::min(worst, dot(p, h.n) - h.t);
        return worst;
    };
    auto centroid_of = [](const std::vector<Point>& pts) {
        Point c{0.0, 0.0};
        for (const Point& p : pts) c += p;
        return (1.0 / static_cast<double>(pts.size())) * c;
    };

    double a2 = 0.0;
    for (size_t i = 0; i < verts.size(); ++i) a2 += cross(verts[i], verts[(i + 1) % verts.size()]);

    const double scale = family_scale(family);
    bool healthy = a2 > 0.0 && cloud_diag(verts) > std::max(1e-4 * scale, 16.0 * eps_core);
    if (!healthy) {
        // degenerate sweep output: pool the sweep vertices with the adjacent
        // line pair intersections of the whole family, filter them against
        // every plane, and classify by the best feasibility found
        std::vector<Point> pool = verts;
        for (size_t i = 0; i < planes.size(); ++i) {
            auto cand = intersect(planes[i], planes[(i + 1) % planes.size()]);
            if (cand) pool.push_back(*cand);
        }
        std::vector<Point> kept;
        for (const Point& cand : pool) {
            if (min_violation(cand) >= -eps_core) kept.push_back(cand);
        }
        fprintf(stderr, "DBG pool=%zu kept=%zu\n", pool.size(), kept.size());
        if (kept.empty()) {
            return res; // infeasible by more than eps_core everywhere: empty
        }
        if (cloud_diag(kept) <= 8.0 * eps_core) {
            res.kind = CoreKind::SinglePoint;
            res.point = centroid_of(kept);
            return res;
        }
        verts = std::move(kept);
    }

    Point centroid = centroid_of(verts);
    if (min_violation(centroid) < -2.0 * eps_core) {
        res.kind = CoreKind::Empty;
        return res;
    }
    try {
        res.region = make_polygon(verts);
    } catch (const Error&) {
        res.kind = CoreKind::SinglePoint;
        res.point = centroid;
        return res;
    }
    res.kind = CoreKind::Region;
    Point g = mass_center(*res.region);
    double inr = std::numeric_limits<double>::max();
    for (const TangentLineEntry& e : es) {
        Vec2 n = e.theta.normal();
        inr = std::min(inr, dot(g, n) - dot(e.point, n));
    }
    res.inradius_estimate = std::max(inr, 0.0);
    return res;
}

TangentLineFamily family_from_sections(const ConvexBody& body, double alpha, int n) {
    std::vector<Angle> dirs;
    dirs.reserve(static_cast<size_t>(n) + 16);
    for (int k = 0; k < n; ++k) dirs.push_back(Angle(kTwoPi * k / n));
    for (Angle a : vertex_passages(body, alpha)) dirs.push_back(a);
    std::sort(dirs.begin(), dirs.end(), [](Angle a, Angle b) { return a.rad() < b.rad(); });
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](Angle a, Angle b) { return b.rad() - a.rad() < 1e-13; }),
               dirs.end());

    TangentLineFamily fam;
    fam.entries.resize(dirs.size());
    parallel_for(dirs.size(), [&](size_t i) {
        OrientedLine line = alpha_section(body, alpha, dirs[i]);
        fam.entries[i] = {dirs[i], line.at(0.0), std::nullopt};
    });
    return fam;
}

CoreResult alpha_core(const ConvexBody& body, double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::AlphaOutOfRange, "alpha must lie in (0,1)");
    if (n < 64) fail(ErrorKind::BadInput, "alpha_core needs n >= 64");
    if (alpha > 0.5) return {}; // the core is empty past one half
    return core_of_family(family_from_sections(body, alpha, n), core_eps(body.diameter()));
}

VelocityScan scan_velocities(const ConvexBody& body, double alpha, int n) {
    const double eps_v = 1e-9 * body.diameter();

    std::vector<Angle> dirs;
    std::vector<bool> mandatory;
    for (int k = 0; k < n; ++k) {
        dirs.push_back(Angle(kTwoPi * k / n));
        mandatory.push_back(false);
    }
    std::vector<Angle> passages = vertex_passages(body, alpha);
    for (Angle a : passages) {
        dirs.push_back(a);
        mandatory.push_back(true);
    }
    // a handful of interior samples per regime so narrow regimes are not
    // skipped over
    for (size_t i = 0; i + 1 <= passages.size() && !passages.empty(); ++i) {
        double a0 = passages[i].rad();
        double a1 = (i + 1 < passages.size() ? passages[i + 1].rad() : passages[0].rad() + kTwoPi);
        for (int j = 1; j <= 7; ++j) {
            dirs.push_back(Angle(a0 + (a1 - a0) * j / 8.0));
            mandatory.push_back(false);
        }
    }
    std::sort(dirs.begin(), dirs.end(), [](Angle a, Angle b) { return a.rad() < b.rad(); });
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](Angle a, Angle b) { return b.rad() - a.rad() < 1e-13; }),
               dirs.end());

    std::vector<VelocityInterval> vs(dirs.size());
    parallel_for(dirs.size(), [&](size_t i) { vs[i] = velocity(body, alpha, dirs[i]); });

    VelocityScan scan;
    scan.min_v = std::numeric_limits<double>::max();
    scan.max_v = std::numeric_limits<double>::lowest();
    scan.zero_gap = std::numeric_limits<double>::max();
    auto absorb = [&scan](const VelocityInterval& v) {
        scan.min_v = std::min(scan.min_v, v.min());
        scan.max_v = std::max(scan.max_v, v.max());
        double gap = v.min() > 0.0 ? v.min() : (v.max() < 0.0 ? -v.max() : 0.0);
        scan.zero_gap = std::min(scan.zero_gap, gap);
    };
    for (const VelocityInterval& v : vs) absorb(v);

    // refine local minima of v and sign changes between neighbours
    const int depth = 20;
    for (size_t i = 0; i < dirs.size(); ++i) {
        size_t j = (i + 1) % dirs.size();
        double a0 = dirs[i].rad();
        double a1 = dirs[j].rad() + (j == 0 ? kTwoPi : 0.0);
        if (a1 - a0 < 1e-11) continue;
        double v0 = vs[i].min(), v1 = vs[j].min();
        bool crosses = (vs[i].max() < -eps_v && vs[j].min() > eps_v) ||
                       (vs[i].min() > eps_v && vs[j].max() < -eps_v);
        scan.sign_change = scan.sign_change || crosses;
        bool interesting =
            crosses || (v0 > eps_v) != (v1 > eps_v) ||
            std::fabs(v1 - v0) > 0.25 * (std::fabs(v0) + std::fabs(v1));
        if (!interesting) continue;
        double lo = a0, hi = a1, vlo = v0, vhi = v1;
        for (int d = 0; d < depth; ++d) {
            double mid = 0.5 * (lo + hi);
            VelocityInterval vm = velocity(body, alpha, Angle(mid));
            absorb(vm);
            // walk toward the smaller side to chase minima across the gap
            if (vlo < vhi) {
                hi = mid;
                vhi = vm.min();
            } else {
                lo = mid;
                vlo = vm.min();
            }
        }
    }
    return scan;
}

namespace {

bool backwards_nonempty(const ConvexBody& body, double alpha, int n) {
    const double eps_v = 1e-9 * body.diameter();
    return scan_velocities(body, alpha, n).min_v < -eps_v;
}

bool zero_nonempty(const ConvexBody& body, double alpha, int n) {
    const double eps_v = 1e-9 * body.diameter();
    VelocityScan s = scan_velocities(body, alpha, n);
    if (s.zero_gap <= eps_v) return true;
    // a bracketed sign change pins a zero between samples even if none was hit
    return s.min_v < -eps_v && s.max_v > eps_v;
}

} // namespace

double critical_alpha_B(const ConvexBody& body, double tol) {
    const int n = 1024;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 64 && hi - lo > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (backwards_nonempty(body, mid, n))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double critical_alpha_Z(const ConvexBody& body, double tol) {
    const int n = 1024;
    double lo = 0.0, hi = 0.5; // 1/2 always belongs to I_Z
    for (int iter = 0; iter < 64 && hi - lo > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (zero_nonempty(body, mid, n))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, std::optional<Point>> critical_alpha_K(const ConvexBody& body, double tol) {
    const int n = 8192;
    auto nonempty = [&](double a) { return !alpha_core(body, a, n).empty(); };
    double lo = 4.0 / 9.0 - 1e-3; // the core is never empty below 4/9
    double hi = 0.5 + 4.0 * std::max(tol, 1e-9);
    for (int iter = 0; iter < 64 && hi - lo > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (nonempty(mid))
            lo = mid;
        else
            hi = mid;
    }
    double ak = 0.5 * (lo + hi);
    CoreResult last = alpha_core(body, std::min(lo, 0.5), n);
    std::optional<Point> T;
    if (last.kind == CoreKind::SinglePoint)
        T = last.point;
    else if (last.kind == CoreKind::Region)
        T = mass_center(*last.region);
    return {ak, T};
}

CriticalValues critical_values(const ConvexBody& body, double tol) {
    CriticalValues cv;
    cv.tol = tol;
    cv.alpha_B = critical_alpha_B(body, tol);
    cv.alpha_Z = critical_alpha_Z(body, tol);
    auto [ak, T] = critical_alpha_K(body, tol);
    cv.alpha_K = ak;
    cv.T = T;
    const int n = 1024;
    double below = cv.alpha_Z - tol, above = cv.alpha_Z + tol;
    cv.z_nonempty_below = below > 0.0 && zero_nonempty(body, below, n);
    cv.z_nonempty_above = above < 1.0 && zero_nonempty(body, above, n);
    return cv;
}

} // namespace alphasec

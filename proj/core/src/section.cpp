#include "alphasec/section.hpp"

#include <algorithm>
#include <cmath>

#include "alphasec/errors.hpp"

namespace alphasec {

namespace {

double cot(double angle) {
    double s = std::sin(angle);
    double c = std::cos(angle);
    if (std::fabs(s) < 1e-15)
        fail(ErrorKind::ToleranceFailure, "chord tangent to the boundary, cot(angle) blows up");
    return c / s;
}

} // namespace

OrientedLine alpha_section(const ConvexBody& body, double alpha, Angle theta) {
    if (!(alpha > 0.0 && alpha < 1.0))
        fail(ErrorKind::AlphaOutOfRange, "alpha must lie in (0,1)");
    const Vec2 n = theta.normal();
    double lo = -support(body, -n); // body entirely right at lo, left at hi
    double hi = support(body, n);
    const double target = alpha * body.area();
    const double eps_t = 1e-13 * (std::fabs(lo) + std::fabs(hi) + body.diameter());
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        t = 0.5 * (lo + hi);
        double r = area_right(body, {theta, t}) - target;
        if (r < 0.0)
            lo = t;
        else
            hi = t;
        if (hi - lo <= eps_t && std::fabs(r) <= kSectionEps * body.area()) break;
    }
    t = 0.5 * (lo + hi);
    if (std::fabs(area_right(body, {theta, t}) - target) > 64.0 * kSectionEps * body.area())
        fail(ErrorKind::ToleranceFailure, "alpha-section bisection did not converge");
    return {theta, t};
}

Chord chord(const ConvexBody& body, const OrientedLine& line) {
    const double eps = body.boundary_eps();
    LineSpan span = clip_line(body, line);
    if (!span.hit() || span.s_hi - span.s_lo < 2.0 * eps)
        fail(ErrorKind::NoIntersection, "line misses the body interior");

    Point b = line.at(span.s_lo);
    Point c = line.at(span.s_hi);
    if (body.is_polygon()) {
        // snap endpoints sitting on a vertex so the corner cone is used
        for (Point* p : {&b, &c}) {
            BoundaryLocation loc = locate_boundary(body, *p);
            if (loc.at_vertex) *p = body.vertices()[static_cast<size_t>(loc.index)];
        }
    }

    Chord ch;
    ch.line = line;
    ch.b = b;
    ch.c = c;
    ch.m = 0.5 * (b + c);
    ch.h = 0.5 * dist(b, c);

    const Vec2 u = line.dir();
    TangentCone cb = tangent_cone(body, b);
    TangentCone cc = tangent_cone(body, c);
    ch.beta_l = angle_between(cb.dir_left.dir(), u);
    ch.beta_r = angle_between(cb.dir_right.dir(), u);
    ch.gamma_l = angle_between(u, cc.dir_left.dir());
    ch.gamma_r = angle_between(u, cc.dir_right.dir());
    return ch;
}

VelocityInterval velocity_of_chord(const Chord& ch) {
    return {0.5 * ch.h * (cot(ch.beta_l) + cot(ch.gamma_l)),
            0.5 * ch.h * (cot(ch.beta_r) + cot(ch.gamma_r))};
}

VelocityInterval velocity(const ConvexBody& body, double alpha, Angle theta) {
    return velocity_of_chord(chord(body, alpha_section(body, alpha, theta)));
}

std::vector<Angle> vertex_passages(const ConvexBody& body, double alpha, int grid) {
    std::vector<Angle> out;
    if (body.is_disc()) return out;
    const std::vector<Point>& verts = body.vertices();

    // offsets of the body's alpha-sections on a shared direction grid
    std::vector<double> t_alpha(static_cast<size_t>(grid));
    std::vector<double> thetas(static_cast<size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        thetas[static_cast<size_t>(k)] = kTwoPi * k / grid;
        t_alpha[static_cast<size_t>(k)] =
            alpha_section(body, alpha, Angle(thetas[static_cast<size_t>(k)])).offset;
    }

    const double tol_theta = 1e-12;
    for (const Point& p : verts) {
        // g(theta) = <p, u'(theta)> - t_alpha(theta) changes sign when the
        // section sweeps across the vertex
        auto g = [&](double th) {
            return dot(p, Angle(th).normal()) - alpha_section(body, alpha, Angle(th)).offset;
        };
        for (int k = 0; k < grid; ++k) {
            const size_t i = static_cast<size_t>(k);
            const size_t j = static_cast<size_t>((k + 1) % grid);
            double th0 = thetas[i];
            double th1 = thetas[i] + kTwoPi / grid;
            double g0 = dot(p, Angle(th0).normal()) - t_alpha[i];
            double g1 = dot(p, Angle(th1).normal()) - t_alpha[j];
            if (g0 == 0.0) {
                out.push_back(Angle(th0));
                continue;
            }
            if (g0 * g1 > 0.0) continue;
            while (th1 - th0 > tol_theta) {
                double tm = 0.5 * (th0 + th1);
                double gm = g(tm);
                if (gm == 0.0) {
                    th0 = th1 = tm;
                    break;
                }
                if (g0 * gm < 0.0)
                    th1 = tm;
                else {
                    th0 = tm;
                    g0 = gm;
                }
            }
            out.push_back(Angle(0.5 * (th0 + th1)));
        }
    }
    std::sort(out.begin(), out.end(), [](Angle a, Angle b) { return a.rad() < b.rad(); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](Angle a, Angle b) { return angular_dist(a.rad(), b.rad()) < 1e-10; }),
              out.end());
    return out;
}

} // namespace alphasec

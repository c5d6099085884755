#include "alphasec/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "alphasec/errors.hpp"
#include "alphasec/parallel.hpp"

namespace alphasec {

uint8_t classify_velocity(const VelocityInterval& v, double eps_v) {
    uint8_t labels = 0;
    if (v.max() > eps_v) labels |= kForwards;
    if (v.min() < -eps_v) labels |= kBackwards;
    if (v.min() <= eps_v && v.max() >= -eps_v) labels |= kZero;
    return labels;
}

std::vector<std::string> label_names(uint8_t labels) {
    std::vector<std::string> out;
    if (labels & kForwards) out.push_back("F");
    if (labels & kBackwards) out.push_back("B");
    if (labels & kZero) out.push_back("Z");
    return out;
}

uint8_t classify_direction(const ConvexBody& body, double alpha, Angle theta) {
    return classify_velocity(velocity(body, alpha, theta), 1e-9 * body.diameter());
}

namespace {

EnvelopeSample make_sample(const ConvexBody& body, double alpha, Angle theta, double eps_v) {
    Chord ch = chord(body, alpha_section(body, alpha, theta));
    EnvelopeSample s;
    s.theta = theta;
    s.m = ch.m;
    s.v = velocity_of_chord(ch);
    s.labels = classify_velocity(s.v, eps_v);
    s.singular = ch.singular();
    return s;
}

bool needs_refinement(const EnvelopeSample& a, const EnvelopeSample& b, double diam) {
    if (a.labels != b.labels) return true;
    double dtheta = Angle::canonical(b.theta.rad() - a.theta.rad());
    double speed = std::max({std::fabs(a.v.v_l), std::fabs(a.v.v_r), std::fabs(b.v.v_l),
                             std::fabs(b.v.v_r)});
    return dist(a.m, b.m) > 2.0 * speed * dtheta + 1e-12 * diam;
}

} // namespace

EnvelopeCurve sample_envelope(const ConvexBody& body, double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::AlphaOutOfRange, "alpha must lie in (0,1)");
    if (n < 16) fail(ErrorKind::BadInput, "sample_envelope needs n >= 16");
    const double eps_v = 1e-9 * body.diameter();

    std::vector<double> thetas;
    thetas.reserve(static_cast<size_t>(n) + 16);
    for (int k = 0; k < n; ++k) thetas.push_back(kTwoPi * k / n);
    for (Angle a : vertex_passages(body, alpha)) thetas.push_back(a.rad());
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(),
                             [](double a, double b) { return b - a < 1e-13; }),
                 thetas.end());

    std::vector<EnvelopeSample> base(thetas.size());
    parallel_for(thetas.size(), [&](size_t i) {
        base[i] = make_sample(body, alpha, Angle(thetas[i]), eps_v);
    });

    EnvelopeCurve curve;
    curve.alpha = alpha;
    curve.samples.reserve(base.size() * 2);

    // depth-first refinement between neighbours, emitting in theta order
    const int max_depth = 20;
    struct Seg {
        EnvelopeSample a, b;
        int depth;
    };
    for (size_t i = 0; i < base.size(); ++i) {
        const EnvelopeSample& a = base[i];
        const EnvelopeSample& b = base[(i + 1) % base.size()];
        curve.samples.push_back(a);
        std::vector<Seg> stack;
        double span = Angle::canonical(b.theta.rad() - a.theta.rad());
        if (span < 1e-13) continue;
        stack.push_back({a, b, 0});
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            if (s.depth >= max_depth || !needs_refinement(s.a, s.b, body.diameter())) {
                if (s.depth > 0) curve.samples.push_back(s.b);
                continue;
            }
            double mid = s.a.theta.rad() +
                         0.5 * Angle::canonical(s.b.theta.rad() - s.a.theta.rad());
            EnvelopeSample m = make_sample(body, alpha, Angle(mid), eps_v);
            // push right half first so the left half is processed first
            stack.push_back({m, s.b, s.depth + 1});
            stack.push_back({s.a, m, s.depth + 1});
        }
        // drop the closing duplicate of b; the next base sample re-adds it
        if (!curve.samples.empty() &&
            angular_dist(curve.samples.back().theta.rad(), b.theta.rad()) < 1e-15)
            curve.samples.pop_back();
    }
    std::sort(curve.samples.begin(), curve.samples.end(),
              [](const EnvelopeSample& x, const EnvelopeSample& y) {
                  return x.theta.rad() < y.theta.rad();
              });
    curve.samples.erase(
        std::unique(curve.samples.begin(), curve.samples.end(),
                    [](const EnvelopeSample& x, const EnvelopeSample& y) {
                        return y.theta.rad() - x.theta.rad() < 1e-14;
                    }),
        curve.samples.end());
    return curve;
}

namespace {

int velocity_sign(const VelocityInterval& v, double eps_v) {
    if (v.min() > eps_v) return 1;
    if (v.max() < -eps_v) return -1;
    return 0;
}

// refine a regular zero crossing of v between two directions
Angle refine_crossing(const ConvexBody& body, double alpha, double lo, double hi, int sign_lo) {
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        VelocityInterval v = velocity(body, alpha, Angle(mid));
        double rep = 0.5 * (v.v_l + v.v_r);
        if ((rep > 0.0 ? 1 : -1) == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    return Angle(0.5 * (lo + hi));
}

} // namespace

FBZReport fbz_partition(const ConvexBody& body, double alpha, int n) {
    EnvelopeCurve curve = sample_envelope(body, alpha, n);
    const double eps_v = 1e-9 * body.diameter();

    FBZReport rep;
    rep.alpha = alpha;

    const std::vector<EnvelopeSample>& ss = curve.samples;
    const size_t m = ss.size();

    // merge runs of equal label set into intervals; boundaries halfway
    // between the refined samples
    std::vector<std::pair<double, uint8_t>> bounds; // (start theta, labels after it)
    for (size_t i = 0; i < m; ++i) {
        size_t j = (i + 1) % m;
        if (ss[i].labels == ss[j].labels) continue;
        double b = ss[i].theta.rad() +
                   0.5 * Angle::canonical(ss[j].theta.rad() - ss[i].theta.rad());
        bounds.emplace_back(Angle::canonical(b), ss[j].labels);
    }
    if (bounds.empty()) {
        rep.intervals.push_back({0.0, kTwoPi, ss.empty() ? uint8_t{0} : ss[0].labels});
    } else {
        std::sort(bounds.begin(), bounds.end());
        for (size_t k = 0; k < bounds.size(); ++k) {
            double start = bounds[k].first;
            double end = k + 1 < bounds.size() ? bounds[k + 1].first : bounds[0].first + kTwoPi;
            rep.intervals.push_back({start, end, bounds[k].second});
        }
    }

    // cusps: one-sided velocities of opposite strict sign, either across a
    // singular sample or at a regular crossing between samples
    for (size_t i = 0; i < m; ++i) {
        const EnvelopeSample& s = ss[i];
        if (s.singular) {
            bool flip = (s.v.v_l > eps_v && s.v.v_r < -eps_v) ||
                        (s.v.v_l < -eps_v && s.v.v_r > eps_v);
            if (flip) rep.cusps.push_back(s.m);
            // compare against the parallel-supporting-line test (Eq. of
            // corner angles); divergence is possible at doubly singular
            // chords and is only recorded
            Chord ch = chord(body, alpha_section(body, alpha, s.theta));
            bool parallel_support =
                ch.beta_r + ch.gamma_l <= kPi + 1e-12 && kPi <= ch.beta_l + ch.gamma_r + 1e-12;
            bool v_zero = (s.labels & kZero) != 0;
            if (parallel_support != v_zero) rep.support_test_mismatches.push_back(s.theta.rad());
            continue;
        }
        const EnvelopeSample& t = ss[(i + 1) % m];
        if (t.singular) continue;
        int sa = velocity_sign(s.v, eps_v);
        int sb = velocity_sign(t.v, eps_v);
        if (sa != 0 && sb != 0 && sa != sb) {
            double lo = s.theta.rad();
            double hi = lo + Angle::canonical(t.theta.rad() - s.theta.rad());
            Angle at = refine_crossing(body, alpha, lo, hi, sa);
            rep.cusps.push_back(chord(body, alpha_section(body, alpha, at)).m);
        }
    }
    // collapse duplicates (the half-section envelope is a double half-tour)
    std::vector<Point> unique_cusps;
    for (const Point& p : rep.cusps) {
        bool seen = false;
        for (const Point& q : unique_cusps)
            if (dist(p, q) < 1e-7 * body.diameter()) seen = true;
        if (!seen) unique_cusps.push_back(p);
    }
    rep.cusps = std::move(unique_cusps);
    return rep;
}

Point outer_billiard_step(const CoreResult& table, Point x) {
    if (table.kind == CoreKind::Empty) fail(ErrorKind::BadInput, "empty billiard table");
    if (table.kind == CoreKind::SinglePoint) {
        if (dist(x, table.point) == 0.0) fail(ErrorKind::InsideTable, "start point is the table");
        return 2.0 * table.point - x;
    }
    const ConvexBody& body = *table.region;
    if (contains(body, x, 0.0)) fail(ErrorKind::InsideTable, "start point inside the table");

    Point z;
    if (body.is_disc()) {
        const Disc& d = body.disc();
        double L = dist(x, d.center);
        Vec2 w = normalized(x - d.center);
        double cosv = d.radius / L;
        double sinv = std::sqrt(std::max(0.0, 1.0 - cosv * cosv));
        z = d.center + d.radius * (cosv * w + sinv * perp(w));
    } else {
        const std::vector<Point>& v = body.vertices();
        const double eps = 1e-12 * body.diameter();
        size_t best = 0;
        for (size_t i = 1; i < v.size(); ++i) {
            double c = cross(v[best] - x, v[i] - x);
            if (c < -eps * (dist(v[best], x) + dist(v[i], x))) best = i; // strictly more clockwise
        }
        z = v[best];
    }
    return 2.0 * z - x;
}

} // namespace alphasec

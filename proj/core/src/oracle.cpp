#include "alphasec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphasec/errors.hpp"
#include "alphasec/parallel.hpp"

namespace alphasec {

namespace {

// membership test on purpose distinct from the clipping used by area_right
bool inside(const ConvexBody& body, Point p) {
    if (body.is_disc()) {
        Vec2 d = p - body.disc().center;
        return d.x * d.x + d.y * d.y <= body.disc().radius * body.disc().radius;
    }
    const std::vector<Point>& v = body.vertices();
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        if (cross(v[(i + 1) % n] - v[i], p - v[i]) < 0.0) return false;
    }
    return true;
}

} // namespace

McEstimate mc_area(const ConvexBody& body, const OrientedLine& line, long samples, uint64_t seed) {
    if (samples < 10000) fail(ErrorKind::BadInput, "mc_area needs at least 1e4 samples");
    const Point lo = body.bbox_min();
    const Point hi = body.bbox_max();
    const double box_area = (hi.x - lo.x) * (hi.y - lo.y);

    const int shards = 64;
    long hits_per_shard[shards];
    SplitMix64 seeder(seed);
    uint64_t shard_seeds[shards];
    for (int s = 0; s < shards; ++s) shard_seeds[s] = seeder.next();

    parallel_for(shards, [&](size_t s) {
        long count = samples / shards + (static_cast<long>(s) < samples % shards ? 1 : 0);
        SplitMix64 rng(shard_seeds[s]);
        long hits = 0;
        for (long i = 0; i < count; ++i) {
            Point p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
            if (line.signed_dist(p) <= 0.0 && inside(body, p)) ++hits;
        }
        hits_per_shard[s] = hits;
    });
    long hits = 0;
    for (long h : hits_per_shard) hits += h;

    double p = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate est;
    est.estimate = box_area * p;
    est.sigma = box_area * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return est;
}

double fd_velocity(const ConvexBody& body, double alpha, Angle theta, double eps) {
    auto chord_at = [&](double th) { return chord(body, alpha_section(body, alpha, Angle(th))); };
    Chord lo = chord_at(theta.rad() - eps);
    Chord mid = chord_at(theta.rad());
    Chord hi = chord_at(theta.rad() + eps);
    if (lo.singular() || mid.singular() || hi.singular())
        fail(ErrorKind::SingularTheta, "vertex passage inside the difference window");
    if (body.is_polygon()) {
        // the endpoint edges must match across the window, otherwise a
        // passage sits strictly between the evaluation points
        auto edges = [&](const Chord& ch) {
            return std::pair<int, int>{locate_boundary(body, ch.b).index,
                                       locate_boundary(body, ch.c).index};
        };
        if (edges(lo) != edges(hi))
            fail(ErrorKind::SingularTheta, "vertex passage inside the difference window");
    }
    return dot((hi.m - lo.m) * (0.5 / eps), theta.dir());
}

CoreResult bruteforce_core(const ConvexBody& body, double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::AlphaOutOfRange, "alpha must lie in (0,1)");
    if (n < 10000) fail(ErrorKind::BadInput, "bruteforce_core needs n >= 1e4");
    CoreResult res;
    if (alpha > 0.5) return res;

    std::vector<Vec2> normals(static_cast<size_t>(n));
    std::vector<double> ts(static_cast<size_t>(n));
    parallel_for(static_cast<size_t>(n), [&](size_t k) {
        Angle th(kTwoPi * static_cast<double>(k) / n);
        normals[k] = th.normal();
        ts[k] = alpha_section(body, alpha, th).offset;
    });

    const double slack = core_eps(body.diameter());
    auto feasible = [&](Point p) {
        for (size_t j = 0; j < normals.size(); ++j)
            if (dot(p, normals[j]) - ts[j] < -slack) return false;
        return true;
    };
    auto line_pair_vertex = [&](size_t i, size_t j) -> std::optional<Point> {
        double det = cross(normals[i], normals[j]);
        if (std::fabs(det) < 1e-12) return std::nullopt;
        return Point{(ts[i] * normals[j].y - ts[j] * normals[i].y) / det,
                     (ts[j] * normals[i].x - ts[i] * normals[j].x) / det};
    };

    std::vector<Point> accepted;
    std::vector<size_t> accepted_at; // grid index of the first line of the pair
    std::vector<char> ok(static_cast<size_t>(n), 0);
    std::vector<Point> cand(static_cast<size_t>(n));
    parallel_for(static_cast<size_t>(n), [&](size_t i) {
        auto v = line_pair_vertex(i, (i + 1) % static_cast<size_t>(n));
        if (v && feasible(*v)) {
            ok[i] = 1;
            cand[i] = *v;
        }
    });
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
        if (ok[i]) {
            accepted.push_back(cand[i]);
            accepted_at.push_back(i);
        }
    }
    // cusp corners of the core are cut by inactive line runs; add the
    // intersection of the two lines bracketing each surviving gap
    std::vector<Point> extra;
    for (size_t k = 0; k < accepted_at.size(); ++k) {
        size_t i = accepted_at[k];
        size_t j = accepted_at[(k + 1) % accepted_at.size()];
        size_t gap = (j + static_cast<size_t>(n) - i) % static_cast<size_t>(n);
        if (gap <= 1) continue;
        auto v = line_pair_vertex((i + 1) % static_cast<size_t>(n), j);
        if (v && feasible(*v)) extra.push_back(*v);
    }

    if (accepted.empty() && extra.empty()) return res;
    accepted.insert(accepted.end(), extra.begin(), extra.end());

    double diam = 0.0;
    Point centroid{0.0, 0.0};
    for (const Point& p : accepted) centroid += p;
    centroid = (1.0 / static_cast<double>(accepted.size())) * centroid;
    for (size_t i = 0; i < accepted.size(); ++i)
        for (size_t j = i + 1; j < accepted.size(); ++j)
            diam = std::max(diam, dist(accepted[i], accepted[j]));
    if (diam <= 4.0 * slack) {
        res.kind = CoreKind::SinglePoint;
        res.point = centroid;
        return res;
    }
    try {
        res.region = make_polygon(accepted);
        res.kind = CoreKind::Region;
    } catch (const Error&) {
        res.kind = CoreKind::SinglePoint;
        res.point = centroid;
    }
    return res;
}

} // namespace alphasec

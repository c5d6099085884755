#pragma once

#include <cstdint>

#include "alphasec/core.hpp"

namespace alphasec {

/// splitmix64: state advances by 0x9E3779B97F4A7C15 and the output is mixed
/// with xor-shift-multiply (0xBF58476D1CE4E5B9, 0x94D049BB133111EB). Same
/// seed, same stream, on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    uint64_t state_;
};

struct McEstimate {
    double estimate = 0.0;
    double sigma = 0.0;
};

/// Monte-Carlo estimate of |right part of K| by rejection sampling in the
/// bounding box, with its standard error. Deterministic for a given seed
/// (64 fixed shards, shard seeds derived from the seed by splitmix64).
/// Requires samples >= 1e4. Independent of area_right by construction: the
/// membership test is the per-edge orientation test, not the clipper.
McEstimate mc_area(const ConvexBody& body, const OrientedLine& line, long samples, uint64_t seed);

/// Central finite-difference velocity <(m(theta+eps) - m(theta-eps))/(2 eps), u>.
/// Throws SingularTheta when a vertex passage falls inside the window.
double fd_velocity(const ConvexBody& body, double alpha, Angle theta, double eps);

/// Plain intersection of n half-planes on a uniform direction grid, no
/// refinement, computed by candidate filtering rather than the incremental
/// sweep; used only to cross-validate alpha_core. Requires n >= 1e4.
CoreResult bruteforce_core(const ConvexBody& body, double alpha, int n);

} // namespace alphasec

#pragma once

#include <stdexcept>
#include <string>

namespace alphasec {

enum class ErrorKind {
    BadInput,           // unreadable or malformed input data
    DegenerateInput,    // polygon hull has no area
    AlphaOutOfRange,    // alpha outside the open interval required by the operation
    NotOnBoundary,      // queried point too far from the body boundary
    NoIntersection,     // line misses the body interior
    SingularTheta,      // a vertex passage falls inside a finite-difference window
    InsufficientFamily, // tangent line directions span at most a half turn
    NotInterior,        // queried point not strictly inside the body
    RegimeChange,       // chord endpoints change edges inside the fit window
    ParallelEdges,      // chord endpoints ride a parallel edge pair (midpoints collinear)
    NotNested,          // the inner body is not contained in the outer one
    InsideTable,        // outer billiard start point inside the table
    ToleranceFailure,   // an iteration failed to reach its tolerance
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace alphasec

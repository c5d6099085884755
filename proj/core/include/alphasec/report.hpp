#pragma once

#include <string>

#include "alphasec/analysis.hpp"
#include "alphasec/core.hpp"
#include "alphasec/envelope.hpp"
#include "alphasec/oracle.hpp"

namespace alphasec {

/// Parse a body description: {"type":"polygon","vertices":[[x,y],...]} or
/// {"type":"disc","center":[x,y],"radius":r}. Throws BadInput on anything
/// malformed and DegenerateInput for a flat polygon.
ConvexBody parse_body_json(const std::string& text);
ConvexBody load_body(const std::string& path);

std::string body_to_json(const ConvexBody& body);

// All numbers in the emitted reports carry 12 significant digits, and the
// output is byte-identical for identical inputs.
std::string format_number(double v);

std::string envelope_to_json(const EnvelopeCurve& curve, const FBZReport& fbz);
std::string core_to_json(double alpha, const CoreResult& core);
std::string critical_to_json(const CriticalValues& cv);
std::string bisected_to_json(Point g, const BisectedChords& chords, double quotient);
std::string alpha1_to_json(double alpha1);
std::string containment_to_json(double alpha, bool contained);
std::string conjecture_to_json(double alpha, const ConjectureWitness& w);
std::string oracle_to_json(const McEstimate& est);
std::string classify_to_json(double alpha, double theta, const VelocityInterval& v,
                             uint8_t labels);

/// Deterministic SVG: fixed 1000x1000 viewBox fitted to the body's bounding
/// box with a 5% margin; body outline, envelope polyline, core outline and
/// cusp markers in distinct stroke classes. No timestamps, no generated ids.
std::string render_svg(const ConvexBody& body, const EnvelopeCurve* envelope,
                       const FBZReport* fbz, const CoreResult* core);

} // namespace alphasec

#include "alphasec/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alphasec/errors.hpp"

namespace alphasec {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string point_json(Point p) {
    return "[" + format_number(p.x) + "," + format_number(p.y) + "]";
}

} // namespace

ConvexBody parse_body_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::BadInput, std::string("invalid JSON: ") + e.what());
    }
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "polygon") {
            std::vector<Point> pts;
            for (const auto& v : j.at("vertices")) {
                if (!v.is_array() || v.size() != 2)
                    fail(ErrorKind::BadInput, "vertex must be [x,y]");
                pts.push_back({v[0].get<double>(), v[1].get<double>()});
            }
            return make_polygon(std::move(pts));
        }
        if (type == "disc") {
            const auto& c = j.at("center");
            if (!c.is_array() || c.size() != 2) fail(ErrorKind::BadInput, "center must be [x,y]");
            return make_disc({c[0].get<double>(), c[1].get<double>()},
                             j.at("radius").get<double>());
        }
        fail(ErrorKind::BadInput, "type must be \"polygon\" or \"disc\"");
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::BadInput, std::string("invalid body: ") + e.what());
    }
}

ConvexBody load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_body_json(buf.str());
}

std::string body_to_json(const ConvexBody& body) {
    std::string out;
    if (body.is_polygon()) {
        out = "{\"type\":\"polygon\",\"vertices\":[";
        for (size_t i = 0; i < body.vertices().size(); ++i) {
            if (i) out += ",";
            out += point_json(body.vertices()[i]);
        }
        out += "]}";
    } else {
        out = "{\"type\":\"disc\",\"center\":" + point_json(body.disc().center) +
              ",\"radius\":" + format_number(body.disc().radius) + "}";
    }
    return out;
}

std::string envelope_to_json(const EnvelopeCurve& curve, const FBZReport& fbz) {
    std::string out = "{\"alpha\":" + format_number(curve.alpha) + ",\"samples\":[";
    for (size_t i = 0; i < curve.samples.size(); ++i) {
        const EnvelopeSample& s = curve.samples[i];
        if (i) out += ",";
        out += "{\"theta\":" + format_number(s.theta.rad()) + ",\"m\":" + point_json(s.m) +
               ",\"v_l\":" + format_number(s.v.v_l) + ",\"v_r\":" + format_number(s.v.v_r) +
               ",\"labels\":[";
        std::vector<std::string> names = label_names(s.labels);
        for (size_t k = 0; k < names.size(); ++k) {
            if (k) out += ",";
            out += "\"" + names[k] + "\"";
        }
        out += "]}";
    }
    out += "],\"cusps\":[";
    for (size_t i = 0; i < fbz.cusps.size(); ++i) {
        if (i) out += ",";
        out += point_json(fbz.cusps[i]);
    }
    out += "]}";
    return out;
}

std::string core_to_json(double alpha, const CoreResult& core) {
    std::string out = "{\"alpha\":" + format_number(alpha) + ",\"kind\":\"";
    switch (core.kind) {
    case CoreKind::Region: {
        out += "region\",\"vertices\":[";
        const std::vector<Point>& v = core.region->vertices();
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += point_json(v[i]);
        }
        out += "]}";
        break;
    }
    case CoreKind::SinglePoint:
        out += "point\",\"point\":" + point_json(core.point) + "}";
        break;
    case CoreKind::Empty:
        out += "empty\"}";
        break;
    }
    return out;
}

std::string critical_to_json(const CriticalValues& cv) {
    std::string out = "{\"alpha_B\":" + format_number(cv.alpha_B) +
                      ",\"alpha_Z\":" + format_number(cv.alpha_Z) +
                      ",\"alpha_K\":" + format_number(cv.alpha_K);
    if (cv.T) out += ",\"T\":" + point_json(*cv.T);
    out += ",\"tol\":" + format_number(cv.tol) + "}";
    return out;
}

std::string bisected_to_json(Point g, const BisectedChords& chords, double quotient) {
    std::string out = "{\"G\":" + point_json(g) + ",\"continuum\":";
    out += chords.continuum ? "true" : "false";
    out += ",\"bisected\":[";
    for (size_t i = 0; i < chords.chords.size(); ++i) {
        if (i) out += ",";
        out += "{\"theta\":" + format_number(chords.chords[i].theta.rad()) +
               ",\"alpha\":" + format_number(chords.chords[i].alpha) + "}";
    }
    out += "],\"quotient\":" + format_number(quotient) + "}";
    return out;
}

std::string alpha1_to_json(double alpha1) {
    return "{\"alpha1\":" + format_number(alpha1) + "}";
}

std::string containment_to_json(double alpha, bool contained) {
    return "{\"alpha\":" + format_number(alpha) +
           ",\"contained\":" + (contained ? "true" : "false") + "}";
}

std::string conjecture_to_json(double alpha, const ConjectureWitness& w) {
    std::string out = "{\"alpha\":" + format_number(alpha) + ",\"found\":";
    out += w.found ? "true" : "false";
    out += ",\"disjoint\":";
    out += w.disjoint ? "true" : "false";
    out += ",\"theta\":" + format_number(w.theta) + ",\"beta\":" + format_number(w.beta) + "}";
    return out;
}

std::string oracle_to_json(const McEstimate& est) {
    return "{\"estimate\":" + format_number(est.estimate) +
           ",\"sigma\":" + format_number(est.sigma) + "}";
}

std::string classify_to_json(double alpha, double theta, const VelocityInterval& v,
                             uint8_t labels) {
    std::string out = "{\"alpha\":" + format_number(alpha) + ",\"theta\":" + format_number(theta) +
                      ",\"v_l\":" + format_number(v.v_l) + ",\"v_r\":" + format_number(v.v_r) +
                      ",\"labels\":[";
    std::vector<std::string> names = label_names(labels);
    for (size_t k = 0; k < names.size(); ++k) {
        if (k) out += ",";
        out += "\"" + names[k] + "\"";
    }
    out += "]}";
    return out;
}

namespace {

struct SvgFrame {
    double scale = 1.0;
    Point lo{};
    double height = 1000.0;

    // y flips so the geometry keeps its usual orientation
    std::string map(Point p) const {
        double x = (p.x - lo.x) * scale;
        double y = height - (p.y - lo.y) * scale;
        return format_number(x) + "," + format_number(y);
    }
};

void append_polyline(std::string& svg, const SvgFrame& f, const std::vector<Point>& pts,
                     const char* cls, bool close) {
    if (pts.empty()) return;
    svg += std::string("<path class=\"") + cls + "\" d=\"M";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) svg += " L";
        svg += f.map(pts[i]);
    }
    if (close) svg += " Z";
    svg += "\"/>\n";
}

std::vector<Point> disc_outline(const Disc& d) {
    std::vector<Point> pts;
    for (int k = 0; k < 256; ++k) {
        double a = kTwoPi * k / 256;
        pts.push_back(d.center + d.radius * Vec2{std::cos(a), std::sin(a)});
    }
    return pts;
}

} // namespace

std::string render_svg(const ConvexBody& body, const EnvelopeCurve* envelope,
                       const FBZReport* fbz, const CoreResult* core) {
    Point lo = body.bbox_min(), hi = body.bbox_max();
    double w = hi.x - lo.x, h = hi.y - lo.y;
    double margin = 0.05 * std::max(w, h);
    lo = lo - Vec2{margin, margin};
    hi = hi + Vec2{margin, margin};
    w = hi.x - lo.x;
    h = hi.y - lo.y;
    SvgFrame frame;
    frame.scale = 1000.0 / std::max(w, h);
    frame.lo = lo;
    frame.height = 1000.0;

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
        "<style>.body{fill:none;stroke:#222;stroke-width:2}"
        ".envelope{fill:none;stroke:#c22;stroke-width:1.5}"
        ".core{fill:none;stroke:#26c;stroke-width:1.5}"
        ".cusp{fill:#c22;stroke:none}"
        ".corepoint{fill:#26c;stroke:none}</style>\n";

    if (body.is_polygon())
        append_polyline(svg, frame, body.vertices(), "body", true);
    else
        append_polyline(svg, frame, disc_outline(body.disc()), "body", true);

    if (envelope) {
        std::vector<Point> pts;
        pts.reserve(envelope->samples.size());
        for (const EnvelopeSample& s : envelope->samples) pts.push_back(s.m);
        append_polyline(svg, frame, pts, "envelope", envelope->closed);
    }
    if (core) {
        if (core->kind == CoreKind::Region) {
            const ConvexBody& r = *core->region;
            if (r.is_polygon())
                append_polyline(svg, frame, r.vertices(), "core", true);
            else
                append_polyline(svg, frame, disc_outline(r.disc()), "core", true);
        } else if (core->kind == CoreKind::SinglePoint) {
            svg += "<circle class=\"corepoint\" cx=\"";
            std::string xy = frame.map(core->point);
            size_t comma = xy.find(',');
            svg += xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) + "\" r=\"4\"/>\n";
        }
    }
    if (fbz) {
        for (const Point& c : fbz->cusps) {
            std::string xy = frame.map(c);
            size_t comma = xy.find(',');
            svg += "<circle class=\"cusp\" cx=\"" + xy.substr(0, comma) + "\" cy=\"" +
                   xy.substr(comma + 1) + "\" r=\"5\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace alphasec

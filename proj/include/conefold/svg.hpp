#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "conefold/caps.hpp"
#include "conefold/realize.hpp"

namespace conefold {

namespace svgdetail {

/// Double precision enters only here, at the serialization boundary.
struct XY {
    double x, y;
};

inline XY project(const EisRat& p, bool mirror) {
    CartesianExact c = to_cartesian(p);
    double x = static_cast<double>(c.x);
    double y = static_cast<double>(c.y_sqrt3) * 1.7320508075688772;
    if (mirror) y = -y;
    return {x, -y};  // SVG y grows downward
}

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Canvas {
    std::string body;
    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;

    void grow(const XY& p) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    void polyline(const std::vector<XY>& pts, const std::string& style, bool close) {
        body += "  <path d=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            body += (i == 0 ? "M " : "L ");
            body += fmt(pts[i].x) + " " + fmt(pts[i].y) + " ";
            grow(pts[i]);
        }
        if (close) body += "Z";
        body += "\" style=\"" + style + "\"/>\n";
    }
    void line(const XY& a, const XY& b, const std::string& style) {
        polyline({a, b}, style, false);
    }
    void circle(const XY& c, double r, const std::string& style) {
        body += "  <circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(r) +
                "\" style=\"" + style + "\"/>\n";
        grow({c.x - r, c.y - r});
        grow({c.x + r, c.y + r});
    }
    void text(const XY& at, const std::string& s) {
        body += "  <text x=\"" + fmt(at.x + 0.08) + "\" y=\"" + fmt(at.y - 0.08) +
                "\" font-size=\"0.28\" font-family=\"monospace\">" + s + "</text>\n";
    }
    std::string finish(const std::string& comment) const {
        double pad = 0.8;
        double w = maxx - minx + 2 * pad, h = maxy - miny + 2 * pad;
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        std::string safe = comment;
        size_t pos = 0;
        while ((pos = safe.find("--", pos)) != std::string::npos) safe.replace(pos, 2, "- -");
        out += "<!-- " + safe + " -->\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(minx - pad) + " " +
               fmt(miny - pad) + " " + fmt(w) + " " + fmt(h) + "\">\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

}  // namespace svgdetail

/// Deterministic SVG of a cap development: boundary, marks, seams and cuts
/// layered and labeled. The input spec text is embedded as a comment so the
/// render is self-describing.
inline std::string render_unfolding(const Unfolding& u, const std::string& spec_comment,
                                    bool mirror = false) {
    using namespace svgdetail;
    Canvas cv;
    std::vector<XY> boundary;
    for (const auto& v : u.boundary) boundary.push_back(project(v, mirror));
    cv.polyline(boundary, "fill:#f2f5ff;stroke:#2b3a67;stroke-width:0.05", true);
    for (const auto& r : u.removed) {
        std::vector<XY> pts;
        for (const auto& v : r) pts.push_back(project(v, mirror));
        cv.polyline(pts, "fill:#ffe6e6;stroke:#b22;stroke-width:0.03;stroke-dasharray:0.12 0.08",
                    true);
    }
    for (const auto& s : u.seams) {
        cv.line(project(s.src.a, mirror), project(s.src.b, mirror),
                "stroke:#1a7f37;stroke-width:0.05");
        cv.line(project(s.tgt.a, mirror), project(s.tgt.b, mirror),
                "stroke:#1a7f37;stroke-width:0.05;stroke-dasharray:0.2 0.1");
    }
    for (const auto& c : u.cuts)
        cv.line(project(c.a, mirror), project(c.b, mirror),
                "stroke:#b22;stroke-width:0.05;stroke-dasharray:0.1 0.1");
    for (const auto& m : u.marks) {
        XY at = project(m.pos, mirror);
        cv.circle(at, 0.12,
                  m.defect_degrees == 0 ? "fill:#999;stroke:#333;stroke-width:0.02"
                                        : "fill:#e8b631;stroke:#333;stroke-width:0.02");
        cv.text(at, m.label + " " + std::to_string(m.defect_degrees) + "\xC2\xB0");
    }
    return cv.finish(spec_comment);
}

/// SVG of a rasterized development with atom sites.
inline std::string render_patch(const LatticePatch& patch, const std::string& spec_comment,
                                bool mirror = false) {
    using namespace svgdetail;
    Canvas cv;
    for (const auto& poly : patch.polygons) {
        std::vector<XY> pts;
        for (const auto& v : poly) pts.push_back(project(v, mirror));
        cv.polyline(pts, "fill:#f2f5ff;stroke:#2b3a67;stroke-width:0.04", true);
    }
    for (const auto& s : patch.seams) {
        cv.line(project(s.src.a, mirror), project(s.src.b, mirror),
                "stroke:#1a7f37;stroke-width:0.04");
        cv.line(project(s.tgt.a, mirror), project(s.tgt.b, mirror),
                "stroke:#1a7f37;stroke-width:0.04;stroke-dasharray:0.16 0.08");
    }
    for (const auto& site : patch.sites)
        cv.circle(project(site, mirror), 0.07, "fill:#444");
    for (const auto& m : patch.marks)
        cv.circle(project(m.pos, mirror), 0.12, "fill:#e8b631;stroke:#333;stroke-width:0.02");
    return cv.finish(spec_comment);
}

}  // namespace conefold

#pragma once

#include <optional>
#include <vector>

#include "conefold/eisenstein.hpp"

namespace conefold {

/// Cross product of the Cartesian images of two Eisenstein vectors, up to the
/// positive factor √3/2; the sign is the exact orientation sign.
inline Rat cross(const EisRat& u, const EisRat& v) { return u.a * v.b - u.b * v.a; }

/// Dot product up to a positive factor (1/4): 4·(x·y) in lattice terms.
inline Rat dot4(const EisRat& u, const EisRat& v) {
    // x1x2 + y1y2 with x = a + b/2, y = b√3/2, all times 4.
    return (2 * u.a + u.b) * (2 * v.a + v.b) + 3 * u.b * v.b;
}

/// Sign of the turn p -> q -> r: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const EisRat& p, const EisRat& q, const EisRat& r) {
    Rat c = cross(q - p, r - p);
    if (c > 0) return 1;
    if (c < 0) return -1;
    return 0;
}

struct Segment {
    EisRat a;
    EisRat b;
};

/// p lies on the closed segment [a, b].
inline bool on_segment(const EisRat& p, const EisRat& a, const EisRat& b) {
    if (orientation(a, b, p) != 0) return false;
    EisRat d = b - a;
    Rat t = dot4(p - a, d);
    return t >= 0 && t <= dot4(d, d);
}
inline bool on_segment(const EisRat& p, const Segment& s) { return on_segment(p, s.a, s.b); }

/// Proper or touching intersection test of closed segments.
inline bool segments_intersect(const EisRat& a, const EisRat& b, const EisRat& c,
                               const EisRat& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

/// Intersection parameter of ray/segment (p, p+r) with segment (q, q+s), if the
/// lines properly cross: returns t with hit = p + t·r, 0 <= t <= 1, and the
/// corresponding u in [0, 1] on the other segment.
inline std::optional<std::pair<Rat, Rat>> segment_params(const EisRat& p, const EisRat& r,
                                                         const EisRat& q, const EisRat& s) {
    Rat den = cross(r, s);
    if (den == 0) return std::nullopt;
    Rat t = cross(q - p, s) / den;
    Rat u = cross(q - p, r) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return std::make_pair(t, u);
}

using Polygon = std::vector<EisRat>;

/// Twice the signed Cartesian area divided by √3/2; equals the signed count of
/// unit lattice triangles covered. Positive for counterclockwise polygons.
inline Rat signed_area_tri(const Polygon& poly) {
    Rat s = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const EisRat& p = poly[i];
        const EisRat& q = poly[(i + 1) % n];
        s += cross(p, q);
    }
    return s;
}

enum class PointLoc { Outside, OnBoundary, Inside };

/// Exact point location in a simple polygon (any orientation), by crossing
/// count against a horizontal ray in the sheared (a, b) coordinate frame.
inline PointLoc locate_point(const EisRat& pt, const Polygon& poly) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(pt, poly[i], poly[(i + 1) % n])) return PointLoc::OnBoundary;
    }
    // Ray cast in the +x Cartesian direction: count crossings using exact
    // comparisons on the Cartesian images (rational x, rational y·√3).
    auto cy = [](const EisRat& p) { return p.b; };              // y up to √3/2 > 0
    auto cx = [](const EisRat& p) { return 2 * p.a + p.b; };    // x up to 1/2 > 0
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const EisRat& a = poly[i];
        const EisRat& b = poly[(i + 1) % n];
        Rat ya = cy(a), yb = cy(b), yp = cy(pt);
        bool a_below = ya <= yp, b_below = yb <= yp;
        if (a_below == b_below) continue;
        // x coordinate of the edge at height yp, compared with pt's x.
        // (xb - xa)*(yp - ya)/(yb - ya) + xa  >  xp
        Rat lhs = (cx(b) - cx(a)) * (yp - ya) - (cx(pt) - cx(a)) * (yb - ya);
        int s = (yb > ya) ? 1 : -1;
        if (s * lhs > 0) inside = !inside;
    }
    return inside ? PointLoc::Inside : PointLoc::Outside;
}

/// Boundary self-intersection test for a closed polygon (adjacent edges may
/// share their common vertex only).
inline bool is_simple_polygon(const Polygon& poly) {
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        EisRat a = poly[i], b = poly[(i + 1) % n];
        if (a == b) return false;
        for (size_t j = i + 1; j < n; ++j) {
            EisRat c = poly[j], d = poly[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Allow only the shared endpoint.
                EisRat shared = (j == i + 1) ? b : a;
                EisRat other1 = (j == i + 1) ? a : b;
                EisRat other2 = (j == i + 1) ? d : c;
                if (orientation(shared, other1, other2) == 0 &&
                    dot4(other1 - shared, other2 - shared) > 0)
                    return false;  // folds back over itself
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

}  // namespace conefold

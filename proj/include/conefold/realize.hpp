#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "conefold/assembly.hpp"
#include "conefold/caps.hpp"
#include "conefold/eisenstein.hpp"
#include "conefold/errors.hpp"
#include "conefold/geometry.hpp"

namespace conefold {

/// Cubic graph with a rotation system (counterclockwise neighbor order per
/// atom) and the face census derived from it.
struct FullereneGraph {
    std::vector<std::array<int, 3>> rotation;

    int atom_count() const { return static_cast<int>(rotation.size()); }
    std::vector<std::pair<int, int>> bonds() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < atom_count(); ++u)
            for (int v : rotation[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        std::sort(out.begin(), out.end());
        return out;
    }
    bool connected() const {
        if (rotation.empty()) return false;
        std::vector<char> seen(rotation.size(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ++cnt;
            for (int v : rotation[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    q.push(v);
                }
        }
        return cnt == atom_count();
    }
};

/// Face sizes from rotation-system traversal. Requires a closed cubic map:
/// V - E + F must come out 2 and face sizes must double-count the bonds.
inline std::map<int, int> face_census(const FullereneGraph& g) {
    int n = g.atom_count();
    if (n == 0) throw NonPolyhedral("empty graph");
    for (const auto& nb : g.rotation)
        for (int v : nb)
            if (v < 0 || v >= n) throw NonPolyhedral("rotation references a missing atom");
    if (!g.connected()) throw NonPolyhedral("graph is not connected");
    auto idx_of = [&](int v, int u) {
        const auto& r = g.rotation[static_cast<size_t>(v)];
        for (int i = 0; i < 3; ++i)
            if (r[static_cast<size_t>(i)] == u) return i;
        throw NonPolyhedral("rotation system is not symmetric");
    };
    std::set<std::pair<int, int>> used;
    std::map<int, int> census;
    int faces = 0;
    for (int u = 0; u < n; ++u) {
        for (int v : g.rotation[static_cast<size_t>(u)]) {
            if (used.count({u, v})) continue;
            int size = 0;
            int cu = u, cv = v;
            do {
                used.insert({cu, cv});
                ++size;
                int i = idx_of(cv, cu);
                int w = g.rotation[static_cast<size_t>(cv)][static_cast<size_t>((i + 2) % 3)];
                cu = cv;
                cv = w;
                if (size > 6 * n) throw NonPolyhedral("face traversal does not close");
            } while (!(cu == u && cv == v));
            census[size] += 1;
            ++faces;
        }
    }
    int E = 3 * n / 2;
    if (n % 2 != 0 || n - E + faces != 2) throw NonPolyhedral("V - E + F != 2");
    long twoE = 0;
    for (auto& [s, c] : census) twoE += static_cast<long>(s) * c;
    if (twoE != 2L * E) throw NonPolyhedral("face sizes do not double-count edges");
    return census;
}

namespace detail {

inline std::vector<int> map_signature(const FullereneGraph& g, int su, int sv, int dir) {
    int n = g.atom_count();
    std::vector<int> id(static_cast<size_t>(n), -1);
    std::vector<int> entry(static_cast<size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    id[static_cast<size_t>(su)] = 0;
    entry[static_cast<size_t>(su)] = sv;
    order.push_back(su);
    int next_id = 1;
    for (size_t pos = 0; pos < order.size(); ++pos) {
        int u = order[pos];
        const auto& r = g.rotation[static_cast<size_t>(u)];
        int start = 0;
        for (int i = 0; i < 3; ++i)
            if (r[static_cast<size_t>(i)] == entry[static_cast<size_t>(u)]) start = i;
        for (int s = 0; s < 3; ++s) {
            int i = ((start + dir * s) % 3 + 3) % 3;
            int v = r[static_cast<size_t>(i)];
            if (id[static_cast<size_t>(v)] < 0) {
                id[static_cast<size_t>(v)] = next_id++;
                entry[static_cast<size_t>(v)] = u;
                order.push_back(v);
            }
        }
    }
    if (next_id != n) return {};
    std::vector<int> sig;
    sig.reserve(static_cast<size_t>(3 * n));
    for (int u : order) {
        const auto& r = g.rotation[static_cast<size_t>(u)];
        int start = 0;
        for (int i = 0; i < 3; ++i)
            if (r[static_cast<size_t>(i)] == entry[static_cast<size_t>(u)]) start = i;
        for (int s = 0; s < 3; ++s) {
            int i = ((start + dir * s) % 3 + 3) % 3;
            sig.push_back(id[static_cast<size_t>(r[static_cast<size_t>(i)])]);
        }
    }
    return sig;
}

inline std::vector<int> canonical_form(const FullereneGraph& g) {
    std::vector<int> best;
    for (int u = 0; u < g.atom_count(); ++u)
        for (int v : g.rotation[static_cast<size_t>(u)])
            for (int dir : {1, -1}) {
                auto sig = map_signature(g, u, v, dir);
                if (sig.empty()) continue;
                if (best.empty() || sig < best) best = std::move(sig);
            }
    return best;
}

}  // namespace detail

/// Canonical-labeling isomorphism for cubic maps, taking the lexicographic
/// minimum over every oriented starting bond and both traversal senses, so
/// mirror images compare equal. For 3-connected planar graphs this decides
/// graph isomorphism.
inline bool isomorphic(const FullereneGraph& g1, const FullereneGraph& g2) {
    if (g1.atom_count() != g2.atom_count()) return false;
    if (g1.atom_count() == 0) return true;
    if (!g1.connected() || !g2.connected()) return false;
    return detail::canonical_form(g1) == detail::canonical_form(g2);
}

/// Exact closed development of a tube fullerene: disjoint simple polygons in
/// one plane whose free boundary is fully paired by lattice seam isometries,
/// plus the atom sites, one canonical representative per physical atom.
struct LatticePatch {
    std::vector<Polygon> polygons;
    std::vector<Seam> seams;
    std::vector<Mark> marks;
    std::vector<EisRat> sites;     // canonical atom positions, sorted
    Int area_triangles = 0;        // total area in unit lattice triangles
    CoxeterCoord offset_used;      // offset after period normalization
};

namespace detail {

struct CapPart {
    std::vector<Polygon> polygons;  // region pieces (flap triangles or cap body)
    std::vector<Seam> seams;
    std::vector<Mark> marks;
    std::vector<Segment> lift_src;  // seam sources that move with the cap body
};

/// Pentagonal-pyramid cap as its isometric flap strip (see build_flap_strip).
inline CapPart build_pyramid_flaps(const std::vector<EisRat>& p) {
    FlapStrip strip = build_flap_strip(p);
    CapPart part;
    part.polygons = strip.flaps;
    part.seams = strip.seams;
    for (size_t i = 0; i + 1 < p.size(); ++i) part.marks.push_back({p[i], 60, "rim"});
    part.marks.push_back({strip.apexes[0], 60, "apex"});
    return part;
}

/// Hexagon cap: the flat closed polygon chained by e_i·ω^{i-1}, glued to the
/// base path edge by edge; the cap body is lifted into free plane space later.
inline CapPart build_hexagon_cap(const std::vector<CoxeterCoord>& edges,
                                 const std::vector<EisRat>& p) {
    CapPart part;
    Polygon hex;
    EisRat q{0, 0};
    for (int i = 0; i < 6; ++i) {
        hex.push_back(q);
        q = q + rotate60(edges[static_cast<size_t>(i)].to_eisenstein(), i);
    }
    if (!q.is_zero()) throw InconsistentParams("hexagon cap does not close");
    if (!is_simple_polygon(hex) || signed_area_tri(hex) <= 0)
        throw EmptyRegion("hexagon cap polygon is degenerate");
    part.polygons.push_back(hex);
    for (int i = 0; i < 6; ++i) {
        Segment src{hex[static_cast<size_t>(i)], hex[static_cast<size_t>((i + 1) % 6)]};
        Segment tgt{p[static_cast<size_t>(i)], p[static_cast<size_t>(i) + 1]};
        EisRat ds = src.b - src.a, dt = tgt.b - tgt.a;
        int rot = -1;
        for (int k2 = 0; k2 < 6 && rot < 0; ++k2)
            if (rotate60(ds, k2) == dt) rot = k2;
        if (rot < 0) throw GluingMismatch("hexagon rim edge is not a lattice rotation");
        Isometry iso{rot, tgt.a - rotate60(src.a, rot)};
        part.seams.push_back({src, tgt, iso});
        part.lift_src.push_back(src);
        part.marks.push_back({p[static_cast<size_t>(i)], 60, "rim"});
    }
    return part;
}

inline void transform_part(CapPart& part, const Isometry& phi) {
    for (auto& poly : part.polygons)
        for (auto& v : poly) v = phi(v);
    for (auto& s : part.seams) {
        s.src = {phi(s.src.a), phi(s.src.b)};
        s.tgt = {phi(s.tgt.a), phi(s.tgt.b)};
        s.iso = compose(phi, compose(s.iso, phi.inverse()));
    }
    for (auto& m : part.marks) m.pos = phi(m.pos);
    for (auto& e : part.lift_src) e = {phi(e.a), phi(e.b)};
}

/// Translates the cap body (polygons and seam sources listed in lift_src)
/// while the seam targets stay on the tube path.
inline void lift_part_body(CapPart& part, const EisRat& lift) {
    Isometry L = Isometry::translation(lift);
    Isometry Linv = L.inverse();
    for (auto& poly : part.polygons)
        for (auto& v : poly) v = L(v);
    for (auto& s : part.seams) {
        bool moves = false;
        for (const auto& e : part.lift_src)
            if (e.a == s.src.a && e.b == s.src.b) moves = true;
        if (moves) {
            s.src = {L(s.src.a), L(s.src.b)};
            s.iso = compose(s.iso, Linv);
        }
    }
}

inline void bounds_b(const std::vector<Polygon>& polys, Rat& lo, Rat& hi, bool& any) {
    for (const auto& poly : polys)
        for (const auto& v : poly) {
            if (!any || v.b < lo) lo = v.b;
            if (!any || v.b > hi) hi = v.b;
            any = true;
        }
}

inline bool polygons_interior_disjoint(const std::vector<Polygon>& polys) {
    for (size_t i = 0; i < polys.size(); ++i) {
        for (size_t j = i + 1; j < polys.size(); ++j) {
            const Polygon &P = polys[i], &Q = polys[j];
            size_t n = P.size(), m = Q.size();
            for (size_t a = 0; a < n; ++a) {
                EisRat p1 = P[a], p2 = P[(a + 1) % n];
                for (size_t b = 0; b < m; ++b) {
                    EisRat q1 = Q[b], q2 = Q[(b + 1) % m];
                    int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
                    int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
                    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
                        return false;
                }
            }
            auto centroid = [](const Polygon& R) {
                Rat cx = 0, cy = 0;
                for (const auto& v : R) {
                    cx += v.a;
                    cy += v.b;
                }
                long n2 = static_cast<long>(R.size());
                return EisRat{cx / Rat(n2), cy / Rat(n2)};
            };
            if (locate_point(centroid(P), Q) == PointLoc::Inside) return false;
            if (locate_point(centroid(Q), P) == PointLoc::Inside) return false;
        }
    }
    return true;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { up[static_cast<size_t>(find(a))] = find(b); }
};

inline Int floor_rat(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;
    if (num < 0 && num % den != 0) q -= 1;
    return q;
}

}  // namespace detail

/// Rasterizes a validated tube-fullerene specification into a lattice patch:
/// every hexagonal-lattice atom site of the closed development, each physical
/// atom exactly once after seam identification.
///
/// Realization covers pentagonal-pyramid and hexagon caps. The trimmed and
/// truncated cap families need trim-cut rasterization and are out of the
/// realization scope; their developments and validation are still exact.
inline LatticePatch rasterize(const TubeFullereneSpec& spec) {
    {
        auto issues = validate_tube_fullerene(spec);
        if (!issues.empty())
            throw DegenerateInput(
                "rasterize: spec invalid: " + std::string(to_string(issues.front().code)) +
                (issues.front().detail.empty() ? "" : ": " + issues.front().detail));
    }
    for (const CapSpec* c : {&spec.cap_top, &spec.cap_bottom}) {
        CapType t = cap_type(*c);
        if (t != CapType::PentagonalPyramid && t != CapType::Hexagon)
            throw Unsupported(std::string("realization of ") + to_string(t) +
                              " caps is not supported (trim-cut rasterization)");
        for (const auto& e : base_edges_of(*c))
            if (!e.integral()) throw NonIntegralLattice("cap edge is not lattice-integral");
    }
    if (!spec.tube.chiral.integral() || !spec.tube.offset.integral())
        throw NonIntegralLattice("tube parameters are not lattice-integral");

    EisRat C = spec.tube.chiral.to_eisenstein();
    EisRat w = spec.tube.offset.to_eisenstein();

    // Reduce the offset modulo the chiral period: subtract round(proj) copies
    // of C, where proj is the exact projection of w onto C.
    {
        Rat proj = dot4(w, C) / dot4(C, C);
        Int j = detail::floor_rat(proj + Rat(1, 2));
        w = w - C * Rat(j);
    }
    Rat transverse = cross(C, w);
    if (transverse == 0) throw EmptyRegion("offset is collinear with the chiral vector");

    // Draw whichever cap sits on the greater transverse side as the top cap.
    const CapSpec* cap_up = &spec.cap_top;
    const CapSpec* cap_down = &spec.cap_bottom;
    EisRat anchor_down = w;
    if (transverse > 0) {
        std::swap(cap_up, cap_down);
        anchor_down = -w;
    }

    auto chain = [](const std::vector<CoxeterCoord>& es) {
        std::vector<EisRat> pts{EisRat{0, 0}};
        for (const auto& e : es) pts.push_back(pts.back() + e.to_eisenstein());
        return pts;
    };
    auto edges_up = base_edges_of(*cap_up);
    auto edges_down = base_edges_of(*cap_down);
    std::vector<EisRat> p = chain(edges_up);
    std::vector<EisRat> sp = chain(edges_down);
    size_t ku = edges_up.size(), kd = edges_down.size();

    // Bottom path: half-turn image of the down cap's own chain, so its flaps
    // open away from the tube. q_j = t - sp_{kd-j}, t = anchor + C.
    EisRat t_shift = anchor_down + sp[kd];
    Isometry phi{3, t_shift};
    std::vector<EisRat> q(kd + 1);
    for (size_t j = 0; j <= kd; ++j) q[j] = phi(sp[kd - j]);

    // Tube region between the paths, counterclockwise.
    Polygon tube;
    for (size_t i = ku + 1; i-- > 0;) tube.push_back(p[i]);
    for (size_t j = 0; j <= kd; ++j) tube.push_back(q[j]);
    if (!is_simple_polygon(tube) || signed_area_tri(tube) <= 0)
        throw EmptyRegion("tube region is degenerate for this offset");

    LatticePatch patch;
    patch.offset_used = CoxeterCoord::from_eisenstein(transverse > 0 ? -anchor_down : anchor_down);
    patch.polygons.push_back(tube);
    patch.seams.push_back({{p[0], q[0]}, {p[ku], q[kd]}, Isometry::translation(C)});

    auto add_cap = [&](const CapSpec& cap, bool up) {
        detail::CapPart part;
        const std::vector<EisRat>& path = up ? p : sp;
        if (cap_type(cap) == CapType::PentagonalPyramid) {
            part = detail::build_pyramid_flaps(path);
        } else {
            part = detail::build_hexagon_cap(base_edges_of(cap), path);
        }
        if (!up) detail::transform_part(part, phi);
        if (!part.lift_src.empty()) {
            Rat lo = 0, hi = 0, plo = 0, phi2 = 0;
            bool any = false, pany = false;
            detail::bounds_b(patch.polygons, lo, hi, any);
            detail::bounds_b(part.polygons, plo, phi2, pany);
            Int lift_units = detail::floor_rat(hi - plo) + 3;
            detail::lift_part_body(part, EisRat{0, Rat(lift_units)});
        }
        for (auto& poly : part.polygons) patch.polygons.push_back(std::move(poly));
        for (auto& s : part.seams) patch.seams.push_back(std::move(s));
        for (auto& m : part.marks) patch.marks.push_back(std::move(m));
    };
    add_cap(*cap_up, true);
    add_cap(*cap_down, false);

    for (const auto& poly : patch.polygons) {
        if (!is_simple_polygon(poly)) throw EmptyRegion("development polygon is not simple");
        for (const auto& v : poly)
            if (!v.integral()) throw NonIntegralLattice("development vertex has denominator > 1");
    }
    if (!detail::polygons_interior_disjoint(patch.polygons))
        throw EmptyRegion("cap developments overlap; offset too small");

    Rat total_area = 0;
    for (const auto& poly : patch.polygons) total_area += signed_area_tri(poly);
    if (boost::multiprecision::denominator(total_area) != 1 || total_area <= 0)
        throw EmptyRegion("development area is not a positive integer triangle count");
    patch.area_triangles = boost::multiprecision::numerator(total_area);

    // Enumerate the two triangle-centroid classes of every lattice cell in
    // range, keeping sites inside or on the boundary of some region polygon.
    Int alo = 0, ahi = 0, blo = 0, bhi = 0;
    {
        bool first = true;
        for (const auto& poly : patch.polygons)
            for (const auto& v : poly) {
                Int a = boost::multiprecision::numerator(v.a);
                Int b = boost::multiprecision::numerator(v.b);
                if (first) {
                    alo = ahi = a;
                    blo = bhi = b;
                    first = false;
                } else {
                    if (a < alo) alo = a;
                    if (a > ahi) ahi = a;
                    if (b < blo) blo = b;
                    if (b > bhi) bhi = b;
                }
            }
        alo -= 1;
        blo -= 1;
    }

    std::map<EisRat, int> slot_of;
    std::vector<EisRat> slot_pos;
    auto in_region = [&](const EisRat& x) {
        for (const auto& poly : patch.polygons)
            if (locate_point(x, poly) != PointLoc::Outside) return true;
        return false;
    };
    for (Int a = alo; a <= ahi; ++a)
        for (Int b = blo; b <= bhi; ++b)
            for (int cls = 1; cls <= 2; ++cls) {
                EisRat site{Rat(3 * a + cls, 3), Rat(3 * b + cls, 3)};
                if (!in_region(site)) continue;
                if (slot_of.emplace(site, static_cast<int>(slot_pos.size())).second)
                    slot_pos.push_back(site);
            }

    detail::UnionFind uf(slot_pos.size());
    for (const auto& seam : patch.seams)
        for (size_t i = 0; i < slot_pos.size(); ++i) {
            if (!on_segment(slot_pos[i], seam.src)) continue;
            auto it = slot_of.find(seam.iso(slot_pos[i]));
            if (it == slot_of.end())
                throw GluingMismatch("seam maps an atom site outside the region");
            uf.unite(static_cast<int>(i), it->second);
        }

    std::map<int, EisRat> root_min;
    for (size_t i = 0; i < slot_pos.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        auto it = root_min.find(r);
        if (it == root_min.end() || slot_pos[i] < it->second) root_min[r] = slot_pos[i];
    }
    for (const auto& [r, pos] : root_min) patch.sites.push_back(pos);
    std::sort(patch.sites.begin(), patch.sites.end());
    if (patch.sites.empty()) throw EmptyRegion("no atom sites in the development");
    return patch;
}

namespace detail {

/// Neighbor directions of an atom site, counterclockwise. Class 1 sites are
/// up-triangle centroids, class 2 are down-triangle centroids.
inline std::array<EisRat, 3> bond_directions(const EisRat& site) {
    Rat a3r = site.a * 3;
    Int a3 = boost::multiprecision::numerator(a3r);
    Int cls = ((a3 % 3) + 3) % 3;
    EisRat d1{Rat(1, 3), Rat(1, 3)};
    EisRat d2{Rat(-2, 3), Rat(1, 3)};
    EisRat d3{Rat(1, 3), Rat(-2, 3)};
    if (cls == 1) return {d1, d2, d3};
    return {-d1, -d2, -d3};
}

}  // namespace detail

/// Glues a rasterized patch into the fullerene graph: lattice adjacency is
/// computed in the development and transported through the seam isometries;
/// the rotation system is inherited from the plane orientation.
inline FullereneGraph glue(const LatticePatch& patch) {
    // Any enumerated position (canonical or boundary twin) -> canonical id.
    std::map<EisRat, int> canon;
    for (size_t i = 0; i < patch.sites.size(); ++i)
        canon.emplace(patch.sites[i], static_cast<int>(i));
    {
        bool changed = true;
        int guard = 0;
        while (changed && guard++ < 64) {
            changed = false;
            std::vector<std::pair<EisRat, int>> extra;
            for (const auto& seam : patch.seams)
                for (const auto& [pos, id] : canon) {
                    if (on_segment(pos, seam.src)) {
                        EisRat img = seam.iso(pos);
                        if (!canon.count(img)) extra.emplace_back(img, id);
                    }
                    if (on_segment(pos, seam.tgt)) {
                        EisRat img = seam.iso.inverse()(pos);
                        if (!canon.count(img)) extra.emplace_back(img, id);
                    }
                }
            for (auto& e : extra)
                if (canon.emplace(e.first, e.second).second) changed = true;
        }
    }

    // Material side of a boundary segment: +1 when some polygon traverses it
    // as stored (interior on the left), -1 when reversed.
    auto material_sign = [&](const Segment& seg) -> int {
        for (const auto& poly : patch.polygons) {
            size_t n = poly.size();
            for (size_t i = 0; i < n; ++i) {
                const EisRat& u = poly[i];
                const EisRat& v = poly[(i + 1) % n];
                if (u == seg.a && v == seg.b) return 1;
                if (u == seg.b && v == seg.a) return -1;
            }
        }
        return 0;
    };

    // Transport a bond endpoint through seams until it lands on a known site.
    // A bond starting on a cut and pointing off the material jumps to the
    // twin chart first; a strict crossing of a seam side is followed before
    // any position lookup, since a point on the far bank of a cut is a twin
    // image of the start, not the neighbor.
    std::function<int(EisRat, EisRat, int)> resolve = [&](EisRat from, EisRat to,
                                                          int depth) -> int {
        if (depth <= 0) throw GluingMismatch("bond transport did not terminate");
        for (const auto& seam : patch.seams)
            for (int side = 0; side < 2; ++side) {
                const Segment& seg = side == 0 ? seam.src : seam.tgt;
                if (!on_segment(from, seg)) continue;
                int mat = material_sign(seg);
                int s = orientation(seg.a, seg.b, to);
                if (mat == 0 || s == 0 || s == mat) continue;
                Isometry iso = side == 0 ? seam.iso : seam.iso.inverse();
                return resolve(iso(from), iso(to), depth - 1);
            }
        Rat best_t;
        bool have = false;
        const Seam* best_seam = nullptr;
        bool best_src = true;
        for (const auto& seam : patch.seams)
            for (int side = 0; side < 2; ++side) {
                const Segment& seg = side == 0 ? seam.src : seam.tgt;
                auto hit = segment_params(from, to - from, seg.a, seg.b - seg.a);
                if (!hit || hit->first <= 0 || hit->first >= 1) continue;
                if (!have || hit->first < best_t) {
                    best_t = hit->first;
                    best_seam = &seam;
                    best_src = (side == 0);
                    have = true;
                }
            }
        if (have) {
            Isometry iso = best_src ? best_seam->iso : best_seam->iso.inverse();
            EisRat hit_pt = from + (to - from) * best_t;
            return resolve(iso(hit_pt), iso(to), depth - 1);
        }
        auto it = canon.find(to);
        if (it != canon.end()) return it->second;
        throw GluingMismatch("bond leaves the development without a seam");
    };

    FullereneGraph g;
    g.rotation.resize(patch.sites.size());
    for (size_t i = 0; i < patch.sites.size(); ++i) {
        const EisRat& x = patch.sites[i];
        auto dirs = detail::bond_directions(x);
        for (int d = 0; d < 3; ++d)
            g.rotation[i][static_cast<size_t>(d)] = resolve(x, x + dirs[static_cast<size_t>(d)], 12);
    }
    for (size_t i = 0; i < g.rotation.size(); ++i) {
        const auto& r = g.rotation[i];
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2] || r[0] == static_cast<int>(i) ||
            r[1] == static_cast<int>(i) || r[2] == static_cast<int>(i))
            throw GluingMismatch("degenerate adjacency at atom " + std::to_string(i));
    }
    face_census(g);  // throws NonPolyhedral if the gluing is inconsistent
    return g;
}

/// Full pipeline: rasterize, then glue.
inline FullereneGraph realize_tube_fullerene(const TubeFullereneSpec& spec) {
    return glue(rasterize(spec));
}

}  // namespace conefold

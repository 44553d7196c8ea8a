#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conefold/combine.hpp"
#include "conefold/eisenstein.hpp"
#include "conefold/errors.hpp"
#include "conefold/geometry.hpp"

namespace conefold {

enum class CapType {
    Hexagon,
    PentagonalPyramid,
    TrimmedSquarePyramid,
    TruncatedTriangularPyramid,
    TrimmedShrunkPyramid
};

inline const char* to_string(CapType t) {
    switch (t) {
        case CapType::Hexagon: return "hexagon";
        case CapType::PentagonalPyramid: return "pentagonal-pyramid";
        case CapType::TrimmedSquarePyramid: return "trimmed-square-pyramid";
        case CapType::TruncatedTriangularPyramid: return "truncated-triangular-pyramid";
        case CapType::TrimmedShrunkPyramid: return "trimmed-shrunk-pyramid";
    }
    return "?";
}

/// Cap type by the number of singularities adjacent to the tube.
inline CapType classify_cap(int adjacent_singularities) {
    switch (adjacent_singularities) {
        case 6: return CapType::Hexagon;
        case 5: return CapType::PentagonalPyramid;
        case 4: return CapType::TrimmedSquarePyramid;
        case 3: return CapType::TruncatedTriangularPyramid;
        case 2: return CapType::TrimmedShrunkPyramid;
        default: throw OutOfRange("a cap has between 2 and 6 singularities adjacent to the tube");
    }
}

enum class TrimVariant { V1, V2 };

struct HexagonCap {
    std::array<CoxeterCoord, 5> edges;  // sixth edge is derived
};
struct PentagonalPyramidCap {
    std::array<CoxeterCoord, 5> base_edges;
};
struct TrimmedSquarePyramidCap {
    std::array<CoxeterCoord, 4> base_edges;
    CoxeterCoord locator_E_from_A;
    TrimVariant trim_variant = TrimVariant::V1;
};
struct TruncatedTriangularPyramidCap {
    std::array<CoxeterCoord, 3> base_edges;
    CoxeterCoord locator_D_from_A;
    CoxeterCoord locator_E_from_B;
    int truncation_variant = 1;  // 1..6
};
struct TrimmedShrunkPyramidCap {
    std::array<CoxeterCoord, 2> base_edges;
    std::array<CoxeterCoord, 3> locators;  // C and D from vertex A, E from vertex B
    TrimVariant trim_variant = TrimVariant::V1;
};

using CapSpec = std::variant<HexagonCap, PentagonalPyramidCap, TrimmedSquarePyramidCap,
                             TruncatedTriangularPyramidCap, TrimmedShrunkPyramidCap>;

inline CapType cap_type(const CapSpec& cap) {
    return std::visit(
        [](const auto& c) -> CapType {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, HexagonCap>) return CapType::Hexagon;
            if constexpr (std::is_same_v<T, PentagonalPyramidCap>)
                return CapType::PentagonalPyramid;
            if constexpr (std::is_same_v<T, TrimmedSquarePyramidCap>)
                return CapType::TrimmedSquarePyramid;
            if constexpr (std::is_same_v<T, TruncatedTriangularPyramidCap>)
                return CapType::TruncatedTriangularPyramid;
            return CapType::TrimmedShrunkPyramid;
        },
        cap);
}

/// The closing sixth edge of a hexagon cap:
///   m6 =  m2 + m3 - m5 + n1 + n2 - n4 - n5
///   n6 = -m1 - m2 + m4 + m5 - n1 + n3 + n4
/// Equivalently the unique solution of the loop closure Σ eᵢ·ω^{i-1} = 0.
template <class T>
std::array<T, 2> sixth_edge_formula(const std::array<std::array<T, 2>, 5>& e) {
    auto m = [&](int i) -> const T& { return e[static_cast<size_t>(i - 1)][0]; };
    auto n = [&](int i) -> const T& { return e[static_cast<size_t>(i - 1)][1]; };
    T m6 = m(2) + m(3) - m(5) + n(1) + n(2) - n(4) - n(5);
    T n6 = -m(1) - m(2) + m(4) + m(5) - n(1) + n(3) + n(4);
    return {m6, n6};
}

inline CoxeterCoord hexagon_sixth_edge(const std::array<CoxeterCoord, 5>& e) {
    std::array<std::array<Rat, 2>, 5> raw;
    for (size_t i = 0; i < 5; ++i) raw[i] = {e[i].m, e[i].n};
    auto r = sixth_edge_formula(raw);
    return {r[0], r[1]};
}

inline std::vector<CoxeterCoord> base_edges_of(const CapSpec& cap) {
    return std::visit(
        [](const auto& c) -> std::vector<CoxeterCoord> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, HexagonCap>) {
                std::vector<CoxeterCoord> es(c.edges.begin(), c.edges.end());
                es.push_back(hexagon_sixth_edge(c.edges));
                return es;
            } else {
                return {c.base_edges.begin(), c.base_edges.end()};
            }
        },
        cap);
}

/// Component-wise sum of the cap's base edges; for the hexagon the derived
/// sixth edge is included. This is the chiral vector the cap can close.
inline CoxeterCoord cap_rim_vector(const CapSpec& cap) {
    CoxeterCoord sum{0, 0};
    for (const auto& e : base_edges_of(cap)) sum = sum + e;
    return sum;
}

/// Apex of the gap equation (last - apex) = (first - apex)·ω^{defect/60}:
/// apex = first + (last - first)·z with z = 1/(1 - ω^{defect/60}).
inline EisRat apex_point(const EisRat& first, const EisRat& last, const Defect& defect) {
    if (first == last) throw DegenerateInput("apex_point: first = last");
    EisRat z;
    switch (defect.degrees) {
        case 60: z = EisRat{0, 1}; break;                    // ω
        case 120: z = EisRat{Rat(1, 3), Rat(1, 3)}; break;   // (1+ω)/3
        case 180: z = EisRat{Rat(1, 2), Rat(0)}; break;      // 1/2
        case 240: z = EisRat{Rat(2, 3), Rat(-1, 3)}; break;  // (2-ω)/3
        default: throw OutOfRange("apex_point: unsupported defect");
    }
    return first + (last - first) * z;
}

/// z ↦ rotate60(z, rot) + shift. All seam isometries are of this form.
struct Isometry {
    int rot = 0;     // power of ω
    EisRat shift{};  // lattice-consistent translation

    EisRat operator()(const EisRat& z) const { return rotate60(z, rot) + shift; }
    Isometry inverse() const {
        int r = ((-rot) % 6 + 6) % 6;
        return {r, -rotate60(shift, r)};
    }
    friend Isometry compose(const Isometry& f, const Isometry& g) {  // f after g
        return {(f.rot + g.rot) % 6, rotate60(g.shift, f.rot) + f.shift};
    }
    static Isometry rotation_about(const EisRat& center, int rot) {
        return {((rot % 6) + 6) % 6, center - rotate60(center, rot)};
    }
    static Isometry translation(const EisRat& t) { return {0, t}; }
};

struct Mark {
    EisRat pos;
    int defect_degrees;  // 0 marks the hexagon cap's virtual apex
    std::string label;
};

struct Seam {
    Segment src;
    Segment tgt;
    Isometry iso;  // maps src endpoint-exactly onto tgt

    bool endpoint_exact() const { return iso(src.a) == tgt.a && iso(src.b) == tgt.b; }
};

/// An exact planar development: boundary polygon, marked singularities,
/// seam identifications, and cut segments sealed to create defects.
struct Unfolding {
    Polygon boundary;
    std::vector<Mark> marks;
    std::vector<Seam> seams;
    std::vector<Segment> cuts;
    std::vector<Polygon> removed;          // trimmed-off regions, for rendering
    std::map<std::string, EisRat> points;  // named construction points

    int total_marked_defect() const {
        int s = 0;
        for (const auto& m : marks) s += m.defect_degrees;
        return s;
    }
};

namespace detail {

inline std::vector<EisRat> chain_base_path(const std::vector<CoxeterCoord>& edges) {
    std::vector<EisRat> p{EisRat{0, 0}};
    for (const auto& e : edges) {
        if (e.m == 0 && e.n == 0) throw DegenerateInput("zero-length base edge");
        p.push_back(p.back() + e.to_eisenstein());
    }
    return p;
}

/// Third vertex of the equilateral triangle on (a, b), on the side of `toward`.
inline EisRat equilateral_third(const EisRat& a, const EisRat& b, const EisRat& toward) {
    EisRat g1 = a + rotate60(b - a, 1);
    EisRat g2 = a + rotate60(b - a, -1);
    int side = orientation(a, b, toward);
    if (side == 0) return g1;
    return orientation(a, b, g1) == side ? g1 : g2;
}

/// The isometric development of a pyramid-family cap, cut along every lateral
/// edge: flap i is the triangle (p_{i-1}, p_i, A_i) and consecutive lateral
/// edges glue by -60 degree rotations about the base vertices, so every rim
/// vertex carries a 60 degree defect and the apex closes with (6-k)·60.
struct FlapStrip {
    std::vector<Polygon> flaps;
    std::vector<EisRat> apexes;  // apexes[i] is A_{i+1}
    std::vector<Seam> seams;     // k-1 interior lateral seams plus the outer one
};

inline FlapStrip build_flap_strip(const std::vector<EisRat>& p,
                                  std::optional<EisRat> virtual_apex = std::nullopt) {
    size_t k = p.size() - 1;
    EisRat C = p[k];
    Isometry g{0, EisRat{0, 0}};
    for (size_t i = 1; i <= k; ++i) g = compose(Isometry::rotation_about(p[i], -1), g);
    EisRat A1;
    EisensteinInt unit = omega_pow(static_cast<long>(g.rot)) - omega_pow(0);
    if (unit == EisensteinInt{0, 0}) {
        // Closed flat cap: the closure must already hold and any interior
        // apex serves as the cut center.
        if (!(g.shift == C)) throw InconsistentParams("cap does not close onto the tube period");
        if (!virtual_apex) throw InconsistentParams("flat cap needs a virtual apex");
        A1 = *virtual_apex;
    } else {
        A1 = div(C - g.shift, EisRat(unit));  // solves g(A1) = A1 + C
    }
    FlapStrip strip;
    strip.apexes.resize(k);
    strip.apexes[0] = A1;
    for (size_t i = 1; i < k; ++i)
        strip.apexes[i] = p[i] + rotate60(strip.apexes[i - 1] - p[i], -1);
    for (size_t i = 1; i <= k; ++i) {
        const EisRat& A = strip.apexes[i - 1];
        if (orientation(p[i - 1], p[i], A) <= 0)
            throw DegenerateInput("cap flap " + std::to_string(i) + " is degenerate or inverted");
        strip.flaps.push_back({p[i - 1], p[i], A});
    }
    for (size_t i = 1; i < k; ++i)
        strip.seams.push_back(
            {{p[i], strip.apexes[i - 1]}, {p[i], strip.apexes[i]}, Isometry::rotation_about(p[i], -1)});
    Isometry outer = compose(Isometry::translation(-C), Isometry::rotation_about(p[k], -1));
    strip.seams.push_back({{p[k], strip.apexes[k - 1]}, {p[0], strip.apexes[0]}, outer});
    return strip;
}

/// True when the point lies on the cap surface as developed into flaps:
/// covered by some flap, not on the rim path, not at the parent apex.
inline bool flap_strip_covers(const FlapStrip& strip, const std::vector<EisRat>& p,
                              const EisRat& x) {
    bool covered = false;
    for (const auto& f : strip.flaps)
        if (locate_point(x, f) != PointLoc::Outside) covered = true;
    if (!covered) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (on_segment(x, p[i], p[i + 1])) return false;
    for (const auto& a : strip.apexes)
        if (x == a) return false;
    return true;
}

}  // namespace detail

/// Exact development of a cap as its parameter diagram: base path chained by
/// the edge vectors, apex/parent from the gap equation, combined-singularity
/// images placed per type, seams and trim cuts recorded.
inline Unfolding develop_cap(const CapSpec& cap) {
    Unfolding u;
    CapType type = cap_type(cap);

    if (type == CapType::Hexagon) {
        auto edges = base_edges_of(cap);  // includes the derived sixth
        for (const auto& e : edges)
            if (e.m == 0 && e.n == 0) throw DegenerateInput("zero-length hexagon edge");
        EisRat q{0, 0};
        EisRat centroid{0, 0};
        for (int i = 0; i < 6; ++i) {
            u.boundary.push_back(q);
            u.marks.push_back({q, 60, "B" + std::to_string(i + 1)});
            centroid = centroid + q;
            q = q + rotate60(edges[static_cast<size_t>(i)].to_eisenstein(), i);
        }
        if (!q.is_zero()) throw InconsistentParams("hexagon edges do not close");
        centroid = centroid / Rat(6);
        // Virtual apex: the vertex centroid rounded to the nearest lattice
        // point. It carries no defect and affects no computed quantity.
        auto round_rat = [](const Rat& r) {
            Rat shifted = r + Rat(1, 2);
            Int num = boost::multiprecision::numerator(shifted);
            Int den = boost::multiprecision::denominator(shifted);
            Int q2 = num / den;
            if (num < 0 && num % den != 0) q2 -= 1;
            return Rat(q2);
        };
        EisRat apex{round_rat(centroid.a), round_rat(centroid.b)};
        u.marks.push_back({apex, 0, "apex"});
        u.points["apex"] = apex;
        return u;
    }

    auto edges = base_edges_of(cap);
    auto p = detail::chain_base_path(edges);
    size_t k = edges.size();
    int parent_defect = 60 * static_cast<int>(6 - k);
    EisRat P = apex_point(p[0], p[k], Defect(parent_defect));

    u.boundary = p;
    u.boundary.push_back(P);
    u.points["P"] = P;

    for (size_t i = 0; i + 1 < p.size(); ++i) {
        std::string label(1, static_cast<char>('A' + i));
        u.marks.push_back({p[i], 60, label});
    }

    // Lateral cut seam: (p_k -> P) glues onto (p_0 -> P).
    {
        auto rot = rotation_between(p[0] - P, p[k] - P);
        if (!rot) throw GluingMismatch("lateral seam is not a lattice rotation");
        u.seams.push_back({{p[k], P}, {p[0], P}, Isometry::rotation_about(P, -*rot)});
    }

    std::vector<EisRat> locator_marks;  // positions that must land on the cap
    switch (type) {
        case CapType::PentagonalPyramid: {
            u.marks.push_back({P, 60, "apex"});
            break;
        }
        case CapType::TrimmedSquarePyramid: {
            const auto& sq = std::get<TrimmedSquarePyramidCap>(cap);
            EisRat E = p[0] + sq.locator_E_from_A.to_eisenstein();
            int r = sq.trim_variant == TrimVariant::V1 ? 2 : -2;
            EisRat F = P + rotate60(E - P, r);
            if (E == P) throw InvalidLocator("E coincides with the parent apex");
            EisRat G = detail::equilateral_third(E, F, P);
            u.marks.push_back({E, 60, "E"});
            u.marks.push_back({F, 60, "F"});
            u.cuts.push_back({E, F});
            u.removed.push_back({E, F, G});
            u.points["E"] = E;
            u.points["F"] = F;
            u.points["G"] = G;
            locator_marks.push_back(E);
            break;
        }
        case CapType::TruncatedTriangularPyramid: {
            const auto& tr = std::get<TruncatedTriangularPyramidCap>(cap);
            if (tr.truncation_variant < 1 || tr.truncation_variant > 6)
                throw OutOfRange("truncation_variant must be in 1..6");
            int v = tr.truncation_variant - 1;
            bool swap_roles = v >= 4;
            int s3 = (v == 0 || v == 1 || v == 4) ? 1 : -1;
            int sF = (v == 0 || v == 2 || v == 4) ? 1 : -1;
            EisRat D1 = p[0] + tr.locator_D_from_A.to_eisenstein();
            EisRat D2 = P + P - D1;  // images symmetric about the parent
            EisRat L = p[1] + tr.locator_E_from_B.to_eisenstein();
            if (D1 == P) throw InvalidLocator("D coincides with the parent apex");
            EisRat E, F, D3;
            if (!swap_roles) {
                E = L;
                D3 = E + rotate60(D1 - E, s3);
                F = D3 + rotate60(D2 - D3, sF);
            } else {
                F = L;
                D3 = F + rotate60(D2 - F, s3);
                E = D3 + rotate60(D1 - D3, sF);
            }
            u.marks.push_back({D1, 60, "D"});
            u.marks.push_back({E, 60, "E"});
            u.marks.push_back({F, 60, "F"});
            u.cuts.push_back({D1, E});
            u.cuts.push_back({E, F});
            u.cuts.push_back({F, D2});
            u.removed.push_back({D1, E, F, D2});
            u.points["D1"] = D1;
            u.points["D2"] = D2;
            u.points["D3"] = D3;
            u.points["E"] = E;
            u.points["F"] = F;
            locator_marks.push_back(D1);
            locator_marks.push_back(L);
            break;
        }
        case CapType::TrimmedShrunkPyramid: {
            const auto& sh = std::get<TrimmedShrunkPyramidCap>(cap);
            int sgn = sh.trim_variant == TrimVariant::V1 ? 1 : -1;
            EisRat C = p[0] + sh.locators[0].to_eisenstein();
            EisRat D = p[0] + sh.locators[1].to_eisenstein();
            EisRat E = p[1] + sh.locators[2].to_eisenstein();
            if (C == D) throw DegenerateInput("shrunk pyramid: C = D");
            // G is the pair parent of C and D; H completes the equilateral
            // triangle G H P; F pairs with E about H.
            EisRat G = sgn > 0 ? apex_point(C, D, Defect(120)) : apex_point(D, C, Defect(120));
            EisRat H = P + rotate60(G - P, sgn);
            if (E == H) throw DegenerateInput("shrunk pyramid: E = H");
            EisRat F = H + rotate60(E - H, 2 * sgn);
            u.marks.push_back({C, 60, "C"});
            u.marks.push_back({D, 60, "D"});
            u.marks.push_back({E, 60, "E"});
            u.marks.push_back({F, 60, "F"});
            u.cuts.push_back({C, D});
            u.cuts.push_back({E, F});
            u.removed.push_back({C, D, detail::equilateral_third(C, D, G)});
            u.removed.push_back({E, F, detail::equilateral_third(E, F, H)});
            u.points["C"] = C;
            u.points["D"] = D;
            u.points["E"] = E;
            u.points["F"] = F;
            u.points["G"] = G;
            u.points["H"] = H;
            locator_marks.push_back(C);
            locator_marks.push_back(D);
            locator_marks.push_back(E);
            break;
        }
        default: break;
    }

    // Locator-placed singularities must land on the parent cone's surface,
    // checked in its isometric flap development.
    if (!locator_marks.empty()) {
        auto strip = detail::build_flap_strip(p);
        for (size_t i = 0; i < locator_marks.size(); ++i)
            if (!detail::flap_strip_covers(strip, p, locator_marks[i]))
                throw InvalidLocator("a locator places a singularity outside the parent cone");
    }
    return u;
}

enum class CapViolation {
    ZeroEdge,
    InvalidLocator,
    DegenerateInput,
    NonClosing,
    SeamMismatch,
    DefectBudget,
    OutOfRange
};

inline const char* to_string(CapViolation v) {
    switch (v) {
        case CapViolation::ZeroEdge: return "ZeroEdge";
        case CapViolation::InvalidLocator: return "InvalidLocator";
        case CapViolation::DegenerateInput: return "DegenerateInput";
        case CapViolation::NonClosing: return "NonClosing";
        case CapViolation::SeamMismatch: return "SeamMismatch";
        case CapViolation::DefectBudget: return "DefectBudget";
        case CapViolation::OutOfRange: return "OutOfRange";
    }
    return "?";
}

struct Violation {
    CapViolation code;
    std::string detail;
};

/// Empty iff develop_cap succeeds and the unfolding invariants hold.
inline std::vector<Violation> validate_cap(const CapSpec& cap) {
    std::vector<Violation> out;
    for (const auto& e : base_edges_of(cap)) {
        if (e.m == 0 && e.n == 0) {
            out.push_back({CapViolation::ZeroEdge, "base edge (0,0)"});
            return out;
        }
    }
    try {
        Unfolding u = develop_cap(cap);
        for (const auto& s : u.seams)
            if (!s.endpoint_exact())
                out.push_back({CapViolation::SeamMismatch, "seam is not endpoint-exact"});
        int have = u.total_marked_defect();
        if (have != 360)
            out.push_back({CapViolation::DefectBudget,
                           "marked defects sum to " + std::to_string(have) + ", expected 360"});
    } catch (const InvalidLocator& e) {
        out.push_back({CapViolation::InvalidLocator, e.what()});
    } catch (const DegenerateInput& e) {
        out.push_back({CapViolation::DegenerateInput, e.what()});
    } catch (const InconsistentParams& e) {
        out.push_back({CapViolation::NonClosing, e.what()});
    } catch (const OutOfRange& e) {
        out.push_back({CapViolation::OutOfRange, e.what()});
    } catch (const GluingMismatch& e) {
        out.push_back({CapViolation::SeamMismatch, e.what()});
    }
    return out;
}

}  // namespace conefold

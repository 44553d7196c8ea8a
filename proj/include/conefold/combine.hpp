#pragma once

#include <optional>
#include <vector>

#include "conefold/eisenstein.hpp"
#include "conefold/errors.hpp"
#include "conefold/geometry.hpp"

namespace conefold {

/// Angular defect of a singularity, degrees. The cone angle is 360 - degrees.
struct Defect {
    int degrees;

    explicit Defect(int d) : degrees(d) {
        if (d != 60 && d != 120 && d != 180 && d != 240)
            throw OutOfRange("defect must be one of 60, 120, 180, 240 degrees");
    }
    int cone_angle() const { return 360 - degrees; }
    friend bool operator==(const Defect& x, const Defect& y) { return x.degrees == y.degrees; }
};

enum class SingularityKind {
    Conventional4Degree,      // pair parent on a face center (s ≡ t mod 3)
    UnconventionalFirstKind,  // pair parent on a carbon atom
    Conventional3Degree,      // triple parent on a face center (a ≡ b ≡ c mod 2)
    UnconventionalSecondKind  // triple parent on a bond midpoint
};

inline const char* to_string(SingularityKind k) {
    switch (k) {
        case SingularityKind::Conventional4Degree: return "conventional 4-degree";
        case SingularityKind::UnconventionalFirstKind: return "unconventional first kind";
        case SingularityKind::Conventional3Degree: return "conventional 3-degree";
        case SingularityKind::UnconventionalSecondKind: return "unconventional second kind";
    }
    return "?";
}

/// A combined (parent) singularity: where its children sit, seen from the
/// parent apex, and what kind of lattice point the apex occupies.
struct ParentSingularity {
    std::vector<CoxeterCoord> coords_to_children;
    Defect defect;
    SingularityKind kind;

    bool unconventional() const {
        return kind == SingularityKind::UnconventionalFirstKind ||
               kind == SingularityKind::UnconventionalSecondKind;
    }
};

/// Children of a pair parent at (m, n): s = n + 2m, t = n - m.
inline std::pair<Rat, Rat> pair_children(const Rat& m, const Rat& n) {
    return {n + 2 * m, n - m};
}

/// Parent coordinate of a pair at separation (s, t): m = (s-t)/3, n = (s+2t)/3.
inline CoxeterCoord pair_parent_coords(const Rat& s, const Rat& t) {
    return {(s - t) / 3, (s + 2 * t) / 3};
}

/// Combine two adjacent 60-degree singularities separated by (s, t) into their
/// 120-degree parent. Conventional exactly when s ≡ t (mod 3).
inline ParentSingularity combine_pair(const Int& s, const Int& t) {
    if (s == 0 && t == 0) throw DegenerateInput("combine_pair: coincident singularities (0,0)");
    CoxeterCoord mn = pair_parent_coords(Rat(s), Rat(t));
    bool conventional = ((s - t) % 3 == 0);
    return {{mn, mn}, Defect(120),
            conventional ? SingularityKind::Conventional4Degree
                         : SingularityKind::UnconventionalFirstKind};
}

/// The four parameters of a combined triple: the three sides of the
/// cluster triangle and a twist.
struct TripleParams {
    Int a, b, c, delta;

    bool all_zero_sides() const { return a == 0 && b == 0 && c == 0; }
    bool same_parity() const {
        Int ra = (a % 2 + 2) % 2, rb = (b % 2 + 2) % 2, rc = (c % 2 + 2) % 2;
        return ra == rb && rb == rc;
    }
};

/// The six coordinate entries of the triple combination, as the three child
/// pairs (m_a,n_a), (m_b,n_b), (m_c,n_c):
///   m_a = (a+b)/2 + Δ   n_a = (a+c)/2
///   m_b = (b+c)/2 + Δ   n_b = (a+b)/2
///   m_c = (a+c)/2 + Δ   n_c = (b+c)/2
inline std::array<CoxeterCoord, 3> triple_child_coords(const TripleParams& p) {
    Rat ab = Rat(p.a + p.b) / 2, bc = Rat(p.b + p.c) / 2, ac = Rat(p.a + p.c) / 2;
    Rat d(p.delta);
    return {CoxeterCoord{ab + d, ac}, CoxeterCoord{bc + d, ab}, CoxeterCoord{ac + d, bc}};
}

/// Combine three adjacent 60-degree singularities into their 180-degree
/// parent. Conventional exactly when a, b, c share parity.
inline ParentSingularity combine_triple(const TripleParams& p) {
    if (p.all_zero_sides()) throw DegenerateInput("combine_triple: a = b = c = 0");
    if (p.a < 0 || p.b < 0 || p.c < 0)
        throw DegenerateInput("combine_triple: side parameters must be nonnegative");
    auto cs = triple_child_coords(p);
    return {{cs[0], cs[1], cs[2]}, Defect(180),
            p.same_parity() ? SingularityKind::Conventional3Degree
                            : SingularityKind::UnconventionalSecondKind};
}

/// Exact planar development of a combined pair: the two images T1, T2
/// of the far singularity and the parent P at the centroid.
struct PairDevelopment {
    EisRat S, T1, T2, P;
};

inline PairDevelopment develop_pair(const Int& s, const Int& t) {
    if (s == 0 && t == 0) throw DegenerateInput("develop_pair: coincident singularities (0,0)");
    EisRat S{0, 0};
    EisRat T1{Rat(s), Rat(t)};
    EisRat T2 = rotate60(T1, 1);  // counterclockwise; mirror only at the CLI layer
    EisRat P = (S + T1 + T2) / Rat(3);
    return {S, T1, T2, P};
}

/// Development of a combined triple: the section quadrilateral
/// C1 B A C2 with P the midpoint of C1C2 and C3 the shared third image of C.
struct TripleDevelopment {
    EisRat A, B, C1, C2, C3, P;
};

/// Places B = z_b·ω⁻¹ and A = z_a·ω⁻² so that triangles B C1 C3 and A C3 C2
/// are equilateral with a single shared C3; this holds identically for the
/// coordinates of the triple combination.
inline TripleDevelopment develop_triple(const TripleParams& p) {
    if (p.all_zero_sides()) throw DegenerateInput("develop_triple: a = b = c = 0");
    auto cs = triple_child_coords(p);
    EisRat za = cs[0].to_eisenstein(), zb = cs[1].to_eisenstein(), zc = cs[2].to_eisenstein();
    if (za.is_zero() || zb.is_zero() || zc.is_zero())
        throw InconsistentParams("develop_triple: a child coincides with the parent");
    EisRat P{0, 0};
    EisRat C1 = zc, C2 = -zc;
    EisRat B = rotate60(zb, -1);
    EisRat A = rotate60(za, -2);
    EisRat C3 = B + rotate60(C1 - B, 1);
    EisRat C3_from_A = A + rotate60(C2 - A, -1);
    if (!(C3 == C3_from_A))
        throw InconsistentParams("develop_triple: no placement satisfies the equilateral constraints");
    // The section must open on one side of the cut line through C1, C2.
    Rat sb = cross(C2 - C1, B - C1), sa = cross(C2 - C1, A - C1);
    if (sb <= 0 || sa <= 0)
        throw InconsistentParams("develop_triple: degenerate section placement");
    return {A, B, C1, C2, C3, P};
}

enum class ExtensionClass { OnBoundary, Inside, Outside };

inline const char* to_string(ExtensionClass c) {
    switch (c) {
        case ExtensionClass::OnBoundary: return "on-boundary";
        case ExtensionClass::Inside: return "inside";
        case ExtensionClass::Outside: return "outside";
    }
    return "?";
}

/// Position of C3 relative to segment C1C2: on the cut line (∠ACB = 60°),
/// inside the section quadrilateral (∠ACB > 60°) or outside (∠ACB < 60°).
inline ExtensionClass classify_extension(const TripleParams& p) {
    TripleDevelopment d = develop_triple(p);
    Rat s = cross(d.C2 - d.C1, d.C3 - d.C1);
    if (s == 0) return ExtensionClass::OnBoundary;
    return s > 0 ? ExtensionClass::Inside : ExtensionClass::Outside;
}

/// First-kind refinement (one-third-sized hexagons): x ↦ x·(1+ω) in the
/// refined lattice frame. Integral on every pair-combination output; scales
/// norms by exactly 3.
inline CoxeterCoord refine_first_kind(const CoxeterCoord& x) {
    return {x.m - x.n, x.m + 2 * x.n};
}

/// Second-kind refinement (half-sized hexagons): x ↦ 2x. Integral on every
/// triple-combination output; scales norms by exactly 4.
inline CoxeterCoord refine_second_kind(const CoxeterCoord& x) {
    return {2 * x.m, 2 * x.n};
}

}  // namespace conefold

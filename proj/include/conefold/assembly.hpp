#pragma once

#include <string>
#include <vector>

#include "conefold/caps.hpp"
#include "conefold/combine.hpp"
#include "conefold/eisenstein.hpp"

namespace conefold {

/// Tube dimensions: (m, n) chiral vector, (k, l) relative cap position.
struct TubeSpec {
    CoxeterCoord chiral;
    CoxeterCoord offset;
};

struct TubeFullereneSpec {
    CapSpec cap_top;
    CapSpec cap_bottom;
    TubeSpec tube;
};

enum class AssemblyViolation {
    CapInvalidTop,
    CapInvalidBottom,
    RimMismatchTop,
    RimMismatchBottom,
    CapSumsDiffer,
    DegenerateChiral,
    WrongClusterCount,
    WrongParentParamCount,
    DegenerateCluster,
    NeedsRefinement
};

inline const char* to_string(AssemblyViolation v) {
    switch (v) {
        case AssemblyViolation::CapInvalidTop: return "CapInvalid(top)";
        case AssemblyViolation::CapInvalidBottom: return "CapInvalid(bottom)";
        case AssemblyViolation::RimMismatchTop: return "RimMismatch(top)";
        case AssemblyViolation::RimMismatchBottom: return "RimMismatch(bottom)";
        case AssemblyViolation::CapSumsDiffer: return "CapSumsDiffer";
        case AssemblyViolation::DegenerateChiral: return "DegenerateChiral";
        case AssemblyViolation::WrongClusterCount: return "WrongClusterCount";
        case AssemblyViolation::WrongParentParamCount: return "WrongParentParamCount";
        case AssemblyViolation::DegenerateCluster: return "DegenerateCluster";
        case AssemblyViolation::NeedsRefinement: return "NeedsRefinement";
    }
    return "?";
}

struct AssemblyIssue {
    AssemblyViolation code;
    std::string detail;
};

/// Both caps must validate and both rim vectors must equal the chiral vector
/// (Eq. 5 at both ends; the reduced form equates the two cap sums).
inline std::vector<AssemblyIssue> validate_tube_fullerene(const TubeFullereneSpec& spec) {
    std::vector<AssemblyIssue> out;
    if (spec.tube.chiral == CoxeterCoord{0, 0})
        out.push_back({AssemblyViolation::DegenerateChiral, "chiral vector is (0,0)"});
    for (const auto& v : validate_cap(spec.cap_top))
        out.push_back({AssemblyViolation::CapInvalidTop, std::string(to_string(v.code)) +
                                                             (v.detail.empty() ? "" : ": " + v.detail)});
    for (const auto& v : validate_cap(spec.cap_bottom))
        out.push_back(
            {AssemblyViolation::CapInvalidBottom,
             std::string(to_string(v.code)) + (v.detail.empty() ? "" : ": " + v.detail)});
    CoxeterCoord top = cap_rim_vector(spec.cap_top);
    CoxeterCoord bottom = cap_rim_vector(spec.cap_bottom);
    if (top != spec.tube.chiral)
        out.push_back({AssemblyViolation::RimMismatchTop,
                       "top rim " + to_string(top) + " != chiral " + to_string(spec.tube.chiral)});
    if (bottom != spec.tube.chiral)
        out.push_back(
            {AssemblyViolation::RimMismatchBottom,
             "bottom rim " + to_string(bottom) + " != chiral " + to_string(spec.tube.chiral)});
    if (top != bottom)
        out.push_back({AssemblyViolation::CapSumsDiffer,
                       "cap sums " + to_string(top) + " and " + to_string(bottom) + " differ"});
    return out;
}

enum class Family { TubeLike, Octahedral, Tetrahedral, TetrahedralGoldbergRegular, D3, D3Parent };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::TubeLike: return "tube-like";
        case Family::Octahedral: return "octahedral";
        case Family::Tetrahedral: return "tetrahedral";
        case Family::TetrahedralGoldbergRegular: return "tetrahedral-goldberg-regular";
        case Family::D3: return "d3";
        case Family::D3Parent: return "d3-parent";
    }
    return "?";
}

/// One pair cluster: Coxeter separation (s, t) of two adjacent singularities.
struct PairCluster {
    Int s, t;
};

/// One quad cluster, described as in the shrunk pyramid: positions of C and D
/// (pair with parent G) and of E (paired to F about H), in the quad's frame.
struct QuadCluster {
    CoxeterCoord c, d, e;
};

/// Family-level parameter specification. Parent parameters are opaque: the
/// parent (4,6)-, (3,6)-fullerene and dihedron parameterizations are stored,
/// counted and round-tripped without interpretation.
struct FamilySpec {
    Family family = Family::TubeLike;
    std::vector<PairCluster> pairs;        // octahedral: 6; goldberg-regular: 1 shared
    std::vector<TripleParams> triples;     // tetrahedral: 4
    std::vector<QuadCluster> quads;        // d3: 3
    std::vector<Int> parent_params;        // 8 / 4 / 2 by family
};

/// Independent-parameter tally per family:
///   tube-like 20, octahedral 12+8, tetrahedral 16+4,
///   regular-truncation Goldberg tetrahedral 4, D3 18+2, D3 parent 2.
inline int count_independent_parameters(Family f) {
    switch (f) {
        case Family::TubeLike: return 20;
        case Family::Octahedral: return 20;
        case Family::Tetrahedral: return 20;
        case Family::TetrahedralGoldbergRegular: return 4;
        case Family::D3: return 20;
        case Family::D3Parent: return 2;
    }
    return 0;
}

inline int expected_parent_params(Family f) {
    switch (f) {
        case Family::Octahedral: return 8;
        case Family::Tetrahedral: return 4;
        case Family::TetrahedralGoldbergRegular: return 2;
        case Family::D3: return 2;
        case Family::D3Parent: return 2;
        case Family::TubeLike: return 0;
    }
    return 0;
}

/// Checks cluster counts and per-cluster combination validity. Records where
/// lattice refinement is required before integer realization.
/// Does not realize geometry.
inline std::vector<AssemblyIssue> validate_family(const FamilySpec& spec) {
    std::vector<AssemblyIssue> out;
    auto need = [&](size_t have, size_t want, const char* what) {
        if (have != want)
            out.push_back({AssemblyViolation::WrongClusterCount,
                           std::string(what) + ": have " + std::to_string(have) + ", want " +
                               std::to_string(want)});
    };
    if (expected_parent_params(spec.family) !=
        static_cast<int>(spec.parent_params.size()))
        out.push_back({AssemblyViolation::WrongParentParamCount,
                       "parent params: have " + std::to_string(spec.parent_params.size()) +
                           ", want " + std::to_string(expected_parent_params(spec.family))});

    switch (spec.family) {
        case Family::Octahedral: {
            need(spec.pairs.size(), 6, "pair clusters");
            need(spec.triples.size(), 0, "triple clusters");
            need(spec.quads.size(), 0, "quad clusters");
            for (size_t i = 0; i < spec.pairs.size(); ++i) {
                const auto& pc = spec.pairs[i];
                if (pc.s == 0 && pc.t == 0) {
                    out.push_back({AssemblyViolation::DegenerateCluster,
                                   "pair cluster " + std::to_string(i) + " is (0,0)"});
                    continue;
                }
                auto parent = combine_pair(pc.s, pc.t);
                if (parent.kind == SingularityKind::UnconventionalFirstKind)
                    out.push_back({AssemblyViolation::NeedsRefinement,
                                   "cluster " + std::to_string(i) +
                                       ": first-kind parent, refine with one-third-sized hexagons"});
            }
            break;
        }
        case Family::Tetrahedral: {
            need(spec.triples.size(), 4, "triple clusters");
            need(spec.pairs.size(), 0, "pair clusters");
            need(spec.quads.size(), 0, "quad clusters");
            for (size_t i = 0; i < spec.triples.size(); ++i) {
                const auto& tp = spec.triples[i];
                if (tp.all_zero_sides()) {
                    out.push_back({AssemblyViolation::DegenerateCluster,
                                   "triple cluster " + std::to_string(i) + " has a = b = c = 0"});
                    continue;
                }
                auto parent = combine_triple(tp);
                if (parent.kind == SingularityKind::UnconventionalSecondKind)
                    out.push_back({AssemblyViolation::NeedsRefinement,
                                   "cluster " + std::to_string(i) +
                                       ": second-kind parent, refine with half-sized hexagons"});
            }
            break;
        }
        case Family::TetrahedralGoldbergRegular: {
            need(spec.pairs.size(), 1, "shared truncation coordinate");
            need(spec.triples.size(), 0, "triple clusters");
            need(spec.quads.size(), 0, "quad clusters");
            break;
        }
        case Family::D3: {
            need(spec.quads.size(), 3, "quad clusters");
            need(spec.pairs.size(), 0, "pair clusters");
            need(spec.triples.size(), 0, "triple clusters");
            for (size_t i = 0; i < spec.quads.size(); ++i) {
                const auto& q = spec.quads[i];
                if (q.c == q.d)
                    out.push_back({AssemblyViolation::DegenerateCluster,
                                   "quad cluster " + std::to_string(i) + ": C = D"});
                EisRat sep = q.d.to_eisenstein() - q.c.to_eisenstein();
                if (!(sep.a == 0 && sep.b == 0)) {
                    auto parent = combine_pair(boost::multiprecision::numerator(sep.a),
                                               boost::multiprecision::numerator(sep.b));
                    if (parent.kind == SingularityKind::UnconventionalFirstKind)
                        out.push_back(
                            {AssemblyViolation::NeedsRefinement,
                             "cluster " + std::to_string(i) +
                                 ": C,D pair parent is first-kind, refine with one-third-sized hexagons"});
                }
            }
            break;
        }
        case Family::D3Parent:
        case Family::TubeLike: {
            need(spec.pairs.size(), 0, "pair clusters");
            need(spec.triples.size(), 0, "triple clusters");
            need(spec.quads.size(), 0, "quad clusters");
            break;
        }
    }
    return out;
}

/// One-line classification note for valid specifications.
inline std::string family_note(const FamilySpec& spec) {
    if (spec.family == Family::Octahedral) {
        for (const auto& pc : spec.pairs)
            if (!(pc.s == 0 && pc.t == 0) &&
                combine_pair(pc.s, pc.t).kind != SingularityKind::Conventional4Degree)
                return "octahedral fullerene (refined lattice required)";
        return "trimmed (4,6)-fullerene";
    }
    if (spec.family == Family::Tetrahedral) {
        for (const auto& tp : spec.triples)
            if (!tp.all_zero_sides() &&
                combine_triple(tp).kind != SingularityKind::Conventional3Degree)
                return "tetrahedral fullerene (refined lattice required)";
        return "truncated (3,6)-fullerene";
    }
    if (spec.family == Family::TetrahedralGoldbergRegular)
        return "regular-truncation Goldberg tetrahedral fullerene";
    if (spec.family == Family::D3) return "D3 fullerene";
    if (spec.family == Family::D3Parent) return "triangular dihedron parent";
    return "tube-like fullerene";
}

}  // namespace conefold

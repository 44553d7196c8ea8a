#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "conefold/assembly.hpp"

using namespace conefold;

namespace {

PentagonalPyramidCap penta(long m, long n) {
    CoxeterCoord e{m, n};
    return PentagonalPyramidCap{{e, e, e, e, e}};
}

bool has(const std::vector<AssemblyIssue>& issues, AssemblyViolation code) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const AssemblyIssue& i) { return i.code == code; });
}

}  // namespace

TEST_CASE("tube fullerene rim constraints") {
    TubeFullereneSpec ok{penta(1, 0), penta(1, 0), {{5, 0}, {0, 1}}};
    CHECK(validate_tube_fullerene(ok).empty());

    TubeFullereneSpec bad_chiral{penta(1, 0), penta(1, 0), {{5, 1}, {0, 1}}};
    auto issues = validate_tube_fullerene(bad_chiral);
    CHECK(has(issues, AssemblyViolation::RimMismatchTop));
    CHECK(has(issues, AssemblyViolation::RimMismatchBottom));
    CHECK_FALSE(has(issues, AssemblyViolation::CapSumsDiffer));

    TubeFullereneSpec differ{penta(1, 0), penta(1, 1), {{5, 0}, {0, 1}}};
    auto issues2 = validate_tube_fullerene(differ);
    CHECK(has(issues2, AssemblyViolation::CapSumsDiffer));
}

TEST_CASE("total defect over both caps of an accepted spec is 720") {
    TubeFullereneSpec ok{penta(1, 0), penta(2, 1), {{5, 0}, {0, 1}}};
    // adjust: both caps must sum to the chiral vector
    ok.cap_bottom = penta(1, 0);
    REQUIRE(validate_tube_fullerene(ok).empty());
    int total = develop_cap(ok.cap_top).total_marked_defect() +
                develop_cap(ok.cap_bottom).total_marked_defect();
    CHECK(total == 720);
}

TEST_CASE("independent parameter tallies") {
    CHECK(count_independent_parameters(Family::TubeLike) == 20);
    CHECK(count_independent_parameters(Family::Octahedral) == 20);
    CHECK(count_independent_parameters(Family::Tetrahedral) == 20);
    CHECK(count_independent_parameters(Family::TetrahedralGoldbergRegular) == 4);
    CHECK(count_independent_parameters(Family::D3) == 20);
    CHECK(count_independent_parameters(Family::D3Parent) == 2);
}

TEST_CASE("octahedral family validation") {
    FamilySpec spec;
    spec.family = Family::Octahedral;
    for (int i = 0; i < 6; ++i) spec.pairs.push_back({3, 0});  // all s = t (mod 3)
    spec.parent_params.assign(8, Int(1));
    CHECK(validate_family(spec).empty());
    CHECK(family_note(spec) == "trimmed (4,6)-fullerene");

    spec.pairs[2] = {2, 1};  // first-kind parent
    auto issues = validate_family(spec);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == AssemblyViolation::NeedsRefinement);

    spec.pairs.pop_back();
    CHECK(has(validate_family(spec), AssemblyViolation::WrongClusterCount));
}

TEST_CASE("tetrahedral family validation") {
    FamilySpec spec;
    spec.family = Family::Tetrahedral;
    for (int i = 0; i < 4; ++i) spec.triples.push_back({1, 1, 1, 0});
    spec.parent_params.assign(4, Int(2));
    CHECK(validate_family(spec).empty());
    CHECK(family_note(spec) == "truncated (3,6)-fullerene");

    spec.triples[1] = {1, 2, 1, 0};  // mixed parity
    auto issues = validate_family(spec);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == AssemblyViolation::NeedsRefinement);
}

TEST_CASE("goldberg-regular, d3 and parent families") {
    FamilySpec gr;
    gr.family = Family::TetrahedralGoldbergRegular;
    gr.pairs.push_back({2, 2});
    gr.parent_params = {Int(3), Int(1)};
    CHECK(validate_family(gr).empty());

    FamilySpec d3;
    d3.family = Family::D3;
    for (int i = 0; i < 3; ++i) d3.quads.push_back({{1, 1}, {4, 1}, {0, 1}});
    d3.parent_params = {Int(4), Int(2)};
    CHECK(validate_family(d3).empty());
    // a quad whose C,D pair parent is first-kind asks for refinement
    FamilySpec d3u = d3;
    d3u.quads[1] = {{1, 1}, {2, 1}, {0, 1}};
    CHECK(has(validate_family(d3u), AssemblyViolation::NeedsRefinement));

    FamilySpec d3p;
    d3p.family = Family::D3Parent;
    d3p.parent_params = {Int(4), Int(2)};
    CHECK(validate_family(d3p).empty());
    d3p.parent_params.push_back(Int(9));
    CHECK(has(validate_family(d3p), AssemblyViolation::WrongParentParamCount));
}

TEST_CASE("family validation is invariant under cluster relabeling") {
    FamilySpec spec;
    spec.family = Family::Octahedral;
    spec.pairs = {{3, 0}, {2, 1}, {4, 1}, {3, 3}, {2, 2}, {5, 2}};
    spec.parent_params.assign(8, Int(1));
    auto count_kinds = [](const FamilySpec& s) {
        auto issues = validate_family(s);
        std::map<AssemblyViolation, int> m;
        for (const auto& i : issues) m[i.code]++;
        return m;
    };
    auto base = count_kinds(spec);
    std::reverse(spec.pairs.begin(), spec.pairs.end());
    CHECK(count_kinds(spec) == base);
    std::rotate(spec.pairs.begin(), spec.pairs.begin() + 2, spec.pairs.end());
    CHECK(count_kinds(spec) == base);
}

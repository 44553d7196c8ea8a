#include <catch2/catch_amalgamated.hpp>

#include "conefold/json_io.hpp"
#include "conefold/svg.hpp"

using namespace conefold;

TEST_CASE("pair and triple documents parse") {
    auto d1 = parse_spec(R"({"version":1,"kind":"pair","s":3,"t":0})");
    const auto& p = std::get<PairDoc>(d1);
    CHECK(p.s == 3);
    CHECK(p.t == 0);
    auto d2 = parse_spec(R"({"version":1,"kind":"triple","a":1,"b":2,"c":1,"delta":0})");
    const auto& t = std::get<TripleDoc>(d2);
    CHECK(t.params.b == 2);
}

TEST_CASE("version and unknown fields are rejected") {
    CHECK_THROWS_AS(parse_spec(R"({"version":2,"kind":"pair","s":1,"t":0})"), ParseError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"pair","s":1,"t":0})"), ParseError);
    CHECK_THROWS_AS(parse_spec(R"({"version":1,"kind":"pair","s":1,"t":0,"x":5})"), ParseError);
    CHECK_THROWS_AS(parse_spec(R"({"version":1,"kind":"nope"})"), ParseError);
    CHECK_THROWS_AS(parse_spec("not json"), ParseError);
}

TEST_CASE("cap documents parse for every type") {
    auto d = parse_spec(R"({"version":1,"kind":"cap","type":"pentagonal-pyramid",
                            "base_edges":[[1,0],[1,0],[1,0],[1,0],[1,0]]})");
    const auto& cd = std::get<CapDoc>(d);
    CHECK(cap_type(cd.cap) == CapType::PentagonalPyramid);
    CHECK(cap_rim_vector(cd.cap) == CoxeterCoord{5, 0});

    auto dh = parse_spec(R"({"version":1,"kind":"cap","type":"hexagon",
                             "edges":[[1,1],[1,1],[1,1],[1,1],[1,1]]})");
    CHECK(cap_type(std::get<CapDoc>(dh).cap) == CapType::Hexagon);

    auto dsq = parse_spec(R"({"version":1,"kind":"cap","type":"trimmed-square-pyramid",
        "base_edges":[[2,0],[2,0],[2,0],[2,0]],"locator_e_from_a":[1,1],"trim_variant":"v2"})");
    const auto& sq = std::get<TrimmedSquarePyramidCap>(std::get<CapDoc>(dsq).cap);
    CHECK(sq.trim_variant == TrimVariant::V2);

    auto dtr = parse_spec(R"({"version":1,"kind":"cap","type":"truncated-triangular-pyramid",
        "base_edges":[[2,0],[2,0],[2,0]],"locator_d_from_a":[1,1],"locator_e_from_b":[0,1],
        "truncation_variant":3})");
    CHECK(std::get<TruncatedTriangularPyramidCap>(std::get<CapDoc>(dtr).cap).truncation_variant ==
          3);

    auto dsh = parse_spec(R"({"version":1,"kind":"cap","type":"trimmed-shrunk-pyramid",
        "base_edges":[[2,0],[2,0]],"locators":[[1,1],[0,1],[0,1]]})");
    CHECK(cap_type(std::get<CapDoc>(dsh).cap) == CapType::TrimmedShrunkPyramid);

    CHECK_THROWS_AS(
        parse_spec(R"({"version":1,"kind":"cap","type":"hexagon","edges":[[1,1]]})"),
        ParseError);
}

TEST_CASE("tube fullerene and family documents parse") {
    auto d = parse_spec(R"({"version":1,"kind":"tube_fullerene",
        "cap_top":{"type":"pentagonal-pyramid","base_edges":[[1,0],[1,0],[1,0],[1,0],[1,0]]},
        "cap_bottom":{"type":"pentagonal-pyramid","base_edges":[[1,0],[1,0],[1,0],[1,0],[1,0]]},
        "tube":{"chiral":[5,0],"offset":[0,1]}})");
    const auto& td = std::get<TubeFullereneDoc>(d);
    CHECK(td.spec.tube.chiral == CoxeterCoord{5, 0});
    CHECK(validate_tube_fullerene(td.spec).empty());

    auto f = parse_spec(R"({"version":1,"kind":"family","family":"octahedral",
        "pairs":[[3,0],[3,0],[3,0],[3,0],[3,0],[3,0]],
        "parent_params":[1,2,3,4,5,6,7,8]})");
    const auto& fd = std::get<FamilyDoc>(f);
    CHECK(fd.spec.family == Family::Octahedral);
    CHECK(validate_family(fd.spec).empty());
}

TEST_CASE("graph serialization is canonical") {
    PentagonalPyramidCap cap{CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}};
    TubeFullereneSpec spec{CapSpec{cap}, CapSpec{cap}, {CoxeterCoord{5, 0}, CoxeterCoord{0, 1}}};
    auto g = realize_tube_fullerene(spec);
    std::string s1 = graph_to_json(g);
    std::string s2 = graph_to_json(g);
    CHECK(s1 == s2);
    CHECK(s1.find("\"atoms\":20") != std::string::npos);
    CHECK(s1.find("\"5\":12") != std::string::npos);
    // bonds are sorted pairs
    auto bonds = g.bonds();
    CHECK(std::is_sorted(bonds.begin(), bonds.end()));
}

TEST_CASE("svg output is deterministic and embeds the spec") {
    PentagonalPyramidCap cap{CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}};
    Unfolding u = develop_cap(CapSpec{cap});
    std::string svg1 = render_unfolding(u, "{\"spec\":\"demo\"}");
    std::string svg2 = render_unfolding(u, "{\"spec\":\"demo\"}");
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") != std::string::npos);
    CHECK(svg1.find("{\"spec\":\"demo\"}") != std::string::npos);
    // comments cannot contain double hyphens
    std::string svg3 = render_unfolding(u, "a--b");
    CHECK(svg3.find("a--b") == std::string::npos);
}

TEST_CASE("cap JSON lines round-trip") {
    TrimmedShrunkPyramidCap sh{{CoxeterCoord{2, 0}, CoxeterCoord{2, 0}}, {CoxeterCoord{1, 1}, CoxeterCoord{0, 1}, CoxeterCoord{0, 1}}, TrimVariant::V2};
    std::string line = cap_to_json_line(CapSpec{sh});
    auto doc = parse_spec(line);
    const auto& back = std::get<TrimmedShrunkPyramidCap>(std::get<CapDoc>(doc).cap);
    CHECK(back.locators == sh.locators);
    CHECK(back.trim_variant == TrimVariant::V2);
}

TEST_CASE("pentagonal apex projects to Cartesian (5/2, 5/2 sqrt3)") {
    PentagonalPyramidCap cap{
        {CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0}, CoxeterCoord{1, 0},
         CoxeterCoord{1, 0}}};
    Unfolding u = develop_cap(CapSpec{cap});
    auto apex = to_cartesian(u.boundary.back());
    CHECK(apex.x == Rat(5, 2));
    CHECK(apex.y_sqrt3 == Rat(5, 2));
    std::string svg = render_unfolding(u, "apex-test");
    CHECK(svg.find("2.500000") != std::string::npos);
    CHECK(svg.find("-4.330127") != std::string::npos);  // y is flipped in SVG
}

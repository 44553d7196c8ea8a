#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "conefold/combine.hpp"

using namespace conefold;

TEST_CASE("combine_pair classifies by congruence mod 3") {
    auto p1 = combine_pair(3, 0);
    CHECK(p1.coords_to_children[0] == CoxeterCoord{1, 1});
    CHECK(p1.coords_to_children.size() == 2);
    CHECK(p1.coords_to_children[1] == p1.coords_to_children[0]);
    CHECK(p1.kind == SingularityKind::Conventional4Degree);
    CHECK(p1.defect.degrees == 120);

    auto p2 = combine_pair(2, 1);
    CHECK(p2.coords_to_children[0] == CoxeterCoord{Rat(1, 3), Rat(4, 3)});
    CHECK(p2.kind == SingularityKind::UnconventionalFirstKind);

    auto p3 = combine_pair(2, 2);
    CHECK(p3.coords_to_children[0] == CoxeterCoord{0, 2});
    CHECK(p3.kind == SingularityKind::Conventional4Degree);

    CHECK_THROWS_AS(combine_pair(0, 0), DegenerateInput);
}

TEST_CASE("pair_children implements s = n + 2m, t = n - m") {
    CHECK(pair_children(Rat(1), Rat(1)) == std::pair<Rat, Rat>{Rat(3), Rat(0)});
    CHECK(pair_children(Rat(0), Rat(0)) == std::pair<Rat, Rat>{Rat(0), Rat(0)});
    CHECK(pair_children(Rat(1), Rat(0)) == std::pair<Rat, Rat>{Rat(2), Rat(-1)});
}

TEST_CASE("pair equations are mutually inverse") {
    for (long mn = -30; mn <= 30; ++mn)
        for (long nn = -30; nn <= 30; ++nn)
            for (long d : {1L, 3L}) {
                Rat m(mn, d), n(nn, d);
                auto [s, t] = pair_children(m, n);
                CoxeterCoord back = pair_parent_coords(s, t);
                REQUIRE(back.m == m);
                REQUIRE(back.n == n);
            }
}

TEST_CASE("pair integrality iff s = t (mod 3)") {
    for (long s = -30; s <= 30; ++s)
        for (long t = -30; t <= 30; ++t) {
            if (s == 0 && t == 0) continue;
            auto parent = combine_pair(s, t);
            bool integral = parent.coords_to_children[0].integral();
            REQUIRE(integral == (((s - t) % 3) == 0));
            REQUIRE(parent.unconventional() == !integral);
        }
}

TEST_CASE("combine_triple matches the matrix formula") {
    auto p1 = combine_triple({1, 1, 1, 0});
    CHECK(p1.coords_to_children[0] == CoxeterCoord{1, 1});
    CHECK(p1.coords_to_children[1] == CoxeterCoord{1, 1});
    CHECK(p1.coords_to_children[2] == CoxeterCoord{1, 1});
    CHECK(p1.kind == SingularityKind::Conventional3Degree);
    CHECK(p1.defect.degrees == 180);

    auto p2 = combine_triple({2, 2, 2, 1});
    for (const auto& c : p2.coords_to_children) CHECK(c == CoxeterCoord{3, 2});

    auto p3 = combine_triple({1, 2, 1, 0});
    CHECK(p3.coords_to_children[0].m == Rat(3, 2));
    CHECK(p3.kind == SingularityKind::UnconventionalSecondKind);

    CHECK_THROWS_AS(combine_triple({0, 0, 0, 5}), DegenerateInput);
}

TEST_CASE("triple integrality iff equal parity") {
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; b <= 10; ++b)
            for (long c = 0; c <= 10; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                for (long d = 0; d <= 5; ++d) {
                    auto parent = combine_triple({a, b, c, d});
                    bool integral = true;
                    for (const auto& cc : parent.coords_to_children)
                        integral = integral && cc.integral();
                    bool parity = (a % 2 == b % 2) && (b % 2 == c % 2);
                    REQUIRE(integral == parity);
                }
            }
}

TEST_CASE("develop_pair produces the equilateral development") {
    auto d = develop_pair(3, 0);
    CHECK(d.S == EisRat{0, 0});
    CHECK(d.T1 == EisRat{3, 0});
    CHECK(d.T2 == EisRat{0, 3});  // 3ω
    CHECK(d.P == EisRat{1, 1});
    CHECK_THROWS_AS(develop_pair(0, 0), DegenerateInput);

    auto d2 = develop_pair(1, 1);
    CHECK(d2.P == EisRat{0, 1});  // ω, matching (m,n) = (0,1)
}

TEST_CASE("develop_pair invariants across a grid") {
    for (long s = -20; s <= 20; ++s)
        for (long t = -20; t <= 20; ++t) {
            if (s == 0 && t == 0) continue;
            auto d = develop_pair(s, t);
            // equilateral
            REQUIRE(norm(d.T1 - d.S) == norm(d.T2 - d.S));
            REQUIRE(norm(d.T1 - d.S) == norm(d.T2 - d.T1));
            // centroid
            REQUIRE(d.P * Rat(3) == d.S + d.T1 + d.T2);
            // P agrees with the combination coordinates
            auto mn = pair_parent_coords(Rat(s), Rat(t));
            REQUIRE(d.P == mn.to_eisenstein());
            // 120-degree field angles as a rotation equation
            REQUIRE(d.T2 - d.P == rotate60(d.T1 - d.P, 2));
        }
}

TEST_CASE("develop_triple satisfies the section symmetries") {
    auto d = develop_triple({1, 1, 1, 0});
    CHECK(d.C1 == EisRat{1, 1});
    CHECK(d.C2 == EisRat{-1, -1});
    CHECK(d.C1 + d.C2 == EisRat{0, 0});
    CHECK(norm(d.A - d.P) == Rat(3));
    CHECK(norm(d.B - d.P) == Rat(3));
    CHECK(norm(d.C1 - d.P) == Rat(3));
    // C3 lies on segment C1C2
    CHECK(on_segment(d.C3, d.C1, d.C2));
}

TEST_CASE("develop_triple equilateral gap triangles on a grid") {
    for (long a = 1; a <= 5; ++a)
        for (long b = 1; b <= 5; ++b)
            for (long c = 1; c <= 5; ++c)
                for (long delta = -2; delta <= 2; ++delta) {
                    TripleParams p{a, b, c, delta};
                    TripleDevelopment d;
                    try {
                        d = develop_triple(p);
                    } catch (const InconsistentParams&) {
                        continue;
                    }
                    REQUIRE(d.C1 + d.C2 == EisRat{0, 0});
                    // triangles B C1 C3 and A C3 C2 equilateral
                    REQUIRE(norm(d.C1 - d.B) == norm(d.C3 - d.B));
                    REQUIRE(norm(d.C1 - d.B) == norm(d.C1 - d.C3));
                    REQUIRE(norm(d.C2 - d.A) == norm(d.C3 - d.A));
                    REQUIRE(norm(d.C2 - d.A) == norm(d.C2 - d.C3));
                    // radii match the combination coordinates
                    auto cs = triple_child_coords(p);
                    REQUIRE(norm(d.A - d.P) == norm(cs[0]));
                    REQUIRE(norm(d.B - d.P) == norm(cs[1]));
                    REQUIRE(norm(d.C1 - d.P) == norm(cs[2]));
                }
}

TEST_CASE("classify_extension matches the angle classification") {
    CHECK(classify_extension({1, 1, 1, 0}) == ExtensionClass::OnBoundary);
    CHECK(classify_extension({2, 2, 2, 1}) == ExtensionClass::OnBoundary);
    // long c relative to a, b pulls the lid angle under 60 degrees
    CHECK(classify_extension({1, 1, 3, 0}) == ExtensionClass::Outside);
    CHECK(classify_extension({1, 3, 5, 1}) == ExtensionClass::Outside);
    // short c widens the lid angle beyond 60 degrees
    CHECK(classify_extension({4, 2, 2, 0}) == ExtensionClass::Inside);
    CHECK(classify_extension({5, 3, 1, -1}) == ExtensionClass::Inside);
}

TEST_CASE("refinements scale norms by 3 and 4") {
    CHECK(refine_first_kind({Rat(1, 3), Rat(4, 3)}) == CoxeterCoord{-1, 3});
    CHECK(refine_first_kind({1, 1}) == CoxeterCoord{0, 3});
    CHECK(refine_first_kind({0, 0}) == CoxeterCoord{0, 0});
    CHECK(refine_second_kind({Rat(3, 2), Rat(2)}) == CoxeterCoord{3, 4});
    CHECK(refine_second_kind({0, 0}) == CoxeterCoord{0, 0});

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-60, 60);
    for (int i = 0; i < 500; ++i) {
        CoxeterCoord x{Rat(num(rng), 3), Rat(num(rng), 3)};
        REQUIRE(norm(refine_first_kind(x)) == Rat(3) * norm(x));
        CoxeterCoord y{Rat(num(rng), 2), Rat(num(rng), 2)};
        REQUIRE(norm(refine_second_kind(y)) == Rat(4) * norm(y));
    }
}

TEST_CASE("refinements make combination outputs integral") {
    for (long s = -12; s <= 12; ++s)
        for (long t = -12; t <= 12; ++t) {
            if (s == 0 && t == 0) continue;
            auto parent = combine_pair(s, t);
            REQUIRE(refine_first_kind(parent.coords_to_children[0]).integral());
        }
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b)
            for (long c = 0; c <= 6; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                auto parent = combine_triple({a, b, c, 1});
                for (const auto& cc : parent.coords_to_children)
                    REQUIRE(refine_second_kind(cc).integral());
            }
}

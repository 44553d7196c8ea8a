#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conefold/assembly.hpp"
#include "conefold/caps.hpp"
#include "conefold/combine.hpp"
#include "conefold/json_io.hpp"
#include "conefold/realize.hpp"
#include "conefold/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw conefold::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    out << data;
    if (!out) throw std::runtime_error("cannot write " + path);
}

using namespace conefold;

std::string describe_parent(const ParentSingularity& parent) {
    std::ostringstream os;
    os << "(m,n) = " << to_string(parent.coords_to_children.front()) << ", "
       << to_string(parent.kind);
    return os.str();
}

int cmd_combine_pair(long long s, long long t) {
    auto parent = combine_pair(Int(s), Int(t));
    std::cout << "pair (s,t) = (" << s << ", " << t << ")\n";
    std::cout << describe_parent(parent) << "\n";
    std::cout << "defect: " << parent.defect.degrees << "\n";
    if (parent.kind == SingularityKind::UnconventionalFirstKind) {
        CoxeterCoord r = refine_first_kind(parent.coords_to_children.front());
        std::cout << "refine x(1+w) -> " << to_string(r) << "\n";
    }
    return kExitOk;
}

int cmd_combine_triple(long long a, long long b, long long c, long long d) {
    TripleParams p{Int(a), Int(b), Int(c), Int(d)};
    auto parent = combine_triple(p);
    std::cout << "triple (a,b,c,delta) = (" << a << ", " << b << ", " << c << ", " << d << ")\n";
    std::cout << "(m_a,n_a) = " << to_string(parent.coords_to_children[0])
              << "  (m_b,n_b) = " << to_string(parent.coords_to_children[1])
              << "  (m_c,n_c) = " << to_string(parent.coords_to_children[2]) << "\n";
    std::cout << to_string(parent.kind) << "\n";
    std::cout << "defect: " << parent.defect.degrees << "\n";
    if (d < 0) std::cout << "note: negative delta accepted\n";
    if (parent.kind == SingularityKind::UnconventionalSecondKind) {
        std::cout << "refine x2 ->";
        for (const auto& cc : parent.coords_to_children)
            std::cout << " " << to_string(refine_second_kind(cc));
        std::cout << "\n";
    }
    return kExitOk;
}

const CapSpec& expect_cap(const SpecDocument& doc) {
    const auto* cd = std::get_if<CapDoc>(&doc);
    if (!cd) throw ParseError("expected a cap spec document");
    return cd->cap;
}

int cmd_cap_validate(const std::string& path) {
    auto doc = parse_spec(read_file(path));
    const CapSpec& cap = expect_cap(doc);
    auto violations = validate_cap(cap);
    if (const auto* hex = std::get_if<HexagonCap>(&cap))
        std::cout << "derived sixth edge " << to_string(hexagon_sixth_edge(hex->edges)) << "\n";
    std::cout << "rim vector " << to_string(cap_rim_vector(cap)) << "\n";
    if (violations.empty()) {
        std::cout << "ok: " << to_string(cap_type(cap)) << " cap is valid\n";
        return kExitOk;
    }
    for (const auto& v : violations)
        std::cout << "violation: " << to_string(v.code)
                  << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
    return kExitValidation;
}

int cmd_cap_unfold(const std::string& path, const std::string& out, bool mirror) {
    std::string text = read_file(path);
    auto doc = parse_spec(text);
    const CapSpec& cap = expect_cap(doc);
    auto violations = validate_cap(cap);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cout << "violation: " << to_string(v.code)
                      << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
        return kExitValidation;
    }
    Unfolding u = develop_cap(cap);
    if (const auto* hex = std::get_if<HexagonCap>(&cap))
        std::cout << "derived sixth edge " << to_string(hexagon_sixth_edge(hex->edges)) << "\n";
    std::string svg = render_unfolding(u, text, mirror);
    write_file(out, svg);
    std::cout << "unfolding: " << u.boundary.size() << " boundary vertices, " << u.marks.size()
              << " marks, " << u.seams.size() << " seams, " << u.cuts.size() << " cuts\n";
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_assemble_validate(const std::string& path) {
    auto doc = parse_spec(read_file(path));
    if (const auto* td = std::get_if<TubeFullereneDoc>(&doc)) {
        auto issues = validate_tube_fullerene(td->spec);
        std::cout << "top rim " << to_string(cap_rim_vector(td->spec.cap_top)) << ", bottom rim "
                  << to_string(cap_rim_vector(td->spec.cap_bottom)) << ", chiral "
                  << to_string(td->spec.tube.chiral) << "\n";
        if (issues.empty()) {
            std::cout << "constraints satisfied; "
                      << count_independent_parameters(Family::TubeLike)
                      << " independent parameters\n";
            return kExitOk;
        }
        for (const auto& v : issues)
            std::cout << "violation: " << to_string(v.code)
                      << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
        return kExitValidation;
    }
    if (const auto* fd = std::get_if<FamilyDoc>(&doc)) {
        auto issues = validate_family(fd->spec);
        std::cout << "family: " << to_string(fd->spec.family) << "\n";
        std::cout << "independent parameters: "
                  << count_independent_parameters(fd->spec.family) << "\n";
        if (issues.empty()) {
            std::cout << "ok: " << family_note(fd->spec) << "\n";
            return kExitOk;
        }
        for (const auto& v : issues)
            std::cout << "violation: " << to_string(v.code)
                      << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
        return kExitValidation;
    }
    throw ParseError("expected a tube_fullerene or family spec document");
}

int cmd_assemble_count(const std::string& name) {
    Family f;
    if (name == "tube-like") f = Family::TubeLike;
    else if (name == "octahedral") f = Family::Octahedral;
    else if (name == "tetrahedral") f = Family::Tetrahedral;
    else if (name == "tetrahedral-goldberg-regular") f = Family::TetrahedralGoldbergRegular;
    else if (name == "d3") f = Family::D3;
    else if (name == "d3-parent") f = Family::D3Parent;
    else {
        std::cerr << "unknown family: " << name << "\n";
        return kExitUsage;
    }
    std::cout << count_independent_parameters(f) << "\n";
    return kExitOk;
}

int cmd_realize(const std::string& path, const std::string& out, const std::string& render,
                bool mirror) {
    std::string text = read_file(path);
    auto doc = parse_spec(text);
    const auto* td = std::get_if<TubeFullereneDoc>(&doc);
    if (!td) throw ParseError("expected a tube_fullerene spec document");
    auto issues = validate_tube_fullerene(td->spec);
    if (!issues.empty()) {
        for (const auto& v : issues)
            std::cout << "violation: " << to_string(v.code)
                      << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
        return kExitValidation;
    }
    LatticePatch patch;
    try {
        patch = rasterize(td->spec);
    } catch (const NonIntegralLattice& e) {
        std::cout << "violation: NonIntegralLattice (" << e.what() << ")\n";
        std::cout << "hint: refine unconventional coordinates (x(1+w) for first kind, x2 for "
                     "second kind) before realization\n";
        return kExitValidation;
    }
    FullereneGraph g = glue(patch);
    write_file(out, graph_to_json(g));
    if (!render.empty()) write_file(render, render_patch(patch, text, mirror));
    std::cout << "atoms: " << g.atom_count() << "\n";
    std::cout << "area: " << patch.area_triangles.str() << " unit triangles\n";
    std::cout << "face census:";
    for (const auto& [size, count] : face_census(g))
        std::cout << " " << size << ":" << count;
    std::cout << "\n";
    std::cout << "wrote " << out << "\n";
    if (!render.empty()) std::cout << "wrote " << render << "\n";
    return kExitOk;
}

struct EnumSig {
    std::vector<std::pair<long long, long long>> key;
    bool operator<(const EnumSig& o) const { return key < o.key; }
};

long long ll(const conefold::Rat& r) {
    return static_cast<long long>(boost::multiprecision::numerator(r));
}

/// Canonical signature of a cap under development congruence: global lattice
/// rotations, and cyclic base-edge relabeling for the locator-free types.
/// The representative is the lexicographically greatest transform, which
/// keeps natural forms such as all-(1,0) bases as the class exemplar.
EnumSig enum_signature(const CapSpec& cap) {
    EnumSig best;
    bool first = true;
    auto edges = base_edges_of(cap);
    size_t k = edges.size();
    bool cyclic = cap_type(cap) == CapType::PentagonalPyramid || cap_type(cap) == CapType::Hexagon;
    size_t shifts = cyclic ? k : 1;
    for (int rot = 0; rot < 6; ++rot) {
        for (size_t sh = 0; sh < shifts; ++sh) {
            EnumSig sig;
            for (size_t i = 0; i < k; ++i) {
                EisRat e = rotate60(edges[(i + sh) % k].to_eisenstein(), rot);
                sig.key.emplace_back(ll(e.a), ll(e.b));
            }
            if (const auto* sq = std::get_if<TrimmedSquarePyramidCap>(&cap)) {
                EisRat l = rotate60(sq->locator_E_from_A.to_eisenstein(), rot);
                sig.key.emplace_back(ll(l.a), ll(l.b));
            } else if (const auto* tr = std::get_if<TruncatedTriangularPyramidCap>(&cap)) {
                for (const auto& loc : {tr->locator_D_from_A, tr->locator_E_from_B}) {
                    EisRat l = rotate60(loc.to_eisenstein(), rot);
                    sig.key.emplace_back(ll(l.a), ll(l.b));
                }
            } else if (const auto* shp = std::get_if<TrimmedShrunkPyramidCap>(&cap)) {
                for (const auto& loc : shp->locators) {
                    EisRat l = rotate60(loc.to_eisenstein(), rot);
                    sig.key.emplace_back(ll(l.a), ll(l.b));
                }
            }
            if (first || best < sig) {
                best = sig;
                first = false;
            }
        }
    }
    return best;
}

/// Rebuild the representative cap from a signature (hexagon and pentagonal
/// store the base edges first; locator types keep their own input).
CapSpec representative_cap(const CapSpec& cap, const EnumSig& sig) {
    auto mk = [&](size_t i) {
        return CoxeterCoord{sig.key[i].first, sig.key[i].second};
    };
    if (cap_type(cap) == CapType::PentagonalPyramid)
        return PentagonalPyramidCap{{mk(0), mk(1), mk(2), mk(3), mk(4)}};
    if (cap_type(cap) == CapType::Hexagon)
        return HexagonCap{{mk(0), mk(1), mk(2), mk(3), mk(4)}};
    return cap;
}

int cmd_enumerate(const std::string& type_name, long long max_norm) {
    if (max_norm < 0) {
        std::cerr << "--max-norm must be nonnegative\n";
        return kExitUsage;
    }
    CapType type;
    if (type_name == "hexagon") type = CapType::Hexagon;
    else if (type_name == "pentagonal-pyramid") type = CapType::PentagonalPyramid;
    else if (type_name == "trimmed-square-pyramid") type = CapType::TrimmedSquarePyramid;
    else if (type_name == "truncated-triangular-pyramid") type = CapType::TruncatedTriangularPyramid;
    else if (type_name == "trimmed-shrunk-pyramid") type = CapType::TrimmedShrunkPyramid;
    else {
        std::cerr << "unknown cap type: " << type_name << "\n";
        return kExitUsage;
    }

    std::vector<CoxeterCoord> nonzero, with_zero;
    for (long long m = -max_norm; m <= max_norm; ++m)
        for (long long n = -max_norm; n <= max_norm; ++n) {
            Rat nn = Rat(m * m + m * n + n * n);
            if (nn > max_norm) continue;
            with_zero.push_back({m, n});
            if (!(m == 0 && n == 0)) nonzero.push_back({m, n});
        }

    std::map<EnumSig, CapSpec> unique;
    auto consider = [&](const CapSpec& cap) {
        if (!validate_cap(cap).empty()) return;
        EnumSig sig = enum_signature(cap);
        unique.emplace(sig, representative_cap(cap, sig));
    };

    size_t base_count = type == CapType::Hexagon || type == CapType::PentagonalPyramid ? 5
                        : type == CapType::TrimmedSquarePyramid                        ? 4
                        : type == CapType::TruncatedTriangularPyramid                  ? 3
                                                                                       : 2;
    std::vector<size_t> idx(base_count, 0);
    size_t n_edges = nonzero.size();
    if (n_edges == 0) return kExitOk;
    bool done = false;
    while (!done) {
        std::array<CoxeterCoord, 5> e5{};
        for (size_t i = 0; i < base_count; ++i) e5[i] = nonzero[idx[i]];
        switch (type) {
            case CapType::Hexagon: {
                auto sixth = hexagon_sixth_edge({e5[0], e5[1], e5[2], e5[3], e5[4]});
                if (norm(sixth) <= max_norm)
                    consider(HexagonCap{{e5[0], e5[1], e5[2], e5[3], e5[4]}});
                break;
            }
            case CapType::PentagonalPyramid:
                consider(PentagonalPyramidCap{{e5[0], e5[1], e5[2], e5[3], e5[4]}});
                break;
            case CapType::TrimmedSquarePyramid:
                for (const auto& loc : with_zero)
                    consider(TrimmedSquarePyramidCap{{e5[0], e5[1], e5[2], e5[3]}, loc,
                                                     TrimVariant::V1});
                break;
            case CapType::TruncatedTriangularPyramid:
                for (const auto& l1 : with_zero)
                    for (const auto& l2 : with_zero)
                        consider(TruncatedTriangularPyramidCap{{e5[0], e5[1], e5[2]}, l1, l2, 1});
                break;
            case CapType::TrimmedShrunkPyramid:
                for (const auto& l1 : with_zero)
                    for (const auto& l2 : with_zero)
                        for (const auto& l3 : with_zero)
                            consider(TrimmedShrunkPyramidCap{{e5[0], e5[1]},
                                                             {l1, l2, l3},
                                                             TrimVariant::V1});
                break;
        }
        size_t pos = 0;
        while (pos < base_count) {
            if (++idx[pos] < n_edges) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == base_count) done = true;
    }

    for (const auto& [sig, cap] : unique) std::cout << cap_to_json_line(cap) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conefold: exact singularity-combination toolkit for fullerene parameterization"};
    app.require_subcommand(1);

    auto* combine = app.add_subcommand("combine", "combine singularities into a parent");
    combine->require_subcommand(1);
    long long s = 0, t = 0, a = 0, b = 0, c = 0, d = 0;
    auto* pair = combine->add_subcommand("pair", "combine two adjacent singularities");
    pair->add_option("--s", s, "Coxeter s")->required();
    pair->add_option("--t", t, "Coxeter t")->required();
    auto* triple = combine->add_subcommand("triple", "combine three adjacent singularities");
    triple->add_option("--a", a, "side a")->required();
    triple->add_option("--b", b, "side b")->required();
    triple->add_option("--c", c, "side c")->required();
    triple->add_option("--delta", d, "twist delta")->required();

    auto* cap = app.add_subcommand("cap", "validate or unfold a cap spec");
    cap->require_subcommand(1);
    std::string cap_file, cap_out = "unfolding.svg";
    bool mirror = false;
    auto* capval = cap->add_subcommand("validate", "check a cap spec file");
    capval->add_option("spec", cap_file, "cap spec JSON file")->required();
    auto* capunf = cap->add_subcommand("unfold", "write the development as SVG");
    capunf->add_option("spec", cap_file, "cap spec JSON file")->required();
    capunf->add_option("-o,--output", cap_out, "output SVG path");
    capunf->add_flag("--mirror", mirror, "mirror the drawing");

    auto* assemble = app.add_subcommand("assemble", "whole-fullerene specs");
    assemble->require_subcommand(1);
    std::string asm_file, family_name;
    auto* asmval = assemble->add_subcommand("validate", "validate a fullerene spec file");
    asmval->add_option("spec", asm_file, "tube_fullerene or family spec JSON")->required();
    auto* asmcount = assemble->add_subcommand("count", "independent parameter count");
    asmcount->add_option("--family", family_name, "family name")->required();

    std::string rz_file, rz_out = "graph.json", rz_render;
    auto* realize_cmd = app.add_subcommand("realize", "realize a tube fullerene as a graph");
    realize_cmd->add_option("spec", rz_file, "tube_fullerene spec JSON")->required();
    realize_cmd->add_option("-o,--output", rz_out, "output graph JSON path");
    realize_cmd->add_option("--render", rz_render, "also write the development SVG");
    realize_cmd->add_flag("--mirror", mirror, "mirror the rendering");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate small cap catalogs");
    enumerate->require_subcommand(1);
    std::string enum_type;
    long long max_norm = 1;
    auto* encaps = enumerate->add_subcommand("caps", "stream valid caps as JSON lines");
    encaps->add_option("--type", enum_type, "cap type")->required();
    encaps->add_option("--max-norm", max_norm, "max norm of each parameter pair")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (pair->parsed()) return cmd_combine_pair(s, t);
        if (triple->parsed()) return cmd_combine_triple(a, b, c, d);
        if (capval->parsed()) return cmd_cap_validate(cap_file);
        if (capunf->parsed()) return cmd_cap_unfold(cap_file, cap_out, mirror);
        if (asmval->parsed()) return cmd_assemble_validate(asm_file);
        if (asmcount->parsed()) return cmd_assemble_count(family_name);
        if (realize_cmd->parsed()) return cmd_realize(rz_file, rz_out, rz_render, mirror);
        if (encaps->parsed()) return cmd_enumerate(enum_type, max_norm);
    } catch (const conefold::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const conefold::DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const conefold::OutOfRange& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}

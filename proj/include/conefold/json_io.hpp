#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "conefold/assembly.hpp"
#include "conefold/caps.hpp"
#include "conefold/combine.hpp"
#include "conefold/errors.hpp"
#include "conefold/realize.hpp"

namespace conefold {

/// Parsed spec file: version 1, one of the five document kinds.
struct PairDoc {
    Int s, t;
};
struct TripleDoc {
    TripleParams params;
};
struct CapDoc {
    CapSpec cap;
};
struct TubeFullereneDoc {
    TubeFullereneSpec spec;
};
struct FamilyDoc {
    FamilySpec spec;
};
using SpecDocument = std::variant<PairDoc, TripleDoc, CapDoc, TubeFullereneDoc, FamilyDoc>;

namespace jsondetail {

using nlohmann::json;

inline void require_keys(const json& j, const std::set<std::string>& allowed,
                         const std::set<std::string>& required, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError(where + ": unknown field \"" + it.key() + "\"");
    for (const auto& k : required)
        if (!j.contains(k)) throw ParseError(where + ": missing field \"" + k + "\"");
}

inline Int get_int(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(where + ": field \"" + key + "\" must be an integer");
    return Int(j.at(key).get<long long>());
}

inline CoxeterCoord get_pair(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw ParseError(where + ": expected an integer pair [m, n]");
    return {Rat(v[0].get<long long>()), Rat(v[1].get<long long>())};
}

template <size_t N>
std::array<CoxeterCoord, N> get_pairs(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != N)
        throw ParseError(where + ": expected exactly " + std::to_string(N) + " pairs");
    std::array<CoxeterCoord, N> out;
    for (size_t i = 0; i < N; ++i) out[i] = get_pair(v[i], where);
    return out;
}

inline TrimVariant get_trim_variant(const json& j, const std::string& where) {
    if (!j.contains("trim_variant")) return TrimVariant::V1;
    std::string s = j.at("trim_variant").get<std::string>();
    if (s == "v1") return TrimVariant::V1;
    if (s == "v2") return TrimVariant::V2;
    throw ParseError(where + ": trim_variant must be \"v1\" or \"v2\"");
}

inline CapSpec parse_cap_payload(const json& j, const std::string& where) {
    if (!j.contains("type") || !j.at("type").is_string())
        throw ParseError(where + ": cap needs a \"type\" string");
    std::string type = j.at("type").get<std::string>();
    if (type == "hexagon") {
        require_keys(j, {"type", "edges"}, {"type", "edges"}, where);
        return HexagonCap{get_pairs<5>(j.at("edges"), where + ".edges")};
    }
    if (type == "pentagonal-pyramid") {
        require_keys(j, {"type", "base_edges"}, {"type", "base_edges"}, where);
        return PentagonalPyramidCap{get_pairs<5>(j.at("base_edges"), where + ".base_edges")};
    }
    if (type == "trimmed-square-pyramid") {
        require_keys(j, {"type", "base_edges", "locator_e_from_a", "trim_variant"},
                     {"type", "base_edges", "locator_e_from_a"}, where);
        return TrimmedSquarePyramidCap{get_pairs<4>(j.at("base_edges"), where + ".base_edges"),
                                       get_pair(j.at("locator_e_from_a"), where),
                                       get_trim_variant(j, where)};
    }
    if (type == "truncated-triangular-pyramid") {
        require_keys(j,
                     {"type", "base_edges", "locator_d_from_a", "locator_e_from_b",
                      "truncation_variant"},
                     {"type", "base_edges", "locator_d_from_a", "locator_e_from_b"}, where);
        int variant = 1;
        if (j.contains("truncation_variant")) {
            if (!j.at("truncation_variant").is_number_integer())
                throw ParseError(where + ": truncation_variant must be an integer");
            variant = j.at("truncation_variant").get<int>();
        }
        return TruncatedTriangularPyramidCap{get_pairs<3>(j.at("base_edges"), where),
                                             get_pair(j.at("locator_d_from_a"), where),
                                             get_pair(j.at("locator_e_from_b"), where), variant};
    }
    if (type == "trimmed-shrunk-pyramid") {
        require_keys(j, {"type", "base_edges", "locators", "trim_variant"},
                     {"type", "base_edges", "locators"}, where);
        return TrimmedShrunkPyramidCap{get_pairs<2>(j.at("base_edges"), where),
                                       get_pairs<3>(j.at("locators"), where),
                                       get_trim_variant(j, where)};
    }
    throw ParseError(where + ": unknown cap type \"" + type + "\"");
}

inline nlohmann::json cap_payload_json(const CapSpec& cap) {
    json j;
    j["type"] = to_string(cap_type(cap));
    auto pair_list = [](auto begin, auto end) {
        json arr = json::array();
        for (auto it = begin; it != end; ++it) {
            long long m = static_cast<long long>(boost::multiprecision::numerator(it->m));
            long long n = static_cast<long long>(boost::multiprecision::numerator(it->n));
            arr.push_back(json::array({m, n}));
        }
        return arr;
    };
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, HexagonCap>) {
                j["edges"] = pair_list(c.edges.begin(), c.edges.end());
            } else if constexpr (std::is_same_v<T, PentagonalPyramidCap>) {
                j["base_edges"] = pair_list(c.base_edges.begin(), c.base_edges.end());
            } else if constexpr (std::is_same_v<T, TrimmedSquarePyramidCap>) {
                j["base_edges"] = pair_list(c.base_edges.begin(), c.base_edges.end());
                auto l = pair_list(&c.locator_E_from_A, &c.locator_E_from_A + 1);
                j["locator_e_from_a"] = l[0];
                j["trim_variant"] = c.trim_variant == TrimVariant::V1 ? "v1" : "v2";
            } else if constexpr (std::is_same_v<T, TruncatedTriangularPyramidCap>) {
                j["base_edges"] = pair_list(c.base_edges.begin(), c.base_edges.end());
                j["locator_d_from_a"] = pair_list(&c.locator_D_from_A, &c.locator_D_from_A + 1)[0];
                j["locator_e_from_b"] = pair_list(&c.locator_E_from_B, &c.locator_E_from_B + 1)[0];
                j["truncation_variant"] = c.truncation_variant;
            } else if constexpr (std::is_same_v<T, TrimmedShrunkPyramidCap>) {
                j["base_edges"] = pair_list(c.base_edges.begin(), c.base_edges.end());
                j["locators"] = pair_list(c.locators.begin(), c.locators.end());
                j["trim_variant"] = c.trim_variant == TrimVariant::V1 ? "v1" : "v2";
            }
        },
        cap);
    return j;
}

}  // namespace jsondetail

inline SpecDocument parse_spec(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec: expected a JSON object");
    if (!j.contains("version") || !j.at("version").is_number_integer() ||
        j.at("version").get<int>() != 1)
        throw ParseError("spec: version must equal 1");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("spec: missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();

    using jsondetail::get_int;
    using jsondetail::get_pair;
    using jsondetail::require_keys;

    if (kind == "pair") {
        require_keys(j, {"version", "kind", "s", "t"}, {"s", "t"}, "pair");
        return PairDoc{get_int(j, "s", "pair"), get_int(j, "t", "pair")};
    }
    if (kind == "triple") {
        require_keys(j, {"version", "kind", "a", "b", "c", "delta"}, {"a", "b", "c", "delta"},
                     "triple");
        return TripleDoc{TripleParams{get_int(j, "a", "triple"), get_int(j, "b", "triple"),
                                      get_int(j, "c", "triple"), get_int(j, "delta", "triple")}};
    }
    if (kind == "cap") {
        json payload = j;
        payload.erase("version");
        payload.erase("kind");
        return CapDoc{jsondetail::parse_cap_payload(payload, "cap")};
    }
    if (kind == "tube_fullerene") {
        require_keys(j, {"version", "kind", "cap_top", "cap_bottom", "tube"},
                     {"cap_top", "cap_bottom", "tube"}, "tube_fullerene");
        const auto& tj = j.at("tube");
        require_keys(tj, {"chiral", "offset"}, {"chiral", "offset"}, "tube");
        TubeFullereneSpec spec{jsondetail::parse_cap_payload(j.at("cap_top"), "cap_top"),
                               jsondetail::parse_cap_payload(j.at("cap_bottom"), "cap_bottom"),
                               TubeSpec{get_pair(tj.at("chiral"), "tube.chiral"),
                                        get_pair(tj.at("offset"), "tube.offset")}};
        return TubeFullereneDoc{spec};
    }
    if (kind == "family") {
        require_keys(j, {"version", "kind", "family", "pairs", "triples", "quads", "parent_params"},
                     {"family"}, "family");
        FamilySpec spec;
        std::string fam = j.at("family").get<std::string>();
        if (fam == "tube-like") spec.family = Family::TubeLike;
        else if (fam == "octahedral") spec.family = Family::Octahedral;
        else if (fam == "tetrahedral") spec.family = Family::Tetrahedral;
        else if (fam == "tetrahedral-goldberg-regular") spec.family = Family::TetrahedralGoldbergRegular;
        else if (fam == "d3") spec.family = Family::D3;
        else if (fam == "d3-parent") spec.family = Family::D3Parent;
        else throw ParseError("family: unknown family \"" + fam + "\"");
        if (j.contains("pairs"))
            for (const auto& v : j.at("pairs")) {
                auto c = get_pair(v, "family.pairs");
                spec.pairs.push_back({boost::multiprecision::numerator(c.m),
                                      boost::multiprecision::numerator(c.n)});
            }
        if (j.contains("triples"))
            for (const auto& v : j.at("triples")) {
                if (!v.is_array() || v.size() != 4)
                    throw ParseError("family.triples: expected [a, b, c, delta]");
                spec.triples.push_back(TripleParams{Int(v[0].get<long long>()),
                                                    Int(v[1].get<long long>()),
                                                    Int(v[2].get<long long>()),
                                                    Int(v[3].get<long long>())});
            }
        if (j.contains("quads"))
            for (const auto& v : j.at("quads")) {
                if (!v.is_array() || v.size() != 3)
                    throw ParseError("family.quads: expected three locator pairs");
                spec.quads.push_back({get_pair(v[0], "family.quads"),
                                      get_pair(v[1], "family.quads"),
                                      get_pair(v[2], "family.quads")});
            }
        if (j.contains("parent_params"))
            for (const auto& v : j.at("parent_params")) {
                if (!v.is_number_integer())
                    throw ParseError("family.parent_params: integers only");
                spec.parent_params.push_back(Int(v.get<long long>()));
            }
        return FamilyDoc{spec};
    }
    throw ParseError("spec: unknown kind \"" + kind + "\"");
}

/// Graph file: atoms, lexicographically sorted bonds, per-atom rotation
/// lists and the face census, with atom ids in canonical order.
inline std::string graph_to_json(const FullereneGraph& g) {
    nlohmann::json j;
    j["atoms"] = g.atom_count();
    nlohmann::json bonds = nlohmann::json::array();
    for (const auto& [u, v] : g.bonds()) bonds.push_back(nlohmann::json::array({u, v}));
    j["bonds"] = bonds;
    nlohmann::json rot = nlohmann::json::array();
    for (const auto& r : g.rotation) rot.push_back(nlohmann::json::array({r[0], r[1], r[2]}));
    j["rotation"] = rot;
    nlohmann::json faces = nlohmann::json::object();
    for (const auto& [size, count] : face_census(g)) faces[std::to_string(size)] = count;
    j["faces"] = faces;
    return j.dump() + "\n";
}

inline std::string cap_to_json_line(const CapSpec& cap) {
    nlohmann::json j = jsondetail::cap_payload_json(cap);
    j["version"] = 1;
    j["kind"] = "cap";
    return j.dump();
}

}  // namespace conefold

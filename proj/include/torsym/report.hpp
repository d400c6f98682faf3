#pragma once

// JSON input and report formats of the command-line front end. Rationals
// are serialized as "p/q" strings, never as floats, so reports are exact
// and byte-identical for identical inputs.

#include <nlohmann/json.hpp>
#include <string>

#include "torsym/bundleclass.hpp"
#include "torsym/classify.hpp"
#include "torsym/golden_data.hpp"
#include "torsym/isotropy.hpp"

namespace torsym {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "torsym-report/1";
inline constexpr const char* kToolVersion = "torsym 1.0.0";

// ---- group spec files ------------------------------------------------------

struct GroupSpec {
    Gram gram;
    std::vector<AffineTorusMap> generators;
    std::size_t cap = 4096;
};

inline ordered_json rational_json(const Rat& r) { return r.str(); }
inline ordered_json vec_json(const Vec2Q& v) {
    return ordered_json::array({v.x.str(), v.y.str()});
}
inline ordered_json mat_json(const Mat2Q& m) {
    return ordered_json::array({ordered_json::array({m.a.str(), m.b.str()}),
                                ordered_json::array({m.c.str(), m.d.str()})});
}

inline Rat rational_from(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw parse_error("expected an integer or a 'p/q' string");
}

inline GroupSpec parse_group_spec(const nlohmann::json& j) {
    GroupSpec spec;
    if (!j.contains("gram") || !j.contains("generators"))
        throw parse_error("group spec needs 'gram' and 'generators'");
    const auto& g = j.at("gram");
    Rat a = rational_from(g.at(0).at(0)), b = rational_from(g.at(0).at(1));
    Rat b2 = rational_from(g.at(1).at(0)), d = rational_from(g.at(1).at(1));
    if (b != b2) throw parse_error("gram matrix is not symmetric");
    spec.gram = Gram(a, b, d);
    for (const auto& gen : j.at("generators")) {
        const auto& m = gen.at("matrix");
        Mat2Z mat{m.at(0).at(0).get<std::int64_t>(), m.at(0).at(1).get<std::int64_t>(),
                  m.at(1).at(0).get<std::int64_t>(), m.at(1).at(1).get<std::int64_t>()};
        Vec2Q t{0, 0};
        if (gen.contains("translation"))
            t = Vec2Q{rational_from(gen.at("translation").at(0)),
                      rational_from(gen.at("translation").at(1))};
        spec.generators.emplace_back(mat, t);
    }
    if (j.contains("cap")) spec.cap = j.at("cap").get<std::size_t>();
    return spec;
}

// ---- report sections -------------------------------------------------------

inline ordered_json canonical_class_json(const CanonicalClass& cc) {
    ordered_json j;
    j["row"] = cc.info().name;
    j["family_row"] = cc.family_row();
    j["point_group"] = cc.point_group().str();
    j["lambda_t_shape"] = to_string(cc.lambda_t_shape());
    j["glide"] = to_string(cc.glide());
    j["m1"] = cc.sub.m1;
    j["m2"] = cc.sub.m2;
    j["diagonal_sublattice"] = cc.sub.diagonal;
    j["lambda_t_basis"] = mat_json(cc.sub.t_basis);
    j["gram"] = mat_json(Mat2Q(canonical_gram(cc).a, canonical_gram(cc).b,
                               canonical_gram(cc).b, canonical_gram(cc).d));
    return j;
}

inline CanonicalClass canonical_class_from(const nlohmann::json& j) {
    std::string name = j.at("row").get<std::string>();
    for (FineRow r : all_fine_rows())
        if (fine_row_name(r) == name) {
            const auto& b = j.at("lambda_t_basis");
            Mat2Q basis(rational_from(b.at(0).at(0)), rational_from(b.at(0).at(1)),
                        rational_from(b.at(1).at(0)), rational_from(b.at(1).at(1)));
            return CanonicalClass(r, SublatticeData::general(basis));
        }
    throw parse_error("unknown canonical row '" + name + "'");
}

inline ordered_json conjugator_json(const Conjugator& c) {
    ordered_json j;
    j["linear"] = mat_json(c.linear);
    j["translation"] = vec_json(c.translation);
    return j;
}

inline ordered_json classification_json(const Classification& r) {
    ordered_json j;
    j["canonical_class"] = canonical_class_json(r.cc);
    j["conjugator"] = conjugator_json(r.conj);
    return j;
}

inline ordered_json cells_json(const CanonicalClass& cc) {
    CellStructure cs = cell_structure(cc);
    Census census = vertex_edge_census(cc);
    TilingCertificate tiling = verify_tiling(cc);
    ordered_json j;
    j["i_r"] = census.i_r;
    j["j_r"] = census.j_r;
    ordered_json poly = ordered_json::array();
    for (const auto& v : cs.p_r.vertices()) poly.push_back(vec_json(v));
    j["p_r"] = poly;
    j["barycenter"] = vec_json(cs.barycenter);
    j["i0"] = cs.i0;
    j["marked_indices"] = cs.marked_indices;
    ordered_json pts = ordered_json::array();
    for (const auto& p : cs.marked_points) pts.push_back(vec_json(p));
    j["marked_points"] = pts;
    j["vertex_relations"] = relations_string(cs.vertex_orbits);
    j["faces"] = census.faces;
    j["vertices"] = census.vertices;
    j["edges"] = census.edges;
    j["vertex_orbits"] = census.vertex_orbits;
    j["edge_orbits"] = census.edge_orbits;
    j["tiling_ok"] = tiling.ok();
    j["tile_count"] = tiling.tile_count;
    j["one_dimensional_domain_ok"] = verify_1d_domain(cc);
    return j;
}

inline ordered_json isotropy_json(const CanonicalClass& cc) {
    IsotropyReport rep = isotropy_report(cc);
    CountingReport counting = verify_counting(cc);
    ordered_json j;
    j["face"] = rep.face.str();
    ordered_json v = ordered_json::array(), e = ordered_json::array(), ei = ordered_json::array();
    for (const auto& l : rep.vertex) v.push_back(l.str());
    for (const auto& l : rep.edge) e.push_back(l.str());
    for (const auto& l : rep.edge_interior) ei.push_back(l.str());
    j["vertex"] = v;
    j["edge"] = e;
    j["edge_interior"] = ei;
    ordered_json cones = ordered_json::object();
    for (const auto& [i, l] : rep.cone) cones[std::to_string(i)] = l.str();
    j["cone"] = cones;
    ordered_json c;
    c["area_ratio"] = counting.ratio.str();
    c["r_t"] = counting.r_t;
    c["faces"] = counting.faces;
    c["vertices"] = counting.vertices;
    c["faces_identity"] = counting.faces_identity;
    c["vertex_identity"] = counting.vertex_identity;
    j["counting"] = c;
    return j;
}

inline ordered_json bundles_json(const CanonicalClass& cc, std::int64_t rank,
                                 std::int64_t rank_cap) {
    ordered_json j;
    ClassificationReport rep;
    rep.theorem_case = classify_bundles(cc, 0).theorem_case;  // routing only
    // recompute with the requested ranks
    MarkedData md = marked_data(cc);
    j["theorem_case"] = to_string(rep.theorem_case);
    const PointGroupLabel label = cc.point_group();
    if (!label.dihedral) {
        j["chern_modulus"] = (std::int64_t)canonical_group(cc).order();
        j["chern_offset"] = "k0(tuple)";
        j["fiber"] = "Z-indexed by Chern class";
    } else if (cc.glide() == GlideType::ShiftGlide && label == PointGroupLabel::dihedral_plain(1)) {
        j["fiber"] = 2;
    } else {
        j["fiber"] = 1;
    }
    ordered_json counts = ordered_json::object();
    for (std::int64_t r = 1; r <= rank; ++r)
        counts[std::to_string(r)] = enumerate_a(md, r, rank_cap).size();
    j["tuple_count_by_rank"] = counts;
    return j;
}

inline ordered_json report_skeleton(const std::string& command) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["command"] = command;
    return j;
}

}  // namespace torsym

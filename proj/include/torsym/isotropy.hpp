#pragma once

// Isotropy groups at the marked points of a canonical row: the face
// barycenter, the polygon vertices, edge barycenters, generic interior edge
// points, and the cone segments [d^i, b(P_R)] of the lifted complex.
// Labels are taken in the tangent frame of the row (frame coordinates);
// edge labels use the axis parallel to the edge, the convention of the
// isotropy tables.
//
// The embedded golden tables store the brute-force stabilizer values. Two
// entries of the published tables disagree with the oracle and carry notes
// quoting both readings (the D4 face entry, whose proof text reads D1,2
// while table and oracle give D1,4; and the D2,2 edge row, which pairs e1
// with e3 although the e1 stabilizer is the half-turn Z2).

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "torsym/cells.hpp"
#include "torsym/labels.hpp"

namespace torsym {

struct IsotropyReport {
    PointGroupLabel face;
    std::vector<PointGroupLabel> vertex;         // index i in Z_{i_R}
    std::vector<PointGroupLabel> edge;           // barycenter of e^i
    std::vector<PointGroupLabel> edge_interior;  // generic point of e^i
    std::map<int, PointGroupLabel> cone;         // marked index in I_R
    std::vector<std::vector<int>> relations;     // vertex orbit partition
};

namespace isotropy_detail {

inline std::vector<Mat2Z> to_frame(const std::vector<Mat2Z>& ms, const Mat2Q& T) {
    Mat2Q Tinv = T.inverse();
    std::vector<Mat2Z> out;
    for (const auto& m : ms) {
        auto f = (Tinv * Mat2Q(m) * T).to_integer();
        if (!f) throw std::logic_error("stabilizer matrix is not frame-integral");
        out.push_back(*f);
    }
    return out;
}

inline PointGroupLabel label_at(const CellStructure& cs, const Vec2Q& point,
                                std::optional<Vec2Q> edge_dir = std::nullopt) {
    Mat2Q T = frame_to_lattice(cs.cc);
    auto ms = to_frame(cs.group.stabilizer_matrices(point), T);
    std::optional<Vec2Q> hint;
    if (edge_dir) hint = T.inverse().apply(*edge_dir);
    return label_matrix_group(ms, cs.cc.frame(), hint);
}

}  // namespace isotropy_detail

inline PointGroupLabel face_isotropy(const CellStructure& cs) {
    return isotropy_detail::label_at(cs, cs.barycenter);
}

inline std::vector<PointGroupLabel> vertex_isotropy(const CellStructure& cs) {
    std::vector<PointGroupLabel> out;
    for (int i = 0; i < cs.i_r; ++i) out.push_back(isotropy_detail::label_at(cs, cs.vertex(i)));
    return out;
}

inline std::vector<PointGroupLabel> edge_isotropy(const CellStructure& cs) {
    std::vector<PointGroupLabel> out;
    for (int i = 0; i < cs.i_r; ++i) {
        auto [a, b] = cs.p_r.edge(i);
        out.push_back(isotropy_detail::label_at(cs, cs.edge_barycenter(i), b - a));
    }
    return out;
}

/// Stabilizer at the point one third of the way along each edge; any
/// non-midpoint interior point gives the same group.
inline std::vector<PointGroupLabel> edge_interior_isotropy(const CellStructure& cs) {
    std::vector<PointGroupLabel> out;
    for (int i = 0; i < cs.i_r; ++i) {
        auto [a, b] = cs.p_r.edge(i);
        out.push_back(isotropy_detail::label_at(cs, a + Rat(1, 3) * (b - a), b - a));
    }
    return out;
}

/// Elements fixing both d^i and the face pointwise in the lifted complex:
/// the plane stabilizer of the segment [d^i, b(P_R)], taken over all lifts
/// of each torus element.
inline std::vector<Mat2Z> cone_stabilizer(const CellStructure& cs, std::size_t k) {
    std::vector<Mat2Z> out;
    for (const auto& g : cs.group.elements()) {
        // pick the unique lift fixing the barycenter, if any, and ask
        // whether it also fixes the marked point
        Vec2Q lam = cs.barycenter - g.apply_plane(cs.barycenter);
        if (!lam.is_integral()) continue;
        const Vec2Q& d = cs.marked_points[k];
        if (g.apply_plane(d) + lam == d) out.push_back(g.matrix);
    }
    return out;
}

inline std::map<int, PointGroupLabel> cone_isotropy(const CellStructure& cs) {
    Mat2Q T = frame_to_lattice(cs.cc);
    std::map<int, PointGroupLabel> out;
    for (std::size_t k = 0; k < cs.marked_points.size(); ++k) {
        auto ms = isotropy_detail::to_frame(cone_stabilizer(cs, k), T);
        out[cs.marked_indices[k]] = label_matrix_group(ms, cs.cc.frame());
    }
    return out;
}

inline IsotropyReport isotropy_report(const CanonicalClass& cc) {
    CellStructure cs = cell_structure(cc);
    IsotropyReport r;
    r.face = face_isotropy(cs);
    r.vertex = vertex_isotropy(cs);
    r.edge = edge_isotropy(cs);
    r.edge_interior = edge_interior_isotropy(cs);
    r.cone = cone_isotropy(cs);
    r.relations = cs.vertex_orbits;
    return r;
}

struct CountingReport {
    bool faces_identity = false;    // |R_t| = ratio * |B|
    bool vertex_identity = false;   // |R_t| = ratio * (j_R/i_R) * |V|
    Rat ratio;                      // Area(|P_R|) / Area(Lambda_t)
    std::size_t r_t = 0, faces = 0, vertices = 0;
    int i_r = 0, j_r = 0;

    bool ok() const { return faces_identity && vertex_identity; }
};

inline CountingReport verify_counting(const CanonicalClass& cc) {
    Census c = vertex_edge_census(cc);
    FiniteTorusGroup g = canonical_group(cc);
    CountingReport r;
    r.ratio = fundamental_domain_2d(cc).lattice_area() * Rat(cc.sub.m1 * cc.sub.m2);
    r.r_t = g.translation_order();
    r.faces = c.faces;
    r.vertices = c.vertices;
    r.i_r = c.i_r;
    r.j_r = c.j_r;
    Rat rt((std::int64_t)r.r_t);
    r.faces_identity = rt == r.ratio * Rat((std::int64_t)c.faces);
    r.vertex_identity = rt == r.ratio * Rat(c.j_r, c.i_r) * Rat((std::int64_t)c.vertices);
    return r;
}

// ---------------------------------------------------------------------------
// golden tables: semicolon-separated rows `row;kind;index;value`

inline std::string relations_string(const std::vector<std::vector<int>>& rel) {
    std::string s;
    for (std::size_t c = 0; c < rel.size(); ++c) {
        if (c) s += "|";
        for (std::size_t i = 0; i < rel[c].size(); ++i) {
            if (i) s += " ";
            s += std::to_string(rel[c][i]);
        }
    }
    return s;
}

/// Recomputes all golden-table lines of one row by brute force.
inline std::vector<std::string> computed_table_lines(const CanonicalClass& cc) {
    std::string row = cc.info().name;
    CellStructure cs = cell_structure(cc);
    Census census = vertex_edge_census(cc);
    IsotropyReport rep;
    rep.face = face_isotropy(cs);
    rep.vertex = vertex_isotropy(cs);
    rep.edge = edge_isotropy(cs);
    rep.edge_interior = edge_interior_isotropy(cs);
    std::vector<std::string> out;
    Rat ratio = cs.p_r.lattice_area() * Rat(cc.sub.m1 * cc.sub.m2);
    out.push_back(row + ";area;;" + ratio.str());
    out.push_back(row + ";face;;" + rep.face.str());
    for (int i = 0; i < cs.i_r; ++i)
        out.push_back(row + ";vertex;" + std::to_string(i) + ";" + rep.vertex[i].str());
    for (int i = 0; i < cs.i_r; ++i)
        out.push_back(row + ";edge;" + std::to_string(i) + ";" + rep.edge[i].str());
    for (int i = 0; i < cs.i_r; ++i)
        out.push_back(row + ";edgeint;" + std::to_string(i) + ";" + rep.edge_interior[i].str());
    out.push_back(row + ";vrel;;" + relations_string(cs.vertex_orbits));
    out.push_back(row + ";vorbits;;" + std::to_string(census.vertex_orbits));
    out.push_back(row + ";eorbits;;" + std::to_string(census.edge_orbits));
    return out;
}

struct GoldenEntry {
    std::string row, kind, index, value;
};

inline std::vector<GoldenEntry> parse_golden(const std::string& text) {
    std::vector<GoldenEntry> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        GoldenEntry e;
        std::size_t p1 = line.find(';');
        std::size_t p2 = line.find(';', p1 + 1);
        std::size_t p3 = line.find(';', p2 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos || p3 == std::string::npos)
            throw parse_error("bad golden line: " + line);
        e.row = line.substr(0, p1);
        e.kind = line.substr(p1 + 1, p2 - p1 - 1);
        e.index = line.substr(p2 + 1, p3 - p2 - 1);
        e.value = line.substr(p3 + 1);
        out.push_back(e);
    }
    return out;
}

struct TableDiff {
    std::vector<std::string> mismatches;
    std::vector<std::string> notes;  // recorded discrepancies against the published tables
    std::size_t checked = 0;

    bool ok() const { return mismatches.empty(); }
};

/// Diffs the golden file against the brute-force recomputation. `selector`
/// restricts to rows whose name contains it; unknown selectors leave
/// checked == 0.
inline TableDiff verify_tables(const std::string& golden_text, const std::string& selector = "") {
    auto golden = parse_golden(golden_text);
    TableDiff diff;
    std::map<std::string, std::map<std::string, std::string>> computed;  // row -> key -> value
    for (FineRow r : all_fine_rows()) {
        CanonicalClass cc(r, SublatticeData::diag(1, 1));
        if (!selector.empty() && cc.info().name != selector) continue;
        for (const std::string& line : computed_table_lines(cc)) {
            auto e = parse_golden(line).front();
            computed[e.row][e.kind + ";" + e.index] = e.value;
        }
    }
    for (const auto& e : golden) {
        if (e.kind == "note") {
            if (selector.empty() || e.row == selector)
                diff.notes.push_back(e.row + " " + e.index + ": " + e.value);
            continue;
        }
        auto it = computed.find(e.row);
        if (it == computed.end()) continue;  // filtered out
        ++diff.checked;
        auto jt = it->second.find(e.kind + ";" + e.index);
        if (jt == it->second.end())
            diff.mismatches.push_back(e.row + ";" + e.kind + ";" + e.index + " missing");
        else if (jt->second != e.value)
            diff.mismatches.push_back(e.row + ";" + e.kind + ";" + e.index + " golden=" + e.value +
                                      " computed=" + jt->second);
    }
    return diff;
}

}  // namespace torsym

#pragma once

// Canonical classification of finite subgroups of Aff(R^2/Lambda).
//
// A CanonicalClass names a row of the classification table (point group,
// Lambda_t shape, sublattice data, glide type) and canonical_group() builds
// its canonical representative explicitly. classify() maps an arbitrary
// finite group to a row and produces the affine conjugator, certified by an
// exact element-for-element comparison against the canonical group.
//
// In lattice coordinates every conjugator between presentations has a
// unimodular integer linear part; the metric is carried by the Gram form,
// so "conformal normalization" is just the choice of canonical Gram.
//
// Three presentations listed separately in the classification table are
// genuinely affinely conjugate to other rows and are merged by classify()
// (canonical_group still builds each presentation on request):
//   * the D2-like groups whose reflections are of swap type on Lambda_t
//     (D_{2,2}, triangular D_2, D_{2,3}) form a single conjugacy class,
//     represented by D_{2,2};
//   * D_{1,4} with shift glide is conjugate to D_{1,4} with vertex glide
//     (the glide residue is trivial on swap-type lattices).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "torsym/errors.hpp"
#include "torsym/group.hpp"
#include "torsym/labels.hpp"

namespace torsym {

enum class FineRow {
    Z2_Sq, D22, D2_Sq, Z4, D4,            // square Lambda_t, semidirect
    D2_Tri, D23, D3, Z6, D6, Z3, D32,     // triangular Lambda_t, semidirect
    Trivial,                              // pure translations
    D1_Vertex, D14_Vertex,                // glide rows, A c + c = 0
    D1_Shift, D14_Shift                   // glide rows, A c + c = l_0
};

inline const std::vector<FineRow>& all_fine_rows() {
    static const std::vector<FineRow> rows = {
        FineRow::Z2_Sq, FineRow::D22, FineRow::D2_Sq, FineRow::Z4, FineRow::D4,
        FineRow::D2_Tri, FineRow::D23, FineRow::D3, FineRow::Z6, FineRow::D6,
        FineRow::Z3, FineRow::D32, FineRow::Trivial,
        FineRow::D1_Vertex, FineRow::D14_Vertex, FineRow::D1_Shift, FineRow::D14_Shift};
    return rows;
}

enum class GlideType { None, VertexGlide, ShiftGlide };

inline std::string to_string(GlideType g) {
    switch (g) {
        case GlideType::None: return "None";
        case GlideType::VertexGlide: return "VertexGlide";
        case GlideType::ShiftGlide: return "ShiftGlide";
    }
    return "?";
}

namespace frames {

inline Mat2Z I() { return {1, 0, 0, 1}; }
inline Mat2Z neg() { return {-1, 0, 0, -1}; }
// square frame
inline Mat2Z a4() { return {0, -1, 1, 0}; }
inline Mat2Z b_sq() { return {1, 0, 0, -1}; }
inline Mat2Z s45() { return {0, 1, 1, 0}; }
// triangular frame (basis (1,0), (1/2, sqrt(3)/2))
inline Mat2Z a6() { return {0, -1, 1, 1}; }
inline Mat2Z a3() { return {-1, -1, 1, 0}; }
inline Mat2Z b_tri() { return {1, 1, 0, -1}; }
inline Mat2Z s30() { return {0, 1, 1, 0}; }

/// All isometries of the frame lattice (8 square / 12 triangular); these are
/// exactly the allowed basis changes between reduced frames.
inline std::vector<Mat2Z> isometries(FrameKind f) {
    std::vector<Mat2Z> rot;
    Mat2Z r = f == FrameKind::Square ? a4() : a6();
    Mat2Z p = I();
    do {
        rot.push_back(p);
        p = p * r;
    } while (!(p == I()));
    std::vector<Mat2Z> out = rot;
    Mat2Z refl = f == FrameKind::Square ? b_sq() : b_tri();
    for (const auto& m : rot) out.push_back(m * refl);
    return out;
}

inline Gram gram(FrameKind f) {
    return f == FrameKind::Square ? Gram::square() : Gram::triangular();
}

}  // namespace frames

struct FineRowInfo {
    FineRow row;
    const char* name;
    int family_row;               // row of the five-row classification table
    FrameKind frame;
    PointGroupLabel label;
    std::vector<Mat2Z> point_matrices;  // in frame coordinates
    GlideType glide;
    Vec2Q glide_translation;      // frame coordinates, for glide rows
};

inline const FineRowInfo& fine_row_info(FineRow r) {
    using namespace frames;
    auto L = [](const char* s) { return PointGroupLabel::parse(s); };
    static const std::vector<FineRowInfo> table = [&] {
        std::vector<FineRowInfo> t;
        auto closure = [](std::vector<Mat2Z> gens) {
            std::vector<Mat2Z> out{I()};
            for (;;) {
                bool grew = false;
                for (std::size_t i = 0; i < out.size(); ++i)
                    for (const auto& g : gens) {
                        Mat2Z m = out[i] * g;
                        if (std::find(out.begin(), out.end(), m) == out.end()) {
                            out.push_back(m);
                            grew = true;
                        }
                    }
                if (!grew) break;
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        auto F = FrameKind::Square;
        auto T = FrameKind::Triangular;
        Vec2Q zero{0, 0};
        t.push_back({FineRow::Z2_Sq, "Z2", 1, F, PointGroupLabel::cyclic(2), closure({neg()}), GlideType::None, zero});
        t.push_back({FineRow::D22, "D2,2", 1, F, PointGroupLabel::dihedral_dec(2, 2), closure({neg(), s45()}), GlideType::None, zero});
        t.push_back({FineRow::D2_Sq, "D2", 1, F, PointGroupLabel::dihedral_plain(2), closure({neg(), b_sq()}), GlideType::None, zero});
        t.push_back({FineRow::Z4, "Z4", 1, F, PointGroupLabel::cyclic(4), closure({a4()}), GlideType::None, zero});
        t.push_back({FineRow::D4, "D4", 1, F, PointGroupLabel::dihedral_plain(4), closure({a4(), b_sq()}), GlideType::None, zero});
        t.push_back({FineRow::D2_Tri, "D2~", 2, T, PointGroupLabel::dihedral_plain(2), closure({neg(), b_tri()}), GlideType::None, zero});
        t.push_back({FineRow::D23, "D2,3", 2, T, PointGroupLabel::dihedral_dec(2, 3), closure({neg(), s30()}), GlideType::None, zero});
        t.push_back({FineRow::D3, "D3", 2, T, PointGroupLabel::dihedral_plain(3), closure({a3(), b_tri()}), GlideType::None, zero});
        t.push_back({FineRow::Z6, "Z6", 2, T, PointGroupLabel::cyclic(6), closure({a6()}), GlideType::None, zero});
        t.push_back({FineRow::D6, "D6", 2, T, PointGroupLabel::dihedral_plain(6), closure({a6(), b_tri()}), GlideType::None, zero});
        t.push_back({FineRow::Z3, "Z3", 2, T, PointGroupLabel::cyclic(3), closure({a3()}), GlideType::None, zero});
        t.push_back({FineRow::D32, "D3,2", 2, T, PointGroupLabel::dihedral_dec(3, 2), closure({a3(), s30()}), GlideType::None, zero});
        t.push_back({FineRow::Trivial, "id", 3, F, PointGroupLabel::trivial(), {I()}, GlideType::None, zero});
        t.push_back({FineRow::D1_Vertex, "D1|c0", 4, F, PointGroupLabel::dihedral_plain(1), closure({b_sq()}), GlideType::VertexGlide, zero});
        t.push_back({FineRow::D14_Vertex, "D1,4|c0", 4, F, L("D1,4"), closure({s45()}), GlideType::VertexGlide, zero});
        t.push_back({FineRow::D1_Shift, "D1|l0", 5, F, PointGroupLabel::dihedral_plain(1), closure({b_sq()}), GlideType::ShiftGlide, Vec2Q{Rat(1, 2), Rat(0)}});
        t.push_back({FineRow::D14_Shift, "D1,4|l0", 5, F, L("D1,4"), closure({s45()}), GlideType::ShiftGlide, Vec2Q{Rat(1, 2), Rat(1, 2)}});
        return t;
    }();
    for (const auto& e : table)
        if (e.row == r) return e;
    throw std::logic_error("unknown fine row");
}

inline std::string fine_row_name(FineRow r) { return fine_row_info(r).name; }

/// Sublattice data: the canonical Lambda_t basis written in Lambda
/// coordinates (columns of `t_basis`). For the diagonal rows this is
/// diag(1/m1, 1/m2); non-diagonal stable sublattices keep an explicit basis
/// and are flagged as parameterized.
struct SublatticeData {
    Mat2Q t_basis;
    std::int64_t m1 = 1, m2 = 1;  // Smith invariants of Lambda_t / Lambda, m2 | m1
    bool diagonal = true;

    static SublatticeData diag(std::int64_t m1, std::int64_t m2) {
        SublatticeData s;
        s.m1 = std::max(m1, m2);
        s.m2 = std::min(m1, m2);
        s.t_basis = Mat2Q(Rat(1, s.m1), Rat(0), Rat(0), Rat(1, s.m2));
        return s;
    }

    static SublatticeData general(const Mat2Q& basis) {
        SublatticeData s;
        s.t_basis = basis;
        auto inv = basis.inverse().to_integer();
        if (!inv) throw invalid_params("Z^2 does not lie inside the sublattice frame");
        Smith sm = smith_form(*inv);
        s.m1 = sm.s2;
        s.m2 = sm.s1;
        s.diagonal = basis.b.is_zero() && basis.c.is_zero();
        return s;
    }

    friend bool operator==(const SublatticeData& a, const SublatticeData& b) {
        return a.t_basis == b.t_basis;
    }
};

struct CanonicalClass {
    FineRow row = FineRow::Trivial;
    SublatticeData sub;
    CanonicalClass() : sub(SublatticeData::diag(1, 1)) {}
    CanonicalClass(FineRow r, SublatticeData s) : row(r), sub(std::move(s)) {}

    const FineRowInfo& info() const { return fine_row_info(row); }
    PointGroupLabel point_group() const { return info().label; }
    int family_row() const { return info().family_row; }
    FrameKind frame() const { return info().frame; }
    LatticeShape lambda_t_shape() const {
        return frame() == FrameKind::Square ? LatticeShape::Square : LatticeShape::Triangular;
    }
    GlideType glide() const { return info().glide; }

    std::string str() const {
        std::string s = info().name;
        s += " [" + std::string(frame() == FrameKind::Square ? "sq" : "tri") + "]";
        s += " (m1,m2)=(" + std::to_string(sub.m1) + "," + std::to_string(sub.m2) + ")";
        if (!sub.diagonal) s += " basis=" + sub.t_basis.col(0).str() + "," + sub.t_basis.col(1).str();
        return s;
    }

    friend bool operator==(const CanonicalClass& a, const CanonicalClass& b) {
        return a.row == b.row && a.sub == b.sub;
    }
};

struct Conjugator {
    Mat2Q linear;     // unimodular over Z when both sides are lattice presentations
    Vec2Q translation;

    static Conjugator identity() { return {Mat2Q{}, Vec2Q{0, 0}}; }
    bool is_identity() const {
        return linear == Mat2Q{} && translation.mod1().is_zero();
    }
};

/// Frame-to-lattice coordinate change of a canonical class: columns of the
/// returned matrix are the canonical Lambda_t basis vectors.
inline Mat2Q frame_to_lattice(const CanonicalClass& cc) { return cc.sub.t_basis; }

/// Canonical Gram of the class: the pullback of the frame metric, scaled to
/// primitive integer entries.
inline Gram canonical_gram(const CanonicalClass& cc) {
    Mat2Q Tinv = cc.sub.t_basis.inverse();
    return frames::gram(cc.frame()).pullback(Tinv).primitive();
}

/// Builds the canonical group of a row: translations Lambda_t/Lambda plus
/// the point-group matrices, plus the glide generator for the D_1 rows.
inline FiniteTorusGroup canonical_group(const CanonicalClass& cc, std::size_t cap = 4096) {
    const FineRowInfo& info = cc.info();
    Mat2Q T = cc.sub.t_basis;
    Mat2Q Tinv = T.inverse();
    Gram g = canonical_gram(cc);
    std::vector<AffineTorusMap> gens;
    gens.push_back(AffineTorusMap::translation_by(T.col(0)));
    gens.push_back(AffineTorusMap::translation_by(T.col(1)));
    for (const auto& mf : info.point_matrices) {
        Mat2Q mq = T * Mat2Q(mf) * Tinv;
        auto mi = mq.to_integer();
        if (!mi)
            throw invalid_params("sublattice is not preserved by the point group of row " +
                                 std::string(info.name));
        if (info.glide == GlideType::None) {
            gens.emplace_back(*mi, Vec2Q{0, 0});
        } else if (mf.det() == -1) {
            gens.emplace_back(*mi, T.apply(info.glide_translation));
        }
    }
    return close_group(g, gens, cap);
}

}  // namespace torsym

#pragma once

// Point-group labels Z_n, D_n, D_{n,l} for finite subgroups of the isometry
// group of the square or triangular lattice frame.
//
// Convention: the decorated generator of D_{n,l} is the reflection whose
// axis makes angle pi/(n l) with the positive x-axis of the canonical frame;
// axes are always along exact lattice directions (multiples of 45 or 30
// degrees), so the angle is represented as a rational multiple r of pi with
// r in (-1/2, 1/2], and l = 1/(n r). An axis at angle 0 means the group
// contains the standard reflection b and gets the undecorated name D_n.
//
// Edge-isotropy labels are taken with respect to the axis parallel to the
// edge when the group contains that reflection; this reproduces the signed
// decorations of the isotropy tables (e.g. D_{2,3/2} vs D_{2,-3/2}).

#include <optional>
#include <string>
#include <vector>

#include "torsym/errors.hpp"
#include "torsym/linalg.hpp"

namespace torsym {

enum class FrameKind { Square, Triangular };

struct PointGroupLabel {
    int n = 1;               // rotation order
    bool dihedral = false;   // contains reflections
    std::optional<Rat> l;    // decoration, absent for the undecorated D_n

    static PointGroupLabel trivial() { return {}; }
    static PointGroupLabel cyclic(int n) { return {n, false, std::nullopt}; }
    static PointGroupLabel dihedral_plain(int n) { return {n, true, std::nullopt}; }
    static PointGroupLabel dihedral_dec(int n, Rat l) { return {n, true, l}; }

    bool is_trivial() const { return n == 1 && !dihedral; }
    int order() const { return dihedral ? 2 * n : n; }

    friend bool operator==(const PointGroupLabel& a, const PointGroupLabel& b) {
        return a.n == b.n && a.dihedral == b.dihedral && a.l == b.l;
    }
    friend bool operator!=(const PointGroupLabel& a, const PointGroupLabel& b) {
        return !(a == b);
    }

    std::string str() const {
        if (!dihedral) return n == 1 ? "id" : "Z" + std::to_string(n);
        std::string s = "D" + std::to_string(n);
        if (l) s += "," + l->str();
        return s;
    }

    static PointGroupLabel parse(std::string_view s) {
        if (s == "id") return trivial();
        if (s.size() < 2) throw parse_error("bad point group label '" + std::string(s) + "'");
        char kind = s[0];
        auto comma = s.find(',');
        int n = std::stoi(std::string(s.substr(1, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - 1)));
        if (kind == 'Z') return cyclic(n);
        if (kind == 'D') {
            if (comma == std::string_view::npos) return dihedral_plain(n);
            return dihedral_dec(n, Rat::parse(s.substr(comma + 1)));
        }
        throw parse_error("bad point group label '" + std::string(s) + "'");
    }
};

namespace detail {

/// Axis direction of a frame isometry reflection as a rational multiple of
/// pi in (-1/2, 1/2].
inline Rat axis_angle(const Mat2Z& refl, FrameKind frame) {
    // +1 eigenvector of the reflection
    std::int64_t vx = refl.b, vy = 1 - refl.a;
    if (vx == 0 && vy == 0) { vx = 1 - refl.d; vy = refl.c; }
    if (vx == 0 && vy == 0) { vx = 1; vy = 0; }  // refl == I cannot happen for det -1
    std::int64_t g = std::gcd(std::abs(vx), std::abs(vy));
    vx /= g; vy /= g;
    if (vx < 0 || (vx == 0 && vy < 0)) { vx = -vx; vy = -vy; }
    if (frame == FrameKind::Square) {
        if (vx == 1 && vy == 0) return Rat(0);
        if (vx == 1 && vy == 1) return Rat(1, 4);
        if (vx == 0 && vy == 1) return Rat(1, 2);
        if (vx == 1 && vy == -1) return Rat(-1, 4);
    } else {
        if (vx == 1 && vy == 0) return Rat(0);
        if (vx == 1 && vy == 1) return Rat(1, 6);
        if (vx == 0 && vy == 1) return Rat(1, 3);
        if (vx == 1 && vy == -2) return Rat(1, 2);   // -(−1,2)
        if (vx == 1 && vy == -1) return Rat(-1, 3);  // -(−1,1)
        if (vx == 2 && vy == -1) return Rat(-1, 6);  // -(−2,1)
    }
    throw unsupported_group("reflection axis (" + std::to_string(vx) + "," + std::to_string(vy) +
                            ") is not a frame isometry axis");
}

inline int element_order(const Mat2Z& m) {
    Mat2Z p = m;
    int k = 1;
    while (!(p == Mat2Z::identity())) {
        p = p * m;
        if (++k > 12) throw unsupported_group("matrix of order > 12");
    }
    return k;
}

}  // namespace detail

/// Labels a finite frame-isometry matrix group. `edge_hint`, when given, is
/// a direction vector; if the group reflects across an axis parallel to it,
/// that axis names the decoration (the convention of the edge tables).
inline PointGroupLabel label_matrix_group(const std::vector<Mat2Z>& matrices, FrameKind frame,
                                          std::optional<Vec2Q> edge_hint = std::nullopt) {
    int n = 1;
    std::vector<Mat2Z> reflections;
    for (const auto& m : matrices) {
        if (m.det() == 1) n = std::max(n, detail::element_order(m));
        else reflections.push_back(m);
    }
    if (reflections.empty()) return n == 1 ? PointGroupLabel::trivial() : PointGroupLabel::cyclic(n);

    std::vector<Rat> axes;
    for (const auto& s : reflections) axes.push_back(detail::axis_angle(s, frame));

    if (edge_hint && !edge_hint->is_zero()) {
        for (std::size_t i = 0; i < reflections.size(); ++i) {
            const Mat2Z& s = reflections[i];
            std::int64_t vx = s.b, vy = 1 - s.a;
            if (vx == 0 && vy == 0) { vx = 1 - s.d; vy = s.c; }
            if ((Rat(vx) * edge_hint->y - Rat(vy) * edge_hint->x).is_zero()) {
                if (axes[i].is_zero()) return PointGroupLabel::dihedral_plain(n);
                return PointGroupLabel::dihedral_dec(n, Rat(1) / (Rat(n) * axes[i]));
            }
        }
    }
    for (const Rat& r : axes)
        if (r.is_zero()) return PointGroupLabel::dihedral_plain(n);
    // smallest positive axis angle fixes the decoration
    std::optional<Rat> best;
    for (const Rat& r : axes)
        if (r.sign() > 0 && (!best || r < *best)) best = r;
    if (!best) {
        for (const Rat& r : axes)
            if (!best || r > *best) best = r;  // single negative axis (n == 1)
    }
    return PointGroupLabel::dihedral_dec(n, Rat(1) / (Rat(n) * *best));
}

}  // namespace torsym

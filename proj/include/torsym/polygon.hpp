#pragma once

// Exact polygon geometry in lattice coordinates. Vertices are rational and
// stored in clockwise order (the labeling convention used throughout for
// fundamental domains). Every domain occurring here is convex, so the
// interior-intersection test is exact Sutherland-Hodgman clipping.
//
// Areas are exposed as ratios to the unit-cell area. In lattice coordinates
// the metric factor sqrt(det g) cancels from every such ratio, so the
// shoelace value is already the exact answer and stays rational.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "torsym/linalg.hpp"

namespace torsym {

class Polygon {
public:
    Polygon() = default;

    /// Accepts a convex vertex loop in either orientation, drops collinear
    /// vertices and normalizes to clockwise keeping the first vertex first.
    explicit Polygon(std::vector<Vec2Q> vs) {
        vs = drop_collinear(std::move(vs));
        if (vs.size() < 3) {
            vertices_ = std::move(vs);  // degenerate, zero area
            return;
        }
        int orient = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const Vec2Q& a = vs[i];
            const Vec2Q& b = vs[(i + 1) % vs.size()];
            const Vec2Q& c = vs[(i + 2) % vs.size()];
            int s = cross(b - a, c - b).sign();
            if (s == 0) continue;
            if (orient == 0) orient = s;
            else if (orient != s) throw std::domain_error("polygon is not convex");
        }
        if (orient > 0) std::reverse(vs.begin() + 1, vs.end());  // flip to clockwise
        vertices_ = std::move(vs);
    }

    const std::vector<Vec2Q>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool degenerate() const { return vertices_.size() < 3; }

    Vec2Q vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    std::pair<Vec2Q, Vec2Q> edge(std::size_t i) const {
        return {vertex(i), vertex(i + 1)};
    }
    Vec2Q edge_barycenter(std::size_t i) const {
        auto [a, b] = edge(i);
        return Rat(1, 2) * (a + b);
    }
    Vec2Q barycenter() const {
        Vec2Q s{0, 0};
        for (const auto& v : vertices_) s = s + v;
        return Rat(1, (std::int64_t)vertices_.size()) * s;
    }

    /// |shoelace| area in lattice coordinates.
    Rat lattice_area() const {
        if (degenerate()) return Rat(0);
        Rat s(0);
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const Vec2Q& a = vertices_[i];
            const Vec2Q& b = vertices_[(i + 1) % vertices_.size()];
            s += cross(a, b);
        }
        return abs(s) * Rat(1, 2);
    }

    Polygon translated(const Vec2Q& t) const {
        std::vector<Vec2Q> vs;
        vs.reserve(vertices_.size());
        for (const auto& v : vertices_) vs.push_back(v + t);
        Polygon p;
        p.vertices_ = std::move(vs);
        return p;
    }

    Polygon transformed(const Mat2Q& m) const {
        std::vector<Vec2Q> vs;
        vs.reserve(vertices_.size());
        for (const auto& v : vertices_) vs.push_back(m.apply(v));
        return Polygon(std::move(vs));  // renormalizes orientation
    }

    /// -1 outside, 0 on boundary, +1 strictly inside (convex, clockwise).
    int side(const Vec2Q& p) const {
        if (degenerate()) return -1;
        bool boundary = false;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            auto [a, b] = edge(i);
            int s = cross(b - a, p - a).sign();
            if (s > 0) return -1;  // left of a clockwise edge: outside
            if (s == 0) {
                // must also lie within the edge's span to be on the boundary
                Rat lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
                Rat lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
                if (p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y) boundary = true;
                else return -1;
            }
        }
        return boundary ? 0 : 1;
    }

    /// True if the two vertex loops agree up to rotation (same orientation).
    bool same_cycle(const Polygon& o) const {
        if (vertices_.size() != o.vertices_.size()) return false;
        std::size_t n = vertices_.size();
        for (std::size_t shift = 0; shift < n; ++shift) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = vertices_[i] == o.vertices_[(i + shift) % n];
            if (ok) return true;
        }
        return false;
    }

private:
    static std::vector<Vec2Q> drop_collinear(std::vector<Vec2Q> vs) {
        // remove exact duplicates first
        std::vector<Vec2Q> t;
        for (const auto& v : vs)
            if (t.empty() || !(t.back() == v)) t.push_back(v);
        while (t.size() > 1 && t.front() == t.back()) t.pop_back();
        if (t.size() < 3) return t;
        std::vector<Vec2Q> out;
        std::size_t n = t.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2Q& prev = t[(i + n - 1) % n];
            const Vec2Q& cur = t[i];
            const Vec2Q& next = t[(i + 1) % n];
            if (cross(cur - prev, next - cur).sign() != 0) out.push_back(cur);
        }
        return out;
    }

    std::vector<Vec2Q> vertices_;
};

/// Metric area as a ratio to the unit-cell area; the Gram form cancels, the
/// parameter is kept to assert positive definiteness at the call site.
inline Rat polygon_area(const Polygon& p, const Gram& g) {
    (void)g;
    return p.lattice_area();
}

/// Clips convex `a` by the half planes of convex clockwise `b`.
inline Polygon clip_convex(const Polygon& a, const Polygon& b) {
    if (a.degenerate() || b.degenerate()) return Polygon{};
    std::vector<Vec2Q> poly = a.vertices();
    for (std::size_t i = 0; i < b.size() && !poly.empty(); ++i) {
        auto [p0, p1] = b.edge(i);
        Vec2Q e = p1 - p0;
        std::vector<Vec2Q> next;
        std::size_t n = poly.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2Q& cur = poly[j];
            const Vec2Q& nxt = poly[(j + 1) % n];
            Rat sc = cross(e, cur - p0);
            Rat sn = cross(e, nxt - p0);
            bool cin = sc <= Rat(0);  // inside = right of clockwise edge
            bool nin = sn <= Rat(0);
            if (cin) next.push_back(cur);
            if (cin != nin) {
                Rat t = sc / (sc - sn);
                next.push_back(cur + t * (nxt - cur));
            }
        }
        poly = std::move(next);
    }
    if (poly.size() < 3) return Polygon{};
    Polygon r;
    // the clip result of convex inputs is convex; reuse constructor checks
    return Polygon(std::move(poly));
}

inline bool polygons_interior_disjoint(const Polygon& a, const Polygon& b) {
    return clip_convex(a, b).lattice_area().is_zero();
}

/// True if p lies on the closed segment [a, b].
inline bool on_segment(const Vec2Q& p, const Vec2Q& a, const Vec2Q& b) {
    if (cross(b - a, p - a).sign() != 0) return false;
    Rat lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
    Rat lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
    return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
}

}  // namespace torsym

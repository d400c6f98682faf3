#pragma once

// Exact 2x2 linear algebra in lattice coordinates: rational vectors,
// integer/rational matrices, positive definite Gram forms with Gauss
// reduction, and Smith normal form for 2x2 integer matrices.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsym/rational.hpp"

namespace torsym {

struct Vec2Q {
    Rat x, y;

    Vec2Q() = default;
    Vec2Q(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    friend Vec2Q operator+(const Vec2Q& a, const Vec2Q& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2Q operator-(const Vec2Q& a, const Vec2Q& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2Q operator*(const Rat& s, const Vec2Q& v) { return {s * v.x, s * v.y}; }
    Vec2Q operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2Q& a, const Vec2Q& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2Q& a, const Vec2Q& b) { return !(a == b); }
    friend bool operator<(const Vec2Q& a, const Vec2Q& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    Vec2Q mod1() const { return {x.mod1(), y.mod1()}; }
    bool is_integral() const { return x.is_integer() && y.is_integer(); }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Rat cross(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }

/// 2x2 integer matrix, column-major semantics: columns are images of e1, e2.
struct Mat2Z {
    std::int64_t a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]

    static Mat2Z identity() { return {}; }

    std::int64_t det() const { return a * d - b * c; }

    friend Mat2Z operator*(const Mat2Z& m, const Mat2Z& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    Vec2Q apply(const Vec2Q& v) const {
        return {Rat(a) * v.x + Rat(b) * v.y, Rat(c) * v.x + Rat(d) * v.y};
    }
    Mat2Z transpose() const { return {a, c, b, d}; }

    /// Inverse, defined only for det = +-1.
    Mat2Z inverse_unimodular() const {
        std::int64_t dt = det();
        if (dt != 1 && dt != -1) throw std::domain_error("matrix is not unimodular");
        return {d * dt, -b * dt, -c * dt, a * dt};
    }

    friend bool operator==(const Mat2Z& m, const Mat2Z& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator!=(const Mat2Z& m, const Mat2Z& n) { return !(m == n); }
    friend bool operator<(const Mat2Z& m, const Mat2Z& n) {
        if (m.a != n.a) return m.a < n.a;
        if (m.b != n.b) return m.b < n.b;
        if (m.c != n.c) return m.c < n.c;
        return m.d < n.d;
    }

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) +
               "," + std::to_string(d) + "]]";
    }
};

inline Mat2Z operator-(const Mat2Z& m) { return {-m.a, -m.b, -m.c, -m.d}; }

struct Mat2Q {
    Rat a, b, c, d;  // [[a,b],[c,d]]

    Mat2Q() : a(1), b(0), c(0), d(1) {}
    Mat2Q(Rat pa, Rat pb, Rat pc, Rat pd)
        : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)) {}
    explicit Mat2Q(const Mat2Z& m) : a(m.a), b(m.b), c(m.c), d(m.d) {}

    static Mat2Q from_columns(const Vec2Q& u, const Vec2Q& v) { return {u.x, v.x, u.y, v.y}; }
    Vec2Q col(int i) const { return i == 0 ? Vec2Q{a, c} : Vec2Q{b, d}; }

    Rat det() const { return a * d - b * c; }

    friend Mat2Q operator*(const Mat2Q& m, const Mat2Q& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    Vec2Q apply(const Vec2Q& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2Q transpose() const { return {a, c, b, d}; }

    Mat2Q inverse() const {
        Rat dt = det();
        if (dt.is_zero()) throw std::domain_error("singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    std::optional<Mat2Z> to_integer() const {
        if (!a.is_integer() || !b.is_integer() || !c.is_integer() || !d.is_integer())
            return std::nullopt;
        return Mat2Z{a.num(), b.num(), c.num(), d.num()};
    }

    friend bool operator==(const Mat2Q& m, const Mat2Q& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

/// Positive definite symmetric form [[a,b],[b,d]] of inner products of the
/// lattice basis; carries the metric so that all geometry stays rational.
struct Gram {
    Rat a, b, d;

    Gram() : a(1), b(0), d(1) {}
    Gram(Rat pa, Rat pb, Rat pd) : a(std::move(pa)), b(std::move(pb)), d(std::move(pd)) {
        if (!(a > Rat(0)) || !(a * d - b * b > Rat(0)))
            throw std::domain_error("Gram form is not positive definite");
    }

    static Gram square() { return {1, 0, 1}; }
    /// Triangular-lattice metric, primitive integer scaling of [[1,1/2],[1/2,1]].
    static Gram triangular() { return {2, 1, 2}; }

    Rat det() const { return a * d - b * b; }

    /// <u, v> in this metric.
    Rat inner(const Vec2Q& u, const Vec2Q& v) const {
        return u.x * (a * v.x + b * v.y) + u.y * (b * v.x + d * v.y);
    }
    Rat norm2(const Vec2Q& u) const { return inner(u, u); }

    /// Pullback U^T g U for a rational basis change U.
    Gram pullback(const Mat2Q& u) const {
        Mat2Q g{a, b, b, d};
        Mat2Q r = u.transpose() * g * u;
        return {r.a, r.b, r.d};
    }
    Gram pullback(const Mat2Z& u) const { return pullback(Mat2Q(u)); }

    /// Scales so entries are coprime integers; the conformal class is unchanged.
    Gram primitive() const {
        std::int64_t L = a.den();
        L = std::lcm(L, b.den());
        L = std::lcm(L, d.den());
        Rat s(L);
        std::int64_t g = std::gcd(std::gcd(std::abs((a * s).num()), std::abs((b * s).num())),
                                  std::abs((d * s).num()));
        if (g == 0) g = 1;
        Rat t = s / Rat(g);
        return {a * t, b * t, d * t};
    }

    friend bool operator==(const Gram& x, const Gram& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
    friend bool operator!=(const Gram& x, const Gram& y) { return !(x == y); }

    bool proportional(const Gram& o) const {
        return a * o.b == b * o.a && a * o.d == d * o.a && b * o.d == d * o.b;
    }

    std::string str() const { return "[[" + a.str() + "," + b.str() + "],[" + b.str() + "," + d.str() + "]]"; }
};

enum class LatticeShape { Square, Triangular, Rectangular, Rhombic, Oblique };

inline std::string to_string(LatticeShape s) {
    switch (s) {
        case LatticeShape::Square: return "Square";
        case LatticeShape::Triangular: return "Triangular";
        case LatticeShape::Rectangular: return "Rectangular";
        case LatticeShape::Rhombic: return "Rhombic";
        case LatticeShape::Oblique: return "Oblique";
    }
    return "?";
}

/// Gauss reduction of a binary quadratic form: returns the reduced form g'
/// with 0 <= 2b' <= a' <= d' and the unimodular U with U^T g U = g'.
inline std::pair<Gram, Mat2Z> gauss_reduce(const Gram& g) {
    Rat a = g.a, b = g.b, d = g.d;
    Mat2Z u = Mat2Z::identity();
    // Swap / translate until reduced; terminates because a+d strictly drops.
    for (;;) {
        if (d < a) {
            // (e1,e2) -> (e2,-e1)
            std::swap(a, d);
            b = -b;
            u = u * Mat2Z{0, -1, 1, 0};
            continue;
        }
        // shift e2 -> e2 - m e1 so that b lands in (-a/2, a/2]
        Rat q = (b / a) + Rat(1, 2);
        std::int64_t m = q.is_integer() ? q.num() - 1 : q.floor();
        if (m != 0) {
            // new form: b -= m a, d += m^2 a - 2 m b
            d = d - Rat(2 * m) * b + Rat(m) * Rat(m) * a;
            b = b - Rat(m) * a;
            u = u * Mat2Z{1, -m, 0, 1};
            continue;
        }
        if (b.sign() < 0) {
            b = -b;
            u = u * Mat2Z{1, 0, 0, -1};
            continue;
        }
        break;
    }
    return {Gram{a, b, d}, u};
}

inline LatticeShape lattice_shape(const Gram& g) {
    auto [r, u] = gauss_reduce(g);
    (void)u;
    if (r.b.is_zero()) return r.a == r.d ? LatticeShape::Square : LatticeShape::Rectangular;
    if (Rat(2) * r.b == r.a && r.a == r.d) return LatticeShape::Triangular;
    if (r.a == r.d) return LatticeShape::Rhombic;
    return LatticeShape::Oblique;
}

/// Smith normal form of a 2x2 integer matrix: U*M*V = diag(s1,s2) with
/// U, V unimodular and s1 | s2 (s1, s2 >= 0).
struct Smith {
    Mat2Z u, v;
    std::int64_t s1 = 0, s2 = 0;
};

inline Smith smith_form(Mat2Z m) {
    Mat2Z u = Mat2Z::identity(), v = Mat2Z::identity();
    auto row_swap = [&] { std::swap(m.a, m.c); std::swap(m.b, m.d); u = Mat2Z{0, 1, 1, 0} * u; };
    auto col_swap = [&] { std::swap(m.a, m.b); std::swap(m.c, m.d); v = v * Mat2Z{0, 1, 1, 0}; };
    auto row_op = [&](std::int64_t k) {  // R2 -= k R1
        m.c -= k * m.a; m.d -= k * m.b;
        u = Mat2Z{1, 0, -k, 1} * u;
    };
    auto col_op = [&](std::int64_t k) {  // C2 -= k C1
        m.b -= k * m.a; m.d -= k * m.c;
        v = v * Mat2Z{1, -k, 0, 1};
    };
    for (;;) {
        if (m.a == 0) {
            if (m.b != 0) col_swap();
            else if (m.c != 0) row_swap();
            else { std::swap(m.a, m.d); u = Mat2Z{0, 1, 1, 0} * u; v = v * Mat2Z{0, 1, 1, 0}; }
            if (m.a == 0 && m.b == 0 && m.c == 0 && m.d == 0) break;
            if (m.a == 0) continue;
        }
        if (m.c % m.a != 0) { row_op(m.c / m.a); row_swap(); continue; }
        if (m.b % m.a != 0) { col_op(m.b / m.a); col_swap(); continue; }
        row_op(m.c / m.a);
        col_op(m.b / m.a);
        if (m.d % m.a != 0) {
            // fold: add row 2 to row 1 so the corner divides everything
            m.a += m.c; m.b += m.d;
            u = Mat2Z{1, 1, 0, 1} * u;
            continue;
        }
        break;
    }
    if (m.a < 0) { m.a = -m.a; m.b = -m.b; u = Mat2Z{-1, 0, 0, 1} * u; }
    if (m.d < 0) { m.d = -m.d; v = v * Mat2Z{1, 0, 0, -1}; }
    Smith s;
    s.u = u;
    s.v = v;
    s.s1 = m.a;
    s.s2 = m.d;
    return s;
}

/// Sublattice/overlattice of Z^2 presented by a rational basis matrix
/// (columns generate it together with nothing else).
struct Lattice2 {
    Mat2Q basis;  // columns

    /// Lattice generated by Z^2 and the given extra rational vectors.
    static Lattice2 spanned_with_unit(const std::vector<Vec2Q>& extra) {
        // common denominator D: work inside (1/D) Z^2 and column-reduce
        std::int64_t D = 1;
        for (const auto& v : extra) D = std::lcm(D, std::lcm(v.x.den(), v.y.den()));
        std::vector<std::array<std::int64_t, 2>> gens = {{D, 0}, {0, D}};
        for (const auto& v : extra)
            gens.push_back({(v.x * Rat(D)).num(), (v.y * Rat(D)).num()});

        // v1 = (x1,y1) with x1 = gcd of all x parts; the leftovers are pure-y.
        std::int64_t x1 = 0, y1 = 0, y2 = 0;
        for (auto [gx, gy] : gens) {
            if (gx == 0) {
                y2 = std::gcd(y2, std::abs(gy));
                continue;
            }
            if (x1 == 0) {
                if (gx < 0) { gx = -gx; gy = -gy; }
                x1 = gx;
                y1 = gy;
                continue;
            }
            // extended gcd on x-parts: g = s*x1 + t*gx
            std::int64_t A = x1, B = gx, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (B != 0) {
                std::int64_t q = A / B, tmp;
                tmp = A - q * B; A = B; B = tmp;
                tmp = s0 - q * s1; s0 = s1; s1 = tmp;
                tmp = t0 - q * t1; t0 = t1; t1 = tmp;
            }
            if (A < 0) { A = -A; s0 = -s0; t0 = -t0; }
            std::int64_t ny = s0 * y1 + t0 * gy;
            std::int64_t leftover = (x1 / A) * gy - (gx / A) * y1;  // kills the x part
            x1 = A;
            y1 = ny;
            y2 = std::gcd(y2, std::abs(leftover));
        }
        if (y2 != 0) y1 = ((y1 % y2) + y2) % y2;
        Lattice2 L;
        L.basis = Mat2Q(Rat(x1, D), Rat(0), Rat(y1, D), Rat(y2, D));
        return L;
    }

    Rat covolume() const { return abs(basis.det()); }

    bool contains(const Vec2Q& v) const {
        Vec2Q c = basis.inverse().apply(v);
        return c.is_integral();
    }
};

}  // namespace torsym

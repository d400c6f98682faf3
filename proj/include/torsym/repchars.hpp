#pragma once

// Closed-form character theory for the point groups occurring as
// stabilizers: trivial, Z_n (n <= 6), D_n and D_{n,l} (n <= 6). Character
// values live in the ring of cyclotomic integers of conductor 12, stored
// exactly as integer vectors over the basis 1, z, z^2, z^3 with
// z = e^{i pi/6}, z^4 = z^2 - 1. Every occurring group has exponent
// dividing 12, so no other field is ever needed.
//
// Groups are realized as explicit matrix lists (frame coordinates of a
// canonical row); abstractly isomorphic but differently embedded
// stabilizers stay distinct, and restriction always works through element
// lists, never through abstract labels.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "torsym/errors.hpp"
#include "torsym/labels.hpp"
#include "torsym/linalg.hpp"

namespace torsym {

/// Cyclotomic integer of conductor 12.
struct Cyc12 {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};  // 1, z, z^2, z^3

    Cyc12() = default;
    Cyc12(std::int64_t n) { c[0] = n; }  // NOLINT: implicit by design

    /// z^k for any integer k.
    static Cyc12 zeta(int k) {
        k = ((k % 12) + 12) % 12;
        Cyc12 r;
        switch (k) {
            case 0: r.c = {1, 0, 0, 0}; break;
            case 1: r.c = {0, 1, 0, 0}; break;
            case 2: r.c = {0, 0, 1, 0}; break;
            case 3: r.c = {0, 0, 0, 1}; break;
            case 4: r.c = {-1, 0, 1, 0}; break;   // z^4 = z^2 - 1
            case 5: r.c = {0, -1, 0, 1}; break;   // z^5 = z^3 - z
            default: {
                Cyc12 m = zeta(k - 6);            // z^6 = -1
                for (auto& x : m.c) x = -x;
                r = m;
            }
        }
        return r;
    }

    friend Cyc12 operator+(const Cyc12& a, const Cyc12& b) {
        Cyc12 r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Cyc12 operator-(const Cyc12& a, const Cyc12& b) {
        Cyc12 r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Cyc12 operator*(const Cyc12& a, const Cyc12& b) {
        std::array<std::int64_t, 7> acc{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) acc[i + j] += a.c[i] * b.c[j];
        // reduce z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
        acc[0] -= acc[6];
        acc[3] += acc[5];
        acc[1] -= acc[5];
        acc[2] += acc[4];
        acc[0] -= acc[4];
        Cyc12 r;
        for (int i = 0; i < 4; ++i) r.c[i] = acc[i];
        return r;
    }
    Cyc12& operator+=(const Cyc12& o) { return *this = *this + o; }

    /// Complex conjugate, z -> z^-1.
    Cyc12 conj() const {
        Cyc12 r;
        r.c[0] = c[0] + c[2];
        r.c[1] = c[1];
        r.c[2] = -c[2];
        r.c[3] = -c[1] - c[3];
        return r;
    }

    bool is_integer() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
    std::int64_t integer_part() const { return c[0]; }

    friend bool operator==(const Cyc12& a, const Cyc12& b) { return a.c == b.c; }
    friend bool operator!=(const Cyc12& a, const Cyc12& b) { return !(a == b); }
};

/// Character table of a realized matrix group (cyclic or dihedral, order
/// dividing 12 in the rotation part).
struct IrrTable {
    std::vector<Mat2Z> elements;              // sorted
    std::vector<std::string> names;
    std::vector<int> dims;
    std::vector<std::vector<Cyc12>> chars;    // chars[k][element index]

    std::size_t order() const { return elements.size(); }
    std::size_t irr_count() const { return names.size(); }

    std::size_t index_of(const Mat2Z& m) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), m);
        if (it == elements.end() || !(*it == m))
            throw unsupported_group("element not in realized group");
        return (std::size_t)(it - elements.begin());
    }
};

namespace repdetail {

struct Decomp {
    Mat2Z gen = Mat2Z::identity();   // rotation generator, positive turn
    Mat2Z refl = Mat2Z::identity();  // chosen reflection (if any)
    int n = 1;
    bool dihedral = false;
    // per element: rotation exponent k and reflection flag e (g = gen^k refl^e)
    std::vector<std::pair<int, int>> words;
};

inline Decomp decompose_group(const std::vector<Mat2Z>& sorted_elems) {
    Decomp d;
    std::vector<Mat2Z> rots, refls;
    for (const auto& m : sorted_elems) (m.det() == 1 ? rots : refls).push_back(m);
    d.n = (int)rots.size();
    d.dihedral = !refls.empty();
    if (d.dihedral && refls.size() != rots.size())
        throw unsupported_group("not a cyclic or dihedral matrix group");
    // positive-turn generator of the rotation subgroup
    for (const auto& m : rots) {
        if (detail::element_order(m) != d.n) continue;
        std::int64_t turn = m.c != 0 ? m.c : m.b == 0 ? 0 : -m.b;
        if (d.n <= 2 || turn > 0) { d.gen = m; break; }
    }
    if (d.dihedral) d.refl = refls.front();
    // powers of the generator
    std::vector<Mat2Z> pow(d.n);
    Mat2Z p = Mat2Z::identity();
    for (int k = 0; k < d.n; ++k) { pow[k] = p; p = p * d.gen; }
    for (const auto& m : sorted_elems) {
        bool is_refl = m.det() == -1;
        Mat2Z base = is_refl ? m * d.refl.inverse_unimodular() : m;
        int k = -1;
        for (int i = 0; i < d.n; ++i)
            if (pow[i] == base) { k = i; break; }
        if (k < 0) throw unsupported_group("matrix group is not generated as expected");
        d.words.emplace_back(k, is_refl ? 1 : 0);
    }
    return d;
}

}  // namespace repdetail

/// Character table of the realized group; cyclic groups get the n linear
/// characters, dihedral groups the classical 1- and 2-dimensional ones.
inline IrrTable irr_table(std::vector<Mat2Z> matrices) {
    std::sort(matrices.begin(), matrices.end());
    matrices.erase(std::unique(matrices.begin(), matrices.end()), matrices.end());
    IrrTable t;
    t.elements = matrices;
    auto d = repdetail::decompose_group(t.elements);
    const int n = d.n;
    const int step = 12 / n;  // zeta_n = z^step
    std::size_t N = t.elements.size();
    auto add = [&](const std::string& name, int dim, std::vector<Cyc12> vals) {
        t.names.push_back(name);
        t.dims.push_back(dim);
        t.chars.push_back(std::move(vals));
    };
    if (!d.dihedral) {
        for (int j = 0; j < n; ++j) {
            std::vector<Cyc12> v(N);
            for (std::size_t i = 0; i < N; ++i) v[i] = Cyc12::zeta(step * j * d.words[i].first);
            add(n == 1 ? "triv" : "w" + std::to_string(j), 1, std::move(v));
        }
        return t;
    }
    // dihedral of order 2n
    std::vector<Cyc12> triv(N, Cyc12(1)), det(N);
    for (std::size_t i = 0; i < N; ++i) det[i] = Cyc12(d.words[i].second ? -1 : 1);
    add("triv", 1, triv);
    add("det", 1, det);
    if (n % 2 == 0) {
        std::vector<Cyc12> mu(N), mud(N);
        for (std::size_t i = 0; i < N; ++i) {
            auto [k, e] = d.words[i];
            mu[i] = Cyc12((k % 2) ? -1 : 1);
            mud[i] = Cyc12(((k + e) % 2) ? -1 : 1);
        }
        add("mu", 1, std::move(mu));
        add("mu'", 1, std::move(mud));
    }
    for (int j = 1; 2 * j < n; ++j) {
        std::vector<Cyc12> rho(N);
        for (std::size_t i = 0; i < N; ++i) {
            auto [k, e] = d.words[i];
            rho[i] = e ? Cyc12(0) : Cyc12::zeta(step * j * k) + Cyc12::zeta(-step * j * k);
        }
        add("rho" + std::to_string(j), 2, std::move(rho));
    }
    std::int64_t dimsq = 0;
    for (int dim : t.dims) dimsq += (std::int64_t)dim * dim;
    if (dimsq != (std::int64_t)N) throw std::logic_error("character table is incomplete");
    return t;
}

/// Multiplicity vector of a representation over the irreducibles of a table.
struct RepMult {
    std::vector<std::int64_t> mult;

    std::int64_t dim(const IrrTable& t) const {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < mult.size(); ++k) s += mult[k] * t.dims[k];
        return s;
    }
    friend bool operator==(const RepMult& a, const RepMult& b) { return a.mult == b.mult; }
    friend bool operator<(const RepMult& a, const RepMult& b) { return a.mult < b.mult; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(mult[i]);
        }
        return s + ")";
    }
};

inline std::vector<Cyc12> character_of(const IrrTable& t, const RepMult& r) {
    std::vector<Cyc12> v(t.order());
    for (std::size_t k = 0; k < r.mult.size(); ++k)
        for (std::size_t i = 0; i < t.order(); ++i) {
            Cyc12 add = t.chars[k][i];
            for (std::int64_t m = 0; m < r.mult[k]; ++m) v[i] += add;
        }
    return v;
}

/// Exact inner-product decomposition; throws non_integral_multiplicity when
/// the class function is not the character of a representation.
inline RepMult decompose(const IrrTable& t, const std::vector<Cyc12>& chi) {
    if (chi.size() != t.order()) throw unsupported_group("character vector has wrong length");
    RepMult r;
    for (std::size_t k = 0; k < t.irr_count(); ++k) {
        Cyc12 s;
        for (std::size_t i = 0; i < t.order(); ++i) s += chi[i] * t.chars[k][i].conj();
        if (!s.is_integer() || s.integer_part() % (std::int64_t)t.order() != 0)
            throw non_integral_multiplicity("class function is not a character");
        std::int64_t m = s.integer_part() / (std::int64_t)t.order();
        if (m < 0) throw non_integral_multiplicity("virtual character with negative multiplicity");
        r.mult.push_back(m);
    }
    // the inner products determine the function; equality is automatic for
    // genuine characters, but reject anything outside the character ring
    std::vector<Cyc12> back = character_of(t, r);
    for (std::size_t i = 0; i < t.order(); ++i)
        if (!(back[i] == chi[i]))
            throw non_integral_multiplicity("class function is not a character");
    return r;
}

/// Element-level injection of one realized group into another.
struct Embedding {
    std::vector<std::size_t> map;  // sub element index -> sup element index

    /// Literal matrix-subset inclusion.
    static Embedding subgroup(const IrrTable& sub, const IrrTable& sup) {
        Embedding e;
        for (const auto& m : sub.elements) e.map.push_back(sup.index_of(m));
        return e;
    }

    /// Arbitrary index map, verified to be an injective homomorphism.
    static Embedding verified(const IrrTable& sub, const IrrTable& sup,
                              std::vector<std::size_t> map) {
        if (map.size() != sub.order()) throw not_a_homomorphism("map size mismatch");
        for (std::size_t i = 0; i < map.size(); ++i)
            for (std::size_t j = 0; j < map.size(); ++j) {
                if (i != j && map[i] == map[j]) throw not_a_homomorphism("map is not injective");
                Mat2Z lhs = sub.elements[i] * sub.elements[j];
                Mat2Z rhs = sup.elements[map[i]] * sup.elements[map[j]];
                if (!(sup.elements[map[sub.index_of(lhs)]] == rhs))
                    throw not_a_homomorphism("map does not respect composition");
            }
        Embedding e;
        e.map = std::move(map);
        return e;
    }
};

/// res^sup_sub W along an embedding: pull the character back and decompose.
inline RepMult restrict_along(const IrrTable& sub, const IrrTable& sup, const Embedding& e,
                              const RepMult& rep) {
    std::vector<Cyc12> chi = character_of(sup, rep);
    std::vector<Cyc12> res(sub.order());
    for (std::size_t i = 0; i < sub.order(); ++i) res[i] = chi[e.map[i]];
    return decompose(sub, res);
}

/// Restriction along the literal subgroup inclusion.
inline RepMult restrict_to(const IrrTable& sub, const IrrTable& sup, const RepMult& rep) {
    return restrict_along(sub, sup, Embedding::subgroup(sub, sup), rep);
}

/// ^g W: transports a source-group representation to the target group
/// dst = A src A^{-1} by k -> chi(A^{-1} k A).
inline RepMult conjugate_rep(const IrrTable& src, const IrrTable& dst, const RepMult& rep,
                             const Mat2Z& A) {
    Mat2Z Ainv = A.inverse_unimodular();
    std::vector<Cyc12> chi = character_of(src, rep);
    std::vector<Cyc12> out(dst.order());
    for (std::size_t i = 0; i < dst.order(); ++i) {
        Mat2Z pre = Ainv * dst.elements[i] * A;
        auto it = std::lower_bound(src.elements.begin(), src.elements.end(), pre);
        if (it == src.elements.end() || !(*it == pre))
            throw conjugation_mismatch("conjugator does not map target into source");
        out[i] = chi[(std::size_t)(it - src.elements.begin())];
    }
    return decompose(dst, out);
}

}  // namespace torsym

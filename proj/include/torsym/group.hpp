#pragma once

// Finite subgroups of Aff(R^2/Lambda) in lattice coordinates: closure from
// generators, the translation subgroup R_t with its enlarged lattice
// Lambda_t, the point group, orbits and stabilizers. Everything is an exact
// set computation; elements are kept sorted so equal groups compare equal.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "torsym/affine.hpp"
#include "torsym/errors.hpp"
#include "torsym/linalg.hpp"

namespace torsym {

class FiniteTorusGroup {
public:
    FiniteTorusGroup() : gram_(Gram::square()) { set_elements({AffineTorusMap::identity()}); }

    FiniteTorusGroup(Gram gram, std::vector<AffineTorusMap> elements) : gram_(std::move(gram)) {
        for (const auto& e : elements)
            if (!e.preserves(gram_))
                throw inconsistent_gram("element " + e.str() + " does not preserve the Gram form");
        set_elements(std::move(elements));
        verify_group();
    }

    /// For element sets that are groups by construction (homomorphism
    /// images, stabilizers): skips the quadratic closure verification.
    static FiniteTorusGroup trusted(Gram gram, std::vector<AffineTorusMap> elements) {
        FiniteTorusGroup g;
        g.gram_ = std::move(gram);
        g.set_elements(std::move(elements));
        return g;
    }

    const Gram& gram() const { return gram_; }
    const std::vector<AffineTorusMap>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const AffineTorusMap& g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }

    /// Pure translations R_t, as maps.
    const std::vector<AffineTorusMap>& translation_elements() const { return translations_; }
    std::size_t translation_order() const { return translations_.size(); }

    /// Lambda_t = preimage lattice of R_t; contains Z^2.
    const Lattice2& lambda_t() const { return lambda_t_; }

    /// Matrices occurring as linear parts (the point group R/R_t).
    const std::vector<Mat2Z>& point_matrices() const { return point_matrices_; }

    /// Smith-canonical quotient invariants (m1, m2), m2 | m1, with
    /// Lambda = <m1 l1, m2 l2> for a basis (l1, l2) of Lambda_t.
    std::pair<std::int64_t, std::int64_t> quotient_invariants() const {
        Mat2Q inv = lambda_t_.basis.inverse();  // Z^2 basis written over Lambda_t
        auto s = inv.to_integer();
        if (!s) throw std::logic_error("Z^2 is not inside Lambda_t");
        Smith sm = smith_form(*s);
        return {sm.s2, sm.s1};  // m2 | m1 chain, m1 largest
    }

    /// Subgroup fixing the torus point [x].
    FiniteTorusGroup stabilizer(const Vec2Q& x) const {
        Vec2Q p = x.mod1();
        std::vector<AffineTorusMap> fix;
        for (const auto& g : elements_)
            if (g.apply(p) == p) fix.push_back(g);
        return FiniteTorusGroup::trusted(gram_, std::move(fix));
    }

    /// Linear parts of the stabilizer: the isotropy group in the tangent
    /// space at [x], written in the ambient lattice frame.
    std::vector<Mat2Z> stabilizer_matrices(const Vec2Q& x) const {
        Vec2Q p = x.mod1();
        std::set<Mat2Z> ms;
        for (const auto& g : elements_)
            if (g.apply(p) == p) ms.insert(g.matrix);
        return {ms.begin(), ms.end()};
    }

    std::vector<Vec2Q> orbit(const Vec2Q& x) const {
        Vec2Q p = x.mod1();
        std::set<Vec2Q> out;
        for (const auto& g : elements_) out.insert(g.apply(p));
        return {out.begin(), out.end()};
    }

    /// Some group element mapping [x] to [y], if one exists.
    std::optional<AffineTorusMap> mapping_element(const Vec2Q& x, const Vec2Q& y) const {
        Vec2Q p = x.mod1(), q = y.mod1();
        for (const auto& g : elements_)
            if (g.apply(p) == q) return g;
        return std::nullopt;
    }

    friend bool operator==(const FiniteTorusGroup& a, const FiniteTorusGroup& b) {
        return a.elements_ == b.elements_;
    }

private:
    void set_elements(std::vector<AffineTorusMap> es) {
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        elements_ = std::move(es);
        translations_.clear();
        std::set<Mat2Z> ms;
        std::vector<Vec2Q> trans;
        for (const auto& g : elements_) {
            ms.insert(g.matrix);
            if (g.is_translation()) {
                translations_.push_back(g);
                trans.push_back(g.translation);
            }
        }
        point_matrices_.assign(ms.begin(), ms.end());
        lambda_t_ = Lattice2::spanned_with_unit(trans);
    }

    void verify_group() {
        if (!contains(AffineTorusMap::identity()))
            throw std::domain_error("group does not contain the identity");
        for (const auto& g : elements_)
            if (!contains(g.inverse()))
                throw std::domain_error("group not closed under inverse");
        for (const auto& g : elements_)
            for (const auto& h : elements_)
                if (!contains(g * h)) throw std::domain_error("group not closed under composition");
        // |R| = |R_t| * |R/R_t|
        if (elements_.size() != translations_.size() * point_matrices_.size())
            throw std::domain_error("broken exact sequence R_t -> R -> R/R_t");
    }

    Gram gram_;
    std::vector<AffineTorusMap> elements_;
    std::vector<AffineTorusMap> translations_;
    std::vector<Mat2Z> point_matrices_;
    Lattice2 lambda_t_;
};

/// Closure of the generators under composition mod Z^2. Throws cap_exceeded
/// when the closure grows past `cap` (an infinite or too-large group).
inline FiniteTorusGroup close_group(const Gram& gram, const std::vector<AffineTorusMap>& generators,
                                    std::size_t cap = 4096) {
    for (const auto& g : generators)
        if (!g.preserves(gram))
            throw inconsistent_gram("generator " + g.str() + " does not preserve the Gram form");
    std::set<AffineTorusMap> closed{AffineTorusMap::identity()};
    std::vector<AffineTorusMap> frontier{AffineTorusMap::identity()};
    while (!frontier.empty()) {
        std::vector<AffineTorusMap> next;
        for (const auto& f : frontier) {
            for (const auto& g : generators) {
                for (AffineTorusMap h : {g * f, g.inverse() * f}) {
                    if (closed.insert(h).second) {
                        if (closed.size() > cap)
                            throw cap_exceeded("group closure exceeded cap " + std::to_string(cap));
                        next.push_back(h);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return FiniteTorusGroup(gram, {closed.begin(), closed.end()});
}

/// Conjugate by the affine map x -> P x + q. P may rescale the lattice
/// (commensurable image); every conjugated matrix must stay integral or
/// not_lattice_map is thrown. Pure lattice rescalings may absorb
/// translations, as in the (m1,m2)-normalizing basis change.
inline FiniteTorusGroup conjugate_group(const FiniteTorusGroup& G, const Mat2Q& P, const Vec2Q& q) {
    if (P.det().is_zero()) throw not_lattice_map("conjugator is singular");
    Mat2Q Pinv = P.inverse();
    std::vector<AffineTorusMap> out;
    out.reserve(G.order());
    for (const auto& g : G.elements()) {
        Mat2Q mq = P * Mat2Q(g.matrix) * Pinv;
        auto mi = mq.to_integer();
        if (!mi)
            throw not_lattice_map("conjugated matrix " + g.matrix.str() + " is not integral");
        Vec2Q t = (P.apply(g.translation) + q - mi->apply(q)).mod1();
        out.emplace_back(*mi, t);
    }
    Gram g2 = G.gram().pullback(Pinv).primitive();
    // a coarsening P can collapse elements; the image is still a group
    return FiniteTorusGroup::trusted(g2, std::move(out));
}

inline FiniteTorusGroup conjugate_group(const FiniteTorusGroup& G, const AffineTorusMap& eta) {
    return conjugate_group(G, Mat2Q(eta.matrix), eta.translation);
}

}  // namespace torsym

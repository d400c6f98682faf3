#pragma once

// One element [A x + c] of Aff(R^2/Lambda) in lattice coordinates: a
// unimodular integer matrix together with a rational translation mod Z^2.

#include <string>

#include "torsym/linalg.hpp"

namespace torsym {

struct AffineTorusMap {
    Mat2Z matrix;
    Vec2Q translation;  // entries in [0,1)

    AffineTorusMap() = default;
    AffineTorusMap(Mat2Z m, Vec2Q t) : matrix(m), translation(t.mod1()) {
        if (matrix.det() != 1 && matrix.det() != -1)
            throw std::domain_error("affine torus map needs det +-1");
    }

    static AffineTorusMap identity() { return {}; }
    static AffineTorusMap translation_by(const Vec2Q& t) { return {Mat2Z::identity(), t}; }

    bool is_translation() const { return matrix == Mat2Z::identity(); }
    bool is_identity() const { return is_translation() && translation.is_zero(); }

    /// Composition g.h, i.e. first apply h.
    friend AffineTorusMap operator*(const AffineTorusMap& g, const AffineTorusMap& h) {
        return {g.matrix * h.matrix, (g.matrix.apply(h.translation) + g.translation).mod1()};
    }

    AffineTorusMap inverse() const {
        Mat2Z inv = matrix.inverse_unimodular();
        return {inv, (-inv.apply(translation)).mod1()};
    }

    /// Image of a torus point, reduced to [0,1)^2.
    Vec2Q apply(const Vec2Q& x) const { return (matrix.apply(x) + translation).mod1(); }

    /// Image of a plane point under the lift A x + c (no reduction).
    Vec2Q apply_plane(const Vec2Q& x) const { return matrix.apply(x) + translation; }

    /// A^T g A = g, the isometry condition for an attached Gram form.
    bool preserves(const Gram& g) const { return g.pullback(matrix) == g; }

    friend bool operator==(const AffineTorusMap& a, const AffineTorusMap& b) {
        return a.matrix == b.matrix && a.translation == b.translation;
    }
    friend bool operator!=(const AffineTorusMap& a, const AffineTorusMap& b) { return !(a == b); }
    friend bool operator<(const AffineTorusMap& a, const AffineTorusMap& b) {
        if (!(a.matrix == b.matrix)) return a.matrix < b.matrix;
        return a.translation < b.translation;
    }

    std::string str() const { return matrix.str() + "+" + translation.str(); }
};

}  // namespace torsym

#include <gtest/gtest.h>

#include "torsym/group.hpp"
#include "torsym/labels.hpp"

using namespace torsym;

namespace {

const Mat2Z kRot90{0, -1, 1, 0};
const Mat2Z kNeg{-1, 0, 0, -1};

AffineTorusMap tmap(Rat x, Rat y) { return AffineTorusMap::translation_by({x, y}); }

}  // namespace

TEST(AffineTorusMap, ComposeAndInvert) {
    AffineTorusMap r(kRot90, {Rat(0), Rat(0)});
    AffineTorusMap t = tmap(Rat(1, 2), Rat(1, 3));
    AffineTorusMap rt = r * t;
    EXPECT_EQ(rt.apply({Rat(1, 4), Rat(0)}), r.apply(t.apply({Rat(1, 4), Rat(0)})));
    EXPECT_TRUE((rt * rt.inverse()).is_identity());
    EXPECT_TRUE((rt.inverse() * rt).is_identity());
}

TEST(CloseGroup, HalfTranslation) {
    auto G = close_group(Gram::square(), {tmap(Rat(1, 2), Rat(0))});
    EXPECT_EQ(G.order(), 2u);
    EXPECT_EQ(G.translation_order(), 2u);
}

TEST(CloseGroup, Rot90) {
    auto G = close_group(Gram::square(), {AffineTorusMap(kRot90, {Rat(0), Rat(0)})});
    EXPECT_EQ(G.order(), 4u);
    EXPECT_EQ(G.point_matrices().size(), 4u);
    EXPECT_EQ(G.translation_order(), 1u);
}

TEST(CloseGroup, Rot90WithCenterTranslation) {
    // rot90 together with translation by (1/2,1/2): order 8 with |R_t| = 2
    auto G = close_group(Gram::square(), {AffineTorusMap(kRot90, {Rat(0), Rat(0)}),
                                          tmap(Rat(1, 2), Rat(1, 2))});
    EXPECT_EQ(G.order(), 8u);
    EXPECT_EQ(G.translation_order(), 2u);
    EXPECT_EQ(G.point_matrices().size(), 4u);
}

TEST(CloseGroup, CapExceeded) {
    EXPECT_THROW(close_group(Gram::square(), {tmap(Rat(1, 100), Rat(0))}, 50), cap_exceeded);
}

TEST(CloseGroup, NonIsometryRejected) {
    // shear does not preserve the square Gram
    EXPECT_THROW(close_group(Gram::square(), {AffineTorusMap(Mat2Z{1, 1, 0, 1}, {Rat(0), Rat(0)})}),
                 inconsistent_gram);
}

TEST(TranslationData, SmithInvariants) {
    auto trivial = close_group(Gram::square(), {});
    EXPECT_EQ(trivial.quotient_invariants(), (std::pair<std::int64_t, std::int64_t>{1, 1}));

    auto half = close_group(Gram::square(), {tmap(Rat(1, 2), Rat(0))});
    EXPECT_EQ(half.quotient_invariants(), (std::pair<std::int64_t, std::int64_t>{2, 1}));
    EXPECT_TRUE(half.lambda_t().contains({Rat(1, 2), Rat(0)}));
    EXPECT_EQ(half.lambda_t().covolume(), Rat(1, 2));

    auto quarter = close_group(Gram::square(), {tmap(Rat(1, 2), Rat(0)), tmap(Rat(0), Rat(1, 2))});
    EXPECT_EQ(quarter.translation_order(), 4u);
    EXPECT_EQ(quarter.quotient_invariants(), (std::pair<std::int64_t, std::int64_t>{2, 2}));
}

TEST(Stabilizer, RotationFixedPoints) {
    auto trivial = close_group(Gram::square(), {});
    EXPECT_EQ(trivial.stabilizer({Rat(1, 3), Rat(0)}).order(), 1u);

    auto C4 = close_group(Gram::square(), {AffineTorusMap(kRot90, {Rat(0), Rat(0)})});
    EXPECT_EQ(C4.stabilizer({Rat(0), Rat(0)}).order(), 4u);
    // rot90 fixes (1/2,1/2) mod Z^2
    EXPECT_EQ(C4.stabilizer({Rat(1, 2), Rat(1, 2)}).order(), 4u);
    EXPECT_EQ(C4.stabilizer({Rat(1, 2), Rat(0)}).order(), 2u);
    auto label = label_matrix_group(C4.stabilizer_matrices({Rat(0), Rat(0)}), FrameKind::Square);
    EXPECT_EQ(label.str(), "Z4");
}

TEST(Orbit, CountsMatchOrbitStabilizer) {
    auto C4 = close_group(Gram::square(), {AffineTorusMap(kRot90, {Rat(0), Rat(0)})});
    auto orb = C4.orbit({Rat(1, 2), Rat(0)});
    EXPECT_EQ(orb.size(), 2u);
    EXPECT_TRUE(std::find(orb.begin(), orb.end(), Vec2Q{Rat(0), Rat(1, 2)}) != orb.end());

    auto T2 = close_group(Gram::square(), {tmap(Rat(1, 2), Rat(0))});
    auto orb2 = T2.orbit({Rat(1, 4), Rat(0)});
    EXPECT_EQ(orb2.size(), 2u);
    EXPECT_TRUE(std::find(orb2.begin(), orb2.end(), Vec2Q{Rat(3, 4), Rat(0)}) != orb2.end());

    // orbit-stabilizer on a 1/6 grid
    for (std::int64_t i = 0; i < 6; ++i)
        for (std::int64_t j = 0; j < 6; ++j) {
            Vec2Q x{Rat(i, 6), Rat(j, 6)};
            EXPECT_EQ(C4.orbit(x).size() * C4.stabilizer(x).order(), C4.order());
        }
}

TEST(Stabilizer, ConjugationEquivariance) {
    auto C4 = close_group(Gram::square(), {AffineTorusMap(kRot90, {Rat(0), Rat(0)}),
                                           tmap(Rat(1, 2), Rat(1, 2))});
    Vec2Q x{Rat(1, 4), Rat(1, 6)};
    for (const auto& g : C4.elements()) {
        auto sx = C4.stabilizer(x);
        auto sgx = C4.stabilizer(g.apply(x));
        std::vector<AffineTorusMap> conj;
        for (const auto& h : sx.elements()) conj.push_back(g * h * g.inverse());
        std::sort(conj.begin(), conj.end());
        EXPECT_EQ(conj, sgx.elements());
    }
}

TEST(ConjugateGroup, IdentityAndTranslation) {
    auto C2 = close_group(Gram::square(), {AffineTorusMap(kNeg, {Rat(0), Rat(0)})});
    auto same = conjugate_group(C2, Mat2Q{}, {Rat(0), Rat(0)});
    EXPECT_TRUE(same == C2);
    // conjugating by a translation moves the rotation center, label unchanged
    auto moved = conjugate_group(C2, Mat2Q{}, {Rat(1, 4), Rat(0)});
    EXPECT_EQ(moved.order(), 2u);
    EXPECT_EQ(moved.stabilizer({Rat(1, 4), Rat(0)}).order(), 2u);
}

TEST(ConjugateGroup, ScalingAbsorbsTranslations) {
    auto T2 = close_group(Gram::square(), {tmap(Rat(1, 2), Rat(0))});
    auto absorbed = conjugate_group(T2, Mat2Q{Rat(2), Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0)});
    EXPECT_EQ(absorbed.order(), 1u);
}

TEST(ConjugateGroup, NonLatticeMapRejected) {
    auto C4 = close_group(Gram::square(), {AffineTorusMap(kRot90, {Rat(0), Rat(0)})});
    EXPECT_THROW(conjugate_group(C4, Mat2Q{Rat(2), Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0)}),
                 not_lattice_map);
}

TEST(PointLabels, FrameConventions) {
    // D4 = <a4, b>
    std::vector<Mat2Z> d4;
    Mat2Z p = Mat2Z::identity();
    for (int i = 0; i < 4; ++i) {
        d4.push_back(p);
        d4.push_back(p * Mat2Z{1, 0, 0, -1});
        p = p * kRot90;
    }
    EXPECT_EQ(label_matrix_group(d4, FrameKind::Square).str(), "D4");
    EXPECT_EQ(label_matrix_group({Mat2Z::identity(), {0, 1, 1, 0}}, FrameKind::Square).str(),
              "D1,4");
    EXPECT_EQ(label_matrix_group({Mat2Z::identity(), {0, -1, -1, 0}}, FrameKind::Square).str(),
              "D1,-4");
    EXPECT_EQ(label_matrix_group({Mat2Z::identity(), {-1, 0, 0, 1}}, FrameKind::Square).str(),
              "D1,2");
    EXPECT_EQ(label_matrix_group({Mat2Z::identity(), kNeg, {0, 1, 1, 0}, {0, -1, -1, 0}},
                                 FrameKind::Square)
                  .str(),
              "D2,2");
    // triangular frame: reflection across the 60-degree line
    EXPECT_EQ(label_matrix_group({Mat2Z::identity(), {-1, 0, 1, 1}}, FrameKind::Triangular).str(),
              "D1,3");
    EXPECT_EQ(label_matrix_group({Mat2Z::identity(), {1, 1, 0, -1}}, FrameKind::Triangular).str(),
              "D1");
    // edge hint picks the axis parallel to the edge
    std::vector<Mat2Z> d2m32 = {Mat2Z::identity(), kNeg, {0, 1, 1, 0}, {0, -1, -1, 0}};
    EXPECT_EQ(label_matrix_group(d2m32, FrameKind::Triangular, Vec2Q{Rat(1), Rat(-1)}).str(),
              "D2,-3/2");
    EXPECT_EQ(label_matrix_group(d2m32, FrameKind::Triangular).str(), "D2,3");
    EXPECT_EQ(PointGroupLabel::parse("D2,-3/2").str(), "D2,-3/2");
    EXPECT_EQ(PointGroupLabel::parse("id").str(), "id");
}

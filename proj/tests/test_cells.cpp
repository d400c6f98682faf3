#include <gtest/gtest.h>

#include "torsym/cells.hpp"
#include "torsym/classify.hpp"

using namespace torsym;

namespace {

CanonicalClass row11(FineRow r) { return {r, SublatticeData::diag(1, 1)}; }

std::vector<CanonicalClass> catalog() {
    std::vector<CanonicalClass> out;
    for (FineRow row : all_fine_rows())
        for (auto [m1, m2] : {std::pair<int, int>{1, 1}, {2, 1}, {2, 2}}) {
            CanonicalClass cc(row, SublatticeData::diag(m1, m2));
            try {
                canonical_group(cc);
                out.push_back(cc);
            } catch (const invalid_params&) {}
        }
    return out;
}

}  // namespace

TEST(FundamentalDomain2D, TableEntries) {
    // half square for the order-4 rotation row
    Polygon p = fundamental_domain_2d(row11(FineRow::Z4));
    Polygon expect({{0, 0}, {Rat(1, 2), Rat(0)}, {Rat(1, 2), Rat(1, 2)}, {Rat(0), Rat(1, 2)}});
    EXPECT_TRUE(p.same_cycle(expect));
    EXPECT_EQ(p.lattice_area(), Rat(1, 4));

    // triangle (0,0),(1,0),(0,1) in lattice coordinates for D3
    Polygon t = fundamental_domain_2d(row11(FineRow::D3));
    EXPECT_TRUE(t.same_cycle(Polygon({{0, 0}, {1, 0}, {0, 1}})));
    EXPECT_EQ(t.lattice_area(), Rat(1, 2));

    // unit square for the trivial row
    Polygon u = fundamental_domain_2d(row11(FineRow::Trivial));
    EXPECT_EQ(u.lattice_area(), Rat(1));

    // area ratios of the remaining rows match the table
    auto ratio = [](FineRow r) { return fundamental_domain_2d(row11(r)).lattice_area(); };
    EXPECT_EQ(ratio(FineRow::Z2_Sq), Rat(1, 2));
    EXPECT_EQ(ratio(FineRow::D22), Rat(1, 4));
    EXPECT_EQ(ratio(FineRow::D2_Sq), Rat(1, 4));
    EXPECT_EQ(ratio(FineRow::D4), Rat(1, 4));
    EXPECT_EQ(ratio(FineRow::D2_Tri), Rat(1, 4));
    EXPECT_EQ(ratio(FineRow::D23), Rat(1, 4));
    EXPECT_EQ(ratio(FineRow::Z6), Rat(1, 2));
    EXPECT_EQ(ratio(FineRow::D6), Rat(1, 2));
    EXPECT_EQ(ratio(FineRow::Z3), Rat(1));
    EXPECT_EQ(ratio(FineRow::D32), Rat(1));
    EXPECT_EQ(ratio(FineRow::D1_Vertex), Rat(1, 2));
    EXPECT_EQ(ratio(FineRow::D14_Vertex), Rat(1, 2));
    EXPECT_EQ(ratio(FineRow::D1_Shift), Rat(1, 2));
    EXPECT_EQ(ratio(FineRow::D14_Shift), Rat(1, 2));
}

TEST(FundamentalDomain2D, ScaledSublattice) {
    CanonicalClass cc(FineRow::Z4, SublatticeData::diag(2, 2));
    Polygon p = fundamental_domain_2d(cc);
    EXPECT_EQ(p.lattice_area(), Rat(1, 16));  // quarter of the (1/2)^2 cell
}

TEST(MarkedPath, IndexWindows) {
    auto d23 = cell_structure(row11(FineRow::D23));
    EXPECT_EQ(d23.marked_points.size(), 5u);
    EXPECT_EQ(d23.i0, 1);
    EXPECT_EQ(d23.marked_indices, (std::vector<int>{1, 2, 3, 4, 5}));

    auto z4 = cell_structure(row11(FineRow::Z4));
    EXPECT_EQ(z4.marked_indices, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(z4.marked_points[0], z4.p_r.vertex(0));
    EXPECT_EQ(z4.marked_points[2], z4.p_r.vertex(2));

    auto z6 = cell_structure(row11(FineRow::Z6));
    EXPECT_EQ(z6.marked_points.size(), 2u);
    EXPECT_EQ(z6.marked_points[1], z6.p_r.edge_barycenter(0));

    auto d3 = cell_structure(row11(FineRow::D3));
    EXPECT_EQ(d3.i0, 2);
    EXPECT_EQ(d3.marked_indices, (std::vector<int>{2, 3, 4}));
}

TEST(Tiling, AllCatalogRowsTile) {
    for (const auto& cc : catalog()) {
        TilingCertificate cert = verify_tiling(cc);
        EXPECT_TRUE(cert.ok()) << cc.str() << ": " << cert.failure;
    }
}

TEST(Tiling, TileCounts) {
    EXPECT_EQ(verify_tiling(row11(FineRow::Z2_Sq)).tile_count, 2u);
    EXPECT_EQ(verify_tiling({FineRow::Trivial, SublatticeData::diag(2, 2)}).tile_count, 4u);
    EXPECT_EQ(verify_tiling(row11(FineRow::D1_Shift)).tile_count, 2u);
}

TEST(OneDimensionalDomain, AllCatalogRowsPass) {
    for (const auto& cc : catalog()) EXPECT_TRUE(verify_1d_domain(cc)) << cc.str();
}

TEST(Census, PublishedCounts) {
    auto z4 = vertex_edge_census(row11(FineRow::Z4));
    EXPECT_EQ(z4.vertex_orbits, 3u);
    // v^1 ~ v^3 is the only nontrivial relation
    EXPECT_EQ(z4.relations, (std::vector<std::vector<int>>{{0}, {1, 3}, {2}}));

    auto d2t = vertex_edge_census(row11(FineRow::D2_Tri));
    EXPECT_EQ(d2t.edge_orbits, 4u);
    EXPECT_EQ(d2t.relations, (std::vector<std::vector<int>>{{0}, {1}, {2, 3}}));

    auto triv = vertex_edge_census(row11(FineRow::Trivial));
    EXPECT_EQ(triv.i_r, 4);
    EXPECT_EQ(triv.j_r, 4);
    EXPECT_EQ(triv.relations, (std::vector<std::vector<int>>{{0, 1, 2, 3}}));
    EXPECT_EQ(triv.vertex_orbits, 1u);
    EXPECT_EQ(triv.edge_orbits, 2u);

    auto z2 = vertex_edge_census(row11(FineRow::Z2_Sq));
    EXPECT_EQ(z2.vertex_orbits, 2u);
    EXPECT_EQ(z2.edge_orbits, 3u);
    EXPECT_EQ(z2.relations, (std::vector<std::vector<int>>{{0, 3}, {1, 2}}));

    auto d22 = vertex_edge_census(row11(FineRow::D22));
    EXPECT_EQ(d22.vertex_orbits, 3u);
    EXPECT_EQ(d22.edge_orbits, 4u);
    EXPECT_EQ(d22.relations, (std::vector<std::vector<int>>{{0}, {1, 2}, {3}}));

    auto d23 = vertex_edge_census(row11(FineRow::D23));
    EXPECT_EQ(d23.vertex_orbits, 3u);
    EXPECT_EQ(d23.relations, (std::vector<std::vector<int>>{{0}, {1, 2}, {3}}));

    auto d32 = vertex_edge_census(row11(FineRow::D32));
    EXPECT_EQ(d32.vertex_orbits, 2u);
    EXPECT_EQ(d32.relations, (std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}}));
    EXPECT_EQ(d32.j_r, 3);

    auto z6 = vertex_edge_census(row11(FineRow::Z6));
    EXPECT_EQ(z6.vertex_orbits, 1u);
    EXPECT_EQ(z6.edge_orbits, 1u);
    EXPECT_EQ(z6.j_r, 6);

    auto d1s = vertex_edge_census(row11(FineRow::D1_Shift));
    EXPECT_EQ(d1s.vertex_orbits, 1u);
    EXPECT_EQ(d1s.edge_orbits, 2u);

    auto d14v = vertex_edge_census(row11(FineRow::D14_Vertex));
    EXPECT_EQ(d14v.vertex_orbits, 2u);
    EXPECT_EQ(d14v.edge_orbits, 3u);
    EXPECT_EQ(d14v.relations, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
}

TEST(Census, CountingIdentitiesHold) {
    // |R_t| = ratio * |B| and |R_t| = ratio * (j/i) * |V| for every row,
    // with ratio = Area(|P_R|)/Area(Lambda_t)
    for (const auto& cc : catalog()) {
        Census c = vertex_edge_census(cc);
        FiniteTorusGroup g = canonical_group(cc);
        Rat ratio = fundamental_domain_2d(cc).lattice_area() * Rat(cc.sub.m1 * cc.sub.m2);
        Rat rt((std::int64_t)g.translation_order());
        EXPECT_EQ(rt, ratio * Rat((std::int64_t)c.faces)) << cc.str();
        EXPECT_EQ(rt, ratio * Rat(c.j_r, c.i_r) * Rat((std::int64_t)c.vertices)) << cc.str();
    }
}

TEST(MarkedPath, AliasMatchesCellStructure) {
    MarkedPath mp = fundamental_domain_1d(row11(FineRow::D23));
    EXPECT_EQ(mp.indices, (std::vector<int>{1, 2, 3, 4, 5}));
    EXPECT_EQ(mp.points.size(), 5u);
    CellStructure cs = cell_structure(row11(FineRow::D23));
    EXPECT_EQ(mp.face_point, cs.barycenter);
}

TEST(FlaggedSublattice, GeometryStillVerifies) {
    // index-2 Gaussian sublattice of the rotation row: the frame basis is
    // not diagonal, yet domains, tiling and census must all go through
    auto G = close_group(Gram::square(),
                         {AffineTorusMap(Mat2Z{0, -1, 1, 0}, {Rat(0), Rat(0)}),
                          AffineTorusMap::translation_by({Rat(1, 2), Rat(1, 2)})});
    auto r = classify(G);
    ASSERT_FALSE(r.cc.sub.diagonal);
    EXPECT_TRUE(verify_tiling(r.cc).ok());
    EXPECT_TRUE(verify_1d_domain(r.cc));
    Census c = vertex_edge_census(r.cc);
    FiniteTorusGroup canon = canonical_group(r.cc);
    Rat ratio = fundamental_domain_2d(r.cc).lattice_area() * Rat(r.cc.sub.m1 * r.cc.sub.m2);
    EXPECT_EQ(Rat((std::int64_t)canon.translation_order()),
              ratio * Rat((std::int64_t)c.faces));
}

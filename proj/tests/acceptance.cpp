// Acceptance suite: one check per criterion, one PASS/FAIL line each, with
// the stated runtime budgets enforced. Returns nonzero if any criterion
// fails. Documented discrepancies against the published tables are printed
// as notes with both readings.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "torsym/bundleclass.hpp"
#include "torsym/classify.hpp"
#include "torsym/golden_data.hpp"
#include "torsym/isotropy.hpp"

using namespace torsym;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    std::string title;
    double budget_ms;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::vector<std::string> details;
    std::vector<std::string> notes;

    Criterion(int n, std::string t, double budget) : number(n), title(std::move(t)), budget_ms(budget) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
    void note(const std::string& n) { notes.push_back(n); }

    void finish() {
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (budget_ms > 0 && ms > budget_ms) {
            ok = false;
            details.push_back("runtime " + std::to_string(ms) + " ms exceeds budget " +
                              std::to_string(budget_ms) + " ms");
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
             << (int)ms << " ms)";
        std::cout << line.str() << "\n";
        for (const auto& n : notes) std::cout << "       note: " << n << "\n";
        for (const auto& d : details) std::cout << "       " << d << "\n";
        if (!ok) ++g_failures;
    }
};

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

FineRow class_representative(FineRow row) {
    if (row == FineRow::D2_Tri || row == FineRow::D23) return FineRow::D22;
    if (row == FineRow::D14_Shift) return FineRow::D14_Vertex;
    return row;
}

Conjugator random_conjugator(std::mt19937& rng) {
    Mat2Z P = Mat2Z::identity();
    std::uniform_int_distribution<int> coin(0, 3), koff(-2, 2), den(1, 8);
    for (int i = 0; i < 6; ++i) {
        std::int64_t k = koff(rng);
        switch (coin(rng)) {
            case 0: P = P * Mat2Z{1, k, 0, 1}; break;
            case 1: P = P * Mat2Z{1, 0, k, 1}; break;
            case 2: P = P * Mat2Z{0, -1, 1, 0}; break;
            default: P = P * Mat2Z{1, 0, 0, -1}; break;
        }
    }
    Vec2Q q{Rat(koff(rng), den(rng)), Rat(koff(rng), den(rng))};
    return {Mat2Q(P), q};
}

std::map<std::string, std::map<std::string, std::string>> golden_by_row() {
    std::map<std::string, std::map<std::string, std::string>> g;
    for (const auto& e : parse_golden(std::string(kGoldenTablesCsv)))
        g[e.row][e.kind + ";" + e.index] = e.value;
    return g;
}

void criterion1() {
    Criterion c(1, "canonical classification round trip and conjugation invariance", 5000);
    std::mt19937 rng(987654321);
    for (const auto& cc : catalog()) {
        FiniteTorusGroup G = canonical_group(cc);
        Classification r = classify(G);
        FineRow expect = class_representative(cc.row);
        if (expect != cc.row)
            c.note(std::string(cc.info().name) + " is conjugate to " + fine_row_name(expect) +
                   " and classifies to it (merged presentation)");
        c.require(r.cc.row == expect,
                  cc.str() + " classified to " + fine_row_name(r.cc.row));
        c.require(r.cc.sub.m1 == cc.sub.m1 && r.cc.sub.m2 == cc.sub.m2,
                  cc.str() + " sublattice invariants changed");
        c.require(conjugate_group(G, r.conj.linear, r.conj.translation) == canonical_group(r.cc),
                  cc.str() + " conjugator fails certification");
        for (int k = 0; k < 20; ++k) {
            Conjugator eta = random_conjugator(rng);
            Classification rh = classify(conjugate_group(G, eta.linear, eta.translation));
            c.require(rh.cc == r.cc, cc.str() + " classification not conjugation-invariant");
        }
    }
    c.finish();
}

void criterion2() {
    Criterion c(2, "face isotropy matches the published face table, D4 entry oracle-resolved", 1000);
    auto golden = golden_by_row();
    for (FineRow row : all_fine_rows()) {
        CanonicalClass cc(row, SublatticeData::diag(1, 1));
        CellStructure cs = cell_structure(cc);
        std::string face = face_isotropy(cs).str();
        std::string area = (cs.p_r.lattice_area() * Rat(cc.sub.m1 * cc.sub.m2)).str();
        c.require(face == golden[cc.info().name]["face;"],
                  std::string(cc.info().name) + " face " + face + " != golden");
        c.require(area == golden[cc.info().name]["area;"],
                  std::string(cc.info().name) + " area " + area + " != golden");
    }
    std::string d4 = face_isotropy(cell_structure({FineRow::D4, SublatticeData::diag(1, 1)})).str();
    c.require(d4 == "D1,4", "D4 face oracle value is " + d4);
    c.note("D4 face entry: published table reads D1,4, the proof text D1,2; the stabilizer "
           "oracle gives D1,4 (both readings recorded)");
    c.finish();
}

void criterion3() {
    Criterion c(3, "vertex and edge isotropy match the published tables with signed decorations", 1000);
    auto golden = golden_by_row();
    for (FineRow row : all_fine_rows()) {
        CanonicalClass cc(row, SublatticeData::diag(1, 1));
        CellStructure cs = cell_structure(cc);
        auto vs = vertex_isotropy(cs);
        auto es = edge_isotropy(cs);
        auto& g = golden[cc.info().name];
        for (int i = 0; i < cs.i_r; ++i) {
            c.require(vs[i].str() == g["vertex;" + std::to_string(i)],
                      std::string(cc.info().name) + " vertex " + std::to_string(i));
            c.require(es[i].str() == g["edge;" + std::to_string(i)],
                      std::string(cc.info().name) + " edge " + std::to_string(i));
        }
        c.require(relations_string(cs.vertex_orbits) == g["vrel;"],
                  std::string(cc.info().name) + " orbit relations");
        Census census = vertex_edge_census(cc);
        c.require(std::to_string(census.vertex_orbits) == g["vorbits;"],
                  std::string(cc.info().name) + " |V/R|");
        c.require(std::to_string(census.edge_orbits) == g["eorbits;"],
                  std::string(cc.info().name) + " |E/R|");
    }
    // the named sign conventions
    auto z4 = vertex_isotropy(cell_structure({FineRow::Z4, SublatticeData::diag(1, 1)}));
    c.require(z4[1].str() == "Z2" && z4[3].str() == "Z2", "Z4 row vertex signs");
    auto z6 = edge_isotropy(cell_structure({FineRow::Z6, SublatticeData::diag(1, 1)}));
    c.require(z6[0].str() == "Z2", "Z6 edge row");
    auto d3 = edge_isotropy(cell_structure({FineRow::D3, SublatticeData::diag(1, 1)}));
    c.require(d3[0].str() == "D1,3" && d3[1].str() == "D1,-3" && d3[2].str() == "D1",
              "D3 edge decorations");
    c.note("D2,2 edge row: published table pairs e1 with e3 as D1,4; the oracle gives Z2 at e1 "
           "and D1,4 at e3 (golden stores the oracle values)");
    c.finish();
}

void criterion4() {
    Criterion c(4, "counting identities |R_t| = ratio*|B| and |R_t| = ratio*(j/i)*|V|", 0);
    for (const auto& cc : catalog()) {
        CountingReport r = verify_counting(cc);
        c.require(r.faces_identity, cc.str() + " face identity fails");
        c.require(r.vertex_identity, cc.str() + " vertex identity fails");
    }
    CountingReport z2 = verify_counting({FineRow::Z2_Sq, SublatticeData::diag(1, 1)});
    c.require(z2.ratio == Rat(1, 2) &&
                  Rat((std::int64_t)z2.r_t) == z2.ratio * Rat((std::int64_t)z2.faces),
              "Z2 square row: |R_t| = (1/2)|B|");
    c.finish();
}

void criterion5() {
    Criterion c(5, "tiling and one-dimensional fundamental domains verify on every row", 10000);
    for (const auto& cc : catalog()) {
        TilingCertificate t = verify_tiling(cc);
        c.require(t.ok(), cc.str() + " tiling: " + t.failure);
        c.require(verify_1d_domain(cc), cc.str() + " one-dimensional domain fails");
    }
    c.finish();
}

void criterion6() {
    Criterion c(6, "trivial group: one tuple per rank, case A, Chern modulus 1", 0);
    CanonicalClass cc(FineRow::Trivial, SublatticeData::diag(1, 1));
    ClassificationReport rep = classify_bundles(cc, 4);
    c.require(rep.theorem_case == TheoremCase::A, "theorem case");
    c.require(rep.chern_modulus == 1, "modulus");
    for (std::int64_t r = 1; r <= 4; ++r)
        c.require(rep.tuple_count_by_rank.at(r) == 1, "rank " + std::to_string(r) + " count");
    c.finish();
}

void criterion7() {
    Criterion c(7, "Z4 rank 1: exactly 32 tuples, oracle-confirmed, case A, modulus 4", 0);
    CanonicalClass cc(FineRow::Z4, SublatticeData::diag(1, 1));
    auto tuples = enumerate_a(cc, 1);
    c.require(tuples.size() == 32, "enumerated " + std::to_string(tuples.size()));
    // independent oracle: filter the full candidate space
    MarkedData md = marked_data(cc);
    TupleChecker checker(cc);
    std::set<ATuple> filtered;
    std::vector<std::vector<RepMult>> choices;
    choices.push_back(bundle_detail::mult_vectors(md.face, 1));
    for (const auto& t : md.stab) choices.push_back(bundle_detail::mult_vectors(t, 1));
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        ATuple t;
        t.entries[-1] = choices[0][pick[0]];
        for (std::size_t k = 0; k < md.stab.size(); ++k)
            t.entries[md.cs.marked_indices[k]] = choices[k + 1][pick[k + 1]];
        if (checker.check(t).ok()) filtered.insert(t);
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
        if (j == pick.size()) break;
    }
    c.require(filtered == std::set<ATuple>(tuples.begin(), tuples.end()),
              "oracle set differs from enumeration");
    ClassificationReport rep = classify_bundles(cc, 1);
    c.require(rep.theorem_case == TheoremCase::A && rep.chern_modulus == 4,
              "case/modulus routing");
    c.finish();
}

void criterion8() {
    Criterion c(8, "theorem-case routing matches the golden report string-for-string", 0);
    std::ostringstream out;
    for (const auto& cc : catalog()) {
        ClassificationReport rep = classify_bundles(cc, 0);
        out << cc.info().name << " (" << cc.sub.m1 << "," << cc.sub.m2 << ") -> case "
            << to_string(rep.theorem_case);
        if (rep.theorem_case == TheoremCase::A)
            out << " modulus " << rep.chern_modulus << " offset " << rep.chern_offset;
        else
            out << " fiber " << rep.fiber_size;
        out << "\n";
        if (cc.glide() == GlideType::ShiftGlide &&
            cc.point_group() == PointGroupLabel::dihedral_plain(1))
            c.require(rep.fiber_size == 2, cc.str() + " shift-glide D1 must have fiber 2");
        if (!cc.point_group().dihedral)
            c.require(rep.theorem_case == TheoremCase::A, cc.str() + " cyclic row must be case A");
        if (cc.point_group().dihedral &&
            !(cc.glide() == GlideType::ShiftGlide &&
              cc.point_group() == PointGroupLabel::dihedral_plain(1)))
            c.require(rep.theorem_case == TheoremCase::C, cc.str() + " dihedral row must be case C");
    }
    std::ifstream in(std::string(TORSYM_GOLDEN_DIR) + "/theorem_routing.txt");
    std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    c.require(!golden.empty(), "golden routing file missing");
    c.require(out.str() == golden, "routing text differs from golden file");
    c.finish();
}

void criterion9() {
    Criterion c(9, "property suites: orbit-stabilizer, equivariance, transitivity, direct sums",
                30000);
    // orbit-stabilizer identity on the 1/12 grid, all catalog groups
    for (const auto& cc : catalog()) {
        FiniteTorusGroup G = canonical_group(cc);
        for (std::int64_t i = 0; i < 12; ++i)
            for (std::int64_t j = 0; j < 12; ++j) {
                Vec2Q x{Rat(i, 12), Rat(j, 12)};
                if (G.orbit(x).size() * G.stabilizer(x).order() != G.order()) {
                    c.require(false, cc.str() + " orbit-stabilizer fails at " + x.str());
                    i = j = 12;
                }
            }
    }
    // stabilizer conjugation equivariance on the marked points
    for (const auto& cc : catalog()) {
        CellStructure cs = cell_structure(cc);
        for (const auto& p : cs.marked_points) {
            Vec2Q x = p.mod1();
            auto sx = cs.group.stabilizer(x);
            for (const auto& g : cs.group.elements()) {
                auto sgx = cs.group.stabilizer(g.apply(x));
                std::vector<AffineTorusMap> conj;
                for (const auto& h : sx.elements()) conj.push_back(g * h * g.inverse());
                std::sort(conj.begin(), conj.end());
                if (!(conj == sgx.elements())) {
                    c.require(false, cc.str() + " stabilizer equivariance fails");
                    break;
                }
            }
        }
    }
    // restriction transitivity over the stabilizer chains from the census:
    // edge fixator < edge barycenter stabilizer < point group
    for (const auto& cc : catalog()) {
        CellStructure cs = cell_structure(cc);
        Mat2Q T = frame_to_lattice(cc);
        IrrTable top = irr_table(isotropy_detail::to_frame(cs.group.point_matrices(), T));
        for (int i = 0; i < cs.i_r; ++i) {
            IrrTable mid = irr_table(
                isotropy_detail::to_frame(cs.group.stabilizer_matrices(cs.edge_barycenter(i)), T));
            IrrTable low =
                irr_table(isotropy_detail::to_frame(bundle_detail::edge_fixator(cs, i), T));
            for (std::size_t k = 0; k < top.irr_count(); ++k) {
                RepMult w{std::vector<std::int64_t>(top.irr_count(), 0)};
                w.mult[k] = 1;
                RepMult two_step = restrict_to(low, mid, restrict_to(mid, top, w));
                RepMult direct = restrict_to(low, top, w);
                if (!(two_step == direct)) {
                    c.require(false, cc.str() + " restriction transitivity fails at edge " +
                                         std::to_string(i));
                    break;
                }
            }
        }
    }
    // direct-sum closure for rank <= 2 tuples
    for (FineRow row : {FineRow::Z4, FineRow::D4, FineRow::D6, FineRow::D32, FineRow::D22,
                        FineRow::D23, FineRow::D1_Vertex}) {
        CanonicalClass cc(row, SublatticeData::diag(1, 1));
        TupleChecker checker(cc);
        auto r1 = enumerate_a(cc, 1);
        auto r2 = enumerate_a(cc, 2);
        auto add = [](const ATuple& a, const ATuple& b) {
            ATuple s = a;
            for (auto& [i, w] : s.entries)
                for (std::size_t k = 0; k < w.mult.size(); ++k)
                    w.mult[k] += b.entries.at(i).mult[k];
            return s;
        };
        for (std::size_t a = 0; a < r1.size(); a += 3)
            for (std::size_t b = a; b < r1.size(); b += 5)
                if (!checker.check(add(r1[a], r1[b])).ok())
                    c.require(false, cc.str() + " direct sum of rank-1 tuples invalid");
        for (std::size_t a = 0; a < r1.size(); a += 5)
            for (std::size_t b = 0; b < r2.size(); b += 7)
                if (!checker.check(add(r1[a], r2[b])).ok())
                    c.require(false, cc.str() + " rank-1 + rank-2 direct sum invalid");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) std::cout << "all acceptance criteria pass\n";
    else std::cout << g_failures << " criteria FAILED\n";
    return g_failures == 0 ? 0 : 1;
}

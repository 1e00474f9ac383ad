#include <doctest.h>

#include <set>

#include "latchroma/catalog.hpp"
#include "latchroma/first_kind.hpp"
#include "latchroma/solve.hpp"

using namespace latchroma;

namespace {

QMat an_superbasis(int n) {
    // v_i = e_i - e_{i+1} for 1 <= i <= n, v_0 = e_{n+1} - e_1
    QMat v(n + 1, n + 1);
    v(0, n) = 1;
    v(0, 0) = -1;
    for (int i = 1; i <= n; ++i) {
        v(i, i - 1) = 1;
        v(i, i) = -1;
    }
    return v;
}

QMat an_star_superbasis(int n) {
    QMat v(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) v(i, j) = Rat(1, n + 1);
        v(i, i) -= 1;
    }
    // reorder so that rows 1..n form the basis and row 0 is the extra vector
    return v;
}

QMat z2_superbasis() {
    return QMat{{Rat(-1), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
}

std::set<IVec> as_set(const RelevantVectorSet& s) {
    return std::set<IVec>(s.vectors.begin(), s.vectors.end());
}

} // namespace

TEST_CASE("obtuse superbasis validation") {
    Superbasis a3 = check_obtuse_superbasis(an_superbasis(3));
    CHECK(a3.n() == 3);
    CHECK_FALSE(a3.strictly_obtuse); // lots of zero Selling parameters

    Superbasis a3s = check_obtuse_superbasis(an_star_superbasis(3));
    CHECK(a3s.strictly_obtuse);
    // constant off-diagonal Selling parameters (-1/(n+1) in these coordinates)
    for (int i = 0; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) CHECK(a3s.selling(i, j) == Rat(-1, 4));

    Superbasis z2 = check_obtuse_superbasis(z2_superbasis());
    CHECK_FALSE(z2.strictly_obtuse);

    // violations
    QMat bad_sum{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(0)}};
    CHECK_THROWS_AS(check_obtuse_superbasis(bad_sum), Error);
    QMat bad_pos{{Rat(-2), Rat(0)}, {Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    CHECK_THROWS_AS(check_obtuse_superbasis(bad_pos), Error);
}

TEST_CASE("delaunay graphs of the standard superbases") {
    FiniteGraph ga = delaunay_graph(check_obtuse_superbasis(an_superbasis(4)));
    CHECK(ga.n_vertices() == 5);
    CHECK(ga.n_edges() == 5); // cycle C5
    for (int v = 0; v < 5; ++v) CHECK(ga.degree(v) == 2);
    CHECK(longest_cycle(ga).length == 5);

    FiniteGraph gs = delaunay_graph(check_obtuse_superbasis(an_star_superbasis(4)));
    CHECK(gs.n_edges() == 10); // complete K5

    FiniteGraph gz = delaunay_graph(check_obtuse_superbasis(z2_superbasis()));
    CHECK(gz.n_edges() == 2); // path: zero product between e1 and e2
}

TEST_CASE("relevant vectors from minimal cuts") {
    // A2: the 3-cycle gives 3 cut pairs = 6 vectors
    Superbasis a2 = check_obtuse_superbasis(an_superbasis(2));
    RelevantVectorSet r = relevant_from_cuts(a2);
    CHECK(r.count == 6);
    CHECK(as_set(r) == as_set(relevant_vectors(a2.span_lattice())));

    // An*: every proper nonempty subset qualifies
    for (int n = 2; n <= 6; ++n) {
        Superbasis s = check_obtuse_superbasis(an_star_superbasis(n));
        RelevantVectorSet rs = relevant_from_cuts(s);
        CHECK(rs.count == (1u << (n + 1)) - 2);
        CHECK(as_set(rs) == as_set(relevant_vectors(s.span_lattice())));
    }

    // Z2 with a zero Selling parameter: only the 4 cube facet vectors
    Superbasis z2 = check_obtuse_superbasis(z2_superbasis());
    RelevantVectorSet rz = relevant_from_cuts(z2);
    CHECK(rz.count == 4);
    CHECK(as_set(rz) == as_set(relevant_vectors(z2.span_lattice())));

    // oracle equivalence for An, n <= 6
    for (int n = 2; n <= 6; ++n) {
        Superbasis s = check_obtuse_superbasis(an_superbasis(n));
        CHECK(as_set(relevant_from_cuts(s)) == as_set(relevant_vectors(s.span_lattice())));
    }
}

TEST_CASE("cycle clique lower bound") {
    // An: a clique of size n+1
    for (int n = 2; n <= 5; ++n) {
        Superbasis s = check_obtuse_superbasis(an_superbasis(n));
        std::vector<IVec> clique = cycle_clique_lower_bound(s);
        CHECK(clique.size() == static_cast<size_t>(n + 1));
    }

    // the sharpness example on the right: sigma = 5 (while chi = 6)
    Superbasis right = superbasis_from_graph(
        6, {{0, 1}, {0, 3}, {2, 3}, {2, 4}, {2, 5}, {1, 4}, {1, 5}});
    CHECK(longest_cycle(delaunay_graph(right)).length == 5);
    CHECK(cycle_clique_lower_bound(right).size() == 5);

    // triangle graph: 3 pairwise-relevant points
    Superbasis tri = superbasis_from_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(cycle_clique_lower_bound(tri).size() == 3);

    // acyclic Delaunay graph: no bound
    Superbasis star = superbasis_from_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(cycle_clique_lower_bound(star), Error);
}

TEST_CASE("mod-(n+1) coloring certificates") {
    Superbasis a2 = check_obtuse_superbasis(an_superbasis(2));
    QuotientColoring c2 = mod_coloring(a2);
    CHECK(c2.k == 3);
    CHECK(verify_coloring(a2.span_lattice(), relevant_vectors(a2.span_lattice()), c2).accepted);

    Superbasis a6 = check_obtuse_superbasis(an_superbasis(6));
    QuotientColoring c6 = mod_coloring(a6);
    CHECK(c6.k == 7);
    CHECK(verify_coloring(a6.span_lattice(), relevant_vectors(a6.span_lattice()), c6).accepted);

    // valid but not optimal for Z2 in superbasis form (chi(Z2) = 2)
    Superbasis z2 = check_obtuse_superbasis(z2_superbasis());
    QuotientColoring cz = mod_coloring(z2);
    CHECK(cz.k == 3);
    CHECK(verify_coloring(z2.span_lattice(), relevant_vectors(z2.span_lattice()), cz).accepted);
}

TEST_CASE("biconnected split") {
    // A2 + Z as one superbasis: blocks of sizes 3 and 2, bound 3
    Superbasis mixed = superbasis_from_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    BiconnectedSplit split = biconnected_split(mixed);
    CHECK(split.blocks.size() == 2);
    std::multiset<size_t> sizes;
    for (const auto& v : split.block_vertices) sizes.insert(v.size());
    CHECK(sizes == std::multiset<size_t>{2, 3});
    CHECK(split.upper_bound == 3);

    // connected graph: a single block
    Superbasis a4 = check_obtuse_superbasis(an_superbasis(4));
    CHECK(biconnected_split(a4).blocks.size() == 1);

    // Z3 star: three blocks of size 2, bound 2
    Superbasis z3 = superbasis_from_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    BiconnectedSplit sz = biconnected_split(z3);
    CHECK(sz.blocks.size() == 3);
    CHECK(sz.upper_bound == 2);

    // every block is itself a valid obtuse superbasis with matching Gram
    for (const auto& blk : split.blocks) {
        CHECK(blk.vectors.rows() >= 2);
        CHECK(blk.selling == mat_mul(blk.vectors, transpose(blk.vectors)));
    }
}

TEST_CASE("three-dimensional table") {
    struct Row {
        const char* name;
        Superbasis sb;
        std::multiset<std::pair<int, int>> block_shapes; // (vertices, edges)
        int chi;
    };
    auto shapes = [](const BiconnectedSplit& s) {
        std::multiset<std::pair<int, int>> out;
        for (const auto& blk : s.blocks) {
            FiniteGraph g = delaunay_graph(blk);
            out.insert({g.n_vertices(), static_cast<int>(g.n_edges())});
        }
        return out;
    };

    // Z3
    Superbasis z3 = check_obtuse_superbasis(
        QMat{{Rat(-1), Rat(-1), Rat(-1)},
             {Rat(1), Rat(0), Rat(0)},
             {Rat(0), Rat(1), Rat(0)},
             {Rat(0), Rat(0), Rat(1)}});
    // A2 + Z: superbasis { (u0, -1), (u1, 0), (u2, 0), (0, 1) }
    Superbasis a2z = check_obtuse_superbasis(
        QMat{{Rat(-1), Rat(0), Rat(1), Rat(-1)},
             {Rat(1), Rat(-1), Rat(0), Rat(0)},
             {Rat(0), Rat(1), Rat(-1), Rat(0)},
             {Rat(0), Rat(0), Rat(0), Rat(1)}});
    // A3
    Superbasis a3 = check_obtuse_superbasis(an_superbasis(3));
    // elongated: basis (2,0,0), (0,2,0), (-1,-1,2)
    Superbasis elong = check_obtuse_superbasis(
        QMat{{Rat(-1), Rat(-1), Rat(-2)},
             {Rat(2), Rat(0), Rat(0)},
             {Rat(0), Rat(2), Rat(0)},
             {Rat(-1), Rat(-1), Rat(2)}});
    // A3*
    Superbasis a3s = check_obtuse_superbasis(an_star_superbasis(3));

    std::vector<Row> rows;
    rows.push_back({"Z3", z3, {{2, 1}, {2, 1}, {2, 1}}, 2});
    rows.push_back({"A2+Z", a2z, {{3, 3}, {2, 1}}, 3});
    rows.push_back({"A3", a3, {{4, 4}}, 4});
    rows.push_back({"elongated", elong, {{4, 5}}, 4});
    rows.push_back({"A3*", a3s, {{4, 6}}, 4});

    for (Row& row : rows) {
        CAPTURE(row.name);
        BiconnectedSplit split = biconnected_split(row.sb);
        CHECK(shapes(split) == row.block_shapes);
        // chi: lower bound = max block cycle, upper = block superbasis size,
        // both equal across the table
        int lower = 1, upper = 1;
        for (const auto& blk : split.blocks) {
            upper = std::max(upper, blk.n() + 1);
            FiniteGraph g = delaunay_graph(blk);
            if (blk.n() + 1 == 2) {
                lower = std::max(lower, 2); // a single edge forces 2 colors
            } else {
                lower = std::max(lower, longest_cycle(g).length);
                QuotientColoring cert = mod_coloring(blk);
                Lattice span = blk.span_lattice();
                CHECK(verify_coloring(span, relevant_vectors(span), cert).accepted);
            }
        }
        CHECK(lower == row.chi);
        CHECK(upper == row.chi);
    }
}

TEST_CASE("mod coloring is accepted for every valid superbasis tested") {
    std::vector<Superbasis> pool;
    pool.push_back(superbasis_from_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    pool.push_back(superbasis_from_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    pool.push_back(check_obtuse_superbasis(an_superbasis(5)));
    for (const Superbasis& sb : pool) {
        Lattice span = sb.span_lattice();
        CHECK(verify_coloring(span, relevant_vectors(span), mod_coloring(sb)).accepted);
    }
}

#include <doctest.h>

#include <algorithm>

#include "latchroma/catalog.hpp"
#include "latchroma/graph.hpp"
#include "latchroma/quotient.hpp"
#include "latchroma/solve.hpp"

using namespace latchroma;

namespace {

FiniteGraph fig_left_graph() {
    // 5 vertices, edges 0-1, 0-2, 0-3, 1-2, 2-3: longest cycle 4
    FiniteGraph g(5, {"a", "b", "c", "d", "e"});
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.finalize();
    return g;
}

} // namespace

TEST_CASE("cayley ball basics") {
    Lattice z2 = catalog("Z", 2);
    RelevantVectorSet vor = relevant_vectors(z2);
    FiniteGraph star = cayley_ball(z2, vor, Rat(1));
    CHECK(star.n_vertices() == 5);
    CHECK(star.n_edges() == 4);

    Lattice a2 = catalog("A", 2);
    RelevantVectorSet va = relevant_vectors(a2);
    FiniteGraph ball = cayley_ball(a2, va, Rat(2));
    CHECK(ball.n_vertices() == 7);
    CliqueResult clique = max_clique(ball);
    CHECK(clique.exact);
    CHECK(clique.vertices.size() == 3);
}

TEST_CASE("cayley ball of A_n contains an (n+1)-clique") {
    Lattice a4 = catalog("A", 4);
    RelevantVectorSet vor = relevant_vectors(a4);
    FiniteGraph ball = cayley_ball(a4, vor, Rat(2));
    CliqueResult clique = max_clique(ball);
    CHECK(clique.exact);
    CHECK(clique.vertices.size() == 5);
}

TEST_CASE("quotient graphs") {
    for (int n = 2; n <= 5; ++n) {
        Lattice zn = catalog("Z", n);
        RelevantVectorSet vor = relevant_vectors(zn);
        IMat sub = IMat::identity(n);
        for (int i = 0; i < n; ++i) sub(i, i) = 2;
        FiniteGraph g = quotient_graph(zn, vor, sub);
        CHECK(g.n_vertices() == (1 << n));
        ColoringResult c = chromatic_number_exact(g);
        CHECK(c.exact);
        CHECK(c.chromatic() == 2);
        for (int v = 0; v < g.n_vertices(); ++v) CHECK(g.degree(v) == n);
    }

    // loop detection: relevant vector inside the sublattice
    Lattice z2 = catalog("Z", 2);
    RelevantVectorSet vor = relevant_vectors(z2);
    IMat sub{{Int(1), Int(0)}, {Int(0), Int(2)}};
    CHECK_THROWS_AS(quotient_graph(z2, vor, sub), Error);
}

TEST_CASE("D_n mod 2Z^n is the half-cube skeleton") {
    for (int n : {4, 5}) {
        Lattice dn = catalog("D", n);
        RelevantVectorSet vor = relevant_vectors(dn);
        QMat twoz = QMat::identity(n);
        for (int i = 0; i < n; ++i) twoz(i, i) = 2;
        IMat sub = to_integer(mat_mul(twoz, inverse(dn.basis)));
        FiniteGraph q = quotient_graph(dn, vor, sub);
        FiniteGraph hc = half_cube_graph(n);
        CHECK(q.n_vertices() == hc.n_vertices());
        CHECK(q.n_edges() == hc.n_edges());
        // explicit isomorphism: representative -> ambient parity vector
        QuotientGroup qg(sub);
        std::vector<int> iso(q.n_vertices());
        for (long long i = 0; i < qg.index_ll(); ++i) {
            IVec r = qg.rep(i);
            QVec coords(r.size());
            for (size_t j = 0; j < r.size(); ++j) coords[j] = Rat(r[j]);
            QVec amb = vec_mat(coords, dn.basis);
            unsigned mask = 0;
            for (int j = 0; j < n; ++j)
                if (boost::multiprecision::abs(numer(amb[j]) % 2) == 1) mask |= 1u << j;
            int rank = 0;
            for (unsigned x = 0; x < mask; ++x)
                if (__builtin_popcount(x) % 2 == 0) ++rank;
            iso[i] = rank;
        }
        std::vector<char> seen(hc.n_vertices(), 0);
        for (int v : iso) seen[v] = 1;
        for (char s : seen) CHECK(s == 1);
        for (auto [a, b] : q.edges()) CHECK(hc.adjacent(iso[a], iso[b]));
    }
}

TEST_CASE("half cube graphs") {
    FiniteGraph h3 = half_cube_graph(3);
    CHECK(h3.n_vertices() == 4);
    CHECK(h3.n_edges() == 6); // K4
    ColoringResult c3 = chromatic_number_exact(h3);
    CHECK(c3.chromatic() == 4);

    for (int n : {4, 5, 6}) {
        FiniteGraph h = half_cube_graph(n);
        CHECK(h.n_vertices() == (1 << (n - 1)));
        for (int v = 0; v < h.n_vertices(); ++v) CHECK(h.degree(v) == n * (n - 1) / 2);
    }
}

TEST_CASE("half cube chromatic numbers 4, 8, 8") {
    ColoringResult c4 = chromatic_number_exact(half_cube_graph(4));
    CHECK(c4.exact);
    CHECK(c4.chromatic() == 4);

    ColoringResult c5 = chromatic_number_exact(half_cube_graph(5));
    CHECK(c5.exact);
    CHECK(c5.chromatic() == 8);

    ColoringResult c6 = chromatic_number_exact(half_cube_graph(6));
    CHECK(c6.exact);
    CHECK(c6.chromatic() == 8);
}

TEST_CASE("coset minimal vector graphs") {
    // Z^n / 2Z^n with coset e1: two antipodal vertices, one edge
    Lattice z3 = catalog("Z", 3);
    IMat sub = IMat::identity(3);
    for (int i = 0; i < 3; ++i) sub(i, i) = 2;
    FiniteGraph g = coset_min_vector_graph(z3, sub, IVec{Int(1), Int(0), Int(0)});
    CHECK(g.n_vertices() == 2);
    CHECK(g.n_edges() == 1);
}

TEST_CASE("Schlafli graph from E6*/E6") {
    Lattice e6s = catalog("E6*");
    Lattice e6 = catalog("E6");
    IMat sub = sublattice_coords(e6s, e6);
    CHECK(boost::multiprecision::abs(det_int(sub)) == 3);
    QuotientGroup q(sub);
    IVec coset = q.rep(1);
    FiniteGraph schlafli = coset_min_vector_graph(e6s, sub, coset);
    CHECK(schlafli.n_vertices() == 27);
    CHECK(schlafli.n_edges() == 216);
    for (int v = 0; v < 27; ++v) CHECK(schlafli.degree(v) == 16);

    // negation symmetry: the opposite coset gives the same graph sizes
    IVec neg(coset.size());
    for (size_t i = 0; i < coset.size(); ++i) neg[i] = -coset[i];
    FiniteGraph other = coset_min_vector_graph(e6s, sub, q.reduce(neg));
    CHECK(other.n_vertices() == 27);
    CHECK(other.n_edges() == 216);
}

TEST_CASE("chromatic number of the Schlafli graph is 9") {
    Lattice e6s = catalog("E6*");
    Lattice e6 = catalog("E6");
    IMat sub = sublattice_coords(e6s, e6);
    QuotientGroup q(sub);
    FiniteGraph schlafli = coset_min_vector_graph(e6s, sub, q.rep(1));
    ColoringResult c = chromatic_number_exact(schlafli);
    CHECK(c.exact);
    CHECK(c.chromatic() == 9);
}

TEST_CASE("Gosset graph from E7*/E7") {
    Lattice e7s = catalog("E7*");
    Lattice e7 = catalog("E7");
    IMat sub = sublattice_coords(e7s, e7);
    CHECK(boost::multiprecision::abs(det_int(sub)) == 2);
    QuotientGroup q(sub);
    FiniteGraph gosset = coset_min_vector_graph(e7s, sub, q.rep(1));
    CHECK(gosset.n_vertices() == 56);
    for (int v = 0; v < 56; ++v) CHECK(gosset.degree(v) == 27);
}

TEST_CASE("exact coloring, clique and cycle basics") {
    FiniteGraph k4 = half_cube_graph(3);
    CHECK(chromatic_number_exact(k4).chromatic() == 4);

    FiniteGraph tri(3, {"0", "1", "2"});
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    tri.finalize();
    CHECK(max_clique(tri).vertices.size() == 3);
    CHECK(longest_cycle(tri).length == 3);

    FiniteGraph c5(5, {"0", "1", "2", "3", "4"});
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    c5.finalize();
    CHECK(longest_cycle(c5).length == 5);
    CHECK(chromatic_number_exact(c5).chromatic() == 3);

    CHECK(max_clique(half_cube_graph(4)).vertices.size() == 4);

    CHECK(longest_cycle(fig_left_graph()).length == 4);

    FiniteGraph path(3, {"0", "1", "2"});
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.finalize();
    CHECK(longest_cycle(path).length == 0);
}

TEST_CASE("every solver coloring is verified proper") {
    FiniteGraph h5 = half_cube_graph(5);
    ColoringResult c = chromatic_number_exact(h5);
    CHECK(is_proper_coloring(h5, c.coloring));
    CHECK(*std::max_element(c.coloring.begin(), c.coloring.end()) + 1 == c.chromatic());
}

#include <doctest.h>

#include "latchroma/catalog.hpp"
#include "latchroma/lll.hpp"
#include "latchroma/normal_forms.hpp"
#include "latchroma/quotient.hpp"

using namespace latchroma;

namespace {

QMat qm(std::initializer_list<std::initializer_list<int>> rows) {
    QMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (int x : r) m(i, j++) = Rat(x);
        ++i;
    }
    return m;
}

// Smith forms of the scaled Gram matrices agree: same quadratic form up to a
// unimodular basis change (necessary condition used across the tests).
bool smith_equivalent_gram(const Lattice& a, const Lattice& b) {
    if (a.det() != b.det()) return false;
    IMat ga = a.scaled_gram(), gb = b.scaled_gram();
    if (a.scale != b.scale) return false;
    return snf(ga).divisors == snf(gb).divisors;
}

} // namespace

TEST_CASE("make_lattice examples") {
    Lattice z2 = make_lattice(qm({{1, 0}, {0, 1}}));
    CHECK(z2.gram == qm({{1, 0}, {0, 1}}));
    CHECK(z2.scale == Rat(1));

    Lattice a2 = make_lattice(qm({{1, -1, 0}, {0, 1, -1}}));
    CHECK(a2.gram == qm({{2, -1}, {-1, 2}}));
    CHECK(a2.det() == Rat(3));

    Lattice l = make_lattice(qm({{2, 0}, {1, 3}}));
    CHECK(l.gram == qm({{4, 2}, {2, 10}}));
    CHECK(l.det() == Rat(36));

    CHECK_THROWS_AS(make_lattice(qm({{1, 1}, {2, 2}})), Error);
}

TEST_CASE("dual examples") {
    Lattice z3 = catalog("Z", 3);
    Lattice z3d = dual(z3);
    CHECK(z3d.gram == z3.gram);

    Lattice a2 = catalog("A", 2);
    CHECK(dual(a2).det() == Rat(1, 3));

    Lattice e8 = catalog("E8");
    Lattice e8d = dual(e8);
    CHECK(e8d.det() == Rat(1));
    CHECK(smith_equivalent_gram(e8, e8d));

    // exact involution
    Lattice a2dd = dual(dual(a2));
    CHECK(a2dd.gram == a2.gram);
    CHECK(a2dd.basis == a2.basis);
}

TEST_CASE("catalog coordinates") {
    Lattice a2 = catalog("A", 2);
    CHECK(a2.det() == Rat(3));

    Lattice e8 = catalog("E8");
    CHECK(e8.det() == Rat(1));

    Lattice d4s = catalog("D*", 4);
    // contains (1/2, 1/2, 1/2, 1/2): solve for integer coordinates
    QVec g(4, Rat(1, 2));
    QVec coords = vec_mat(g, inverse(mat_mul(d4s.basis, transpose(d4s.basis))));
    // simpler: the last basis row is the glue vector itself
    CHECK(d4s.basis.row(3) == QVec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});

    Lattice an = catalog("A", 3);
    Lattice ans = catalog("A*", 3);
    CHECK(ans.det() == Rat(1, 4));
    CHECK(smith_equivalent_gram(ans, dual(an)));

    CHECK_THROWS_AS(catalog("D", 3), Error);
    CHECK_THROWS_AS(catalog("nope", 2), Error);
    CHECK_THROWS_AS(catalog("E8", 7), Error);

    Lattice dn = catalog("D", 5);
    CHECK(dn.det() == Rat(4));
    Lattice e7 = catalog("E7");
    CHECK(e7.det() == Rat(2));
    Lattice e6 = catalog("E6");
    CHECK(e6.det() == Rat(3));
    CHECK(catalog("E7*").det() == Rat(1, 2));
    CHECK(catalog("E6*").det() == Rat(1, 3));
}

TEST_CASE("catalog Leech") {
    Lattice leech = catalog("Leech");
    CHECK(leech.dim == 24);
    CHECK(leech.det() == Rat(1));
    CHECK(leech.scale == Rat(1));
    // even lattice
    for (int i = 0; i < 24; ++i) CHECK(is_integer(leech.gram(i, i) / 2));
    CHECK(*leech.meta.min_norm2 == Rat(4));
    // exact basis reconstruction: gram == basis * basis^T by construction
    CHECK(leech.gram == mat_mul(leech.basis, transpose(leech.basis)));
}

TEST_CASE("lll examples") {
    Lattice z2 = catalog("Z", 2);
    LllResult r = lll_reduce(z2);
    CHECK(r.lattice.basis == z2.basis);

    Lattice skew = make_lattice(qm({{1, 0}, {10, 1}}));
    LllResult rs = lll_reduce(skew);
    CHECK(rs.lattice.gram(0, 0) <= Rat(2));
    CHECK(boost::multiprecision::abs(det_int(rs.transform)) == 1);
    CHECK(rs.lattice.det() == skew.det());

    Lattice a3 = catalog("A", 3);
    LllResult ra = lll_reduce(a3);
    CHECK(ra.lattice.det() == a3.det());
    CHECK(mat_mul(to_rational(ra.transform), a3.basis) == ra.lattice.basis);
}

TEST_CASE("quotient structure") {
    // 2 Z^3 inside Z^3
    IMat two = IMat::identity(3);
    for (int i = 0; i < 3; ++i) two(i, i) = 2;
    QuotientGroup q(two);
    CHECK(q.index() == 8);
    CHECK(q.elementary_divisors() == std::vector<Int>{2, 2, 2});
    CHECK(q.reduce(IVec{Int(0), Int(0), Int(0)}) == IVec{Int(0), Int(0), Int(0)});

    // reduce is constant on cosets and a homomorphism on representatives
    IVec a{Int(3), Int(-1), Int(5)}, b{Int(1), Int(1), Int(0)};
    IVec ra = q.reduce(a), rb = q.reduce(b);
    IVec ab(3), rab(3);
    for (int i = 0; i < 3; ++i) ab[i] = a[i] + b[i];
    for (int i = 0; i < 3; ++i) rab[i] = ra[i] + rb[i];
    CHECK(q.reduce(ab) == q.reduce(rab));

    // D_n inside Z^n has index 2
    Lattice z4 = catalog("Z", 4);
    Lattice d4 = catalog("D", 4);
    IMat dcoords = sublattice_coords(z4, d4);
    CHECK(QuotientGroup(dcoords).index() == 2);

    // 2 Z^8 inside E8 has index 256
    Lattice e8 = catalog("E8");
    QMat twoz8 = QMat::identity(8);
    for (int i = 0; i < 8; ++i) twoz8(i, i) = 2;
    IMat sub = to_integer(mat_mul(twoz8, inverse(e8.basis)));
    CHECK(QuotientGroup(sub).index() == 256);

    IMat sing(2, 2);
    sing(0, 0) = 1;
    sing(1, 1) = 0;
    CHECK_THROWS_AS(quotient_structure(sing), Error);
}

TEST_CASE("quotient homomorphism exhaustive on small indices") {
    IMat sub{{Int(2), Int(0)}, {Int(1), Int(3)}}; // index 6
    QuotientGroup q(sub);
    CHECK(q.index() == 6);
    for (long long i = 0; i < q.index_ll(); ++i) {
        for (long long j = 0; j < q.index_ll(); ++j) {
            IVec a = q.rep(i), b = q.rep(j), ab(2);
            for (int k = 0; k < 2; ++k) ab[k] = a[k] + b[k];
            IVec red = q.reduce(ab);
            // must agree with reducing the sum of arbitrary coset members
            IVec a2(2), sum2(2);
            for (int k = 0; k < 2; ++k) a2[k] = a[k] + 2 * sub(0, k) - sub(1, k);
            for (int k = 0; k < 2; ++k) sum2[k] = a2[k] + b[k];
            CHECK(q.reduce(sum2) == red);
        }
    }
}

TEST_CASE("orthogonal sums") {
    Lattice z1 = catalog("Z", 1);
    Lattice z2 = orthogonal_sum(z1, z1);
    CHECK(z2.gram == catalog("Z", 2).gram);

    Lattice a2 = catalog("A", 2);
    Lattice s = orthogonal_sum(a2, z1);
    CHECK(s.gram(0, 0) == Rat(2));
    CHECK(s.gram(0, 1) == Rat(-1));
    CHECK(s.gram(2, 2) == Rat(1));
    CHECK(s.gram(0, 2) == Rat(0));

    Lattice a2a2 = orthogonal_sum(a2, a2);
    CHECK(a2a2.det() == Rat(9));
}

TEST_CASE("lattice_from_gram round trip") {
    QMat g{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    Lattice l = lattice_from_gram(g);
    CHECK(l.gram == g);
    CHECK(l.dim == 2);

    QMat g2{{Rat(3, 4), Rat(1, 8)}, {Rat(1, 8), Rat(5, 2)}};
    Lattice l2 = lattice_from_gram(g2);
    CHECK(l2.gram == g2);

    QMat bad{{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}; // not positive definite
    CHECK_THROWS_AS(lattice_from_gram(bad), Error);
}

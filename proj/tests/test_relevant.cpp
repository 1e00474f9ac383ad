#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "latchroma/catalog.hpp"
#include "latchroma/enumerate.hpp"
#include "latchroma/lll.hpp"

using namespace latchroma;

namespace {

// Brute-force oracle for the coset characterization: enumerate every lattice
// vector with norm^2 <= B = 4 * trace(gram) over a coordinate box, bucket by
// class mod 2, and keep the classes whose minima are unique up to sign.
// Independent of the Fincke-Pohst path; plain int64 arithmetic (the inputs
// are tiny integer lattices).
std::set<IVec> brute_force_relevant(const Lattice& l) {
    int n = l.dim;
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
    long long bound = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g[i][j] = numer(l.gram(i, j)).convert_to<long long>();
        bound += g[i][i];
    }
    bound *= 4;
    QMat ginv = inverse(l.gram);
    std::vector<long long> box(n);
    for (int i = 0; i < n; ++i)
        box[i] = ceil_sqrt_rat(Rat(bound) * ginv(i, i)).convert_to<long long>();

    std::map<std::vector<int>, std::pair<long long, std::vector<std::vector<long long>>>>
        classes;
    std::vector<long long> x(n, 0);
    // partial[i][j] = sum_{k < i} x_k g[k][j], built incrementally
    std::vector<std::vector<long long>> partial(n + 1, std::vector<long long>(n, 0));
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            long long n2 = 0;
            for (int j = 0; j < n; ++j) n2 += x[j] * partial[n][j];
            bool zero = true;
            for (long long c : x)
                if (c) zero = false;
            if (zero || n2 > bound) return;
            std::vector<int> cls(n);
            bool nonzero_cls = false;
            for (int k = 0; k < n; ++k) {
                cls[k] = static_cast<int>(((x[k] % 2) + 2) % 2);
                if (cls[k]) nonzero_cls = true;
            }
            if (!nonzero_cls) return;
            auto it = classes.find(cls);
            if (it == classes.end())
                classes[cls] = {n2, {x}};
            else if (n2 < it->second.first)
                it->second = {n2, {x}};
            else if (n2 == it->second.first)
                it->second.second.push_back(x);
            return;
        }
        for (long long c = -box[i]; c <= box[i]; ++c) {
            x[i] = c;
            for (int j = 0; j < n; ++j) partial[i + 1][j] = partial[i][j] + c * g[i][j];
            walk(i + 1);
        }
        x[i] = 0;
    };
    walk(0);

    std::set<IVec> out;
    for (const auto& [cls, entry] : classes) {
        if (entry.second.size() == 2) {
            for (const auto& v : entry.second) {
                IVec iv(v.size());
                for (size_t i = 0; i < v.size(); ++i) iv[i] = Int(v[i]);
                out.insert(iv);
            }
        }
    }
    return out;
}

std::set<IVec> as_set(const RelevantVectorSet& s) {
    return std::set<IVec>(s.vectors.begin(), s.vectors.end());
}

} // namespace

TEST_CASE("shortest vectors in cosets") {
    Lattice z2 = catalog("Z", 2);
    CosetMinima m = shortest_vectors_in_coset(z2, QVec{Rat(0), Rat(0)});
    CHECK(m.min_norm2 == Rat(1));
    CHECK(m.vectors.size() == 4);

    Lattice z1 = catalog("Z", 1);
    CosetMinima h = shortest_vectors_in_coset(z1, QVec{Rat(1, 2)});
    CHECK(h.min_norm2 == Rat(1, 4));
    CHECK(h.vectors.size() == 2);
    CHECK(h.vectors[0] == QVec{Rat(-1, 2)});
    CHECK(h.vectors[1] == QVec{Rat(1, 2)});

    Lattice e8 = catalog("E8");
    CosetMinima me = shortest_vectors_in_coset(e8, QVec(8, Rat(0)));
    CHECK(me.min_norm2 == Rat(2));
    CHECK(me.vectors.size() == 240);
}

TEST_CASE("min_vectors") {
    Lattice e8 = catalog("E8");
    MinVectors mv = min_vectors(e8);
    CHECK(mv.norm2 == Rat(2));
    CHECK(mv.vectors.size() == 240);

    Lattice a2 = catalog("A", 2);
    MinVectors ma = min_vectors(a2);
    CHECK(ma.norm2 == Rat(2));
    CHECK(ma.vectors.size() == 6);

    Lattice leech = catalog("Leech");
    MinVectors ml = min_vectors(leech);
    CHECK(ml.norm2 == Rat(4));
    CHECK_FALSE(ml.enumerated);
}

TEST_CASE("relevant vector counts for catalog lattices") {
    for (int n = 1; n <= 6; ++n) {
        RelevantVectorSet s = relevant_vectors(catalog("Z", n));
        CHECK(s.count == static_cast<size_t>(2 * n));
    }
    for (int n = 1; n <= 5; ++n) {
        RelevantVectorSet s = relevant_vectors(catalog("A", n));
        CHECK(s.count == static_cast<size_t>(n * (n + 1)));
    }
    RelevantVectorSet d4s = relevant_vectors(catalog("D*", 4));
    CHECK(d4s.count == 24);

    CHECK_THROWS_AS(relevant_vectors(catalog("Leech")), Error);
}

TEST_CASE("relevant vectors: negation closure and cap") {
    Lattice l = make_lattice(QMat{{Rat(2), Rat(0), Rat(0)},
                                  {Rat(1), Rat(3), Rat(0)},
                                  {Rat(0), Rat(1), Rat(4)}});
    RelevantVectorSet s = relevant_vectors(l);
    CHECK(s.count % 2 == 0);
    CHECK(s.count <= 2 * (8 - 1));
    std::set<IVec> vs = as_set(s);
    for (const IVec& v : s.vectors) {
        IVec neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        CHECK(vs.count(neg) == 1);
    }
    // norms recorded match the quadratic form
    for (size_t i = 0; i < s.count; ++i) CHECK(l.norm2(s.vectors[i]) == s.norm2[i]);
}

TEST_CASE("oracle equivalence on seeded random lattices, dim <= 4") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-2, 2);
    int done = 0;
    while (done < 25) {
        int n = 1 + static_cast<int>(rng() % 4);
        QMat b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = Rat(entry(rng));
        Lattice l;
        try {
            l = make_lattice(b);
        } catch (const Error&) {
            continue; // singular draw
        }
        RelevantVectorSet fast = relevant_vectors(l);
        std::set<IVec> oracle = brute_force_relevant(l);
        CHECK(as_set(fast) == oracle);
        ++done;
    }
}

TEST_CASE("enumeration is invariant under prior LLL reduction") {
    Lattice l = make_lattice(QMat{{Rat(5), Rat(1), Rat(0)},
                                  {Rat(4), Rat(3), Rat(0)},
                                  {Rat(2), Rat(1), Rat(7)}});
    LllResult r = lll_reduce(l);
    RelevantVectorSet a = relevant_vectors(l);
    RelevantVectorSet b = relevant_vectors(r.lattice);
    // compare as geometric vector sets (coordinates differ by the transform)
    std::set<QVec> va, vb;
    for (const IVec& v : a.vectors) {
        QVec q(v.size());
        for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
        va.insert(vec_mat(q, l.basis));
    }
    for (const IVec& v : b.vectors) {
        QVec q(v.size());
        for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
        vb.insert(vec_mat(q, r.lattice.basis));
    }
    CHECK(va == vb);
}

TEST_CASE("root lattice relevant vectors are exactly the roots") {
    for (auto& [name, n] : std::vector<std::pair<std::string, int>>{
             {"A", 4}, {"D", 4}, {"E6", 6}}) {
        Lattice l = catalog(name, n);
        RelevantVectorSet s = relevant_vectors(l);
        MinVectors mv = min_vectors(l);
        CHECK(s.count == mv.vectors.size());
        for (const Rat& n2 : s.norm2) CHECK(n2 == mv.norm2);
    }
}

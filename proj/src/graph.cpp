#include "latchroma/graph.hpp"

#include <algorithm>
#include <map>

#include "latchroma/quotient.hpp"

namespace latchroma {

FiniteGraph::FiniteGraph(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != n_)
        throw Error(ErrorCode::BadInput, "graph: label count != vertex count");
}

void FiniteGraph::add_edge(int a, int b) {
    if (a == b) throw Error(ErrorCode::BadInput, "graph: loop edge");
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw Error(ErrorCode::BadInput, "graph: edge endpoint out of range");
    if (a > b) std::swap(a, b);
    edges_.emplace_back(a, b);
}

void FiniteGraph::finalize() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        bits_[static_cast<size_t>(a) * words_ + (b >> 6)] |= 1ull << (b & 63);
        bits_[static_cast<size_t>(b) * words_ + (a >> 6)] |= 1ull << (a & 63);
    }
}

std::string format_coords(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::string format_coords(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

FiniteGraph cayley_ball(const Lattice& l, const RelevantVectorSet& vor, const Rat& r2,
                        size_t vertex_cap) {
    if (r2 < 0) throw Error(ErrorCode::BadInput, "cayley_ball: negative radius");
    std::vector<IVec> pts = vectors_in_ball(l, r2, vertex_cap);
    std::map<IVec, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    std::vector<std::string> labels;
    labels.reserve(pts.size());
    for (const IVec& p : pts) labels.push_back(format_coords(p));
    FiniteGraph g(static_cast<int>(pts.size()), std::move(labels));
    for (size_t i = 0; i < pts.size(); ++i) {
        for (const IVec& u : vor.vectors) {
            IVec q(pts[i].size());
            for (size_t k = 0; k < q.size(); ++k) q[k] = pts[i][k] + u[k];
            auto it = index.find(q);
            if (it != index.end() && static_cast<int>(i) < it->second)
                g.add_edge(static_cast<int>(i), it->second);
        }
    }
    g.finalize();
    return g;
}

FiniteGraph quotient_graph(const Lattice& l, const RelevantVectorSet& vor, const IMat& sub) {
    QuotientGroup q(sub);
    for (const IVec& u : vor.vectors) {
        IVec r = q.reduce(u);
        bool zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
        if (zero)
            throw Error(ErrorCode::LoopInQuotient,
                        "relevant vector " + format_coords(u) + " lies in the sublattice");
    }
    if (q.index_ll() < 0 || q.index_ll() > static_cast<long long>(1) << 22)
        throw Error(ErrorCode::TooManyVertices, "quotient too large: index " + q.index().str());
    long long n = q.index_ll();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (long long i = 0; i < n; ++i) labels.push_back(format_coords(q.rep(i)));
    FiniteGraph g(static_cast<int>(n), std::move(labels));
    for (long long i = 0; i < n; ++i) {
        IVec r = q.rep(i);
        for (const IVec& u : vor.vectors) {
            IVec s(r.size());
            for (size_t k = 0; k < s.size(); ++k) s[k] = r[k] + u[k];
            long long j = q.coset_index(s);
            if (i < j) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    g.finalize();
    return g;
}

FiniteGraph coset_min_vector_graph(const Lattice& sup, const IMat& sub_coords,
                                   const IVec& coset) {
    Lattice sub = make_lattice(mat_mul(to_rational(sub_coords), sup.basis));
    // coset vector in sublattice coordinates
    QMat inv = inverse(to_rational(sub_coords));
    QVec c(sup.dim);
    for (int i = 0; i < sup.dim; ++i) c[i] = Rat(coset[i]);
    QVec t = vec_mat(c, inv);
    bool integral = true;
    for (const Rat& x : t)
        if (!is_integer(x)) integral = false;
    if (integral)
        throw Error(ErrorCode::BadInput, "coset class is zero in sup/sub");
    CosetMinima m = shortest_vectors_in_coset(sub, t);
    // map back to sup coordinates (integral by construction)
    std::vector<IVec> pts;
    for (const QVec& v : m.vectors) {
        QVec w = vec_mat(v, to_rational(sub_coords));
        IVec iw(w.size());
        for (size_t k = 0; k < w.size(); ++k) {
            if (!is_integer(w[k]))
                throw Error(ErrorCode::BadInput, "coset minimum not in sup coordinates");
            iw[k] = numer(w[k]);
        }
        pts.push_back(std::move(iw));
    }
    std::sort(pts.begin(), pts.end());
    // minimal nonzero pairwise distance
    Rat min_d2(0);
    bool have = false;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            IVec d(pts[i].size());
            for (size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[j][k];
            Rat n2 = sup.norm2(d);
            if (!have || n2 < min_d2) {
                min_d2 = n2;
                have = true;
            }
        }
    std::vector<std::string> labels;
    for (const IVec& p : pts) labels.push_back(format_coords(p));
    FiniteGraph g(static_cast<int>(pts.size()), std::move(labels));
    if (have) {
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                IVec d(pts[i].size());
                for (size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[j][k];
                if (sup.norm2(d) == min_d2) g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
    }
    g.finalize();
    return g;
}

FiniteGraph half_cube_graph(int n) {
    if (n < 2) throw Error(ErrorCode::BadDimension, "half cube needs n >= 2");
    if (n > 20) throw Error(ErrorCode::TooManyVertices, "half cube too large");
    std::vector<unsigned> verts;
    for (unsigned x = 0; x < (1u << n); ++x)
        if (__builtin_popcount(x) % 2 == 0) verts.push_back(x);
    std::vector<std::string> labels;
    for (unsigned x : verts) {
        std::string s;
        for (int i = 0; i < n; ++i) s += (x >> i & 1) ? '1' : '0';
        labels.push_back(s);
    }
    FiniteGraph g(static_cast<int>(verts.size()), std::move(labels));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (__builtin_popcount(verts[i] ^ verts[j]) == 2)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    g.finalize();
    return g;
}

} // namespace latchroma

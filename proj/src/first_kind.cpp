#include "latchroma/first_kind.hpp"

#include <algorithm>
#include <functional>

#include "latchroma/solve.hpp"

namespace latchroma {

namespace {

bool subset_connected(const FiniteGraph& g, const std::vector<int>& verts) {
    if (verts.empty()) return false;
    std::vector<char> in(g.n_vertices(), 0), seen(g.n_vertices(), 0);
    for (int v : verts) in[v] = 1;
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (in[u] && !seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == verts.size();
}

bool graph_connected(const FiniteGraph& g) {
    std::vector<int> all(g.n_vertices());
    for (int i = 0; i < g.n_vertices(); ++i) all[i] = i;
    return subset_connected(g, all);
}

IVec coords_of_subset(int n, unsigned mask_without_zero) {
    // v_I for 0 not in I: coordinates are the indicator of I in v_1..v_n
    IVec c(n, Int(0));
    for (int i = 1; i <= n; ++i)
        if (mask_without_zero >> i & 1) c[i - 1] = 1;
    return c;
}

} // namespace

Lattice Superbasis::span_lattice() const {
    QMat b(n(), vectors.cols());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < vectors.cols(); ++j) b(i, j) = vectors(i + 1, j);
    return make_lattice(b);
}

Superbasis check_obtuse_superbasis(const QMat& vectors) {
    int count = vectors.rows();
    if (count < 2) throw Error(ErrorCode::BadInput, "superbasis needs at least 2 vectors");
    int n = count - 1;
    if (vectors.cols() < n)
        throw Error(ErrorCode::NotABasis, "ambient dimension below rank");
    for (int j = 0; j < vectors.cols(); ++j) {
        Rat s(0);
        for (int i = 0; i < count; ++i) s += vectors(i, j);
        if (s != 0) throw Error(ErrorCode::SumNotZero, "superbasis vectors do not sum to zero");
    }
    Superbasis sb;
    sb.vectors = vectors;
    sb.selling = mat_mul(vectors, transpose(vectors));
    // v_1..v_n must be a basis
    QMat sub(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub(i, j) = sb.selling(i + 1, j + 1);
    if (det(sub) <= 0) throw Error(ErrorCode::NotABasis, "v_1..v_n are not independent");
    sb.strictly_obtuse = true;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            if (sb.selling(i, j) > 0)
                throw Error(ErrorCode::PositiveInnerProduct,
                            "positive Selling parameter at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            if (sb.selling(i, j) == 0) sb.strictly_obtuse = false;
        }
    return sb;
}

FiniteGraph delaunay_graph(const Superbasis& sb) {
    int count = sb.n() + 1;
    std::vector<std::string> labels;
    for (int i = 0; i < count; ++i) labels.push_back("v" + std::to_string(i));
    FiniteGraph g(count, std::move(labels));
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (sb.selling(i, j) < 0) g.add_edge(i, j);
    g.finalize();
    return g;
}

RelevantVectorSet relevant_from_cuts(const Superbasis& sb) {
    FiniteGraph g = delaunay_graph(sb);
    if (!graph_connected(g))
        throw Error(ErrorCode::DisconnectedInput,
                    "Delaunay graph disconnected; split into blocks first");
    int n = sb.n();
    Lattice span = sb.span_lattice();
    RelevantVectorSet out;
    // iterate cuts via the side containing vertex 0; the relevant pair is
    // +-v_I for I = the other side (so coordinates are subset indicators)
    for (unsigned mask = 1; mask < (1u << (n + 1)); mask += 2) {
        std::vector<int> inside, outside;
        for (int v = 0; v <= n; ++v)
            ((mask >> v & 1) ? inside : outside).push_back(v);
        if (outside.empty()) continue;
        if (!subset_connected(g, inside) || !subset_connected(g, outside)) continue;
        IVec c(n, Int(0));
        for (int v : outside)
            if (v >= 1) c[v - 1] = 1; // v_I for I = outside (0 not in I)
        IVec neg(n);
        for (int i = 0; i < n; ++i) neg[i] = -c[i];
        Rat n2 = span.norm2(c);
        out.vectors.push_back(c);
        out.norm2.push_back(n2);
        out.vectors.push_back(neg);
        out.norm2.push_back(n2);
    }
    // order deterministically
    std::vector<size_t> idx(out.vectors.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (out.norm2[a] != out.norm2[b]) return out.norm2[a] < out.norm2[b];
        return out.vectors[a] < out.vectors[b];
    });
    RelevantVectorSet sorted;
    for (size_t i : idx) {
        sorted.vectors.push_back(out.vectors[i]);
        sorted.norm2.push_back(out.norm2[i]);
    }
    sorted.count = sorted.vectors.size();
    return sorted;
}

std::vector<IVec> cycle_clique_lower_bound(const Superbasis& sb) {
    FiniteGraph g = delaunay_graph(sb);
    if (!graph_connected(g))
        throw Error(ErrorCode::DisconnectedInput, "Delaunay graph disconnected");
    CycleResult cy = longest_cycle(g);
    if (cy.length == 0) throw Error(ErrorCode::NoCycle, "Delaunay graph is acyclic");
    int n = sb.n();
    int sigma = cy.length;
    const std::vector<int>& cycle = cy.vertices;
    std::vector<char> on_cycle(n + 1, 0);
    for (int v : cycle) on_cycle[v] = 1;

    // connectors(k): cycle vertices reachable from k via paths avoiding the
    // cycle except at the endpoint; for k on the cycle, just {k}.
    std::vector<std::vector<char>> connectors(n + 1, std::vector<char>(sigma, 0));
    std::vector<int> cycle_pos(n + 1, -1);
    for (int p = 0; p < sigma; ++p) cycle_pos[cycle[p]] = p;
    for (int k = 0; k <= n; ++k) {
        if (on_cycle[k]) {
            connectors[k][cycle_pos[k]] = 1;
            continue;
        }
        // component of k in G minus cycle
        std::vector<char> seen(n + 1, 0);
        std::vector<int> stack{k};
        seen[k] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (on_cycle[u]) {
                    connectors[k][cycle_pos[u]] = 1;
                } else if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }

    RelevantVectorSet rel = relevant_from_cuts(sb);
    Lattice span = sb.span_lattice();
    std::vector<IVec> points;
    for (int ell = 0; ell < sigma; ++ell) {
        // I_ell: vertices whose connectors all lie in cycle positions 0..ell
        IVec u(n, Int(0));
        for (int k = 0; k <= n; ++k) {
            bool all_in = true;
            for (int p = ell + 1; p < sigma; ++p)
                if (connectors[k][p]) all_in = false;
            if (all_in && k >= 1) u[k - 1] += 1;
            // k == 0 contributes v_0 = -sum v_i
            if (all_in && k == 0)
                for (int i = 0; i < n; ++i) u[i] -= 1;
        }
        points.push_back(u);
    }
    // pairwise differences must be relevant vectors
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b) {
            IVec d(n);
            for (int i = 0; i < n; ++i) d[i] = points[a][i] - points[b][i];
            if (!contains_vector(rel, d))
                throw Error(ErrorCode::BadInput,
                            "clique construction produced a non-relevant difference");
        }
    return points;
}

QuotientColoring mod_coloring(const Superbasis& sb) {
    int n = sb.n();
    int m = n + 1;
    // kernel of x -> sum x_i mod (n+1)
    IMat sub(n, n);
    sub(0, 0) = m;
    for (int i = 1; i < n; ++i) {
        sub(i, 0) = -1;
        sub(i, i) = 1;
    }
    QuotientGroup q(sub);
    QuotientColoring cert;
    cert.sublattice = sub;
    cert.k = m;
    cert.colors.resize(q.index_ll());
    for (long long i = 0; i < q.index_ll(); ++i) {
        IVec r = q.rep(i);
        Int s(0);
        for (const Int& x : r) s += x;
        Int mod = s % m;
        if (mod < 0) mod += m;
        cert.colors[i] = mod.convert_to<int>();
    }
    return cert;
}

BiconnectedSplit biconnected_split(const Superbasis& sb) {
    FiniteGraph g = delaunay_graph(sb);
    int count = sb.n() + 1;
    // Tarjan block decomposition via edge stack
    std::vector<int> disc(count, -1), low(count, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[u] < 0) {
                estack.emplace_back(v, u);
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    std::vector<std::pair<int, int>> blk;
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == std::make_pair(v, u)) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[u] < disc[v]) {
                estack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        }
    };
    for (int v = 0; v < count; ++v)
        if (disc[v] < 0 && g.degree(v) > 0) dfs(v, -1);

    BiconnectedSplit out;
    for (auto& blk : blocks) {
        std::vector<int> verts;
        for (auto [a, b] : blk) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.block_vertices.push_back(verts);
        // Selling parameters of the summand: restriction of the block
        int bn = static_cast<int>(verts.size()) - 1;
        // gram of the block's projected v_i for i in verts \ {last}
        QMat gram(bn, bn);
        for (int i = 0; i < bn; ++i)
            for (int j = 0; j < bn; ++j) {
                if (i == j) {
                    Rat diag(0);
                    for (int t = 0; t <= bn; ++t)
                        if (t != i) diag -= sb.selling(verts[i], verts[t]);
                    gram(i, i) = diag;
                } else {
                    gram(i, j) = sb.selling(verts[i], verts[j]);
                }
            }
        Lattice block_lat = lattice_from_gram(gram);
        // superbasis of the summand: rows of the basis plus the negated sum
        QMat vecs(bn + 1, block_lat.ambient_dim);
        for (int i = 0; i < bn; ++i)
            for (int j = 0; j < block_lat.ambient_dim; ++j) vecs(i + 1, j) = block_lat.basis(i, j);
        for (int j = 0; j < block_lat.ambient_dim; ++j) {
            Rat s(0);
            for (int i = 0; i < bn; ++i) s += block_lat.basis(i, j);
            vecs(0, j) = -s;
        }
        out.blocks.push_back(check_obtuse_superbasis(vecs));
        out.upper_bound = std::max(out.upper_bound, static_cast<int>(verts.size()));
    }
    return out;
}

Superbasis superbasis_from_graph(int n_vertices,
                                 const std::vector<std::pair<int, int>>& edges) {
    // Laplacian minor of the unit-weight graph = Gram of v_1..v_n
    int n = n_vertices - 1;
    QMat gram(n, n);
    auto has_edge = [&](int a, int b) {
        for (auto [x, y] : edges)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    for (int i = 1; i <= n; ++i) {
        Rat deg(0);
        for (int t = 0; t < n_vertices; ++t)
            if (t != i && has_edge(i, t)) deg += 1;
        gram(i - 1, i - 1) = deg;
        for (int j = 1; j <= n; ++j)
            if (j != i) gram(i - 1, j - 1) = has_edge(i, j) ? Rat(-1) : Rat(0);
    }
    Lattice l = lattice_from_gram(gram);
    QMat vecs(n + 1, l.ambient_dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < l.ambient_dim; ++j) vecs(i + 1, j) = l.basis(i, j);
    for (int j = 0; j < l.ambient_dim; ++j) {
        Rat s(0);
        for (int i = 0; i < n; ++i) s += l.basis(i, j);
        vecs(0, j) = -s;
    }
    return check_obtuse_superbasis(vecs);
}

} // namespace latchroma

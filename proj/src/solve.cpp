#include "latchroma/solve.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace latchroma {

namespace {

struct BudgetExceeded {};

std::vector<int> greedy_clique_from(const FiniteGraph& g, int start,
                                    const std::vector<int>& order) {
    std::vector<int> clique{start};
    for (int v : order) {
        if (v == start) continue;
        bool ok = true;
        for (int c : clique)
            if (!g.adjacent(v, c)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return clique;
}

std::vector<int> greedy_clique(const FiniteGraph& g) {
    int n = g.n_vertices();
    if (n == 0) return {};
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> best;
    int tries = std::min(n, 32);
    for (int t = 0; t < tries; ++t) {
        auto c = greedy_clique_from(g, order[t], order);
        if (c.size() > best.size()) best = c;
    }
    std::sort(best.begin(), best.end());
    return best;
}

// Sequential greedy coloring in the given vertex order.
int greedy_color(const FiniteGraph& g, const std::vector<int>& order, std::vector<int>* out) {
    int n = g.n_vertices();
    std::vector<int> colors(n, -1);
    int used = 0;
    std::vector<char> taken;
    for (int v : order) {
        taken.assign(used + 1, 0);
        for (int u : g.neighbors(v))
            if (colors[u] >= 0) taken[colors[u]] = 1;
        int c = 0;
        while (c < used && taken[c]) ++c;
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    *out = colors;
    return used;
}

// Iterated greedy: recolor with color classes fed back in permuted order.
int iterated_greedy(const FiniteGraph& g, std::vector<int>* colors, int rounds) {
    int n = g.n_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = greedy_color(g, order, colors);
    std::mt19937 rng(0xB5EEDu);
    std::vector<int> work = *colors;
    for (int r = 0; r < rounds; ++r) {
        // group vertices by color class, permute class order
        std::vector<std::vector<int>> classes(best);
        for (int v = 0; v < n; ++v) classes[work[v]].push_back(v);
        std::shuffle(classes.begin(), classes.end(), rng);
        std::vector<int> ord;
        ord.reserve(n);
        // largest classes first keeps the count from growing
        std::stable_sort(classes.begin(), classes.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (auto& cls : classes) {
            std::shuffle(cls.begin(), cls.end(), rng);
            for (int v : cls) ord.push_back(v);
        }
        std::vector<int> cand;
        int used = greedy_color(g, ord, &cand);
        if (used <= best) {
            best = used;
            work = cand;
            if (used < static_cast<int>(classes.size())) *colors = cand;
        }
    }
    *colors = work;
    return best;
}

struct DsaturState {
    const FiniteGraph* g;
    int n;
    std::vector<int> colors;
    std::vector<int> best_coloring;
    int best_k;          // current upper bound (size of best found coloring)
    int lower;           // clique lower bound
    long long nodes = 0;
    long long budget;
    bool budget_hit = false;

    std::vector<std::vector<int>> sat_count; // per vertex, per color: neighbors with color

    void assign(int v, int c) {
        colors[v] = c;
        for (int u : g->neighbors(v))
            if (colors[u] < 0) ++sat_count[u][c];
    }
    void unassign(int v, int c) {
        colors[v] = -1;
        for (int u : g->neighbors(v))
            if (colors[u] < 0) --sat_count[u][c];
    }
    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < best_k; ++c)
            if (sat_count[v][c] > 0) ++s;
        return s;
    }

    void search(int colored, int used) {
        if (used >= best_k) return; // cannot improve
        if (colored == n) {
            best_k = used;
            best_coloring = colors;
            return;
        }
        if (++nodes > budget) {
            budget_hit = true;
            throw BudgetExceeded{};
        }
        // pick uncolored vertex with max saturation, tie: max degree, then index
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0) continue;
            int s = saturation(v);
            if (s > pick_sat ||
                (s == pick_sat && g->degree(v) > g->degree(pick))) {
                pick = v;
                pick_sat = s;
            }
        }
        int limit = std::min(used + 1, best_k - 1);
        for (int c = 0; c < limit; ++c) {
            if (sat_count[pick][c] > 0) continue;
            assign(pick, c);
            search(colored + 1, std::max(used, c + 1));
            unassign(pick, c);
            if (best_k <= lower) return; // optimal already
        }
    }
};

} // namespace

bool is_proper_coloring(const FiniteGraph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n_vertices()) return false;
    for (auto [a, b] : g.edges())
        if (colors[a] < 0 || colors[b] < 0 || colors[a] == colors[b]) return false;
    return true;
}

ColoringResult chromatic_number_exact(const FiniteGraph& g, long long node_budget) {
    ColoringResult res;
    int n = g.n_vertices();
    if (n == 0) {
        res.exact = true;
        return res;
    }
    if (g.n_edges() == 0) {
        res.lower = res.upper = 1;
        res.coloring.assign(n, 0);
        res.exact = true;
        return res;
    }
    std::vector<int> clique = greedy_clique(g);
    res.lower = static_cast<int>(clique.size());

    std::vector<int> ub_coloring;
    int ub = iterated_greedy(g, &ub_coloring, std::min(200, 20 + n));
    res.upper = ub;
    res.coloring = ub_coloring;
    if (ub == res.lower) {
        res.exact = true;
        return res;
    }

    DsaturState st;
    st.g = &g;
    st.n = n;
    st.colors.assign(n, -1);
    st.best_k = ub;
    st.best_coloring = ub_coloring;
    st.lower = res.lower;
    st.budget = node_budget;
    st.sat_count.assign(n, std::vector<int>(ub + 1, 0));
    // precolor the seed clique
    int pre = 0;
    for (int v : clique) st.assign(v, pre++);
    try {
        st.search(pre, pre);
        res.exact = true;
    } catch (const BudgetExceeded&) {
        res.exact = false;
    }
    res.upper = st.best_k;
    res.coloring = st.best_coloring;
    res.nodes = st.nodes;
    if (res.exact) res.lower = res.upper;
    if (!is_proper_coloring(g, res.coloring))
        throw Error(ErrorCode::BadInput, "solver produced an improper coloring");
    return res;
}

namespace {

struct CliqueState {
    const FiniteGraph* g;
    std::vector<int> best, cur;
    long long nodes = 0, budget = 0;
    bool budget_hit = false;

    // greedy coloring bound on the candidate set
    int color_bound(const std::vector<int>& cand) const {
        std::vector<int> color(cand.size(), -1);
        int used = 0;
        for (size_t i = 0; i < cand.size(); ++i) {
            std::vector<char> taken(used + 1, 0);
            for (size_t j = 0; j < i; ++j)
                if (g->adjacent(cand[i], cand[j])) taken[color[j]] = 1;
            int c = 0;
            while (taken[c]) ++c;
            color[i] = c;
            used = std::max(used, c + 1);
        }
        return used;
    }

    void expand(std::vector<int>& cand) {
        if (++nodes > budget) {
            budget_hit = true;
            throw BudgetExceeded{};
        }
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + cand.size() <= best.size()) return;
        if (static_cast<int>(cur.size()) + color_bound(cand) <= static_cast<int>(best.size()))
            return;
        while (!cand.empty()) {
            if (cur.size() + cand.size() <= best.size()) return;
            int v = cand.back();
            cand.pop_back();
            cur.push_back(v);
            std::vector<int> next;
            for (int u : cand)
                if (g->adjacent(u, v)) next.push_back(u);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

CliqueResult max_clique(const FiniteGraph& g, long long node_budget) {
    CliqueResult res;
    int n = g.n_vertices();
    if (n == 0) {
        res.exact = true;
        return res;
    }
    CliqueState st;
    st.g = &g;
    st.budget = node_budget;
    st.best = greedy_clique(g);
    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    // degeneracy-ish order: low degree last (popped first)
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    try {
        st.expand(cand);
        res.exact = true;
    } catch (const BudgetExceeded&) {
        res.exact = false;
    }
    res.vertices = st.best;
    std::sort(res.vertices.begin(), res.vertices.end());
    res.nodes = st.nodes;
    return res;
}

namespace {

struct CycleState {
    const FiniteGraph* g;
    int n;
    int start;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<int> best;
    long long nodes = 0, budget = 0;

    void dfs(int v) {
        if (++nodes > budget) throw BudgetExceeded{};
        for (int u : g->neighbors(v)) {
            if (u == start && path.size() >= 3) {
                if (path.size() > best.size()) best = path;
            }
            if (u <= start || on_path[u]) continue;
            on_path[u] = 1;
            path.push_back(u);
            dfs(u);
            path.pop_back();
            on_path[u] = 0;
        }
    }
};

} // namespace

CycleResult longest_cycle(const FiniteGraph& g, long long node_budget) {
    CycleResult res;
    int n = g.n_vertices();
    CycleState st;
    st.g = &g;
    st.n = n;
    st.budget = node_budget;
    st.on_path.assign(n, 0);
    res.exact = true;
    for (int s = 0; s < n; ++s) {
        if (static_cast<size_t>(n - s) <= st.best.size()) break;
        st.start = s;
        st.on_path.assign(n, 0);
        st.on_path[s] = 1;
        st.path = {s};
        try {
            st.dfs(s);
        } catch (const BudgetExceeded&) {
            res.exact = false;
            break;
        }
    }
    res.length = static_cast<int>(st.best.size());
    res.vertices = st.best;
    res.nodes = st.nodes;
    return res;
}

} // namespace latchroma

#pragma once

// Instance generators: classic families, seeded random families, and the
// hard-instance constructions used by the test suites.

#include <string>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/rng.hpp"

namespace eqcol {

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    EQCOL_CHECK(a >= 0 && b >= 0);
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// K_{1,t}: center 0, leaves 1..t.
inline Graph star(int t) {
    EQCOL_CHECK(t >= 0);
    Graph g(t + 1);
    for (int v = 1; v <= t; ++v) g.add_edge(0, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    EQCOL_CHECK_MSG(n >= 3, "a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (int u = 0; u < a.n; ++u) g.adj[u] = a.adj[u];
    for (int u = 0; u < b.n; ++u)
        for (int v : b.adj[u])
            if (u < v) g.add_edge(a.n + u, a.n + v);
    return g;
}

// Uniform random labelled tree grown vertex by vertex: vertex i >= 1 attaches
// to a uniformly drawn earlier vertex.
inline Graph random_tree(int n, std::uint64_t seed) {
    EQCOL_CHECK(n >= 1);
    Graph g(n);
    Lcg rng(seed);
    for (int i = 1; i < n; ++i)
        g.add_edge(i, static_cast<int>(rng.next_below(i)));
    return g;
}

// Random graph with at most m_target edges and max degree <= dmax: repeatedly
// draws endpoint pairs and keeps a pair iff it is a fresh non-loop edge whose
// endpoints are below the degree cap.  The attempt count is fixed (20*m + 100)
// so the result is deterministic in the seed; the graph may end up with fewer
// than m_target edges on dense requests.
inline Graph random_graph_bounded_degree(int n, int dmax, long long m_target,
                                         std::uint64_t seed) {
    EQCOL_CHECK(n >= 0 && dmax >= 0 && m_target >= 0);
    Graph g(n);
    if (n < 2) return g;
    Lcg rng(seed);
    long long added = 0;
    long long attempts = 20 * m_target + 100;
    for (long long t = 0; t < attempts && added < m_target; ++t) {
        int u = static_cast<int>(rng.next_below(n));
        int v = static_cast<int>(rng.next_below(n));
        if (u == v || g.adjacent(u, v)) continue;
        if (g.degree(u) >= dmax || g.degree(v) >= dmax) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

// K_d joined completely to an independent set of size dmax-d+1 (so the clique
// vertices have degree exactly dmax).  Equitable k-colorability of this graph
// flips exactly at k = ceil((dmax+d+1)/2).
inline Graph degenerate_example(int d, int dmax) {
    EQCOL_CHECK(1 <= d && d <= dmax);
    int t = dmax - d + 1;
    Graph g(d + t);
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) g.add_edge(u, v);
    for (int u = 0; u < d; ++u)
        for (int i = 0; i < t; ++i) g.add_edge(u, d + i);
    return g;
}

// K_n minus the edges of a clique on vertices 0..2(n-k)-2.  With k < n <= 2k
// this is the densest graph on n vertices that is still equitably k-colorable.
inline Graph kn_minus_clique(int n, int k) {
    EQCOL_CHECK(1 <= k && k <= n);
    Graph g = complete_graph(n);
    int hole = 2 * (n - k) - 1;
    if (hole < 2) return g;
    EQCOL_CHECK(hole <= n);
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u])
            if (u < v && !(u < hole && v < hole)) h.add_edge(u, v);
    return h;
}

// --- the G_k family -------------------------------------------------------
//
// k+1 groups, each a "brush": group i has a handle of k-1 vertices and a head
// of (k-1)(k^2-k-1) independent vertices joined completely to the handle.
// Group 0's handle is a clique, and every other handle is joined completely
// to it.  Total size (k+1)k(k-1)^2.  With the list assignment below, every
// proper coloring from the lists loads two whole heads onto one color, which
// overshoots ceil(n/k); the graph is therefore not equitably k-choosable even
// though it is k-choosable.

struct GkInstance {
    Graph g;
    Lists lists;                 // k colors per vertex, palette {1..2k-1}
    std::vector<int> handle0;    // the clique handle
    std::vector<std::vector<int>> handle;  // handle[i], i in 1..k (index i-1)
    std::vector<std::vector<int>> head;    // head[i], i in 0..k
};

inline GkInstance gk_example(int k) {
    EQCOL_CHECK(k >= 3);
    int hlen = k - 1;
    int head_len = (k - 1) * (k * k - k - 1);
    GkInstance inst;
    Graph& g = inst.g;
    g = Graph((k + 1) * (hlen + head_len));

    int next = 0;
    auto take = [&](int cnt) {
        std::vector<int> ids(cnt);
        for (int i = 0; i < cnt; ++i) ids[i] = next++;
        return ids;
    };

    inst.handle0 = take(hlen);
    inst.head.push_back(take(head_len));
    for (int i = 1; i <= k; ++i) {
        inst.handle.push_back(take(hlen));
        inst.head.push_back(take(head_len));
    }
    EQCOL_CHECK(next == g.n);

    for (int u : inst.handle0)
        for (int v : inst.handle0)
            if (u < v) g.add_edge(u, v);
    for (int u : inst.head[0])
        for (int v : inst.handle0) g.add_edge(u, v);
    for (int i = 1; i <= k; ++i) {
        for (int u : inst.handle[i - 1])
            for (int v : inst.handle0) g.add_edge(u, v);
        for (int u : inst.head[i])
            for (int v : inst.handle[i - 1]) g.add_edge(u, v);
    }

    // Lists.  Group 0 sees {1..k}.  Handle vertex j (j = 1..k-1) of group i
    // sees ({1..k} - {i}) + {k+j}; head i sees {k+1..2k-1} + {i}.
    inst.lists.assign(g.n, {});
    auto set_list = [&](const std::vector<int>& verts, const std::vector<int>& l) {
        for (int v : verts) inst.lists[v] = l;
    };
    std::vector<int> base;
    for (int c = 1; c <= k; ++c) base.push_back(c);
    set_list(inst.handle0, base);
    set_list(inst.head[0], base);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= hlen; ++j) {
            std::vector<int> l;
            for (int c = 1; c <= k; ++c)
                if (c != i) l.push_back(c);
            l.push_back(k + j);
            std::sort(l.begin(), l.end());
            inst.lists[inst.handle[i - 1][j - 1]] = l;
        }
        std::vector<int> l;
        for (int c = k + 1; c <= 2 * k - 1; ++c) l.push_back(c);
        l.push_back(i);
        std::sort(l.begin(), l.end());
        set_list(inst.head[i], l);
    }
    return inst;
}

// --- star clusters (Ore-degree stress family) -----------------------------
//
// q stars whose centers have degree in [k, 2k-2], plus random edges between
// leaves of different stars, capped so that every edge xy keeps
// d(x)+d(y) <= 2k-1.  The result always has max degree >= k (too big for the
// max-degree solver) and Ore degree < 2k (fine for the Ore solver).
inline Graph glued_stars(int k, int q, int extra_edges, std::uint64_t seed) {
    EQCOL_CHECK(k >= 2 && q >= 1 && extra_edges >= 0);
    Lcg rng(seed);
    std::vector<int> center(q), sz(q);
    int n = 0;
    for (int i = 0; i < q; ++i) {
        int d = k + static_cast<int>(rng.next_below(k - 1));  // in [k, 2k-2]
        center[i] = n;
        sz[i] = d;
        n += d + 1;
    }
    Graph g(n);
    std::vector<int> owner(n);  // which star's center dominates this vertex
    for (int i = 0; i < q; ++i) {
        owner[center[i]] = i;
        for (int j = 1; j <= sz[i]; ++j) {
            g.add_edge(center[i], center[i] + j);
            owner[center[i] + j] = i;
        }
    }
    long long attempts = 20LL * extra_edges + 100;
    int added = 0;
    for (long long t = 0; t < attempts && added < extra_edges; ++t) {
        int u = static_cast<int>(rng.next_below(n));
        int v = static_cast<int>(rng.next_below(n));
        if (u == v || g.adjacent(u, v)) continue;
        if (u == center[owner[u]] || v == center[owner[v]]) continue;
        if (owner[u] == owner[v]) continue;
        // Keep leaf+leaf sums below 2k and each center+leaf edge's sum too.
        auto ok_after = [&](int leaf) {
            int d_new = g.degree(leaf) + 1;
            int dc = sz[owner[leaf]];
            return d_new + dc <= 2 * k - 1 && d_new <= k - 1;
        };
        if (!ok_after(u) || !ok_after(v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

// --- CLI dispatcher ---------------------------------------------------------

// Families and their positional parameters:
//   complete n | bipartite a b | star t | path n | cycle n | edgeless n
//   tree n | bounded n dmax m | degenerate d dmax | gk k
//   knminusclique n k | gluedstars k q extra
// Random families consume the seed; the rest ignore it.
inline Graph generate(const std::string& family,
                      const std::vector<long long>& params, std::uint64_t seed) {
    auto want = [&](size_t cnt) {
        if (params.size() != cnt)
            throw precondition_error("family '" + family + "' expects " +
                                     std::to_string(cnt) + " parameter(s), got " +
                                     std::to_string(params.size()));
    };
    auto p = [&](size_t i) { return static_cast<int>(params[i]); };
    if (family == "complete") { want(1); return complete_graph(p(0)); }
    if (family == "bipartite") { want(2); return complete_bipartite(p(0), p(1)); }
    if (family == "star") { want(1); return star(p(0)); }
    if (family == "path") { want(1); return path_graph(p(0)); }
    if (family == "cycle") { want(1); return cycle_graph(p(0)); }
    if (family == "edgeless") { want(1); return edgeless(p(0)); }
    if (family == "tree") { want(1); return random_tree(p(0), seed); }
    if (family == "bounded") { want(3); return random_graph_bounded_degree(p(0), p(1), params[2], seed); }
    if (family == "degenerate") { want(2); return degenerate_example(p(0), p(1)); }
    if (family == "gk") { want(1); return gk_example(p(0)).g; }
    if (family == "knminusclique") { want(2); return kn_minus_clique(p(0), p(1)); }
    if (family == "gluedstars") { want(3); return glued_stars(p(0), p(1), p(2), seed); }
    throw precondition_error("unknown family '" + family + "'");
}

}  // namespace eqcol

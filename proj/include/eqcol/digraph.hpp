#pragma once

// The auxiliary color digraph and the bookkeeping both rebalancing solvers
// share.  Classes of a k-coloring are the nodes; there is an arc s -> t when
// some vertex of class s has no neighbor in class t (it could move there
// keeping the coloring proper).  The stored witness is the lowest such
// vertex.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/graph.hpp"

namespace eqcol {

struct ColorDigraph {
    int k = 0;
    std::vector<std::vector<unsigned char>> arc;  // arc[s][t], no self-arcs
    std::vector<std::vector<int>> witness;        // lowest witness or -1
};

// A coloring with the per-vertex class-neighbor counts kept incrementally.
struct WorkColoring {
    Coloring f;
    int k = 0;
    std::vector<int> sz;               // class sizes
    std::vector<std::vector<int>> cnt; // cnt[v][c] = #neighbors of v in class c

    WorkColoring() = default;
    WorkColoring(const Graph& g, const Coloring& f_, int k_) : f(f_), k(k_) {
        EQCOL_CHECK(static_cast<int>(f.size()) == g.n);
        sz.assign(k, 0);
        cnt.assign(g.n, std::vector<int>(k, 0));
        for (int v = 0; v < g.n; ++v) {
            EQCOL_CHECK(0 <= f[v] && f[v] < k);
            ++sz[f[v]];
            for (int u : g.adj[v]) ++cnt[u][f[v]];
        }
    }

    // Recolors v, updating neighbor counts.  Properness is the caller's duty.
    void move(const Graph& g, int v, int to) {
        int from = f[v];
        EQCOL_CHECK(from != to && 0 <= to && to < k);
        for (int u : g.adj[v]) {
            --cnt[u][from];
            ++cnt[u][to];
        }
        --sz[from];
        ++sz[to];
        f[v] = to;
    }
};

inline ColorDigraph build_color_digraph(const Graph& g, const WorkColoring& wc) {
    ColorDigraph h;
    h.k = wc.k;
    h.arc.assign(wc.k, std::vector<unsigned char>(wc.k, 0));
    h.witness.assign(wc.k, std::vector<int>(wc.k, -1));
    for (int v = 0; v < g.n; ++v) {
        int s = wc.f[v];
        for (int t = 0; t < wc.k; ++t) {
            if (t == s || wc.cnt[v][t] != 0) continue;
            if (h.witness[s][t] == -1) {
                h.witness[s][t] = v;
                h.arc[s][t] = 1;
            }
        }
    }
    return h;
}

inline ColorDigraph build_color_digraph(const Graph& g, const Coloring& f, int k) {
    return build_color_digraph(g, WorkColoring(g, f, k));
}

inline ColorDigraph build_color_digraph(const Graph& g, const Coloring& f) {
    int k = 0;
    for (int c : f) k = std::max(k, c + 1);
    return build_color_digraph(g, f, k);
}

namespace detail {

// Classes from which the small class alpha0 is reachable (alpha0 included).
inline std::vector<char> classes_reaching(const ColorDigraph& h, int alpha0) {
    std::vector<char> in(h.k, 0);
    std::vector<int> queue{alpha0};
    in[alpha0] = 1;
    while (!queue.empty()) {
        int t = queue.back();
        queue.pop_back();
        for (int s = 0; s < h.k; ++s)
            if (!in[s] && h.arc[s][t]) {
                in[s] = 1;
                queue.push_back(s);
            }
    }
    return in;
}

// Shortest path from `from` to `to` in h, restricted to classes with
// allowed[c] != 0 and avoiding `banned` (-1 for none).  BFS scanning
// successors in ascending order, so ties resolve to lowest colors.  Returns
// the class sequence, empty optional if unreachable.
inline std::optional<std::vector<int>> shortest_class_path(
    const ColorDigraph& h, int from, int to, const std::vector<char>& allowed,
    int banned = -1) {
    EQCOL_CHECK(allowed[from] && allowed[to]);
    if (from == banned || to == banned) return std::nullopt;
    std::vector<int> parent(h.k, -2);
    std::vector<int> queue{from};
    parent[from] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int s = queue[head];
        if (s == to) break;
        for (int t = 0; t < h.k; ++t) {
            if (!h.arc[s][t] || t == banned || !allowed[t]) continue;
            if (parent[t] != -2) continue;
            parent[t] = s;
            queue.push_back(t);
        }
    }
    if (parent[to] == -2) return std::nullopt;
    std::vector<int> path;
    for (int c = to; c != -1; c = parent[c]) path.push_back(c);
    std::reverse(path.begin(), path.end());
    return path;
}

// Is every allowed class other than alpha0 and banned able to reach alpha0
// when `banned` is deleted?  (With banned == alpha0 the answer is "no" unless
// nothing else is allowed: a path cannot end at a deleted node.)
inline bool all_reach_avoiding(const ColorDigraph& h, int alpha0, int banned,
                               const std::vector<char>& allowed) {
    std::vector<char> in(h.k, 0);
    if (banned != alpha0) {
        in[alpha0] = 1;
        std::vector<int> queue{alpha0};
        while (!queue.empty()) {
            int t = queue.back();
            queue.pop_back();
            for (int s = 0; s < h.k; ++s)
                if (!in[s] && s != banned && allowed[s] && h.arc[s][t]) {
                    in[s] = 1;
                    queue.push_back(s);
                }
        }
    }
    for (int c = 0; c < h.k; ++c)
        if (allowed[c] && c != banned && c != alpha0 && !in[c]) return false;
    return true;
}

// Terminal classes: c (reaching alpha0) is terminal when every other class
// of the reaching set still reaches alpha0 after c is deleted.  alpha0 itself
// is terminal only when it is alone.
inline std::vector<char> terminal_classes(const ColorDigraph& h, int alpha0,
                                          const std::vector<char>& inA) {
    std::vector<char> term(h.k, 0);
    for (int c = 0; c < h.k; ++c)
        if (inA[c]) term[c] = all_reach_avoiding(h, alpha0, c, inA) ? 1 : 0;
    return term;
}

}  // namespace detail

}  // namespace eqcol

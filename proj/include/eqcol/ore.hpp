#pragma once

// Equitable coloring under an Ore-degree bound: if d(x)+d(y) < 2k for every
// edge xy, the graph is equitably k-colorable.  The repair machinery extends
// the max-degree solver: the direct cases (a chain of moves, or a movable
// solo root) are tried first; failing those, a weighted-degree argument
// singles out a solo edge wy whose endpoints can be exchanged after freshly
// recoloring the far side.  Each exchange provably moves a potential
// function, so the loop terminates; a global step cap guards it anyway.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/digraph.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/hs.hpp"

namespace eqcol {

using Rational = boost::rational<long long>;

// Snapshot of the rebalancing state for one nearly equitable coloring:
// the color digraph, the side decomposition, terminal classes, and the
// separated subset of classes the exchange weights are defined against.
struct OreState {
    const Graph* g = nullptr;
    WorkColoring wc;
    ColorDigraph h;
    int alpha0 = -1, beta0 = -1;  // small and large classes
    std::vector<char> inA;        // classes reaching alpha0
    std::vector<char> term;       // terminal classes (within the reaching side)
    std::vector<char> inA2;       // classes separated from alpha0 by alpha_l
    int a = 0, b = 0, a2 = 0;
    int alpha_l = -1;             // the separating nonterminal class
    bool case0 = false;           // a chain from beta0 to alpha0 exists
    bool case1 = false;           // some solo root can move inside the reaching side
};

namespace detail {

// Number of neighbors of v currently colored with a far-side class.
inline int bside_degree(const OreState& st, int v) {
    int d = 0;
    for (int u : st.g->adj[v])
        if (!st.inA[st.wc.f[u]]) ++d;
    return d;
}

inline bool has_solo_root_move(const Graph& g, const WorkColoring& wc,
                               const std::vector<char>& inA,
                               const std::vector<char>& term) {
    int k = wc.k;
    for (int y = 0; y < g.n; ++y) {
        if (inA[wc.f[y]]) continue;
        for (int c = 0; c < k; ++c) {
            if (!term[c] || wc.cnt[y][c] != 1) continue;
            int w = -1;
            for (int u : g.adj[y])
                if (wc.f[u] == c) { w = u; break; }
            for (int t = 0; t < k; ++t)
                if (t != c && inA[t] && wc.cnt[w][t] == 0) return true;
        }
    }
    return false;
}

}  // namespace detail

inline OreState build_ore_state(const Graph& g, const Coloring& f, int k) {
    OreState st;
    st.g = &g;
    st.wc = WorkColoring(g, f, k);
    EQCOL_CHECK(g.n % k == 0);
    int m = g.n / k;
    for (int c = 0; c < k; ++c) {
        if (st.wc.sz[c] == m - 1) st.alpha0 = c;
        if (st.wc.sz[c] == m + 1) st.beta0 = c;
    }
    EQCOL_CHECK_MSG(st.alpha0 != -1 && st.beta0 != -1,
                    "coloring is not nearly equitable");
    st.h = build_color_digraph(g, st.wc);
    st.inA = detail::classes_reaching(st.h, st.alpha0);
    for (int c = 0; c < k; ++c) (st.inA[c] ? st.a : st.b) += 1;
    st.case0 = st.inA[st.beta0] != 0;
    if (st.case0) return st;

    st.term = detail::terminal_classes(st.h, st.alpha0, st.inA);
    st.case1 = detail::has_solo_root_move(g, st.wc, st.inA, st.term);
    if (st.case1) return st;

    if (st.a == 1) {
        // The reaching side is the small class alone.  It is then terminal
        // and plays the separated role itself: solo roots live inside it and
        // the weight machinery runs with a single separated class.  (This
        // shape needs degrees >= k, so the max-degree solver never sees it.)
        st.inA2.assign(k, 0);
        st.inA2[st.alpha0] = 1;
        st.a2 = 1;
    } else {
        // Order the reaching side by distance from the small class along
        // reverse arcs; alpha_l is the farthest nonterminal class in that
        // order (the small class itself is never terminal here, so one
        // exists), and the separated set is whatever cannot reach the small
        // class once alpha_l is deleted.
        std::vector<int> dist(k, -1), order;
        order.push_back(st.alpha0);
        dist[st.alpha0] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            int t = order[head];
            for (int s = 0; s < k; ++s)
                if (dist[s] == -1 && st.inA[s] && st.h.arc[s][t]) {
                    dist[s] = dist[t] + 1;
                    order.push_back(s);
                }
        }
        EQCOL_CHECK(static_cast<int>(order.size()) == st.a);
        for (int i = st.a - 1; i >= 0; --i)
            if (!st.term[order[i]]) { st.alpha_l = order[i]; break; }
        EQCOL_CHECK_MSG(st.alpha_l != -1,
                        "no nonterminal class on the reaching side");

        // Deleting alpha_l = alpha0 cuts everything off; otherwise BFS the
        // remaining digraph backward from the small class.
        std::vector<char> reach(k, 0);
        if (st.alpha_l != st.alpha0) {
            reach[st.alpha0] = 1;
            std::vector<int> queue{st.alpha0};
            while (!queue.empty()) {
                int t = queue.back();
                queue.pop_back();
                for (int s = 0; s < k; ++s)
                    if (!reach[s] && s != st.alpha_l && st.inA[s] &&
                        st.h.arc[s][t]) {
                        reach[s] = 1;
                        queue.push_back(s);
                    }
            }
        }
        st.inA2.assign(k, 0);
        for (int c = 0; c < k; ++c)
            if (st.inA[c] && c != st.alpha_l && !reach[c]) {
                st.inA2[c] = 1;
                ++st.a2;
                EQCOL_HEAVY_MSG(st.term[c], "separated class is not terminal");
            }
        EQCOL_CHECK_MSG(st.a2 >= 1, "empty separated set");
    }

#if EQCOL_HEAVY_CHECKS
    // Degree floors that the weight argument rests on: with no direct chain,
    // every far-side vertex sees every reaching class, so its reaching-side
    // degree is at least a + a2 - (its solo count into separated classes);
    // vertices inside separated classes see all reaching classes except
    // possibly their own and the separating one.
    for (int v = 0; v < g.n; ++v) {
        int da = 0, da2solo = 0;
        for (int c = 0; c < k; ++c) {
            if (!st.inA[c]) continue;
            da += st.wc.cnt[v][c];
            if (st.inA2[c] && st.wc.cnt[v][c] == 1) ++da2solo;
        }
        if (!st.inA[st.wc.f[v]])
            EQCOL_HEAVY_MSG(da >= st.a + st.a2 - da2solo,
                            "far-side reaching degree below its floor");
        else if (st.inA2[st.wc.f[v]])
            EQCOL_HEAVY_MSG(da >= st.a - st.a2 - 1,
                            "separated-class reaching degree below its floor");
    }
#endif
    return st;
}

// Exchange weight of a far-side vertex y: each neighbor x in a separated
// class contributes b / (x's far-side degree).  Exact rational arithmetic.
inline Rational mu_weight(const OreState& st, int y) {
    EQCOL_CHECK(!st.case0 && !st.case1);
    EQCOL_CHECK(!st.inA[st.wc.f[y]]);
    Rational total(0);
    for (int x : st.g->adj[y]) {
        if (!st.inA2[st.wc.f[x]]) continue;
        int d = detail::bside_degree(st, x);
        EQCOL_CHECK(d >= 1);  // x sees y, and y is on the far side
        total += Rational(st.b, d);
    }
    return total;
}

namespace detail {

inline Coloring equitable_color_ore_impl(const Graph& g, int k, long long* steps);

// The w/y exchange: y joins w's class; the far side minus y is recolored
// from scratch with its own colors; then w lands in a far-side class, if
// necessary displacing the single obstructing vertex z to a class z does not
// see (preferring w's old class, which re-opens a direct chain).
inline Coloring swap_wy_impl(const OreState& st, int w, int y, long long* steps) {
    const Graph& g = *st.g;
    int k = st.wc.k;
    int alpha = st.wc.f[w];
    EQCOL_CHECK_MSG(!st.case0 && !st.case1, "exchange applies after the direct cases");
    EQCOL_CHECK_MSG(st.inA2[alpha] && !st.inA[st.wc.f[y]] &&
                        st.wc.cnt[y][alpha] == 1 && g.adjacent(w, y),
                    "wy is not a solo edge into a separated class");

    Coloring f2 = st.wc.f;
    std::vector<int> bcolors;
    for (int c = 0; c < k; ++c)
        if (!st.inA[c]) bcolors.push_back(c);
    int b = static_cast<int>(bcolors.size());

    // Fresh equitable b-coloring of the far side minus y.
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
        if (!st.inA[f2[v]] && v != y) verts.push_back(v);
    EQCOL_CHECK(static_cast<int>(verts.size()) == b * (g.n / k));
    Graph sub = induced_subgraph(g, verts);
    auto [sdmax, sore, sdmin] = degree_stats(sub);
    Coloring sf;
    if (sdmax < b) {
        sf = equitable_color_hs(sub, b).coloring;
    } else {
        EQCOL_CHECK_MSG(sore < 2 * b, "far side violates its Ore bound");
        sf = equitable_color_ore_impl(sub, b, steps);
    }
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        f2[verts[i]] = bcolors[sf[i]];

    f2[y] = alpha;
    f2[w] = -1;  // parked while we find it a home

    auto count_in = [&](int v, int c) {
        int cnt = 0;
        for (int u : g.adj[v])
            if (f2[u] == c) ++cnt;
        return cnt;
    };

    int dest = -1;
    for (int c : bcolors)
        if (count_in(w, c) == 0) { dest = c; break; }
    if (dest != -1) {
        f2[w] = dest;
        return f2;
    }

    // Every far-side class sees w; one of them sees it exactly once.
    int beta = -1, z = -1;
    for (int c : bcolors) {
        if (count_in(w, c) != 1) continue;
        beta = c;
        for (int u : g.adj[w])
            if (f2[u] == beta) { z = u; break; }
        break;
    }
    EQCOL_CHECK_MSG(z != -1, "no single-obstruction class for the parked vertex");

    int gamma = -1;
    if (count_in(z, alpha) == 0) {
        gamma = alpha;
    } else {
        for (int c : bcolors)
            if (c != beta && count_in(z, c) == 0) { gamma = c; break; }
    }
    EQCOL_CHECK_MSG(gamma != -1, "obstructing vertex has no free class");
    f2[z] = gamma;
    EQCOL_CHECK(count_in(w, beta) == 0);
    f2[w] = beta;
    return f2;
}

struct OreFixer {
    const Graph& g;
    WorkColoring& wc;
    long long* steps;

    // Repairs a nearly equitable coloring in place.
    void fix() {
        int k = wc.k;
        int alpha0_first = -1;
#if EQCOL_HEAVY_CHECKS
        int prev_a = -1, prev_a2 = -1;
        long long prev_a2b = -1, prev_bb = -1;
#endif
        while (true) {
            if (--*steps < 0)
                throw budget_exceeded(
                    "exchange step cap exhausted; profile " + profile_dump(wc));
            // An exchange whose displaced vertex lands in the small class
            // balances everything at once (only possible when the exchange
            // root lived there); recognize that instead of rebuilding.
            {
                bool balanced = true;
                for (int c = 0; c < k; ++c)
                    if (wc.sz[c] != g.n / k) { balanced = false; break; }
                if (balanced) return;
            }
            OreState st = build_ore_state(g, wc.f, k);
            if (alpha0_first == -1) alpha0_first = st.alpha0;
            EQCOL_CHECK(st.alpha0 == alpha0_first);  // the hole never moves

            if (st.case0) {
                auto path = shortest_class_path(st.h, st.beta0, st.alpha0, st.inA);
                EQCOL_CHECK(path.has_value());
                for (std::size_t i = 0; i + 1 < path->size(); ++i) {
                    int x = st.h.witness[(*path)[i]][(*path)[i + 1]];
                    EQCOL_CHECK(x != -1 && wc.cnt[x][(*path)[i + 1]] == 0);
#if EQCOL_HEAVY_CHECKS
                    for (int u : g.adj[x])
                        EQCOL_HEAVY_MSG(wc.f[u] != (*path)[i + 1],
                                        "witness has a neighbor in its target class");
#endif
                    wc.move(g, x, (*path)[i + 1]);
                }
                return;
            }
            if (st.case1) {
                apply_case1(st);
                return;
            }

#if EQCOL_HEAVY_CHECKS
            // Progress bookkeeping across consecutive exchanges: the reaching
            // side never shrinks, and with it fixed, either the separated-to-
            // far-side edge count drops (while a2 > b) or the far side gains
            // internal edges (once a2 <= b).
            long long a2b = 0, bb = 0;
            for (int u = 0; u < g.n; ++u)
                for (int v : g.adj[u]) {
                    if (u > v) continue;
                    bool ua2 = st.inA2[wc.f[u]], va2 = st.inA2[wc.f[v]];
                    bool ub = !st.inA[wc.f[u]], vb = !st.inA[wc.f[v]];
                    if ((ua2 && vb) || (ub && va2)) ++a2b;
                    if (ub && vb) ++bb;
                }
            if (prev_a != -1) {
                EQCOL_HEAVY_MSG(st.a >= prev_a, "reaching side shrank");
                if (st.a == prev_a) {
                    if (prev_a2 > st.b)
                        EQCOL_HEAVY_MSG(a2b < prev_a2b,
                                        "separated/far edge count failed to drop");
                    else
                        EQCOL_HEAVY_MSG(bb > prev_bb,
                                        "far-side edge count failed to grow");
                }
            }
            prev_a = st.a;
            prev_a2 = st.a2;
            prev_a2b = a2b;
            prev_bb = bb;
#endif

            // Prefer an exchange guaranteed to make structural progress: a
            // separated-class solo root with two nonadjacent leaves.
            int w = -1, y = -1;
            std::map<int, std::vector<int>> solo;
            for (int v = 0; v < g.n; ++v) {
                if (st.inA[wc.f[v]]) continue;
                for (int c = 0; c < k; ++c) {
                    if (!st.inA2[c] || wc.cnt[v][c] != 1) continue;
                    int r = -1;
                    for (int u : g.adj[v])
                        if (wc.f[u] == c) { r = u; break; }
                    solo[r].push_back(v);
                }
            }
            for (auto& [root, leaves] : solo) {
                for (std::size_t i = 0; i < leaves.size() && w == -1; ++i)
                    for (std::size_t j = i + 1; j < leaves.size(); ++j)
                        if (!g.adjacent(leaves[i], leaves[j])) {
                            w = root;
                            y = leaves[i];
                            break;
                        }
                if (w != -1) break;
            }

            if (w == -1) {
                // Weighted selection: a far-side vertex of small exchange
                // weight has a solo neighbor in a separated class whose
                // far-side degree is large; exchange those two.
                for (int v = 0; v < g.n; ++v) {
                    if (st.inA[wc.f[v]]) continue;
                    if (mu_weight(st, v) < Rational(st.a2)) { y = v; break; }
                }
                EQCOL_CHECK_MSG(y != -1, "no light far-side vertex");
                int best_deg = -1;
                for (int c = 0; c < k; ++c) {
                    if (!st.inA2[c] || wc.cnt[y][c] != 1) continue;
                    int x = -1;
                    for (int u : g.adj[y])
                        if (wc.f[u] == c) { x = u; break; }
                    int d = bside_degree(st, x);
                    if (d > best_deg || (d == best_deg && x < w)) {
                        best_deg = d;
                        w = x;
                    }
                }
                EQCOL_CHECK_MSG(w != -1, "light vertex has no solo separated "
                                         "neighbor");
            }

            Coloring next = swap_wy_impl(st, w, y, steps);
            wc = WorkColoring(g, next, k);
        }
    }

    // Same composite as the max-degree Case 1, but the far side minus the
    // leaf is recolored from scratch rather than recursively repaired.
    void apply_case1(const OreState& st) {
        int k = wc.k;
        int w = -1, alpha = -1, y = -1;
        std::map<int, std::vector<int>> solo;
        for (int v = 0; v < g.n; ++v) {
            if (st.inA[wc.f[v]]) continue;
            for (int c = 0; c < k; ++c) {
                if (!st.term[c] || wc.cnt[v][c] != 1) continue;
                int r = -1;
                for (int u : g.adj[v])
                    if (wc.f[u] == c) { r = u; break; }
                solo[r].push_back(v);
            }
        }
        for (auto& [root, leaves] : solo) {
            for (int t = 0; t < k; ++t)
                if (t != wc.f[root] && st.inA[t] && wc.cnt[root][t] == 0) {
                    w = root;
                    alpha = t;
                    y = leaves.front();
                    break;
                }
            if (w != -1) break;
        }
        EQCOL_CHECK(w != -1);

        int omega = wc.f[w];
        int beta_y = wc.f[y];
        wc.move(g, w, alpha);
        if (alpha != st.alpha0) {
            auto path = shortest_class_path(st.h, alpha, st.alpha0, st.inA, omega);
            EQCOL_CHECK(path.has_value());
            for (std::size_t i = 0; i + 1 < path->size(); ++i) {
                int x = st.h.witness[(*path)[i]][(*path)[i + 1]];
                EQCOL_CHECK(x != -1 && wc.cnt[x][(*path)[i + 1]] == 0);
#if EQCOL_HEAVY_CHECKS
                for (int u : g.adj[x])
                    EQCOL_HEAVY_MSG(wc.f[u] != (*path)[i + 1],
                                    "witness has a neighbor in its target class");
#endif
                wc.move(g, x, (*path)[i + 1]);
            }
        }
        EQCOL_CHECK(wc.cnt[y][omega] == 0);
        wc.move(g, y, omega);
        if (beta_y == st.beta0) return;  // far side balanced by y's departure

        std::vector<int> bcolors, verts;
        for (int c = 0; c < k; ++c)
            if (!st.inA[c]) bcolors.push_back(c);
        int b = static_cast<int>(bcolors.size());
        for (int v = 0; v < g.n; ++v)
            if (!st.inA[wc.f[v]]) verts.push_back(v);
        Graph sub = induced_subgraph(g, verts);
        auto [sdmax, sore, sdmin] = degree_stats(sub);
        Coloring sf;
        if (sdmax < b) {
            sf = equitable_color_hs(sub, b).coloring;
        } else {
            EQCOL_CHECK_MSG(sore < 2 * b, "far side violates its Ore bound");
            sf = equitable_color_ore_impl(sub, b, steps);
        }
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            if (wc.f[verts[i]] != bcolors[sf[i]])
                wc.move(g, verts[i], bcolors[sf[i]]);
    }
};

inline Coloring equitable_color_ore_impl(const Graph& g, int k, long long* steps) {
    EQCOL_CHECK(k >= 1);
    auto [gp, fresh] = pad_to_multiple(g, k);
    int np = gp.n;

    // Peel edges: repeatedly strip all edges at a minimum-degree non-isolated
    // vertex (its degree is below k, since every edge has an endpoint of
    // degree below k).  Reinserting them in reverse keeps every intermediate
    // graph within the Ore bound, and each reinsertion perturbs one vertex.
    Graph work = gp;
    std::vector<std::pair<int, std::vector<int>>> peeled;
    {
        std::vector<int> deg(np);
        for (int v = 0; v < np; ++v) deg[v] = work.degree(v);
        while (true) {
            int v = -1;
            for (int u = 0; u < np; ++u)
                if (deg[u] > 0 && (v == -1 || deg[u] < deg[v])) v = u;
            if (v == -1) break;
            EQCOL_CHECK_MSG(deg[v] < k, "minimum non-isolated degree too large");
            std::vector<int> nbrs = work.adj[v];
            for (int u : nbrs) {
                auto& a = work.adj[u];
                a.erase(std::lower_bound(a.begin(), a.end(), v));
                --deg[u];
            }
            work.adj[v].clear();
            deg[v] = 0;
            peeled.emplace_back(v, std::move(nbrs));
        }
    }

    Graph act(np);
    Coloring f0(np);
    for (int v = 0; v < np; ++v) f0[v] = v % k;
    WorkColoring wc(act, f0, k);

    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        int v = it->first;
        for (int u : it->second) {
            act.add_edge(u, v);
            ++wc.cnt[u][wc.f[v]];
            ++wc.cnt[v][wc.f[u]];
        }
        if (wc.cnt[v][wc.f[v]] == 0) continue;
        int dest = -1;
        for (int c = 0; c < k; ++c)
            if (wc.cnt[v][c] == 0) { dest = c; break; }
        EQCOL_CHECK_MSG(dest != -1, "no free class at reinsertion");
        wc.move(act, v, dest);
        OreFixer fixer{act, wc, steps};
        fixer.fix();
    }

    Coloring out(wc.f.begin(), wc.f.begin() + g.n);
    if (g.n > 0) {
        Verdict ver = check_coloring(g, out, CheckMode::equitable, {}, k);
        EQCOL_CHECK_MSG(ver.ok, "construction not equitable: " + ver.reason);
    }
    return out;
}

}  // namespace detail

// Public exchange entry point (mainly for tests and experiments): performs
// one w/y exchange on the state's coloring and returns the result, which is
// again nearly equitable with the same small class.
inline Coloring swap_wy(const OreState& st, int w, int y,
                        long long step_cap = 10'000'000) {
    return detail::swap_wy_impl(st, w, y, &step_cap);
}

// Builds an equitable k-coloring of a graph whose Ore degree is below 2k
// (max degree may be as large as 2k-2).  Deterministic; throws
// budget_exceeded if the exchange step cap is ever exhausted.
inline Coloring equitable_color_ore(const Graph& g, int k,
                                    long long step_cap = 10'000'000) {
    EQCOL_CHECK(k >= 1);
    int od = std::get<1>(degree_stats(g));
    if (g.n > 0 && od >= 2 * k)
        throw precondition_error("Ore degree " + std::to_string(od) +
                                 " is not below 2k=" + std::to_string(2 * k));
    return detail::equitable_color_ore_impl(g, k, &step_cap);
}

}  // namespace eqcol

#pragma once

// Equitable coloring under a max-degree bound: if every degree is below k,
// any balanced-but-for-one-vertex ("nearly equitable") k-coloring can be
// repaired with at most 2k-1 single-vertex recolorings, and a full equitable
// k-coloring can be built in at most 2k moves per vertex.  This follows the
// constructive proof of the Hajnal–Szemerédi theorem via the color digraph:
// find either a direct chain of moves from the big class to the small one, or
// restructure around a "solo" edge and recurse on a shrunken instance.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/digraph.hpp"
#include "eqcol/graph.hpp"

namespace eqcol {

struct ShiftEntry {
    int vertex = -1;
    int from = -1;
    int to = -1;
    // The recoloring pairs below are occasionally forced to exchange two
    // mutually adjacent vertices between two classes; the first move of such
    // a pair is flagged and properness holds again right after its partner.
    bool atomic_with_next = false;
};
using ShiftLog = std::vector<ShiftEntry>;

struct HsResult {
    Coloring coloring;
    ShiftLog log;
    // For equitable_color_hs only: log position at which each padded vertex's
    // edges were switched on (entries before marks[v] precede v's arrival).
    std::vector<std::size_t> activation_marks;
};

// Replays `log` on f0 over g, checking each entry's from-color, properness
// after every entry (deferred across flagged pairs), and, when given, the
// final coloring.  `active_until` optionally caps which edges are live at
// each entry: edges {u,v} count only if both ids are <= the activation head,
// which advances so that entry e happens once head >= head_for_entry(e).
inline Verdict validate_shift_log(const Graph& g, Coloring f, const ShiftLog& log,
                                  const Coloring* expected_final = nullptr,
                                  const std::vector<std::size_t>* marks = nullptr) {
    auto head_at = [&](std::size_t pos) -> int {
        if (!marks) return g.n;  // static graph: everything live
        int head = -1;
        // marks[v] <= pos means v was activated before this entry
        for (int v = 0; v < g.n; ++v)
            if ((*marks)[v] <= pos) head = v;
        return head;
    };
    auto proper_at = [&](int v, int head) -> bool {
        if (v > head) return true;  // not yet activated: no live edges
        for (int u : g.adj[v])
            if (u <= head && f[u] == f[v]) return false;
        return true;
    };
    bool defer = false;
    int deferred_vertex = -1;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& e = log[i];
        if (e.vertex < 0 || e.vertex >= g.n)
            return Verdict::no("entry " + std::to_string(i) + ": bad vertex");
        if (f[e.vertex] != e.from)
            return Verdict::no("entry " + std::to_string(i) +
                               ": vertex is colored " +
                               std::to_string(f[e.vertex]) + ", not " +
                               std::to_string(e.from));
        if (e.from == e.to)
            return Verdict::no("entry " + std::to_string(i) + ": no-op move");
        f[e.vertex] = e.to;
        int head = head_at(i);
        if (e.atomic_with_next) {
            if (defer)
                return Verdict::no("entry " + std::to_string(i) +
                                   ": two flagged entries in a row");
            if (i + 1 == log.size())
                return Verdict::no("trailing flagged entry");
            defer = true;
            deferred_vertex = e.vertex;
            continue;
        }
        if (!proper_at(e.vertex, head))
            return Verdict::no("entry " + std::to_string(i) +
                               ": move breaks properness");
        if (defer) {
            if (!proper_at(deferred_vertex, head))
                return Verdict::no("entry " + std::to_string(i) +
                                   ": flagged pair left vertex " +
                                   std::to_string(deferred_vertex + 1) +
                                   " in conflict");
            defer = false;
        }
    }
    if (defer) return Verdict::no("flagged pair never resolved");
    if (expected_final && f != *expected_final)
        return Verdict::no("replay does not reach the reported coloring");
    return Verdict::yes();
}

namespace detail {

inline void logged_move(const Graph& g, WorkColoring& wc, ShiftLog& log, int v,
                        int to, bool atomic = false) {
    log.push_back({v, wc.f[v], to, atomic});
    wc.move(g, v, to);
}

inline std::string profile_dump(const WorkColoring& wc) {
    std::string s = "k=" + std::to_string(wc.k) + " sizes=[";
    for (int c = 0; c < wc.k; ++c)
        s += (c ? "," : "") + std::to_string(wc.sz[c]);
    return s + "]";
}

// Locates the unique small and large classes of a nearly equitable coloring.
inline std::pair<int, int> small_and_large(const WorkColoring& wc, int m) {
    int small = -1, large = -1;
    for (int c = 0; c < wc.k; ++c) {
        if (wc.sz[c] == m - 1) {
            EQCOL_CHECK_MSG(small == -1, "two small classes: " + profile_dump(wc));
            small = c;
        } else if (wc.sz[c] == m + 1) {
            EQCOL_CHECK_MSG(large == -1, "two large classes: " + profile_dump(wc));
            large = c;
        } else {
            EQCOL_CHECK_MSG(wc.sz[c] == m,
                            "class size off profile: " + profile_dump(wc));
        }
    }
    EQCOL_CHECK_MSG(small != -1 && large != -1,
                    "not nearly equitable: " + profile_dump(wc));
    return {small, large};
}

inline void apply_class_path(const Graph& g, WorkColoring& wc, ShiftLog& log,
                             const ColorDigraph& h, const std::vector<int>& path) {
    // Front to back: each witness is an original member of its class and its
    // target class has not been touched yet when its turn comes, so every
    // move is proper.
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int x = h.witness[path[i]][path[i + 1]];
        EQCOL_CHECK(x != -1 && wc.f[x] == path[i]);
        EQCOL_CHECK(wc.cnt[x][path[i + 1]] == 0);
#if EQCOL_HEAVY_CHECKS
        // Re-verify the stored witness straight from the adjacency lists, not
        // the incrementally maintained counters.
        for (int u : g.adj[x])
            EQCOL_HEAVY_MSG(wc.f[u] != path[i + 1],
                            "witness has a neighbor in its target class");
#endif
        logged_move(g, wc, log, x, path[i + 1]);
    }
}

// Repairs a nearly equitable k-coloring of g into an equitable one, appending
// at most 2k-1 moves to the log.  Requires the instance invariant: every
// vertex that lies outside the small class's reaching side, or inside a
// terminal class, has degree below k.
inline void hs_fix_rec(const Graph& g, WorkColoring& wc, ShiftLog& log) {
    int k = wc.k;
    EQCOL_CHECK(g.n > 0 && g.n % k == 0);
    int m = g.n / k;
    auto [alpha0, beta0] = small_and_large(wc, m);
    std::size_t log_start = log.size();

    ColorDigraph h = build_color_digraph(g, wc);
    std::vector<char> inA = classes_reaching(h, alpha0);

    // Case 0: the big class can feed the small one along a chain of moves.
    if (inA[beta0]) {
        auto path = shortest_class_path(h, beta0, alpha0, inA);
        EQCOL_CHECK(path.has_value());
        apply_class_path(g, wc, log, h, *path);
        EQCOL_HEAVY(log.size() - log_start <= static_cast<std::size_t>(2 * k - 1));
        return;
    }

    int a = 0;
    for (int c = 0; c < k; ++c) a += inA[c];
    EQCOL_CHECK_MSG(a >= 2,
                    "no chain into the small class and its side is trivial; "
                    "degree precondition must be violated: " + profile_dump(wc));

    std::vector<char> term = terminal_classes(h, alpha0, inA);

#if EQCOL_HEAVY_CHECKS
    for (int v = 0; v < g.n; ++v)
        EQCOL_HEAVY_MSG(!(!inA[wc.f[v]] || term[wc.f[v]]) || g.degree(v) < k,
                        "instance invariant violated at vertex " +
                            std::to_string(v));
    {
        // With no chain from the big class, every far-side vertex sees every
        // reaching class, and sees every terminal class twice unless the lone
        // neighbor there makes a solo edge; so its reaching-side degree is at
        // least a + (#terminal) - (#solo classes), which is at least a.
        int aprime = 0;
        for (int c = 0; c < k; ++c) aprime += term[c];
        for (int v = 0; v < g.n; ++v) {
            if (inA[wc.f[v]]) continue;
            int da = 0, sv = 0;
            for (int c = 0; c < k; ++c) {
                if (!inA[c]) continue;
                da += wc.cnt[v][c];
                if (term[c] && wc.cnt[v][c] == 1) ++sv;
            }
            EQCOL_HEAVY_MSG(sv <= aprime && da >= a + aprime - sv,
                            "far-side degree floor violated at vertex " +
                                std::to_string(v));
        }
    }
#endif

    // Solo edges: a vertex y outside the reaching side with exactly one
    // neighbor w inside a terminal class.  y could replace w in that class.
    std::map<int, std::vector<int>> solo;  // root -> leaves, both ascending
    for (int y = 0; y < g.n; ++y) {
        if (inA[wc.f[y]]) continue;
        for (int c = 0; c < k; ++c) {
            if (!term[c] || wc.cnt[y][c] != 1) continue;
            int w = -1;
            for (int u : g.adj[y])
                if (wc.f[u] == c) { w = u; break; }
            EQCOL_CHECK(w != -1);
            solo[w].push_back(y);
        }
    }

    // Case 1: some solo root can itself move to another class of the
    // reaching side; its leaf then refills the hole it leaves behind.
    for (auto& [w, leaves] : solo) {
        int omega = wc.f[w];
        int alpha = -1;
        for (int c = 0; c < k; ++c)
            if (c != omega && inA[c] && wc.cnt[w][c] == 0) { alpha = c; break; }
        if (alpha == -1) continue;

        int y = leaves.front();
        int beta_y = wc.f[y];
        logged_move(g, wc, log, w, alpha);
        if (alpha != alpha0) {
            auto path = shortest_class_path(h, alpha, alpha0, inA, omega);
            EQCOL_CHECK_MSG(path.has_value(), "terminal class has no detour");
            apply_class_path(g, wc, log, h, *path);
        }
        EQCOL_CHECK(wc.cnt[y][omega] == 0);
        logged_move(g, wc, log, y, omega);

        if (beta_y != beta0) {
            // The far side is now one vertex short in y's old class: repair
            // it recursively among its own classes.
            std::vector<int> verts, bcolors;
            for (int c = 0; c < k; ++c)
                if (!inA[c]) bcolors.push_back(c);
            std::vector<int> cmap(k, -1);
            for (int i = 0; i < static_cast<int>(bcolors.size()); ++i)
                cmap[bcolors[i]] = i;
            for (int v = 0; v < g.n; ++v)
                if (!inA[wc.f[v]]) verts.push_back(v);
            Graph sub = induced_subgraph(g, verts);
            Coloring sf(sub.n);
            for (int i = 0; i < sub.n; ++i) sf[i] = cmap[wc.f[verts[i]]];
            WorkColoring swc(sub, sf, static_cast<int>(bcolors.size()));
            ShiftLog slog;
            hs_fix_rec(sub, swc, slog);
            for (const auto& e : slog) {
                EQCOL_CHECK(wc.f[verts[e.vertex]] == bcolors[e.from]);
                logged_move(g, wc, log, verts[e.vertex], bcolors[e.to],
                            e.atomic_with_next);
            }
        }
        EQCOL_HEAVY(log.size() - log_start <= static_cast<std::size_t>(2 * k - 1));
        return;
    }

#if EQCOL_HEAVY_CHECKS
    {
        // With the chain and free-root cases exhausted, counting edges between
        // the terminal classes and the far side under the degree bound forces
        // the terminal classes to outnumber the far side.  (This needs the
        // degree bound; it can fail under the weaker degree-sum bound.)
        int aprime = 0;
        for (int c = 0; c < k; ++c) aprime += term[c] ? 1 : 0;
        EQCOL_HEAVY_MSG(k - a < aprime,
                        "far side not outnumbered by terminal classes");
    }
#endif

    // Case 2 needs a solo root with two nonadjacent leaves whose classes the
    // big class can reach: those chains are what rebalance the far side.
    std::vector<char> inBp(k, 0);  // classes reachable from the big class
    {
        std::vector<char> notA(k, 0);
        for (int c = 0; c < k; ++c) notA[c] = !inA[c];
        inBp[beta0] = 1;
        std::vector<int> queue{beta0};
        while (!queue.empty()) {
            int s = queue.back();
            queue.pop_back();
            for (int t = 0; t < k; ++t)
                if (!inBp[t] && notA[t] && h.arc[s][t]) {
                    inBp[t] = 1;
                    queue.push_back(t);
                }
        }
    }

    for (auto& [w, leaves] : solo) {
        int alpha = wc.f[w];
        std::vector<int> cand;
        for (int y : leaves)
            if (inBp[wc.f[y]]) cand.push_back(y);
        int y = -1, z = -1;
        for (std::size_t i = 0; i < cand.size() && y == -1; ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (!g.adjacent(cand[i], cand[j])) {
                    y = cand[i];
                    z = cand[j];
                    break;
                }
        if (y == -1) continue;
        EQCOL_CHECK(alpha != alpha0);

        // Feed y's class from the big class, so y's departure rebalances the
        // far side...
        int beta_y = wc.f[y];
        if (beta_y != beta0) {
            std::vector<char> notA(k, 0);
            for (int c = 0; c < k; ++c) notA[c] = !inA[c];
            auto p = shortest_class_path(h, beta0, beta_y, notA);
            EQCOL_CHECK_MSG(p.has_value(), "no chain to the chosen leaf class");
            apply_class_path(g, wc, log, h, *p);
        }
        // ...pull one vertex of w's class toward the small class...
        auto q = shortest_class_path(h, alpha, alpha0, inA);
        EQCOL_CHECK(q.has_value() && q->size() >= 2);
        int x = h.witness[(*q)[0]][(*q)[1]];
        EQCOL_CHECK(x != -1 && x != w);
        apply_class_path(g, wc, log, h, *q);

        // ...then swap y in for w.  w has at most as many far-side neighbors
        // as there are far-side classes, so either some class is free of w,
        // or every class has exactly one w-neighbor and y is the one in its
        // own class: exchange them directly.
        int dest = -1;
        for (int c = 0; c < k; ++c)
            if (!inA[c] && wc.cnt[w][c] == 0) { dest = c; break; }
        if (dest != -1) {
            logged_move(g, wc, log, w, dest);
            EQCOL_CHECK(wc.cnt[y][alpha] == 0);
            logged_move(g, wc, log, y, alpha);
        } else {
            int by = wc.f[y];
            EQCOL_CHECK_MSG(wc.cnt[w][by] == 1, "exchange class not forced");
            logged_move(g, wc, log, y, alpha, /*atomic=*/true);
            EQCOL_CHECK(wc.cnt[w][by] == 0);
            logged_move(g, wc, log, w, by);
        }

        // The far side plus w's old class now forms one smaller nearly
        // equitable instance; z guarantees its small class is reachable
        // there, keeping the invariant for the recursion.
        std::vector<int> verts, bcolors;
        for (int c = 0; c < k; ++c)
            if (!inA[c]) bcolors.push_back(c);
        bcolors.push_back(alpha);
        std::vector<int> cmap(k, -1);
        for (int i = 0; i < static_cast<int>(bcolors.size()); ++i)
            cmap[bcolors[i]] = i;
        for (int v = 0; v < g.n; ++v)
            if (cmap[wc.f[v]] != -1) verts.push_back(v);
        Graph sub = induced_subgraph(g, verts);
        Coloring sf(sub.n);
        for (int i = 0; i < sub.n; ++i) sf[i] = cmap[wc.f[verts[i]]];
        WorkColoring swc(sub, sf, static_cast<int>(bcolors.size()));
#if EQCOL_HEAVY_CHECKS
        {
            int zi = -1;
            for (int i = 0; i < sub.n; ++i)
                if (verts[i] == z) zi = i;
            EQCOL_HEAVY(zi != -1 && swc.cnt[zi][cmap[alpha]] == 0 &&
                        sf[zi] != cmap[alpha]);
        }
#endif
        ShiftLog slog;
        hs_fix_rec(sub, swc, slog);
        for (const auto& e : slog) {
            EQCOL_CHECK(wc.f[verts[e.vertex]] == bcolors[e.from]);
            logged_move(g, wc, log, verts[e.vertex], bcolors[e.to],
                        e.atomic_with_next);
        }
        EQCOL_HEAVY(log.size() - log_start <= static_cast<std::size_t>(2 * k - 1));
        return;
    }

    throw internal_error("rebalance found no applicable case: " +
                         profile_dump(wc));
}

}  // namespace detail

// Infers the palette size of a nearly equitable coloring: normally
// max color + 1, but when the small class is empty (m = 1) it is the id just
// past the largest used color.
inline int infer_nearly_equitable_k(const Graph& g, const Coloring& f) {
    int kmax = 0;
    for (int c : f) kmax = std::max(kmax, c + 1);
    for (int k : {kmax, kmax + 1}) {
        if (g.n % k != 0) continue;
        if (check_coloring(g, f, CheckMode::nearly_equitable, {}, k).ok) return k;
    }
    throw precondition_error("coloring is not nearly equitable");
}

// Repairs a nearly equitable k-coloring into an equitable one with at most
// 2k-1 recolorings.  Requires max degree < k.
inline HsResult fix_nearly_equitable(const Graph& g, const Coloring& f, int k) {
    Verdict v = check_coloring(g, f, CheckMode::nearly_equitable, {}, k);
    if (!v.ok) throw precondition_error("not a nearly equitable coloring: " + v.reason);
    int dmax = std::get<0>(degree_stats(g));
    if (dmax >= k)
        throw precondition_error("max degree " + std::to_string(dmax) +
                                 " is not below k=" + std::to_string(k));
    WorkColoring wc(g, f, k);
    HsResult res;
    detail::hs_fix_rec(g, wc, res.log);
    EQCOL_CHECK(res.log.size() <= static_cast<std::size_t>(2 * k - 1));
    res.coloring = wc.f;
    Verdict out = check_coloring(g, res.coloring, CheckMode::equitable, {}, k);
    EQCOL_CHECK_MSG(out.ok, "result not equitable: " + out.reason);
    return res;
}

inline HsResult fix_nearly_equitable(const Graph& g, const Coloring& f) {
    return fix_nearly_equitable(g, f, infer_nearly_equitable_k(g, f));
}

// Builds an equitable k-coloring of any graph with max degree < k.  Pads to a
// multiple of k with a clique, starts from the balanced assignment v -> v%k
// with all edges ignored, then activates one vertex's edges at a time: on a
// conflict the vertex moves to a class where it has no live neighbors, and
// the resulting nearly equitable coloring is repaired.  At most 2k moves per
// vertex, hence at most 2k * (padded n) log entries.
inline HsResult equitable_color_hs(const Graph& g, int k) {
    EQCOL_CHECK(k >= 1);
    int dmax = std::get<0>(degree_stats(g));
    if (g.n > 0 && dmax >= k)
        throw precondition_error("max degree " + std::to_string(dmax) +
                                 " is not below k=" + std::to_string(k));
    auto [gp, fresh] = pad_to_multiple(g, k);
    int np = gp.n;

    Graph act(np);  // live edges only
    Coloring f0(np);
    for (int v = 0; v < np; ++v) f0[v] = v % k;
    WorkColoring wc(act, f0, k);
    HsResult res;
    res.activation_marks.assign(np, 0);

    for (int v = 0; v < np; ++v) {
        res.activation_marks[v] = res.log.size();
        for (int u : gp.adj[v]) {
            if (u >= v) break;  // adjacency is sorted; later ids not live yet
            act.add_edge(u, v);
            ++wc.cnt[u][wc.f[v]];
            ++wc.cnt[v][wc.f[u]];
        }
        if (wc.cnt[v][wc.f[v]] == 0) continue;
        int dest = -1;
        for (int c = 0; c < k; ++c)
            if (wc.cnt[v][c] == 0) { dest = c; break; }
        EQCOL_CHECK_MSG(dest != -1, "no free class; degree bound broken");
        detail::logged_move(act, wc, res.log, v, dest);
        detail::hs_fix_rec(act, wc, res.log);
    }
    EQCOL_CHECK(res.log.size() <= static_cast<std::size_t>(2LL * k * np));

    res.coloring.assign(wc.f.begin(), wc.f.begin() + g.n);
    if (g.n > 0) {
        Verdict out = check_coloring(g, res.coloring, CheckMode::equitable, {}, k);
        EQCOL_CHECK_MSG(out.ok, "construction not equitable: " + out.reason);
    }
    return res;
}

}  // namespace eqcol

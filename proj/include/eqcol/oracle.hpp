#pragma once

// Exact brute-force deciders.  These are deliberately simple and independent
// of the fast solvers: the test suites use them as ground truth on small
// instances.  All of them are deterministic and budgeted (a budget counts
// search nodes; running out yields "unknown" or throws, never a wrong
// answer).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/generators.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/lists.hpp"

namespace eqcol {

enum class Status { yes, no, unknown };

struct DecideResult {
    Status status = Status::unknown;
    Coloring coloring;  // meaningful only when status == yes
};

struct ChoosableResult {
    Status status = Status::unknown;
    Lists witness;  // meaningful only when status == no: lists that fail
};

namespace detail {

// Degeneracy order: repeatedly delete a minimum-degree vertex (lowest id on
// ties).  Returns the deletion sequence.
inline std::vector<int> degeneracy_removal_order(const Graph& g) {
    std::vector<int> deg(g.n), order;
    std::vector<bool> gone(g.n, false);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    order.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        gone[best] = true;
        order.push_back(best);
        for (int u : g.adj[best])
            if (!gone[u]) --deg[u];
    }
    return order;
}

// Assignment order for backtracking: reverse deletion order, so each vertex
// sees at most "degeneracy" many already-colored neighbors.
inline std::vector<int> backtrack_order(const Graph& g) {
    auto o = degeneracy_removal_order(g);
    std::reverse(o.begin(), o.end());
    return o;
}

struct EqSearch {
    const Graph& g;
    int k;
    std::vector<int> order;
    Coloring color;          // by vertex id, -1 = unassigned
    std::vector<int> sz;     // class sizes
    int lo, hi, over_budget; // sizes allowed in [lo,hi], at most over_budget above lo
    int over_used = 0;
    long long* pool;         // shared node budget
    bool out_of_budget = false;

    EqSearch(const Graph& g_, int k_, long long* pool_)
        : g(g_), k(k_), order(backtrack_order(g_)), color(g_.n, -1),
          sz(k_, 0), pool(pool_) {
        lo = g.n / k;
        hi = (g.n + k - 1) / k;
        over_budget = g.n % k;  // 0 when k divides n (then hi == lo)
    }

    bool run(int pos) {
        if (pos == g.n) return true;
        int v = order[pos];
        int used = 0;  // colors in use so far, for symmetry breaking
        for (int c = 0; c < k; ++c)
            if (sz[c] > 0) ++used;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (*pool <= 0) { out_of_budget = true; return false; }
            --*pool;
            if (sz[c] == hi) continue;
            if (sz[c] == lo && over_used == over_budget && hi > lo) continue;
            bool clash = false;
            for (int u : g.adj[v])
                if (color[u] == c) { clash = true; break; }
            if (clash) continue;
            color[v] = c;
            ++sz[c];
            bool went_over = (hi > lo && sz[c] == lo + 1);
            if (went_over) ++over_used;
            if (run(pos + 1)) return true;
            if (out_of_budget) return false;
            if (went_over) --over_used;
            --sz[c];
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

// Is g equitably k-colorable?  Exhaustive backtracking with class-size caps
// and first-free-color symmetry breaking.
inline DecideResult decide_equitable_budgeted(const Graph& g, int k,
                                              long long* pool) {
    EQCOL_CHECK(k >= 1);
    detail::EqSearch s(g, k, pool);
    if (s.run(0)) return {Status::yes, s.color};
    if (s.out_of_budget) return {Status::unknown, {}};
    return {Status::no, {}};
}

inline DecideResult decide_equitable(const Graph& g, int k,
                                     long long budget = 100'000'000) {
    return decide_equitable_budgeted(g, k, &budget);
}

enum class ListMode { equitable, se, proportional };

namespace detail {

struct ListSearch {
    const Graph& g;
    const Lists& L;
    ListMode mode;
    int k;                       // uniform list size
    Coloring color;
    std::map<int, int> usage;    // per color
    std::map<int, int> eta;      // list frequency per color
    std::map<int, int> avail;    // unassigned vertices still listing c
    int cap_all = 0;             // usage cap for equitable/se modes
    int full_used = 0, full_budget = 0;  // se: classes at the cap
    long long demand_left = 0;   // proportional: sum of unmet lower demands
    int remaining;
    long long* pool;
    bool out_of_budget = false;

    ListSearch(const Graph& g_, const Lists& L_, ListMode mode_, long long* pool_)
        : g(g_), L(L_), mode(mode_), color(g_.n, -1), remaining(g_.n),
          pool(pool_) {
        k = lists_uniform_size(L);
        for (const auto& lv : L)
            for (int c : lv) { ++eta[c]; ++avail[c]; }
        cap_all = (g.n + k - 1) / k;
        full_budget = rem1(std::max(g.n, 1), k);
        if (mode == ListMode::proportional)
            for (auto [c, e] : eta) demand_left += e / k;
    }

    int cap(int c) const {
        if (mode == ListMode::proportional) {
            int e = eta.at(c);
            return (e + k - 1) / k;
        }
        return cap_all;
    }

    bool admissible(int v, int c) {
        int uc = usage[c];
        if (uc == cap(c)) return false;
        if (mode == ListMode::se && uc == cap_all - 1 &&
            full_used == full_budget)
            return false;
        for (int u : g.adj[v])
            if (color[u] == c) return false;
        return true;
    }

    bool run() {
        if (remaining == 0) return true;
        // Most-constrained vertex first (lowest id on ties): forced choices
        // propagate immediately and contradictions surface early.
        int v = -1, vchoices = k + 1;
        for (int u = 0; u < g.n && vchoices > 0; ++u) {
            if (color[u] != -1) continue;
            if (*pool <= 0) { out_of_budget = true; return false; }
            --*pool;
            int cnt = 0;
            for (int c : L[u])
                if (admissible(u, c)) ++cnt;
            if (cnt < vchoices) {
                vchoices = cnt;
                v = u;
            }
        }
        if (vchoices == 0) return false;
        for (int c : L[v]) {
            if (*pool <= 0) { out_of_budget = true; return false; }
            --*pool;
            if (!admissible(v, c)) continue;
            int& uc = usage[c];

            color[v] = c;
            ++uc;
            bool filled = (mode == ListMode::se && uc == cap_all);
            if (filled) ++full_used;
            bool met_demand = false;
            if (mode == ListMode::proportional && uc <= eta.at(c) / k) {
                --demand_left;
                met_demand = true;
            }
            for (int d : L[v]) --avail[d];
            --remaining;

            bool feasible = true;
            if (mode == ListMode::proportional) {
                if (demand_left > remaining) feasible = false;
                // A color whose remaining demand exceeds its remaining supply
                // can never be satisfied.
                if (feasible)
                    for (int d : L[v]) {
                        int need = eta.at(d) / k - usage[d];
                        if (need > avail[d]) { feasible = false; break; }
                    }
            }
            if (feasible && run()) return true;
            if (out_of_budget) return false;

            ++remaining;
            for (int d : L[v]) ++avail[d];
            if (met_demand) ++demand_left;
            if (filled) --full_used;
            --uc;
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

// Does g admit a proper coloring from lists L meeting the mode's size rules?
//   equitable:    every color used at most ceil(n/k) times
//   se:           equitable, and at most rem1(n,k) colors reach the cap
//   proportional: every color c used between floor and ceil of eta(c)/k
inline DecideResult decide_list_budgeted(const Graph& g, const Lists& L,
                                         ListMode mode, long long* pool) {
    EQCOL_CHECK(static_cast<int>(L.size()) == g.n);
    if (g.n == 0) return {Status::yes, {}};
    detail::ListSearch s(g, L, mode, pool);
    if (s.run()) return {Status::yes, s.color};
    if (s.out_of_budget) return {Status::unknown, {}};
    return {Status::no, {}};
}

inline DecideResult decide_list(const Graph& g, const Lists& L, ListMode mode,
                                long long budget = 100'000'000) {
    return decide_list_budgeted(g, L, mode, &budget);
}

namespace detail {

// Enumerates k-list assignments in canonical form: scanning vertices in id
// order, a list may reuse colors already introduced and/or take the next few
// fresh color names.  Every assignment is a global renaming of exactly one
// canonical one, and the checked properties are renaming-invariant, so
// covering canonical assignments decides choosability.
struct ChoosableSearch {
    const Graph& g;
    int k;
    ListMode mode;
    Lists lists;
    long long* pool;
    bool out_of_budget = false;
    Lists bad;

    ChoosableSearch(const Graph& g_, int k_, ListMode mode_, long long* pool_)
        : g(g_), k(k_), mode(mode_), lists(g_.n), pool(pool_) {}

    // Returns true if a failing assignment was found (recorded in `bad`).
    bool run(int v, int used_colors) {
        if (*pool <= 0) { out_of_budget = true; return false; }
        --*pool;
        if (v == g.n) {
            DecideResult r = decide_list_budgeted(g, lists, mode, pool);
            if (r.status == Status::unknown) { out_of_budget = true; return false; }
            if (r.status == Status::no) { bad = lists; return true; }
            return false;
        }
        // Choose how many fresh colors this list takes (j) and which old ones
        // (a (k-j)-subset of 0..used_colors-1, enumerated in lex order).
        for (int j = (v == 0 ? k : 0); j <= k; ++j) {
            int old_cnt = k - j;
            if (old_cnt > used_colors) continue;
            std::vector<int> pick(old_cnt);
            for (int i = 0; i < old_cnt; ++i) pick[i] = i;
            while (true) {
                auto& lv = lists[v];
                lv = pick;
                for (int i = 0; i < j; ++i) lv.push_back(used_colors + i);
                if (run(v + 1, used_colors + j)) return true;
                if (out_of_budget) return false;
                lv.clear();
                // next combination
                int i = old_cnt - 1;
                while (i >= 0 && pick[i] == used_colors - old_cnt + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int t = i + 1; t < old_cnt; ++t) pick[t] = pick[t - 1] + 1;
            }
        }
        return false;
    }
};

}  // namespace detail

// Is g equitably/se/proportionally k-choosable?  Checks every k-list
// assignment up to color renaming.  Exponential; intended for tiny graphs.
inline ChoosableResult decide_choosable(const Graph& g, int k, ListMode mode,
                                        long long budget = 100'000'000) {
    EQCOL_CHECK(k >= 1);
    if (g.n == 0) return {Status::yes, {}};
    detail::ChoosableSearch s(g, k, mode, &budget);
    if (s.run(0, 0)) return {Status::no, s.bad};
    if (s.out_of_budget) return {Status::unknown, {}};
    return {Status::yes, {}};
}

// Greedy equitable list coloring of the star K_{1,t} (center = vertex 0) from
// k-uniform lists, for 2k <= t <= 3(k-1) (hence k >= 3).  The center takes
// its lowest color; each leaf takes its lowest color that differs from the
// center's and is used under 3 times.  A leaf always finds one: its list has
// at least k-1 non-center colors, and fewer than 3(k-1) leaves are placed, so
// not all of those can be saturated.  Class sizes stay <= 3 = ceil((t+1)/k).
inline Coloring star_greedy_list_color(int t, const Lists& L) {
    int k = lists_uniform_size(L);
    EQCOL_CHECK_MSG(static_cast<int>(L.size()) == t + 1,
                    "need one list per star vertex");
    EQCOL_CHECK_MSG(k >= 3 && 2 * k <= t && t <= 3 * (k - 1),
                    "star greedy needs 2k <= t <= 3(k-1)");
    Coloring f(t + 1, -1);
    f[0] = L[0][0];
    std::map<int, int> usage;
    for (int v = 1; v <= t; ++v) {
        for (int c : L[v]) {
            if (c == f[0]) continue;
            if (usage[c] >= 3) continue;
            f[v] = c;
            ++usage[c];
            break;
        }
        EQCOL_CHECK_MSG(f[v] != -1, "greedy got stuck; preconditions violated");
    }
    return f;
}

// --- minimum edge counts forcing non-colorability ---------------------------

// Fewest edges of an n-vertex graph that is not equitably k-colorable, by
// closed formula; nullopt means no such graph exists.  For n <= k every graph
// qualifies as colorable (classes of size <= 1 always exist), so the answer
// is infinite.  Otherwise it is the cheaper of (a) K_{k+1} plus isolated
// vertices and (b) for n <= 2k the complement construction, for n >= 2k a
// vertex with too many neighbors.
inline std::optional<long long> m0_formula(int n, int k) {
    EQCOL_CHECK(n >= 1 && k >= 1);
    auto c2 = [](long long m) { return m < 2 ? 0LL : m * (m - 1) / 2; };
    if (n <= k) return std::nullopt;
    long long clique = c2(k + 1LL);
    if (n <= 2 * k) {
        long long dense = c2(n) - c2(2LL * (n - k) - 1);
        if (n == 2 * k)  // both branches must agree at the boundary
            EQCOL_CHECK(std::min(clique, dense) ==
                        std::min(clique, static_cast<long long>(n - n / k + 1)));
        return std::min(clique, dense);
    }
    return std::min(clique, static_cast<long long>(n - n / k + 1));
}

struct M0Result {
    bool finite = false;
    long long edges = -1;  // the minimum, when finite
    Graph witness;         // a graph attaining it
};

// Same quantity by direct enumeration: all labelled graphs on n vertices in
// ascending edge count, each tested with decide_equitable.  The budget bounds
// the total search nodes across all decide calls.
inline M0Result m0_exhaustive(int n, int k, long long budget = 4'000'000'000) {
    EQCOL_CHECK(n >= 1 && k >= 1);
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    int total = static_cast<int>(all.size());

    for (int m = 0; m <= total; ++m) {
        // combinations of m edge slots, lexicographic
        std::vector<int> pick(m);
        for (int i = 0; i < m; ++i) pick[i] = i;
        while (true) {
            Graph g(n);
            for (int i : pick) g.add_edge(all[i].first, all[i].second);
            DecideResult r = decide_equitable_budgeted(g, k, &budget);
            if (r.status == Status::unknown)
                throw budget_exceeded("m0_exhaustive ran out of budget at m=" +
                                      std::to_string(m));
            if (r.status == Status::no) return {true, m, g};
            int i = m - 1;
            while (i >= 0 && pick[i] == total - m + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int t = i + 1; t < m; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    return {false, -1, Graph(0)};
}

}  // namespace eqcol

#pragma once

// Equitable coloring of forests.  A forest has an equitable k-coloring
// (k >= 3) exactly when every vertex v lies in some independent set of size
// floor(n/k); the quantity alpha_v (largest independent set through v) is
// computable for all v at once by a two-pass tree DP.  The construction
// carves the forest into k independent classes of sizes floor to ceil of
// n/k, splitting a bipartition and balancing it with leaves.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/graph.hpp"

namespace eqcol {

namespace detail {

// Rooted-forest scaffolding: BFS parents/orders per component.
struct RootedForest {
    std::vector<int> parent, comp, order;    // order = BFS order, all comps
    std::vector<int> roots;                  // one per component
    std::vector<std::vector<int>> children;

    RootedForest(const Graph& g, const std::vector<int>& preferred_roots = {})
        : parent(g.n, -1), comp(g.n, -1), children(g.n) {
        std::vector<char> want(g.n, 0);
        for (int r : preferred_roots) want[r] = 1;
        auto bfs = [&](int r) {
            int id = static_cast<int>(roots.size());
            roots.push_back(r);
            comp[r] = id;
            std::size_t head = order.size();
            order.push_back(r);
            while (head < order.size()) {
                int v = order[head++];
                for (int u : g.adj[v]) {
                    if (comp[u] != -1) continue;
                    comp[u] = id;
                    parent[u] = v;
                    children[v].push_back(u);
                    order.push_back(u);
                }
            }
        };
        for (int r = 0; r < g.n; ++r)
            if (want[r] && comp[r] == -1) bfs(r);
        for (int r = 0; r < g.n; ++r)
            if (comp[r] == -1) bfs(r);
    }
};

// down[v][1] / down[v][0]: largest independent set of v's subtree with v
// included / excluded.
struct ForestDp {
    RootedForest rf;
    std::vector<std::array<int, 2>> down;

    ForestDp(const Graph& g, const std::vector<int>& preferred_roots = {})
        : rf(g, preferred_roots), down(g.n) {
        for (auto it = rf.order.rbegin(); it != rf.order.rend(); ++it) {
            int v = *it;
            down[v] = {0, 1};
            for (int c : rf.children[v]) {
                down[v][0] += std::max(down[c][0], down[c][1]);
                down[v][1] += down[c][0];
            }
        }
    }

    int best(int v) const { return std::max(down[v][0], down[v][1]); }

    // Appends a maximum independent set of v's subtree to out, with v's own
    // membership forced by `state` (ties prefer inclusion).
    void traceback(int v0, int state0, std::vector<int>& out) const {
        std::vector<std::pair<int, int>> stack{{v0, state0}};
        while (!stack.empty()) {
            auto [v, state] = stack.back();
            stack.pop_back();
            if (state) out.push_back(v);
            for (int c : rf.children[v])
                stack.push_back({c, state ? 0 : (down[c][1] >= down[c][0])});
        }
    }
};

}  // namespace detail

// alpha_v for every vertex: the size of a largest independent set of the
// whole forest that contains v.
inline std::vector<int> alpha_v_all(const Graph& g) {
    EQCOL_CHECK_MSG(is_forest(g), "not a forest");
    detail::ForestDp dp(g);
    const auto& rf = dp.rf;
    int ncomp = static_cast<int>(rf.roots.size());
    std::vector<int> comp_mis(ncomp);
    long long total = 0;
    for (int i = 0; i < ncomp; ++i) {
        comp_mis[i] = dp.best(rf.roots[i]);
        total += comp_mis[i];
    }

    // out[v][1] / out[v][0]: largest independent set of the component minus
    // v's subtree, compatible with v being included / unconstrained.
    std::vector<std::array<int, 2>> out(g.n, {0, 0});
    std::vector<int> alpha(g.n);
    for (int v : rf.order) {
        long long sum_best = 0, sum_d0 = 0;
        for (int c : rf.children[v]) {
            sum_best += dp.best(c);
            sum_d0 += dp.down[c][0];
        }
        for (int c : rf.children[v]) {
            int sib_best = static_cast<int>(sum_best - dp.best(c));
            int sib_d0 = static_cast<int>(sum_d0 - dp.down[c][0]);
            out[c][1] = out[v][0] + sib_best;
            out[c][0] = std::max(out[v][0] + sib_best,
                                 out[v][1] + 1 + sib_d0);
        }
        int through = 1 + static_cast<int>(sum_d0) + out[v][1];
        alpha[v] = through +
                   static_cast<int>(total - comp_mis[rf.comp[v]]);
    }
    return alpha;
}

struct ForestFeasibility {
    bool feasible = true;
    int witness = -1;  // a vertex with alpha_v < floor(n/k), when infeasible
};

inline ForestFeasibility forest_feasible(const Graph& g, int k) {
    if (k < 3)
        throw precondition_error(
            "the independent-set criterion is only valid for k >= 3");
    EQCOL_CHECK_MSG(is_forest(g), "not a forest");
    if (g.n == 0) return {};
    int need = g.n / k;
    auto alpha = alpha_v_all(g);
    for (int v = 0; v < g.n; ++v)
        if (alpha[v] < need) return {false, v};
    return {};
}

namespace detail {

// An independent set of maximum size containing v: v's component is rerooted
// at v with v forced in; every other component contributes its own maximum.
inline std::vector<int> max_independent_with(const Graph& g, int v) {
    ForestDp dp(g, {v});
    std::vector<int> out;
    for (int r : dp.rf.roots)
        dp.traceback(r, r == v ? 1 : (dp.down[r][1] >= dp.down[r][0]), out);
    EQCOL_CHECK(std::count(out.begin(), out.end(), v) == 1);
    return out;
}

}  // namespace detail

// Equitable k-coloring of a forest, k >= 3.  Throws precondition_error when
// no such coloring exists (see forest_feasible).
inline Coloring forest_equitable_color(const Graph& g, int k) {
    EQCOL_CHECK_MSG(k >= 3, "the forest construction needs k >= 3");
    EQCOL_CHECK_MSG(is_forest(g), "not a forest");
    int n = g.n;
    if (k >= n) {
        Coloring f(n);
        for (int v = 0; v < n; ++v) f[v] = v;
        return f;
    }
    {
        auto feas = forest_feasible(g, k);
        if (!feas.feasible)
            throw precondition_error(
                "forest has no equitable " + std::to_string(k) +
                "-coloring: vertex " + std::to_string(feas.witness + 1) +
                " is not in any independent set of size " +
                std::to_string(n / k));
    }

    // Class sizes ascending: s[i] = floor((n+i)/k), i = 0..k-1.
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = (n + i) / k;

    // Bipartition: 2-color each component, larger side to A; then while A
    // outweighs B by 2+ and has an isolated vertex, shed one to B.  So in the
    // end A is within one of B, or A has no isolated vertices.
    std::vector<char> inA(n, 0);
    {
        detail::RootedForest rf(g);
        std::vector<int> depth(n, 0);
        for (int v : rf.order)
            if (rf.parent[v] != -1) depth[v] = depth[rf.parent[v]] + 1;
        std::vector<std::array<int, 2>> part_sz(rf.roots.size(), {0, 0});
        for (int v = 0; v < n; ++v) ++part_sz[rf.comp[v]][depth[v] % 2];
        for (int v = 0; v < n; ++v) {
            auto ps = part_sz[rf.comp[v]];
            int a_side = ps[1] > ps[0] ? 1 : 0;
            inA[v] = (depth[v] % 2 == a_side);
        }
        int a = 0;
        for (int v = 0; v < n; ++v) a += inA[v];
        for (int v = 0; v < n && 2 * a >= n + 2; ++v)
            if (inA[v] && g.degree(v) == 0) {
                inA[v] = 0;
                --a;
            }
    }
    std::vector<int> A, B;
    for (int v = 0; v < n; ++v) (inA[v] ? A : B).push_back(v);
    int b = static_cast<int>(B.size());

    // How many of the small classes B fills: j minimal with b <= s_0+..+s_{j-1}.
    int j = 0;
    long long pre = 0;
    while (pre < b) pre += s[j++];

    std::vector<std::vector<int>> classes(k);
    auto spread = [&](const std::vector<int>& pool, int first_class,
                      int last_class) {
        std::size_t at = 0;
        for (int c = first_class; c <= last_class; ++c) {
            for (int t = 0; t < s[c]; ++t) classes[c].push_back(pool[at++]);
        }
        EQCOL_CHECK(at == pool.size());
    };

    if (pre == b) {
        // B exactly fills the j smallest classes.
        spread(B, 0, j - 1);
        spread(A, j, k - 1);
    } else if (j >= 2) {
        // Mixed middle class: the s lowest-degree B-vertices plus enough
        // A-vertices they do not touch.
        int ssz = static_cast<int>(b - (pre - s[j - 1]));
        std::vector<int> bysize = B;
        std::stable_sort(bysize.begin(), bysize.end(),
                         [&](int u, int v) { return g.degree(u) < g.degree(v); });
        std::vector<char> inS(n, 0);
        std::vector<int> S(bysize.begin(), bysize.begin() + ssz);
        for (int v : S) inS[v] = 1;
        std::vector<char> blocked(n, 0);
        for (int v : S)
            for (int u : g.adj[v]) blocked[u] = 1;
        std::vector<int> mixed = S;
        for (int v : A) {
            if (static_cast<int>(mixed.size()) == s[j - 1]) break;
            if (!blocked[v]) mixed.push_back(v);
        }
        EQCOL_CHECK_MSG(static_cast<int>(mixed.size()) == s[j - 1],
                        "mixed class could not be filled");
        std::vector<char> used(n, 0);
        for (int v : mixed) used[v] = 1;
        std::vector<int> restB, restA;
        for (int v : B)
            if (!used[v]) restB.push_back(v);
        for (int v : A)
            if (!used[v]) restA.push_back(v);
        classes[j - 1] = mixed;
        spread(restB, 0, j - 2);
        spread(restA, j, k - 1);
    } else {
        // b < s_0: two mixed classes are needed.  A must have no isolated
        // vertices here (the bipartition balancing guarantees it).
        for (int v : A)
            EQCOL_CHECK_MSG(g.degree(v) > 0, "isolated vertex on the big side");
        std::vector<int> L;  // degree-1 vertices of A
        std::vector<char> isL(n, 0);
        for (int v : A)
            if (g.degree(v) == 1) {
                L.push_back(v);
                isL[v] = 1;
            }

        // Grow an inclusion-maximal "good" subset Q of B: together with the
        // leaves it does not touch, it can fill the largest class.
        std::vector<char> inQ(n, 0);
        auto good_with = [&](int extra) {
            long long cnt = 0;
            for (int v : B)
                if (inQ[v] || v == extra) ++cnt;
            for (int x : L) {
                int u = g.adj[x][0];
                if (!(inQ[u] || u == extra)) ++cnt;
            }
            return cnt >= s[k - 1];
        };
        EQCOL_CHECK_MSG(good_with(-1), "empty set is not good");
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v : B)
                if (!inQ[v] && good_with(v)) {
                    inQ[v] = 1;
                    grew = true;
                }
        }

        std::vector<int> I1, I2;
        // First candidate split: the rest of B padded up to s_0 with leaves
        // touching Q, vs Q plus the leaves it misses.  Surplus Q-leaves stay
        // out of both (they are big-side vertices, so the middle classes can
        // absorb them); B-vertices cannot be shed, so B minus Q must fit.
        {
            long long bout = 0, i1 = 0;
            for (int v : B)
                if (!inQ[v]) ++bout;
            i1 = bout;
            for (int x : L)
                if (inQ[g.adj[x][0]]) ++i1;
            if (bout <= s[0] && i1 >= s[0]) {
                for (int v : B) (inQ[v] ? I2 : I1).push_back(v);
                for (int x : L) {
                    if (inQ[g.adj[x][0]]) {
                        if (static_cast<int>(I1.size()) < s[0]) I1.push_back(x);
                    } else {
                        I2.push_back(x);
                    }
                }
                EQCOL_CHECK(static_cast<int>(I1.size()) == s[0]);
            }
        }
        if (I1.empty()) {
            // Build the small class around a vertex v of B outside Q, from a
            // maximum independent set through v, trimmed to size s_0 with as
            // few B-vertices as possible, then improved by swapping in leaves
            // that touch nothing in it.
            int v = -1;
            for (int u : B)
                if (!inQ[u]) { v = u; break; }
            EQCOL_CHECK(v != -1);
            auto R0 = detail::max_independent_with(g, v);
            EQCOL_CHECK(static_cast<int>(R0.size()) >= s[0]);
            std::sort(R0.begin(), R0.end());
            std::vector<int> R{v};
            for (int u : R0)
                if (u != v && inA[u] && static_cast<int>(R.size()) < s[0])
                    R.push_back(u);
            for (int u : R0)
                if (u != v && !inA[u] && static_cast<int>(R.size()) < s[0])
                    R.push_back(u);
            EQCOL_CHECK(static_cast<int>(R.size()) == s[0]);
            std::vector<char> inR(n, 0);
            for (int u : R) inR[u] = 1;
            int rb = 0;
            for (int u : R)
                if (!inA[u]) ++rb;
            for (int x : L) {
                if (rb < 2) break;
                if (inR[x] || inR[g.adj[x][0]]) continue;
                int drop = -1;  // lowest B-vertex of R other than v
                for (int u : R)
                    if (!inA[u] && u != v && (drop == -1 || u < drop)) drop = u;
                EQCOL_CHECK(drop != -1);
                inR[drop] = 0;
                inR[x] = 1;
                *std::find(R.begin(), R.end(), drop) = x;
                --rb;
            }

            I1 = R;
            if (rb == 1) {
                // Only v remains on the B side of R: pair the rest of B with
                // v's own leaves.
                for (int u : B)
                    if (u != v) I2.push_back(u);
                int need = s[k - 1] - static_cast<int>(I2.size());
                for (int x : g.adj[v]) {
                    if (need == 0) break;
                    if (isL[x] && !inR[x]) {
                        I2.push_back(x);
                        --need;
                    }
                }
                EQCOL_CHECK_MSG(need == 0, "too few private leaves");
            } else {
                for (int u : B)
                    if (!inR[u]) I2.push_back(u);
                for (int x : L)
                    if (!inR[x]) I2.push_back(x);
            }
        }

        EQCOL_CHECK(static_cast<int>(I2.size()) >= s[k - 1]);
        // Trim I2 to size, dropping A-vertices only (B must stay covered).
        {
            std::vector<int> keep;
            int excess = static_cast<int>(I2.size()) - s[k - 1];
            for (int u : I2) {
                if (excess > 0 && inA[u]) { --excess; continue; }
                keep.push_back(u);
            }
            EQCOL_CHECK(excess == 0);
            I2 = keep;
        }
        std::vector<char> used(n, 0);
        for (int u : I1) used[u] = 1;
        for (int u : I2) {
            EQCOL_CHECK(!used[u]);
            used[u] = 1;
        }
        std::vector<int> rest;
        for (int u = 0; u < n; ++u)
            if (!used[u]) {
                EQCOL_CHECK_MSG(inA[u], "far-side vertex left over");
                rest.push_back(u);
            }
        classes[0] = I1;
        classes[k - 1] = I2;
        spread(rest, 1, k - 2);
    }

    Coloring f(n, -1);
    for (int c = 0; c < k; ++c)
        for (int v : classes[c]) {
            EQCOL_CHECK(f[v] == -1);
            f[v] = c;
        }
    Verdict ver = check_coloring(g, f, CheckMode::equitable, {}, k);
    EQCOL_CHECK_MSG(ver.ok, "forest construction failed: " + ver.reason);
    return f;
}

}  // namespace eqcol

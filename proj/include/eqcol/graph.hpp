#pragma once

// Simple undirected graphs with 0-based vertex ids, plus DIMACS .col I/O.

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "eqcol/common.hpp"

namespace eqcol {

struct Graph {
    int n = 0;
    // adj[v] is kept sorted ascending and duplicate-free.
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) { EQCOL_CHECK(n_ >= 0); }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool adjacent(int u, int v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Adds edge {u,v}; ignores a duplicate, rejects a loop.
    void add_edge(int u, int v) {
        EQCOL_CHECK(0 <= u && u < n && 0 <= v && v < n);
        EQCOL_CHECK_MSG(u != v, "loops are not allowed");
        if (adjacent(u, v)) return;
        adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& a : adj) twice += static_cast<long long>(a.size());
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edge_count()));
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

// (max degree, Ore degree, min degree).  The Ore degree is the maximum of
// d(u)+d(v) over edges uv, and 0 for an edgeless graph.
inline std::tuple<int, int, int> degree_stats(const Graph& g) {
    int dmax = 0, dmin = (g.n == 0 ? 0 : g.n);
    int ore = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
        for (int u : g.adj[v])
            ore = std::max(ore, d + g.degree(u));
    }
    if (g.n == 0) dmin = 0;
    return {dmax, ore, dmin};
}

inline bool is_forest(const Graph& g) {
    // A graph is a forest iff a DFS never sees a back edge; equivalently
    // m = n - (#components).  We just count while DFSing.
    std::vector<int> parent(g.n, -2);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.adj[v]) {
                if (u == parent[v]) continue;
                if (parent[u] != -2) return false;
                parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    return true;
}

// Parses DIMACS .col text.  Accepted lines: comments ("c ..."), one problem
// line ("p edge N M"), and edge lines ("e U V", 1-based endpoints).  Duplicate
// edges are merged silently; loops and out-of-range ids are errors.  M is not
// required to match the deduplicated count, but each edge line must be
// well-formed.  Errors carry the 1-based line number.
inline Graph graph_from_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_p = false;
    Graph g;

    auto fail = [&](const std::string& msg) -> void {
        throw io_error("dimacs parse error at line " + std::to_string(lineno) +
                       ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok == "c") continue;
        if (tok == "p") {
            if (have_p) fail("duplicate problem line");
            std::string fmt;
            long long n = -1, m = -1;
            if (!(ls >> fmt >> n >> m)) fail("malformed problem line");
            if (fmt != "edge" && fmt != "edges") fail("expected 'p edge N M'");
            if (n < 0 || m < 0) fail("negative size in problem line");
            std::string extra;
            if (ls >> extra) fail("trailing tokens on problem line");
            g = Graph(static_cast<int>(n));
            have_p = true;
        } else if (tok == "e") {
            if (!have_p) fail("edge line before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail("malformed edge line");
            std::string extra;
            if (ls >> extra) fail("trailing tokens on edge line");
            if (u < 1 || u > g.n || v < 1 || v > g.n)
                fail("vertex id out of range");
            if (u == v) fail("loop edge");
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            fail("unknown line type '" + tok + "'");
        }
    }
    if (!have_p) {
        lineno = 0;
        fail("missing problem line");
    }
    return g;
}

// Serializes to DIMACS .col: problem line, then edges as "e u v" with
// u < v (1-based), sorted lexicographically.  Deterministic.
inline std::string graph_to_dimacs(const Graph& g) {
    std::string out;
    out += "p edge " + std::to_string(g.n) + " " +
           std::to_string(g.edge_count()) + "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v)
                out += "e " + std::to_string(u + 1) + " " +
                       std::to_string(v + 1) + "\n";
    return out;
}

// Joins a complete graph on p new vertices (p = k - n mod k, 1 <= p <= k-1
// when k does not divide n; identity when it does).  New vertices are
// adjacent only to each other, so the padded max degree is
// max(old max degree, p-1) and the original graph is an induced subgraph on
// ids 0..n-1.  Returns the padded graph and the list of new vertex ids.
inline std::pair<Graph, std::vector<int>> pad_to_multiple(const Graph& g, int k) {
    EQCOL_CHECK(k >= 1);
    int r = g.n % k;
    if (r == 0) return {g, {}};
    int p = k - r;
    Graph h(g.n + p);
    for (int u = 0; u < g.n; ++u) h.adj[u] = g.adj[u];
    std::vector<int> fresh;
    fresh.reserve(p);
    for (int i = 0; i < p; ++i) fresh.push_back(g.n + i);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) h.add_edge(g.n + i, g.n + j);
    return {h, fresh};
}

// Induced subgraph on `verts` (need not be sorted); vertex i of the result is
// verts[i].  Also returns nothing extra: callers keep their own id maps.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> idx(g.n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        EQCOL_CHECK(0 <= verts[i] && verts[i] < g.n && idx[verts[i]] == -1);
        idx[verts[i]] = i;
    }
    Graph h(static_cast<int>(verts.size()));
    for (int i = 0; i < h.n; ++i)
        for (int u : g.adj[verts[i]])
            if (idx[u] >= 0 && idx[u] > i) h.add_edge(i, idx[u]);
    return h;
}

}  // namespace eqcol

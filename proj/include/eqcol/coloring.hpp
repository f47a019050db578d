#pragma once

// Colorings, validity checking in its several flavors, and the tiny text
// format used by the CLI ("vertex color" per line, vertices 1-based, colors
// 0-based).

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/graph.hpp"

namespace eqcol {

using Coloring = std::vector<int>;               // color of each vertex
using Lists = std::vector<std::vector<int>>;     // allowed colors per vertex

// "one-based" remainder: n rem* k is in 1..k, equal to n mod k except that a
// multiple of k maps to k instead of 0.  This is the number of classes a
// size-balanced partition of n into at most-ceil(n/k) parts fills completely.
inline int rem1(int n, int k) { return (n - 1) % k + 1; }

struct Verdict {
    bool ok = true;
    std::string reason;  // empty when ok; otherwise the first violation found

    static Verdict yes() { return {}; }
    static Verdict no(std::string why) { return {false, std::move(why)}; }
};

enum class CheckMode {
    proper,           // adjacent vertices get distinct colors
    equitable,        // proper, colors < k, class sizes within floor/ceil of n/k
    nearly_equitable, // proper, colors < k, one class m-1, one m+1, rest m
    equitable_list,   // proper, from lists, every class <= ceil(n/k)
    se_list,          // equitable_list and at most rem1(n,k) full classes
    proportional      // proper, from lists, usage of c within floor/ceil of eta(c)/k
};

namespace detail {

inline Verdict check_proper(const Graph& g, const Coloring& f) {
    if (static_cast<int>(f.size()) != g.n)
        return Verdict::no("coloring has " + std::to_string(f.size()) +
                           " entries for " + std::to_string(g.n) + " vertices");
    for (int v = 0; v < g.n; ++v)
        if (f[v] < 0)
            return Verdict::no("vertex " + std::to_string(v + 1) +
                               " has negative color");
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v && f[u] == f[v])
                return Verdict::no("edge {" + std::to_string(u + 1) + "," +
                                   std::to_string(v + 1) +
                                   "} has both ends colored " +
                                   std::to_string(f[u]));
    return Verdict::yes();
}

inline Verdict check_palette(const Coloring& f, int k) {
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        if (f[v] >= k)
            return Verdict::no("vertex " + std::to_string(v + 1) + " has color " +
                               std::to_string(f[v]) + " but only " +
                               std::to_string(k) + " colors are allowed");
    return Verdict::yes();
}

inline std::vector<int> class_sizes(const Coloring& f, int k) {
    std::vector<int> sz(k, 0);
    for (int c : f) ++sz[c];
    return sz;
}

inline Verdict check_from_lists(const Coloring& f, const Lists& L) {
    if (L.size() != f.size())
        return Verdict::no("list count does not match vertex count");
    for (int v = 0; v < static_cast<int>(f.size()); ++v) {
        const auto& lv = L[v];
        if (!std::binary_search(lv.begin(), lv.end(), f[v]))
            return Verdict::no("vertex " + std::to_string(v + 1) +
                               " uses color " + std::to_string(f[v]) +
                               " which is not on its list");
    }
    return Verdict::yes();
}

}  // namespace detail

// Lists must be sorted ascending per vertex (see lists.hpp); for the list
// modes all lists must have the same size k >= 1.
inline Verdict check_coloring(const Graph& g, const Coloring& f, CheckMode mode,
                              const Lists& L = {}, int k = 0) {
    Verdict v = detail::check_proper(g, f);
    if (!v.ok) return v;
    if (mode == CheckMode::proper) return v;

    if (mode == CheckMode::equitable || mode == CheckMode::nearly_equitable) {
        EQCOL_CHECK_MSG(k >= 1, "palette size k must be at least 1");
        v = detail::check_palette(f, k);
        if (!v.ok) return v;
        auto sz = detail::class_sizes(f, k);
        if (mode == CheckMode::equitable) {
            int lo = g.n / k, hi = (g.n + k - 1) / k;
            for (int c = 0; c < k; ++c)
                if (sz[c] < lo || sz[c] > hi)
                    return Verdict::no("class " + std::to_string(c) + " has size " +
                                       std::to_string(sz[c]) + ", outside [" +
                                       std::to_string(lo) + "," +
                                       std::to_string(hi) + "]");
            return Verdict::yes();
        }
        // nearly equitable: n = k*m, one class m-1, one m+1, the rest m
        if (g.n % k != 0)
            return Verdict::no("vertex count " + std::to_string(g.n) +
                               " is not a multiple of k=" + std::to_string(k));
        int m = g.n / k;
        int small = 0, big = 0;
        for (int c = 0; c < k; ++c) {
            if (sz[c] == m - 1) ++small;
            else if (sz[c] == m + 1) ++big;
            else if (sz[c] != m)
                return Verdict::no("class " + std::to_string(c) + " has size " +
                                   std::to_string(sz[c]) +
                                   ", not in {m-1,m,m+1} for m=" +
                                   std::to_string(m));
        }
        if (small != 1 || big != 1)
            return Verdict::no("expected exactly one class of size m-1 and one "
                               "of size m+1, found " + std::to_string(small) +
                               " and " + std::to_string(big));
        return Verdict::yes();
    }

    // List modes.
    EQCOL_CHECK_MSG(!L.empty(), "list modes need lists");
    int kk = static_cast<int>(L[0].size());
    for (const auto& lv : L)
        EQCOL_CHECK_MSG(static_cast<int>(lv.size()) == kk,
                        "all lists must have the same size");
    EQCOL_CHECK_MSG(kk >= 1, "lists must be nonempty");
    v = detail::check_from_lists(f, L);
    if (!v.ok) return v;

    std::map<int, int> usage;
    for (int c : f) ++usage[c];

    if (mode == CheckMode::equitable_list || mode == CheckMode::se_list) {
        int cap = (g.n + kk - 1) / kk;
        int full = 0;
        for (auto [c, cnt] : usage) {
            if (cnt > cap)
                return Verdict::no("color " + std::to_string(c) + " is used " +
                                   std::to_string(cnt) + " times, above the cap " +
                                   std::to_string(cap));
            if (cnt == cap) ++full;
        }
        if (mode == CheckMode::se_list && g.n > 0 && full > rem1(g.n, kk))
            return Verdict::no(std::to_string(full) +
                               " classes reach the cap, at most " +
                               std::to_string(rem1(g.n, kk)) + " may");
        return Verdict::yes();
    }

    EQCOL_CHECK(mode == CheckMode::proportional);
    std::map<int, int> eta;  // how many lists contain each color
    for (const auto& lv : L)
        for (int c : lv) ++eta[c];
    for (auto [c, cnt] : usage) {
        int e = eta[c];  // c appears on a list, else check_from_lists failed
        int lo = e / kk, hi = (e + kk - 1) / kk;
        if (cnt < lo || cnt > hi)
            return Verdict::no("color " + std::to_string(c) + " is used " +
                               std::to_string(cnt) + " times, outside [" +
                               std::to_string(lo) + "," + std::to_string(hi) +
                               "] for its list frequency " + std::to_string(e));
    }
    // Colors never used must also respect their floor.
    for (auto [c, e] : eta) {
        if (usage.count(c)) continue;
        if (e / kk > 0)
            return Verdict::no("color " + std::to_string(c) +
                               " is unused but its list frequency " +
                               std::to_string(e) + " demands at least " +
                               std::to_string(e / kk) + " uses");
    }
    return Verdict::yes();
}

// --- coloring text format ------------------------------------------------

// One line per vertex: "<vertex> <color>", vertex 1-based, color 0-based,
// sorted by vertex.  Every vertex must appear exactly once.
inline Coloring coloring_from_text(std::string_view text, int n) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    Coloring f(n, -1);
    auto fail = [&](const std::string& msg) -> void {
        throw io_error("coloring parse error at line " + std::to_string(lineno) +
                       ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        long long v = 0, c = 0;
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;  // tolerate comment lines
        std::istringstream ls2(line);
        if (!(ls2 >> v >> c)) fail("expected '<vertex> <color>'");
        std::string extra;
        if (ls2 >> extra) fail("trailing tokens");
        if (v < 1 || v > n) fail("vertex id out of range");
        if (c < 0) fail("negative color");
        if (f[v - 1] != -1) fail("vertex listed twice");
        f[v - 1] = static_cast<int>(c);
    }
    for (int v = 0; v < n; ++v)
        if (f[v] == -1) {
            lineno = 0;
            fail("vertex " + std::to_string(v + 1) + " missing");
        }
    return f;
}

inline std::string coloring_to_text(const Coloring& f) {
    std::string out;
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        out += std::to_string(v + 1) + " " + std::to_string(f[v]) + "\n";
    return out;
}

}  // namespace eqcol

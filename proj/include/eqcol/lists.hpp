#pragma once

// Color lists: the "v: c1 c2 ... ck" text format and helpers.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqcol/common.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/rng.hpp"

namespace eqcol {

// One line per vertex: "<vertex>: c1 c2 ... ck" (vertex 1-based, colors
// 0-based integers).  Lists are sorted and deduplicated on read; every vertex
// must get exactly one line.
inline Lists lists_from_text(std::string_view text, int n) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    Lists L(n);
    std::vector<bool> seen(n, false);
    auto fail = [&](const std::string& msg) -> void {
        throw io_error("list parse error at line " + std::to_string(lineno) +
                       ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // Strip an optional comment marker line.
        std::istringstream probe(line);
        std::string head;
        if (!(probe >> head)) continue;
        if (head == "c") continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected '<vertex>: colors...'");
        long long v = 0;
        {
            std::istringstream vs(line.substr(0, colon));
            if (!(vs >> v)) fail("bad vertex id");
            std::string extra;
            if (vs >> extra) fail("trailing tokens before ':'");
        }
        if (v < 1 || v > n) fail("vertex id out of range");
        if (seen[v - 1]) fail("vertex listed twice");
        seen[v - 1] = true;
        std::istringstream cs(line.substr(colon + 1));
        long long c;
        std::vector<int>& lv = L[v - 1];
        while (cs >> c) {
            if (c < 0) fail("negative color");
            lv.push_back(static_cast<int>(c));
        }
        if (!cs.eof()) fail("bad color token");
        if (lv.empty()) fail("empty list");
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) {
            lineno = 0;
            fail("vertex " + std::to_string(v + 1) + " missing");
        }
    return L;
}

inline std::string lists_to_text(const Lists& L) {
    std::string out;
    for (int v = 0; v < static_cast<int>(L.size()); ++v) {
        out += std::to_string(v + 1) + ":";
        for (int c : L[v]) out += " " + std::to_string(c);
        out += "\n";
    }
    return out;
}

// All lists present, sorted, same size k >= 1; returns k.
inline int lists_uniform_size(const Lists& L) {
    EQCOL_CHECK_MSG(!L.empty(), "no lists");
    int k = static_cast<int>(L[0].size());
    for (const auto& lv : L) {
        EQCOL_CHECK_MSG(static_cast<int>(lv.size()) == k,
                        "lists must all have the same size");
        EQCOL_CHECK_MSG(std::is_sorted(lv.begin(), lv.end()), "lists must be sorted");
    }
    EQCOL_CHECK_MSG(k >= 1, "lists must be nonempty");
    return k;
}

// The constant list {0,...,k-1} for every vertex.
inline Lists constant_lists(int n, int k) {
    Lists L(n);
    for (auto& lv : L) {
        lv.resize(k);
        for (int c = 0; c < k; ++c) lv[c] = c;
    }
    return L;
}

// Independent uniform k-subsets of {0,...,palette-1} per vertex, drawn with
// the library generator (rejection on duplicates, then sorted).
inline Lists random_lists(int n, int k, int palette, Lcg& rng) {
    EQCOL_CHECK(1 <= k && k <= palette);
    Lists L(n);
    for (auto& lv : L) {
        while (static_cast<int>(lv.size()) < k) {
            int c = static_cast<int>(rng.next_below(palette));
            if (!std::count(lv.begin(), lv.end(), c)) lv.push_back(c);
        }
        std::sort(lv.begin(), lv.end());
    }
    return L;
}

}  // namespace eqcol

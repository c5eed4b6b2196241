#pragma once

#include <algorithm>
#include <vector>

#include "krdeg/tableau.hpp"

namespace krdeg {

// Row bumping: k replaces the leftmost entry of row 1 strictly larger than
// itself, the displaced entry continues into the next row.
inline Tableau row_insert(const Tableau& p, int k) {
    if (!p.is_straight()) throw ShapeError("row_insert: straight shape required");
    Tableau out = p;
    int v = k;
    for (std::size_t r = 0;; ++r) {
        if (r == out.cells.size()) {
            out.cells.push_back({v});
            out.outer.push_back(1);
            break;
        }
        auto& row = out.cells[r];
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            ++out.outer[r];
            break;
        }
        std::swap(*it, v);
    }
    return out;
}

inline Tableau insertion_tableau(const Word& w) {
    Tableau p;
    for (int letter : w) p = row_insert(p, letter);
    return p;
}

// Maximum total length of k disjoint weakly increasing subsequences of w.
// Plain exhaustive search over assignments; intended for desk-scale oracles.
inline int greene_invariants(const Word& w, int k) {
    if (k < 1) throw DomainError("greene_invariants: k must be positive");
    int m = static_cast<int>(w.size());
    int best = 0;
    // tails[j] = last letter of subsequence j, or 0 when still empty.
    std::vector<int> tails(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (used + (m - pos) <= best) return; // prune
        if (pos == m) {
            best = std::max(best, used);
            return;
        }
        int letter = w[static_cast<std::size_t>(pos)];
        bool tried_empty = false;
        for (int j = 0; j < k; ++j) {
            int t = tails[static_cast<std::size_t>(j)];
            if (t == 0 && tried_empty) continue; // empty slots are interchangeable
            if (t == 0) tried_empty = true;
            if (t <= letter) {
                tails[static_cast<std::size_t>(j)] = letter;
                self(self, pos + 1, used + 1);
                tails[static_cast<std::size_t>(j)] = t;
            }
        }
        self(self, pos + 1, used);
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace krdeg

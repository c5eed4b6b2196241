#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "krdeg/crystal.hpp"
#include "krdeg/rsk.hpp"

namespace krdeg {

namespace detail {

// Two rectangles stacked as a disconnected skew tableau: `low` at the bottom
// left, `high` at the top right.
inline Tableau stack_factors(const Tableau& low, const Tableau& high) {
    int rl = low.rows(), cl = low.outer.empty() ? 0 : low.outer[0];
    int rh = high.rows(), ch = high.outer.empty() ? 0 : high.outer[0];
    Partition outer, inner;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < rh; ++r) {
        outer.push_back(cl + ch);
        inner.push_back(cl);
        rows.push_back(high.cells[static_cast<std::size_t>(r)]);
    }
    for (int r = 0; r < rl; ++r) {
        outer.push_back(cl);
        inner.push_back(0);
        rows.push_back(low.cells[static_cast<std::size_t>(r)]);
    }
    return Tableau(outer, inner, rows);
}

inline std::pair<Tableau, Tableau> unstack_factors(const Tableau& t, const Rectangle& low,
                                                   const Rectangle& high) {
    std::vector<std::vector<int>> top, bottom;
    for (int r = 0; r < high.rows; ++r) top.push_back(t.cells[static_cast<std::size_t>(r)]);
    for (int r = 0; r < low.rows; ++r)
        bottom.push_back(t.cells[static_cast<std::size_t>(high.rows + r)]);
    return {Tableau(bottom), Tableau(top)};
}

inline int shape_mismatch(const Tableau& t, const Partition& outer, const Partition& inner) {
    // Count of cells in exactly one of the two skew shapes.
    auto cellcount = [](const Partition& o, const Partition& i, int r) {
        int out = r < static_cast<int>(o.size()) ? o[static_cast<std::size_t>(r)] : 0;
        int in = r < static_cast<int>(i.size()) ? i[static_cast<std::size_t>(r)] : 0;
        return std::pair{in, out};
    };
    int rows = std::max<int>(t.rows(), static_cast<int>(outer.size()));
    int diff = 0;
    for (int r = 0; r < rows; ++r) {
        auto [ia, oa] = cellcount(t.outer, t.inner, r);
        auto [ib, ob] = cellcount(outer, inner, r);
        int lo = std::max(ia, ib), hi = std::min(oa, ob);
        int common = std::max(0, hi - lo);
        diff += (oa - ia) + (ob - ib) - 2 * common;
    }
    return diff;
}

// All boxes accepted by jdt_slide for either kind, found structurally:
// inner boxes are removable corners of the inner shape, outer boxes are
// addable cells of the outer shape, each with an appropriately shared edge.
inline std::vector<std::pair<Cell, BoxKind>> slide_candidates(const Tableau& t) {
    std::vector<std::pair<Cell, BoxKind>> out;
    int rows = t.rows();
    for (int r = 1; r <= rows; ++r) {
        int in = t.inner_at(r - 1), outw = t.outer[static_cast<std::size_t>(r - 1)];
        if (in >= 1 && t.inner_at(r) < in && (t.has_cell(r, in + 1) || t.has_cell(r + 1, in)))
            out.emplace_back(Cell{r, in}, BoxKind::inner);
        bool outer_ok = r == 1 || t.outer[static_cast<std::size_t>(r - 2)] >= outw + 1;
        if (outer_ok && (t.has_cell(r, outw) || t.has_cell(r - 1, outw + 1)))
            out.emplace_back(Cell{r, outw + 1}, BoxKind::outer);
    }
    // a fresh bottom row
    if (rows >= 1) {
        for (int c = 1; c <= t.inner_at(rows - 1) + 1 && c <= t.outer[static_cast<std::size_t>(rows - 1)];
             ++c)
            if (t.has_cell(rows, c)) out.emplace_back(Cell{rows + 1, c}, BoxKind::outer);
    }
    return out;
}

// Slide the stacked pair toward the target arrangement, greedily accepting
// any slide that strictly shrinks the cell-set difference.
inline std::optional<Tableau> greedy_reshape(Tableau cur, const Partition& outer,
                                             const Partition& inner) {
    int diff = shape_mismatch(cur, outer, inner);
    while (diff > 0) {
        bool moved = false;
        for (auto& [box, kind] : slide_candidates(cur)) {
            Tableau next = jdt_slide(cur, box, kind);
            int ndiff = shape_mismatch(next, outer, inner);
            if (ndiff < diff) {
                cur = std::move(next);
                diff = ndiff;
                moved = true;
                break;
            }
        }
        if (!moved) return std::nullopt;
    }
    return cur;
}

// All semistandard fillings of a shape with exactly the given letter counts.
inline std::vector<Tableau> ssyt_with_content(const Partition& shape,
                                              const std::map<int, int>& content) {
    std::vector<Tableau> out;
    std::map<int, int> left = content;
    std::vector<std::vector<int>> grid(shape.size());
    auto rec = [&](auto&& self, std::size_t r, int c) -> void {
        if (r == shape.size()) {
            out.emplace_back(grid);
            return;
        }
        if (c == shape[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, grid[r - 1][static_cast<std::size_t>(c)] + 1);
        for (auto& [v, cnt] : left) {
            if (cnt == 0 || v < lo) continue;
            --cnt;
            grid[r].push_back(v);
            self(self, r, c + 1);
            grid[r].pop_back();
            ++cnt;
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace detail

// Combinatorial R-matrix on a pair of rectangular tableaux: the unique pair
// (A, B) of the transposed shapes whose stacked reading word is Knuth
// equivalent to that of (T1, T2). Equal shapes act as the identity. The
// result is certified against the insertion tableau; a certification failure
// means a broken uniqueness contract and raises InvariantViolation.
inline std::pair<Tableau, Tableau> r_matrix(const Tableau& t1, const Tableau& t2) {
    Rectangle r1{t1.rows(), t1.outer.empty() ? 0 : t1.outer[0]};
    Rectangle r2{t2.rows(), t2.outer.empty() ? 0 : t2.outer[0]};
    if (r1 == r2) return {t1, t2}; // sigma is the identity on equal shapes

    Word w0 = row_reading_word(t1);
    {
        Word w2 = row_reading_word(t2);
        w0.insert(w0.end(), w2.begin(), w2.end());
    }
    Tableau p = insertion_tableau(w0);

    auto certified = [&](const std::pair<Tableau, Tableau>& ab) {
        const auto& [a, b] = ab;
        if (a.rows() != r2.rows || (a.outer.empty() ? 0 : a.outer[0]) != r2.cols) return false;
        if (b.rows() != r1.rows || (b.outer.empty() ? 0 : b.outer[0]) != r1.cols) return false;
        Word w = row_reading_word(a);
        Word wb = row_reading_word(b);
        w.insert(w.end(), wb.begin(), wb.end());
        return insertion_tableau(w) == p;
    };

    // Target arrangement: A (shape R2) bottom left, B (shape R1) top right.
    Partition target_outer, target_inner;
    for (int r = 0; r < r1.rows; ++r) {
        target_outer.push_back(r2.cols + r1.cols);
        target_inner.push_back(r2.cols);
    }
    for (int r = 0; r < r2.rows; ++r) {
        target_outer.push_back(r2.cols);
        target_inner.push_back(0);
    }

    auto slid = detail::greedy_reshape(detail::stack_factors(t1, t2), target_outer, target_inner);
    if (slid) {
        auto ab = detail::unstack_factors(*slid, r2, r1);
        if (certified(ab)) return ab;
    }

    // Fallback: search over fillings of the target shapes directly.
    std::map<int, int> content;
    for (int v : w0) ++content[v];
    for (const Tableau& a : detail::ssyt_with_content(r2.shape(), content)) {
        std::map<int, int> rest = content;
        for (const auto& row : a.cells)
            for (int v : row)
                if (--rest[v] < 0) goto next_a;
        for (const Tableau& b : detail::ssyt_with_content(r1.shape(), rest)) {
            if (auto ab = std::pair{a, b}; certified(ab)) return ab;
        }
    next_a:;
    }
    throw InvariantViolation("r_matrix: no pair of the target shapes matches the Knuth class");
}

// sigma_i: swap tensor factors i and i+1 (1-based adjacent-pair index).
inline TensorElement apply_sigma(const TensorElement& t, int i) {
    if (i < 1 || i >= static_cast<int>(t.factors.size()))
        throw DomainError("apply_sigma: pair index out of range");
    TensorElement out = t;
    auto [a, b] = r_matrix(t.factors[static_cast<std::size_t>(i - 1)],
                           t.factors[static_cast<std::size_t>(i)]);
    out.factors[static_cast<std::size_t>(i - 1)] = std::move(a);
    out.factors[static_cast<std::size_t>(i)] = std::move(b);
    return out;
}

// Number of cells below row max(r1, r2) in the insertion tableau of the
// concatenated reading word.
inline int local_charge(const Tableau& t1, const Tableau& t2) {
    Word w = row_reading_word(t1);
    Word w2 = row_reading_word(t2);
    w.insert(w.end(), w2.begin(), w2.end());
    Tableau p = insertion_tableau(w);
    int cut = std::max(t1.rows(), t2.rows());
    int count = 0;
    for (int r = cut; r < p.rows(); ++r)
        count += p.outer[static_cast<std::size_t>(r)];
    return count;
}

// Charge of a tensor element: local charges between every pair (i, j),
// with factor i carried next to factor j by the R-matrices sigma_{j-2}...sigma_i.
// Compositions are recomputed per pair.
inline long long charge(const TensorElement& t) {
    int k = static_cast<int>(t.factors.size());
    long long total = 0;
    for (int i = 1; i < k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            TensorElement u = t;
            for (int s = i; s <= j - 2; ++s) u = apply_sigma(u, s);
            total += local_charge(u.factors[static_cast<std::size_t>(j - 2)],
                                  u.factors[static_cast<std::size_t>(j - 1)]);
        }
    }
    return total;
}

// Semicharge: adjacent pairs only, weighted by position, and a pair only
// contributes when its two shapes agree.
inline long long semicharge(const TensorElement& t) {
    int k = static_cast<int>(t.factors.size());
    if (k == 1) return 0;
    auto shapes = t.shapes();
    long long total = 0;
    for (int i = 1; i < k; ++i) {
        if (shapes.rects[static_cast<std::size_t>(i - 1)] != shapes.rects[static_cast<std::size_t>(i)])
            continue;
        total += static_cast<long long>(i) * local_charge(t.factors[static_cast<std::size_t>(i - 1)],
                                                          t.factors[static_cast<std::size_t>(i)]);
    }
    return total;
}

} // namespace krdeg

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "krdeg/tableau.hpp"

namespace krdeg {
namespace detail {

// Dense working copy of a (skew) tableau. active[r][c] marks cells that take
// part in sliding; frozen values stay in val but act as walls.
struct SlideGrid {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<int>> val;
    std::vector<std::vector<char>> active;

    bool on(int r, int c) const { // 0-based
        return r >= 0 && r < nrows && c >= 0 && c < ncols &&
               active[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    int get(int r, int c) const {
        return val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    void set(int r, int c, int v, bool act = true) {
        val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        active[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = act ? 1 : 0;
    }
    void clear(int r, int c) { set(r, c, 0, false); }
};

inline SlideGrid to_grid(const Tableau& t, int pad_rows = 0, int pad_cols = 0) {
    SlideGrid g;
    g.nrows = t.rows() + pad_rows;
    g.ncols = (t.outer.empty() ? 0 : t.outer[0]) + pad_cols;
    g.val.assign(static_cast<std::size_t>(g.nrows), std::vector<int>(static_cast<std::size_t>(g.ncols), 0));
    g.active.assign(static_cast<std::size_t>(g.nrows), std::vector<char>(static_cast<std::size_t>(g.ncols), 0));
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = t.inner_at(r - 1) + 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c)
            g.set(r - 1, c - 1, t.at(r, c));
    return g;
}

inline Tableau from_grid(const SlideGrid& g) {
    int bottom = -1;
    for (int r = 0; r < g.nrows; ++r)
        for (int c = 0; c < g.ncols; ++c)
            if (g.on(r, c)) bottom = std::max(bottom, r);
    if (bottom < 0) return Tableau{};
    std::size_t nrows = static_cast<std::size_t>(bottom + 1);
    Partition outer(nrows, 0), inner(nrows, 0);
    std::vector<std::vector<int>> rows(nrows);
    for (int r = bottom; r >= 0; --r) {
        int lo = -1, hi = -1;
        for (int c = 0; c < g.ncols; ++c) {
            if (!g.on(r, c)) continue;
            if (lo < 0) lo = c;
            else if (c != hi + 1) throw InvariantViolation("slide produced a row with a gap");
            hi = c;
        }
        auto ur = static_cast<std::size_t>(r);
        if (lo < 0) { // empty row: pin both boundaries to the row below
            outer[ur] = inner[ur] = (r < bottom ? outer[ur + 1] : 0);
            continue;
        }
        outer[ur] = hi + 1;
        inner[ur] = lo;
        for (int c = lo; c <= hi; ++c) rows[ur].push_back(g.get(r, c));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    Tableau t(outer, inner, rows);
    if (!is_valid_shape(t)) throw InvariantViolation("slide produced an invalid skew shape");
    return t;
}

// Hole at (r,c) travels southeast: the smaller of the right/below neighbors
// moves in, ties resolved by sliding the lower entry upward. Returns the
// final hole position.
inline std::pair<int, int> run_inner_slide(SlideGrid& g, int r, int c) {
    for (;;) {
        bool right = g.on(r, c + 1), below = g.on(r + 1, c);
        if (!right && !below) return {r, c};
        bool take_below;
        if (right && below)
            take_below = g.get(r + 1, c) <= g.get(r, c + 1);
        else
            take_below = below;
        if (take_below) {
            g.set(r, c, g.get(r + 1, c));
            g.clear(r + 1, c);
            ++r;
        } else {
            g.set(r, c, g.get(r, c + 1));
            g.clear(r, c + 1);
            ++c;
        }
    }
}

// Hole travels northwest: the larger of the left/above neighbors moves in,
// ties resolved by sliding the higher entry downward.
inline std::pair<int, int> run_outer_slide(SlideGrid& g, int r, int c) {
    for (;;) {
        bool left = g.on(r, c - 1), above = g.on(r - 1, c);
        if (!left && !above) return {r, c};
        bool take_above;
        if (left && above)
            take_above = g.get(r - 1, c) >= g.get(r, c - 1);
        else
            take_above = above;
        if (take_above) {
            g.set(r, c, g.get(r - 1, c));
            g.clear(r - 1, c);
            --r;
        } else {
            g.set(r, c, g.get(r, c - 1));
            g.clear(r, c - 1);
            --c;
        }
    }
}

} // namespace detail

enum class BoxKind { inner, outer };

// Single jeu de taquin slide at an adjacent empty box. An inner box shares a
// lower or right edge with T (the hole drifts southeast and a cell leaves the
// outer boundary); an outer box shares an upper or left edge (the hole drifts
// northwest and a cell joins the inner boundary).
inline Tableau jdt_slide(const Tableau& t, Cell box, BoxKind kind) {
    if (!is_valid_shape(t)) throw ShapeError("jdt_slide: malformed tableau");
    if (box.row < 1 || box.col < 1 || t.has_cell(box.row, box.col))
        throw ShapeError("jdt_slide: box must be an empty position");
    // Adding the box must produce a valid skew shape.
    {
        Tableau probe = t;
        int r = box.row;
        if (r > probe.rows() + 1) throw ShapeError("jdt_slide: box detached from shape");
        if (r == probe.rows() + 1) {
            probe.outer.push_back(box.col);
            probe.inner.resize(static_cast<std::size_t>(r), 0);
            probe.inner[static_cast<std::size_t>(r - 1)] = box.col - 1;
            probe.cells.push_back({0});
        } else {
            int in = probe.inner_at(r - 1), out = probe.outer[static_cast<std::size_t>(r - 1)];
            if (box.col == in && in >= 1) {
                probe.inner.resize(std::max<std::size_t>(probe.inner.size(), static_cast<std::size_t>(r)), 0);
                probe.inner[static_cast<std::size_t>(r - 1)] = in - 1;
                probe.cells[static_cast<std::size_t>(r - 1)].insert(
                    probe.cells[static_cast<std::size_t>(r - 1)].begin(), 0);
            } else if (box.col == out + 1) {
                probe.outer[static_cast<std::size_t>(r - 1)] = out + 1;
                probe.cells[static_cast<std::size_t>(r - 1)].push_back(0);
            } else {
                throw ShapeError("jdt_slide: box not adjacent to the row boundary");
            }
        }
        if (!is_valid_shape(probe)) throw ShapeError("jdt_slide: box does not extend the skew shape");
    }
    bool se_neighbor = t.has_cell(box.row, box.col + 1) || t.has_cell(box.row + 1, box.col);
    bool nw_neighbor = t.has_cell(box.row, box.col - 1) || t.has_cell(box.row - 1, box.col);
    if (kind == BoxKind::inner && !se_neighbor)
        throw ShapeError("jdt_slide: inner box must share a lower or right edge with the tableau");
    if (kind == BoxKind::outer && !nw_neighbor)
        throw ShapeError("jdt_slide: outer box must share an upper or left edge with the tableau");

    auto g = detail::to_grid(t, /*pad_rows=*/1, /*pad_cols=*/1);
    int r0 = box.row - 1, c0 = box.col - 1;
    auto [fr, fc] = kind == BoxKind::inner ? detail::run_inner_slide(g, r0, c0)
                                           : detail::run_outer_slide(g, r0, c0);
    g.clear(fr, fc);
    return detail::from_grid(g);
}

// Partial slide: the quadrant weakly below and to the right of the cell is
// pinned, the cell's entry slides out toward the inner boundary, and the
// vacated inner space is filled with 0.
inline Tableau partial_jdt(const Tableau& t, Cell cell) {
    if (!t.has_cell(cell.row, cell.col)) throw ShapeError("partial_jdt: cell outside the tableau");
    auto g = detail::to_grid(t);
    for (int r = cell.row - 1; r < g.nrows; ++r)
        for (int c = cell.col - 1; c < g.ncols; ++c)
            if (g.on(r, c)) g.active[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    auto [fr, fc] = detail::run_outer_slide(g, cell.row - 1, cell.col - 1);
    g.set(fr, fc, 0);
    // Restore the pinned quadrant.
    for (int r = 0; r < g.nrows; ++r)
        for (int c = 0; c < g.ncols; ++c)
            if (t.has_cell(r + 1, c + 1))
                g.active[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
    return detail::from_grid(g);
}

// Slide the entry at `cell` out toward the inner boundary (northwest) and put
// `fill` in the vacated boundary cell. Shape is preserved.
inline Tableau slide_out_at(const Tableau& t, Cell cell, int fill) {
    if (!t.has_cell(cell.row, cell.col)) throw ShapeError("slide_out_at: cell outside the tableau");
    auto g = detail::to_grid(t);
    g.clear(cell.row - 1, cell.col - 1);
    auto [fr, fc] = detail::run_outer_slide(g, cell.row - 1, cell.col - 1);
    g.set(fr, fc, fill);
    return detail::from_grid(g);
}

// Slide the entry at `cell` in toward the outer boundary (southeast) and put
// `fill` in the vacated boundary cell.
inline Tableau slide_in_at(const Tableau& t, Cell cell, int fill) {
    if (!t.has_cell(cell.row, cell.col)) throw ShapeError("slide_in_at: cell outside the tableau");
    auto g = detail::to_grid(t);
    g.clear(cell.row - 1, cell.col - 1);
    auto [fr, fc] = detail::run_inner_slide(g, cell.row - 1, cell.col - 1);
    g.set(fr, fc, fill);
    return detail::from_grid(g);
}

// Promotion with respect to n: every n slides out toward the inner boundary
// (bottom row first, leftmost hole first), vacated boundary cells are filled
// with 0, and all entries are increased by 1.
inline Tableau promote(const Tableau& t, int n) {
    if (t.max_entry() > n) throw DomainError("promote: entry exceeds the alphabet bound");
    require_semistandard(t, "promote");
    auto g = detail::to_grid(t);
    std::vector<std::pair<int, int>> marks; // 0-based
    for (int r = t.rows(); r >= 1; --r)
        for (int c = t.inner_at(r - 1) + 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c)
            if (t.at(r, c) == n) marks.emplace_back(r - 1, c - 1);
    for (auto [r, c] : marks) {
        g.clear(r, c);
        auto [fr, fc] = detail::run_outer_slide(g, r, c);
        g.set(fr, fc, 0, /*act=*/false); // frozen until the final increment
    }
    for (int r = 0; r < g.nrows; ++r)
        for (int c = 0; c < g.ncols; ++c)
            if (t.has_cell(r + 1, c + 1)) {
                g.val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += 1;
                g.active[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
            }
    Tableau out = detail::from_grid(g);
    if (!is_semistandard(out)) throw InvariantViolation("promote: result not semistandard");
    return out;
}

// Inverse of promote: every 1 slides in toward the outer boundary (top row
// first, rightmost hole first), vacated cells get n+1, entries decrease by 1.
inline Tableau promote_inverse(const Tableau& t, int n) {
    if (t.max_entry() > n) throw DomainError("promote_inverse: entry exceeds the alphabet bound");
    require_semistandard(t, "promote_inverse");
    auto g = detail::to_grid(t);
    std::vector<std::pair<int, int>> marks;
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = t.outer[static_cast<std::size_t>(r - 1)]; c >= t.inner_at(r - 1) + 1; --c)
            if (t.at(r, c) == 1) marks.emplace_back(r - 1, c - 1);
    for (auto [r, c] : marks) {
        g.clear(r, c);
        auto [fr, fc] = detail::run_inner_slide(g, r, c);
        g.set(fr, fc, n + 1, /*act=*/false);
    }
    for (int r = 0; r < g.nrows; ++r)
        for (int c = 0; c < g.ncols; ++c)
            if (t.has_cell(r + 1, c + 1)) {
                g.val[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= 1;
                g.active[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
            }
    Tableau out = detail::from_grid(g);
    if (!is_semistandard(out)) throw InvariantViolation("promote_inverse: result not semistandard");
    return out;
}

} // namespace krdeg

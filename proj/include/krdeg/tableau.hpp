#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krdeg/partition.hpp"

namespace krdeg {

// A letter sequence over the alphabet [n].
using Word = std::vector<int>;

// 1-based cell position, English orientation (row 1 is the top row).
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Semistandard (possibly skew) tableau of shape outer/inner. Row i holds the
// entries of cells (i, inner[i]+1 .. outer[i]); the inner shape is stored
// explicitly so shape validation is structural. Equality is structural.
struct Tableau {
    Partition outer;
    Partition inner; // may be shorter than outer; missing rows are 0
    std::vector<std::vector<int>> cells;

    Tableau() = default;
    Tableau(Partition out, Partition in, std::vector<std::vector<int>> data)
        : outer(std::move(out)), inner(std::move(in)), cells(std::move(data)) {}

    // Straight-shape constructor: rows give the shape.
    explicit Tableau(std::vector<std::vector<int>> rows) : cells(std::move(rows)) {
        for (const auto& r : cells) outer.push_back(static_cast<int>(r.size()));
    }

    int rows() const { return static_cast<int>(outer.size()); }
    int inner_at(int i) const {
        return i < static_cast<int>(inner.size()) ? inner[static_cast<std::size_t>(i)] : 0;
    }
    bool has_cell(int r, int c) const { // 1-based
        if (r < 1 || r > rows()) return false;
        return c > inner_at(r - 1) && c <= outer[static_cast<std::size_t>(r - 1)];
    }
    int at(int r, int c) const { // 1-based
        return cells[static_cast<std::size_t>(r - 1)]
                    [static_cast<std::size_t>(c - 1 - inner_at(r - 1))];
    }
    int& at(int r, int c) {
        return cells[static_cast<std::size_t>(r - 1)]
                    [static_cast<std::size_t>(c - 1 - inner_at(r - 1))];
    }
    int size() const {
        int s = 0;
        for (const auto& r : cells) s += static_cast<int>(r.size());
        return s;
    }
    bool is_straight() const {
        for (int i = 0; i < rows(); ++i)
            if (inner_at(i) != 0) return false;
        return true;
    }
    std::optional<Cell> find(int value) const {
        for (int r = 1; r <= rows(); ++r)
            for (int c = inner_at(r - 1) + 1; c <= outer[static_cast<std::size_t>(r - 1)]; ++c)
                if (at(r, c) == value) return Cell{r, c};
        return std::nullopt;
    }
    int max_entry() const {
        int m = 0;
        for (const auto& r : cells)
            for (int v : r) m = std::max(m, v);
        return m;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Structural checks. min_entry lets callers accept transient 0 entries
// produced by partial slides.
inline bool is_valid_shape(const Tableau& t) {
    if (!t.outer.empty() && !is_partition(t.outer)) return false;
    for (std::size_t i = 0; i < t.inner.size(); ++i) {
        if (t.inner[i] < 0) return false;
        if (i + 1 < t.inner.size() && t.inner[i] < t.inner[i + 1]) return false;
        if (i < t.outer.size() && t.inner[i] > t.outer[i]) return false;
    }
    if (t.inner.size() > t.outer.size()) return false;
    if (t.cells.size() != t.outer.size()) return false;
    for (int i = 0; i < t.rows(); ++i)
        if (static_cast<int>(t.cells[static_cast<std::size_t>(i)].size()) !=
            t.outer[static_cast<std::size_t>(i)] - t.inner_at(i))
            return false;
    return true;
}

inline bool is_semistandard(const Tableau& t, int min_entry = 1) {
    if (!is_valid_shape(t)) return false;
    for (int r = 1; r <= t.rows(); ++r) {
        for (int c = t.inner_at(r - 1) + 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c) {
            int v = t.at(r, c);
            if (v < min_entry) return false;
            if (t.has_cell(r, c + 1) && t.at(r, c + 1) < v) return false;
            if (t.has_cell(r + 1, c) && t.at(r + 1, c) <= v) return false;
        }
    }
    return true;
}

inline void require_semistandard(const Tableau& t, const std::string& what) {
    if (!is_semistandard(t)) throw ValidationError(what + ": not a semistandard tableau");
}

// Entries of T concatenated row by row from bottom to top, left to right
// within each row.
inline Word row_reading_word(const Tableau& t) {
    Word w;
    w.reserve(static_cast<std::size_t>(t.size()));
    for (int r = t.rows(); r >= 1; --r)
        for (int c = t.inner_at(r - 1) + 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c)
            w.push_back(t.at(r, c));
    return w;
}

// Columns left to right, each column read bottom to top.
inline Word column_reading_word(const Tableau& t) {
    Word w;
    w.reserve(static_cast<std::size_t>(t.size()));
    int width = t.outer.empty() ? 0 : t.outer[0];
    for (int c = 1; c <= width; ++c)
        for (int r = t.rows(); r >= 1; --r)
            if (t.has_cell(r, c)) w.push_back(t.at(r, c));
    return w;
}

// Cells of the skew shape in row word order, aligned with row_reading_word.
inline std::vector<Cell> row_reading_cells(const Tableau& t) {
    std::vector<Cell> cs;
    cs.reserve(static_cast<std::size_t>(t.size()));
    for (int r = t.rows(); r >= 1; --r)
        for (int c = t.inner_at(r - 1) + 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c)
            cs.push_back(Cell{r, c});
    return cs;
}

// All standard fillings of a straight shape with the values 1..n, generated
// by placing each value at every addable corner; lexicographic by placement.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
    int n = partition_weight(shape);
    std::vector<Tableau> out;
    std::vector<std::vector<int>> grid(shape.size());
    std::vector<int> fill(shape.size(), 0); // cells used per row
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            std::vector<std::vector<int>> rows;
            rows.reserve(grid.size());
            for (const auto& r : grid) rows.push_back(r);
            out.emplace_back(rows);
            return;
        }
        for (std::size_t i = 0; i < shape.size(); ++i) {
            bool addable = fill[i] < shape[i] && (i == 0 || fill[i] < fill[i - 1]);
            if (!addable) continue;
            grid[i].push_back(next);
            ++fill[i];
            self(self, next + 1);
            --fill[i];
            grid[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace krdeg

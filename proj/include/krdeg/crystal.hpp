#pragma once

#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "krdeg/jdt.hpp"
#include "krdeg/tableau.hpp"

namespace krdeg {

// ---------------------------------------------------------------------------
// Raising/lowering operators on words, by the parenthesis-matching rule:
// i+1 reads as '(' and i as ')'.
// ---------------------------------------------------------------------------

namespace detail {

struct Signature {
    std::vector<std::size_t> unmatched_low;  // positions of unmatched i
    std::vector<std::size_t> unmatched_high; // positions of unmatched i+1
};

inline Signature word_signature(const Word& w, int i) {
    Signature s;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (w[pos] == i + 1) {
            s.unmatched_high.push_back(pos);
        } else if (w[pos] == i) {
            if (!s.unmatched_high.empty())
                s.unmatched_high.pop_back();
            else
                s.unmatched_low.push_back(pos);
        }
    }
    return s;
}

} // namespace detail

// Position of the letter changed by f_i (the rightmost unmatched i).
inline std::optional<std::size_t> crystal_f_position(const Word& w, int i, int n) {
    if (i < 1 || i > n - 1) throw DomainError("crystal_f: index must lie in [n-1]");
    auto sig = detail::word_signature(w, i);
    if (sig.unmatched_low.empty()) return std::nullopt;
    return sig.unmatched_low.back();
}

// Position of the letter changed by e_i (the leftmost unmatched i+1).
inline std::optional<std::size_t> crystal_e_position(const Word& w, int i, int n) {
    if (i < 1 || i > n - 1) throw DomainError("crystal_e: index must lie in [n-1]");
    auto sig = detail::word_signature(w, i);
    if (sig.unmatched_high.empty()) return std::nullopt;
    return sig.unmatched_high.front();
}

inline std::optional<Word> crystal_f(const Word& w, int i, int n) {
    auto pos = crystal_f_position(w, i, n);
    if (!pos) return std::nullopt;
    Word out = w;
    out[*pos] = i + 1;
    return out;
}

inline std::optional<Word> crystal_e(const Word& w, int i, int n) {
    auto pos = crystal_e_position(w, i, n);
    if (!pos) return std::nullopt;
    Word out = w;
    out[*pos] = i;
    return out;
}

// ---------------------------------------------------------------------------
// Rectangles and tensor elements
// ---------------------------------------------------------------------------

struct Rectangle {
    int rows = 0;
    int cols = 0;
    int size() const { return rows * cols; }
    Partition shape() const { return Partition(static_cast<std::size_t>(rows), cols); }
    friend bool operator==(const Rectangle&, const Rectangle&) = default;
    friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

// Ordered list of rectangles with the derived quantities used throughout:
// n (total cell count), the multiplicity of each distinct shape, and the gcd
// d_R of those multiplicities.
struct RectSeq {
    std::vector<Rectangle> rects;

    RectSeq() = default;
    RectSeq(std::initializer_list<Rectangle> rs) : rects(rs) { validate(); }
    explicit RectSeq(std::vector<Rectangle> rs) : rects(std::move(rs)) { validate(); }

    void validate() const {
        if (rects.empty()) throw ShapeError("RectSeq: at least one rectangle required");
        for (const auto& r : rects)
            if (r.rows < 1 || r.cols < 1) throw ShapeError("RectSeq: degenerate rectangle");
    }

    int k() const { return static_cast<int>(rects.size()); }
    int total_cells() const {
        int s = 0;
        for (const auto& r : rects) s += r.size();
        return s;
    }
    std::vector<std::pair<Rectangle, int>> multiplicities() const {
        std::vector<std::pair<Rectangle, int>> mult;
        for (const auto& r : rects) {
            bool seen = false;
            for (auto& [shape, m] : mult)
                if (shape == r) {
                    ++m;
                    seen = true;
                }
            if (!seen) mult.emplace_back(r, 1);
        }
        return mult;
    }
    int d_R() const {
        int g = 0;
        for (const auto& [shape, m] : multiplicities()) g = std::gcd(g, m);
        return g;
    }
    // Equal rectangles contiguous?
    bool is_grouped() const {
        for (std::size_t i = 0; i + 1 < rects.size(); ++i)
            for (std::size_t j = i + 1; j < rects.size(); ++j)
                if (rects[i] == rects[j] && rects[j - 1] != rects[j]) return false;
        return true;
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rects[i].rows) + "x" + std::to_string(rects[i].cols);
        }
        return s;
    }
    friend bool operator==(const RectSeq&, const RectSeq&) = default;
};

using WeightVector = std::vector<int>;

// T_1 (x) ... (x) T_k with rectangular straight factors over the alphabet [n].
// The row word is rw(T_1)rw(T_2)...rw(T_k).
struct TensorElement {
    int n = 0;
    std::vector<Tableau> factors;

    TensorElement() = default;
    TensorElement(int alphabet, std::vector<Tableau> fs) : n(alphabet), factors(std::move(fs)) {}

    RectSeq shapes() const {
        std::vector<Rectangle> rs;
        for (const auto& f : factors)
            rs.push_back(Rectangle{f.rows(), f.outer.empty() ? 0 : f.outer[0]});
        return RectSeq(std::move(rs));
    }
    int total_cells() const {
        int s = 0;
        for (const auto& f : factors) s += f.size();
        return s;
    }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

inline void validate_tensor_element(const TensorElement& t) {
    if (t.n < 1) throw ValidationError("tensor element: alphabet bound must be positive");
    if (t.factors.empty()) throw ValidationError("tensor element: no factors");
    for (const auto& f : t.factors) {
        if (!f.is_straight()) throw ValidationError("tensor element: factor must be straight");
        for (std::size_t i = 0; i < f.outer.size(); ++i)
            if (f.outer[i] != f.outer[0])
                throw ValidationError("tensor element: factor must be rectangular");
        if (!is_semistandard(f)) throw ValidationError("tensor element: factor not semistandard");
        if (f.max_entry() > t.n)
            throw ValidationError("tensor element: entry exceeds alphabet bound");
    }
}

inline Word row_word(const TensorElement& t) {
    Word w;
    for (const auto& f : t.factors) {
        Word fw = row_reading_word(f);
        w.insert(w.end(), fw.begin(), fw.end());
    }
    return w;
}

inline WeightVector weight(const TensorElement& t) {
    WeightVector counts(static_cast<std::size_t>(t.n), 0);
    for (const auto& f : t.factors)
        for (const auto& row : f.cells)
            for (int v : row) ++counts[static_cast<std::size_t>(v - 1)];
    return counts;
}

inline bool has_standard_content(const TensorElement& t) {
    if (t.total_cells() != t.n) return false;
    for (int c : weight(t))
        if (c != 1) return false;
    return true;
}

inline TensorElement promote_tensor(const TensorElement& t) {
    TensorElement out = t;
    for (auto& f : out.factors) f = promote(f, t.n);
    return out;
}

inline TensorElement promote_inverse_tensor(const TensorElement& t) {
    TensorElement out = t;
    for (auto& f : out.factors) f = promote_inverse(f, t.n);
    return out;
}

namespace detail {

// (factor, cell) addresses in row word order.
inline std::vector<std::pair<int, Cell>> row_word_addresses(const TensorElement& t) {
    std::vector<std::pair<int, Cell>> addr;
    for (std::size_t fi = 0; fi < t.factors.size(); ++fi)
        for (const Cell& c : row_reading_cells(t.factors[fi]))
            addr.emplace_back(static_cast<int>(fi), c);
    return addr;
}

inline std::optional<TensorElement> apply_word_operator(const TensorElement& t, int i, bool lowering) {
    Word w = row_word(t);
    auto pos = lowering ? crystal_f_position(w, i, t.n) : crystal_e_position(w, i, t.n);
    if (!pos) return std::nullopt;
    auto addr = row_word_addresses(t);
    auto [fi, cell] = addr[*pos];
    TensorElement out = t;
    out.factors[static_cast<std::size_t>(fi)].at(cell.row, cell.col) = lowering ? i + 1 : i;
    return out;
}

} // namespace detail

// Lowering operator on a tensor element. Classical colors act on the full
// row word and write the changed letter back into its cell; the affine color
// n is conjugated through promotion: f_n = pr^{-1} o f_1 o pr.
inline std::optional<TensorElement> tensor_f(const TensorElement& t, int i) {
    if (i < 1 || i > t.n) throw DomainError("tensor_f: color out of range");
    if (i < t.n) return detail::apply_word_operator(t, i, /*lowering=*/true);
    auto moved = detail::apply_word_operator(promote_tensor(t), 1, true);
    if (!moved) return std::nullopt;
    return promote_inverse_tensor(*moved);
}

inline std::optional<TensorElement> tensor_e(const TensorElement& t, int i) {
    if (i < 1 || i > t.n) throw DomainError("tensor_e: color out of range");
    if (i < t.n) return detail::apply_word_operator(t, i, /*lowering=*/false);
    auto moved = detail::apply_word_operator(promote_tensor(t), 1, false);
    if (!moved) return std::nullopt;
    return promote_inverse_tensor(*moved);
}

// ---------------------------------------------------------------------------
// Zero-weight space
// ---------------------------------------------------------------------------

namespace detail {

// Order-isomorphic relabeling of a standard pattern by the chosen values.
inline Tableau relabel(const Tableau& pattern, const std::vector<int>& values) {
    Tableau out = pattern;
    for (auto& row : out.cells)
        for (auto& v : row) v = values[static_cast<std::size_t>(v - 1)];
    return out;
}

inline void enumerate_rec(const RectSeq& shapes,
                          const std::vector<std::vector<Tableau>>& patterns, std::size_t fi,
                          std::vector<int>& pool, std::vector<Tableau>& acc, int n,
                          std::vector<TensorElement>& out) {
    if (fi == shapes.rects.size()) {
        out.emplace_back(n, acc);
        return;
    }
    int m = shapes.rects[fi].size();
    std::vector<int> chosen(static_cast<std::size_t>(m));
    auto choose = [&](auto&& self, std::size_t start, int taken) -> void {
        if (taken == m) {
            std::vector<int> rest; // pool minus chosen; both are sorted
            rest.reserve(pool.size() - chosen.size());
            std::size_t a = 0;
            for (int v : pool) {
                if (a < chosen.size() && v == chosen[a])
                    ++a;
                else
                    rest.push_back(v);
            }
            std::vector<int> saved = std::move(pool);
            pool = std::move(rest);
            for (const Tableau& pat : patterns[fi]) {
                acc.push_back(relabel(pat, chosen));
                enumerate_rec(shapes, patterns, fi + 1, pool, acc, n, out);
                acc.pop_back();
            }
            pool = std::move(saved);
            return;
        }
        for (std::size_t p = start; p + static_cast<std::size_t>(m - taken) <= pool.size(); ++p) {
            chosen[static_cast<std::size_t>(taken)] = pool[p];
            self(self, p + 1, taken + 1);
        }
    };
    choose(choose, 0, 0);
}

} // namespace detail

// All elements of weight (1,...,1): every letter of [n] used exactly once.
// Generated by distributing value subsets over the factors and filling each
// rectangle standardly; returned in lexicographic row word order.
inline std::vector<TensorElement> enumerate_zero_weight(const RectSeq& shapes, int jobs = 1) {
    int n = shapes.total_cells();
    std::vector<std::vector<Tableau>> patterns;
    for (const auto& r : shapes.rects) patterns.push_back(standard_tableaux(r.shape()));

    std::vector<TensorElement> out;
    if (jobs <= 1 || shapes.rects.size() < 2) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        std::vector<Tableau> acc;
        detail::enumerate_rec(shapes, patterns, 0, pool, acc, n, out);
    } else {
        // Split the first factor's value choice across workers.
        int m = shapes.rects[0].size();
        std::vector<std::vector<int>> first_choices;
        std::vector<int> cur;
        auto gen = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == m) {
                first_choices.push_back(cur);
                return;
            }
            for (int v = start; v <= n; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        gen(gen, 1);
        std::vector<std::vector<TensorElement>> chunks(first_choices.size());
        std::size_t next = 0;
        std::mutex mtx;
        auto worker = [&]() {
            for (;;) {
                std::size_t idx;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (next == first_choices.size()) return;
                    idx = next++;
                }
                const auto& chosen = first_choices[idx];
                std::vector<int> pool;
                for (int v = 1; v <= n; ++v)
                    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end())
                        pool.push_back(v);
                std::vector<Tableau> acc;
                for (const Tableau& pat : patterns[0]) {
                    acc.push_back(detail::relabel(pat, chosen));
                    detail::enumerate_rec(shapes, patterns, 1, pool, acc, n, chunks[idx]);
                    acc.pop_back();
                }
            }
        };
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
        for (auto& chunk : chunks)
            out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));
    }
    std::sort(out.begin(), out.end(), [](const TensorElement& a, const TensorElement& b) {
        return row_word(a) < row_word(b);
    });
    return out;
}

// ---------------------------------------------------------------------------
// KR crystal graphs on a single rectangle (small instances)
// ---------------------------------------------------------------------------

struct KrCrystal {
    struct Arrow {
        int from = 0;
        int to = 0;
        int color = 0; // in [n]; colors < n are classical, n is affine
    };
    std::vector<Tableau> vertices;
    std::vector<Arrow> arrows;
};

inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
    std::vector<Tableau> out;
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
        for (int v = lo; v <= n; ++v) {
            grid[r].push_back(v);
            self(self, r, c + 1);
            grid[r].pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline KrCrystal build_kr_crystal(const Rectangle& rect, int n) {
    KrCrystal g;
    g.vertices = enumerate_ssyt(rect.shape(), n);
    auto index_of = [&](const Tableau& t) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (g.vertices[i] == t) return static_cast<int>(i);
        throw InvariantViolation("build_kr_crystal: arrow target escaped the vertex set");
    };
    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
        TensorElement t(n, {g.vertices[vi]});
        for (int color = 1; color <= n; ++color) {
            auto img = tensor_f(t, color);
            if (img) g.arrows.push_back({static_cast<int>(vi), index_of(img->factors[0]), color});
        }
    }
    return g;
}

} // namespace krdeg

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "krdeg/charge.hpp"
#include "krdeg/crystal.hpp"

namespace krdeg {

// ---------------------------------------------------------------------------
// Descent sets
// ---------------------------------------------------------------------------

using DescentSet = std::vector<int>; // sorted subset of [n]

namespace detail {

// Bit i-1 set when i is a descent. Requires standard content.
inline std::uint64_t classical_descent_mask(const TensorElement& t) {
    Word w = row_word(t);
    std::vector<int> pos(static_cast<std::size_t>(t.n + 1), 0);
    for (std::size_t p = 0; p < w.size(); ++p) pos[static_cast<std::size_t>(w[p])] = static_cast<int>(p);
    std::uint64_t mask = 0;
    for (int i = 1; i < t.n; ++i)
        if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)])
            mask |= std::uint64_t{1} << (i - 1);
    return mask;
}

inline std::uint64_t descent_mask(const TensorElement& t) {
    std::uint64_t mask = classical_descent_mask(t);
    if (classical_descent_mask(promote_tensor(t)) & 1) mask |= std::uint64_t{1} << (t.n - 1);
    return mask;
}

inline bool incomparable(std::uint64_t a, std::uint64_t b) {
    return (a & ~b) != 0 && (b & ~a) != 0;
}

inline DescentSet mask_to_set(std::uint64_t mask, int n) {
    DescentSet d;
    for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1) d.push_back(i);
    return d;
}

} // namespace detail

// Full descent set: i in [n-1] when i+1 precedes i in the row word, and the
// affine letter n when 1 descends after one promotion.
inline DescentSet descent_set(const TensorElement& t) {
    if (!has_standard_content(t)) throw DomainError("descent_set: standard content required");
    return detail::mask_to_set(detail::descent_mask(t), t.n);
}

// ---------------------------------------------------------------------------
// Edge moves
// ---------------------------------------------------------------------------

struct EdgeLabel {
    enum class Kind { swap, affine_swap, bar_one, bar_top, commutator };
    Kind kind = Kind::swap;
    int index = 0; // swap: i in [n-1]; commutator: i in [n]; unused otherwise

    static EdgeLabel Swap(int i) { return {Kind::swap, i}; }
    static EdgeLabel AffineSwap() { return {Kind::affine_swap, 0}; }
    static EdgeLabel Bar1() { return {Kind::bar_one, 0}; }
    static EdgeLabel BarNminus1() { return {Kind::bar_top, 0}; }
    static EdgeLabel Commutator(int i) { return {Kind::commutator, i}; }

    std::string to_string(int n) const {
        switch (kind) {
            case Kind::swap: return "t" + std::to_string(index);
            case Kind::affine_swap: return "t" + std::to_string(n);
            case Kind::bar_one: return "bt1";
            case Kind::bar_top: return "bt" + std::to_string(n - 1);
            case Kind::commutator: return "C" + std::to_string(index);
        }
        return {};
    }
    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

namespace detail {

struct Located {
    int factor = -1; // 0-based
    Cell cell;
};

inline Located locate(const TensorElement& t, int value) {
    for (std::size_t fi = 0; fi < t.factors.size(); ++fi)
        if (auto c = t.factors[fi].find(value)) return {static_cast<int>(fi), *c};
    throw InvariantViolation("letter missing from a standard-content element");
}

inline bool factors_semistandard(const TensorElement& t) {
    for (const auto& f : t.factors)
        if (!is_semistandard(f)) return false;
    return true;
}

// Swap the letters i and i+1; nullopt when the swap breaks semistandardness.
inline std::optional<TensorElement> swap_letters(const TensorElement& t, int i) {
    Located a = locate(t, i), b = locate(t, i + 1);
    TensorElement out = t;
    out.factors[static_cast<std::size_t>(a.factor)].at(a.cell.row, a.cell.col) = i + 1;
    out.factors[static_cast<std::size_t>(b.factor)].at(b.cell.row, b.cell.col) = i;
    if (!factors_semistandard(out)) return std::nullopt;
    return out;
}

// Inside one factor: vacate the cell holding `value`, run the outward slide,
// and return the grid with the hole left open at the inner boundary.
struct OpenSlide {
    SlideGrid grid;
    int hole_r = 0, hole_c = 0;
};

inline OpenSlide open_slide_out(const Tableau& f, int value) {
    auto cell = f.find(value);
    if (!cell) throw InvariantViolation("open_slide_out: value not present");
    auto g = to_grid(f);
    g.clear(cell->row - 1, cell->col - 1);
    auto [fr, fc] = run_outer_slide(g, cell->row - 1, cell->col - 1);
    return {std::move(g), fr, fc};
}

} // namespace detail

// One definitional move. Swap and the affine swap require the descent sets of
// the endpoints to be incomparable; the two bar moves apply as written, with
// only vertex validity enforced.
inline std::optional<TensorElement> definitional_edge(const TensorElement& t, const EdgeLabel& label) {
    if (!has_standard_content(t)) throw DomainError("definitional_edge: standard content required");
    int n = t.n;
    std::uint64_t dt = detail::descent_mask(t);

    switch (label.kind) {
        case EdgeLabel::Kind::swap: {
            int i = label.index;
            if (i < 1 || i > n - 1) throw DomainError("definitional_edge: swap index out of range");
            auto moved = detail::swap_letters(t, i);
            if (!moved) return std::nullopt;
            if (!detail::incomparable(dt, detail::descent_mask(*moved))) return std::nullopt;
            return moved;
        }
        case EdgeLabel::Kind::affine_swap: {
            detail::Located ln = detail::locate(t, n), l1 = detail::locate(t, 1);
            if (ln.factor == l1.factor) return std::nullopt;
            TensorElement out = t;
            out.factors[static_cast<std::size_t>(ln.factor)] =
                slide_out_at(t.factors[static_cast<std::size_t>(ln.factor)], ln.cell, 1);
            out.factors[static_cast<std::size_t>(l1.factor)] =
                slide_in_at(t.factors[static_cast<std::size_t>(l1.factor)], l1.cell, n);
            if (!detail::factors_semistandard(out)) return std::nullopt;
            if (!detail::incomparable(dt, detail::descent_mask(out))) return std::nullopt;
            return out;
        }
        case EdgeLabel::Kind::bar_one: {
            detail::Located ln = detail::locate(t, n), l1 = detail::locate(t, 1), l2 = detail::locate(t, 2);
            if (ln.factor != l1.factor || l1.factor != l2.factor) return std::nullopt;
            // reading-word pattern n ... 1 2: the 2 sits right of the 1 and n
            // shows up in a lower row
            if (!(l2.cell.row == l1.cell.row && l2.cell.col == l1.cell.col + 1)) return std::nullopt;
            if (ln.cell.row <= l1.cell.row) return std::nullopt;
            if (!(dt >> (n - 1) & 1)) return std::nullopt;

            auto open = detail::open_slide_out(t.factors[static_cast<std::size_t>(ln.factor)], n);
            auto& g = open.grid;
            // switch 1 and 2 in the slid grid
            std::pair<int, int> p1{-1, -1}, p2{-1, -1};
            for (int r = 0; r < g.nrows; ++r)
                for (int c = 0; c < g.ncols; ++c) {
                    if (!g.on(r, c)) continue;
                    if (g.get(r, c) == 1) p1 = {r, c};
                    if (g.get(r, c) == 2) p2 = {r, c};
                }
            g.set(p1.first, p1.second, 2);
            g.set(p2.first, p2.second, 1);
            auto [fr, fc] = detail::run_inner_slide(g, open.hole_r, open.hole_c);
            g.set(fr, fc, n);
            TensorElement out = t;
            out.factors[static_cast<std::size_t>(ln.factor)] = detail::from_grid(g);
            if (!detail::factors_semistandard(out) || !has_standard_content(out)) return std::nullopt;
            if (out == t) return std::nullopt;
            return out;
        }
        case EdgeLabel::Kind::bar_top: {
            detail::Located ln = detail::locate(t, n), lm = detail::locate(t, n - 1),
                            l1 = detail::locate(t, 1);
            if (ln.factor != lm.factor || lm.factor != l1.factor) return std::nullopt;
            const Tableau& f = t.factors[static_cast<std::size_t>(ln.factor)];
            // n must precede n-1 in the reading word (n-1 is a descent) while
            // n itself is not a descent
            if (dt >> (n - 1) & 1) return std::nullopt;
            if (!(dt >> (n - 2) & 1)) return std::nullopt;
            if (ln.cell.row <= lm.cell.row) return std::nullopt;

            Tableau stage = slide_out_at(f, ln.cell, 1); // two 1's now
            auto open = detail::open_slide_out(stage, n - 1);
            auto& g = open.grid;
            // slide the first-row 1 inward, filling with n-1
            int col1 = -1;
            for (int c = 0; c < g.ncols; ++c)
                if (g.on(0, c) && g.get(0, c) == 1) col1 = std::max(col1, c);
            if (col1 < 0) return std::nullopt;
            g.clear(0, col1);
            auto [ar, ac] = detail::run_inner_slide(g, 0, col1);
            g.set(ar, ac, n - 1);
            auto [br, bc] = detail::run_inner_slide(g, open.hole_r, open.hole_c);
            g.set(br, bc, n);
            TensorElement out = t;
            out.factors[static_cast<std::size_t>(ln.factor)] = detail::from_grid(g);
            if (!detail::factors_semistandard(out) || !has_standard_content(out)) return std::nullopt;
            if (out == t) return std::nullopt;
            return out;
        }
        case EdgeLabel::Kind::commutator:
            throw DomainError("definitional_edge: commutators are a separate generator");
    }
    return std::nullopt;
}

// Crystal commutator C_i = e_i e_{i+1} f_i f_{i+1}, colors cyclic in [n].
// none when a step is undefined, the composite returns to T, or the result
// fails vertex validation.
inline std::optional<TensorElement> commutator_edge(const TensorElement& t, int i) {
    if (!has_standard_content(t)) throw DomainError("commutator_edge: standard content required");
    int n = t.n;
    if (i < 1 || i > n) throw DomainError("commutator_edge: index out of range");
    int ip1 = i == n ? 1 : i + 1;
    auto step = tensor_f(t, ip1);
    if (!step) return std::nullopt;
    step = tensor_f(*step, i);
    if (!step) return std::nullopt;
    step = tensor_e(*step, ip1);
    if (!step) return std::nullopt;
    step = tensor_e(*step, i);
    if (!step) return std::nullopt;
    if (*step == t) return std::nullopt;
    if (!detail::factors_semistandard(*step) || !has_standard_content(*step)) return std::nullopt;
    return step;
}

// ---------------------------------------------------------------------------
// The graph
// ---------------------------------------------------------------------------

struct KRDegGraph {
    RectSeq shapes;
    std::vector<TensorElement> vertices; // lexicographic by row word
    std::vector<DescentSet> descents;
    std::vector<long long> charges;
    struct Edge {
        int u = 0, v = 0; // u < v
        std::vector<std::string> labels;
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    std::vector<Edge> edges;
    std::vector<int> component_of;          // vertex -> component id
    std::vector<std::vector<int>> components; // sorted vertex lists, by smallest vertex
    std::vector<Word> keys;                 // row words, aligned with vertices

    int n() const { return shapes.total_cells(); }
    void rebuild_keys() {
        keys.clear();
        keys.reserve(vertices.size());
        for (const auto& t : vertices) keys.push_back(row_word(t));
    }
    int index_of(const TensorElement& t) const {
        Word key = row_word(t);
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key)
            throw InvariantViolation("vertex escaped the zero-weight space");
        return static_cast<int>(it - keys.begin());
    }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t size) : parent(size) {
        for (std::size_t i = 0; i < size; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

inline void parallel_over(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
}

} // namespace detail

// Expected vertex count by the multinomial-hook product.
inline std::uint64_t predicted_vertex_count(const RectSeq& shapes) {
    int n = shapes.total_cells();
    // n! / prod |R_i|! as a product of binomials to avoid overflow
    std::uint64_t total = 1;
    int remaining = n;
    for (const auto& r : shapes.rects) {
        int m = r.size();
        for (int i = 1; i <= m; ++i) {
            total = total * static_cast<std::uint64_t>(remaining - m + i) / static_cast<std::uint64_t>(i);
        }
        remaining -= m;
    }
    for (const auto& r : shapes.rects) total *= standard_tableau_count(r.shape());
    return total;
}

// Build the KR DEG: vertices are the zero-weight elements, canonical edges
// come from the crystal commutators (the definitional moves contribute extra
// labels on the same pairs), components by union-find, charge cached per
// vertex. max_vertices guards runaway builds (0 disables the guard).
inline KRDegGraph build_graph(const RectSeq& shapes, int jobs = 1, std::uint64_t max_vertices = 0) {
    if (max_vertices > 0) {
        std::uint64_t predicted = predicted_vertex_count(shapes);
        if (predicted > max_vertices)
            throw ResourceError("build_graph: predicted vertex count " + std::to_string(predicted) +
                                " exceeds the limit " + std::to_string(max_vertices));
    }
    KRDegGraph g;
    g.shapes = shapes;
    g.vertices = enumerate_zero_weight(shapes, jobs);
    g.rebuild_keys();
    int n = shapes.total_cells();
    std::size_t vcount = g.vertices.size();

    g.descents.resize(vcount);
    g.charges.resize(vcount);
    struct Probe {
        std::vector<std::pair<int, EdgeLabel>> hits; // neighbor index + label
    };
    std::vector<Probe> probes(vcount);

    detail::parallel_over(vcount, jobs, [&](std::size_t vi) {
        const TensorElement& t = g.vertices[vi];
        g.descents[vi] = descent_set(t);
        g.charges[vi] = charge(t);
        auto& hits = probes[vi].hits;
        for (int i = 1; i <= n; ++i)
            if (auto img = commutator_edge(t, i)) hits.emplace_back(g.index_of(*img), EdgeLabel::Commutator(i));
        for (int i = 1; i <= n - 1; ++i)
            if (auto img = definitional_edge(t, EdgeLabel::Swap(i)))
                hits.emplace_back(g.index_of(*img), EdgeLabel::Swap(i));
        if (auto img = definitional_edge(t, EdgeLabel::AffineSwap()))
            hits.emplace_back(g.index_of(*img), EdgeLabel::AffineSwap());
        if (auto img = definitional_edge(t, EdgeLabel::Bar1()))
            hits.emplace_back(g.index_of(*img), EdgeLabel::Bar1());
        if (auto img = definitional_edge(t, EdgeLabel::BarNminus1()))
            hits.emplace_back(g.index_of(*img), EdgeLabel::BarNminus1());
    });

    // Merge directed probes into undirected labeled edges. Only commutator
    // probes define adjacency; definitional labels decorate existing pairs.
    std::map<std::pair<int, int>, std::vector<std::string>> edge_labels;
    for (std::size_t vi = 0; vi < vcount; ++vi)
        for (const auto& [w, label] : probes[vi].hits)
            if (label.kind == EdgeLabel::Kind::commutator)
                edge_labels[{std::min<int>(static_cast<int>(vi), w), std::max<int>(static_cast<int>(vi), w)}];
    for (std::size_t vi = 0; vi < vcount; ++vi) {
        for (const auto& [w, label] : probes[vi].hits) {
            auto key = std::pair{std::min<int>(static_cast<int>(vi), w), std::max<int>(static_cast<int>(vi), w)};
            auto it = edge_labels.find(key);
            if (it == edge_labels.end()) continue; // definitional-only pair: checked elsewhere
            std::string s = label.to_string(n);
            if (std::find(it->second.begin(), it->second.end(), s) == it->second.end())
                it->second.push_back(s);
        }
    }
    detail::UnionFind uf(vcount);
    for (auto& [key, labels] : edge_labels) {
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            auto rank = [](const std::string& s) {
                int kind = s[0] == 't' ? 0 : s[0] == 'b' ? 1 : 2;
                int idx = std::stoi(s.substr(s.find_first_of("0123456789")));
                return std::pair{kind, idx};
            };
            return rank(a) < rank(b);
        });
        g.edges.push_back({key.first, key.second, labels});
        uf.unite(key.first, key.second);
    }

    g.component_of.assign(vcount, -1);
    std::vector<int> root_to_comp(vcount, -1);
    int comp_count = 0;
    for (std::size_t vi = 0; vi < vcount; ++vi) {
        int root = uf.find(static_cast<int>(vi));
        if (root_to_comp[static_cast<std::size_t>(root)] < 0) {
            root_to_comp[static_cast<std::size_t>(root)] = comp_count++;
            g.components.emplace_back();
        }
        int comp = root_to_comp[static_cast<std::size_t>(root)];
        g.component_of[vi] = comp;
        g.components[static_cast<std::size_t>(comp)].push_back(static_cast<int>(vi));
    }
    return g;
}

// The full edge set produced by the definitional moves alone (unordered
// pairs). Used to cross-check the commutator construction.
inline std::vector<std::pair<int, int>> definitional_edge_set(const KRDegGraph& g, int jobs = 1) {
    int n = g.n();
    std::vector<std::vector<std::pair<int, int>>> found(g.vertices.size());
    detail::parallel_over(g.vertices.size(), jobs, [&](std::size_t vi) {
        const TensorElement& t = g.vertices[vi];
        auto note = [&](const std::optional<TensorElement>& img) {
            if (!img) return;
            int w = g.index_of(*img);
            found[vi].emplace_back(std::min<int>(static_cast<int>(vi), w),
                                   std::max<int>(static_cast<int>(vi), w));
        };
        for (int i = 1; i <= n - 1; ++i) note(definitional_edge(t, EdgeLabel::Swap(i)));
        note(definitional_edge(t, EdgeLabel::AffineSwap()));
        note(definitional_edge(t, EdgeLabel::Bar1()));
        note(definitional_edge(t, EdgeLabel::BarNminus1()));
    });
    std::vector<std::pair<int, int>> out;
    for (auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::pair<int, int>> commutator_edge_set(const KRDegGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : g.edges) out.emplace_back(e.u, e.v);
    return out;
}

// Components must biject with charge residues mod d_R; returns residue ->
// component id and throws VerificationError with a counterexample otherwise.
inline std::map<int, int> components_by_charge(const KRDegGraph& g) {
    int d = g.shapes.d_R();
    if (static_cast<int>(g.components.size()) != d)
        throw VerificationError("component count " + std::to_string(g.components.size()) +
                                " differs from d_R = " + std::to_string(d));
    std::map<int, int> by_residue;
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        long long r0 = ((g.charges[static_cast<std::size_t>(g.components[ci][0])] % d) + d) % d;
        for (int v : g.components[ci]) {
            long long r = ((g.charges[static_cast<std::size_t>(v)] % d) + d) % d;
            if (r != r0)
                throw VerificationError("component " + std::to_string(ci) +
                                        " mixes charge residues " + std::to_string(r0) + " and " +
                                        std::to_string(r) + " at vertex " + std::to_string(v));
        }
        if (by_residue.count(static_cast<int>(r0)))
            throw VerificationError("two components share charge residue " + std::to_string(r0));
        by_residue[static_cast<int>(r0)] = static_cast<int>(ci);
    }
    return by_residue;
}

// ---------------------------------------------------------------------------
// Superstandard fillings and connecting paths
// ---------------------------------------------------------------------------

struct Superstandard {
    TensorElement element;
    // c_{m,i}: largest entry placed in column i by the column phase, or 0
    // when the first m rows already cover that column. a_{m,i}: largest
    // entry in row i.
    std::vector<int> col_max;
    std::vector<int> row_max;
};

// row_m(R): the first m rows filled left to right, top to bottom; remaining
// cells column by column with the factors read right to left.
inline Superstandard superstandard(const RectSeq& shapes, int m) {
    int rmax = 0, cmax = 0;
    for (const auto& r : shapes.rects) {
        rmax = std::max(rmax, r.rows);
        cmax = std::max(cmax, r.cols);
    }
    if (m < 0 || m > rmax) throw DomainError("superstandard: row count out of range");
    std::size_t k = shapes.rects.size();
    std::vector<std::vector<std::vector<int>>> grids(k);
    for (std::size_t f = 0; f < k; ++f)
        grids[f].assign(static_cast<std::size_t>(shapes.rects[f].rows),
                        std::vector<int>(static_cast<std::size_t>(shapes.rects[f].cols), 0));
    Superstandard out;
    out.col_max.assign(static_cast<std::size_t>(cmax), 0);
    out.row_max.assign(static_cast<std::size_t>(rmax), 0);
    int value = 1;
    for (int row = 1; row <= m; ++row)
        for (std::size_t f = 0; f < k; ++f)
            for (int col = 1; col <= shapes.rects[f].cols; ++col) {
                if (row > shapes.rects[f].rows) continue;
                grids[f][static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = value++;
            }
    for (int col = 1; col <= cmax; ++col)
        for (std::size_t fi = k; fi-- > 0;)
            for (int row = m + 1; row <= shapes.rects[fi].rows; ++row) {
                if (col > shapes.rects[fi].cols) continue;
                grids[fi][static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = value;
                out.col_max[static_cast<std::size_t>(col - 1)] = value;
                ++value;
            }
    std::vector<Tableau> fs;
    for (auto& grid : grids) fs.emplace_back(grid);
    out.element = TensorElement(shapes.total_cells(), std::move(fs));
    validate_tensor_element(out.element);
    for (std::size_t f = 0; f < k; ++f)
        for (int r = 0; r < shapes.rects[f].rows; ++r)
            for (int c = 0; c < shapes.rects[f].cols; ++c) {
                int v = grids[f][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                out.row_max[static_cast<std::size_t>(r)] = std::max(out.row_max[static_cast<std::size_t>(r)], v);
            }
    return out;
}

struct SSequencePath {
    std::vector<TensorElement> path;       // every vertex visited, starting at row_m(R)
    std::vector<TensorElement> milestones; // state after each completed block S_j
};

// Apply S_{n-1}...S_{d+1}S_d to row_m(R), where S_j = t_{j-(d-1)}...t_{j-1}t_j
// acts right to left and inapplicable swaps are skipped. The endpoint must be
// pr^{n-d}(row_m(R)).
inline SSequencePath s_sequence_path(const RectSeq& shapes, int m, int d) {
    Superstandard ss = superstandard(shapes, m);
    int n = shapes.total_cells();
    {
        std::vector<int> allowed;
        for (int c : ss.col_max)
            if (c > 0) allowed.push_back(c);
        if (m >= 1) allowed.push_back(ss.row_max[static_cast<std::size_t>(m - 1)]);
        if (std::find(allowed.begin(), allowed.end(), d) == allowed.end())
            throw DomainError("s_sequence_path: d must be a column maximum or a_{m,m}");
    }
    SSequencePath out;
    TensorElement cur = ss.element;
    out.path.push_back(cur);
    for (int j = d; j <= n - 1; ++j) {
        for (int ell = j; ell >= j - (d - 1); --ell) {
            if (ell < 1 || ell > n - 1) continue;
            if (auto next = definitional_edge(cur, EdgeLabel::Swap(ell))) {
                cur = *next;
                out.path.push_back(cur);
            }
        }
        out.milestones.push_back(cur);
    }
    TensorElement expected = ss.element;
    for (int step = 0; step < n - d; ++step) expected = promote_tensor(expected);
    if (cur != expected)
        throw VerificationError("s_sequence_path: endpoint differs from pr^{n-d} of the start");
    return out;
}

// ---------------------------------------------------------------------------
// Row combing
// ---------------------------------------------------------------------------

// Chain of swaps walking the descent at j down to a descent at i, skipping
// swaps that are not edges.
inline TensorElement pcomb(const TensorElement& t, int i, int j) {
    if (i > j) throw DomainError("pcomb: need i <= j");
    std::uint64_t dt = detail::descent_mask(t);
    auto in_window = [&](std::uint64_t mask) {
        std::uint64_t window = 0;
        for (int b = i; b <= j; ++b) window |= std::uint64_t{1} << (b - 1);
        return mask & window;
    };
    if (in_window(dt) != (std::uint64_t{1} << (j - 1)))
        throw DomainError("pcomb: descents in the window must be exactly {j}");
    if (i == j) return t;
    TensorElement cur = t;
    for (int ell = j; ell >= i; --ell)
        if (auto next = definitional_edge(cur, EdgeLabel::Swap(ell))) cur = *next;
    if (in_window(detail::descent_mask(cur)) != (std::uint64_t{1} << (i - 1)))
        throw InvariantViolation("pcomb: window descent did not land on i");
    return cur;
}

// Cell counts of the first i rows across all factors; the comb targets.
inline std::vector<int> row_boundaries(const RectSeq& shapes) {
    int rmax = 0;
    for (const auto& r : shapes.rects) rmax = std::max(rmax, r.rows);
    std::vector<int> a(static_cast<std::size_t>(rmax), 0);
    for (const auto& r : shapes.rects)
        for (int i = 0; i < r.rows; ++i) a[static_cast<std::size_t>(i)] += r.cols;
    for (std::size_t i = 1; i < a.size(); ++i) a[i] += a[i - 1];
    return a;
}

// One combing iteration; nullopt when T is already row(R).
inline std::optional<TensorElement> rcomb(const TensorElement& t, const RectSeq& shapes) {
    int rmax = 0;
    for (const auto& r : shapes.rects) rmax = std::max(rmax, r.rows);
    TensorElement target = superstandard(shapes, rmax).element;
    if (t == target) return std::nullopt;
    std::vector<int> a = row_boundaries(shapes);
    DescentSet d = descent_set(t);
    int j = 0;
    for (int cand : d)
        if (std::find(a.begin(), a.end(), cand) == a.end()) {
            j = cand;
            break;
        }
    if (j == 0) throw VerificationError("rcomb: no descent outside the row boundaries");
    int i = 0;
    while (i < static_cast<int>(a.size()) && a[static_cast<std::size_t>(i)] < j) ++i;
    // now a_{i-1} < j < a_i in 0-based terms; the paper's index i is ours - 1
    int lower = i == 0 ? 1 : a[static_cast<std::size_t>(i - 1)] + 1;
    TensorElement cur = pcomb(t, lower, j);
    for (int ell = i - 1; ell >= 1; --ell)
        cur = pcomb(cur, a[static_cast<std::size_t>(ell - 1)] + 1, a[static_cast<std::size_t>(ell)]);
    if (i >= 1) cur = pcomb(cur, 1, a[0]);
    return promote_inverse_tensor(cur);
}

struct CombResult {
    int net_promotions = 0; // j with T connected to pr^j(row(R))
    std::vector<TensorElement> trail; // iterates, starting at T, ending at row(R)
};

// Iterate rcomb to row(R). The iteration cap n*|V| is a termination guard
// and must never fire.
inline CombResult comb_to_row(const TensorElement& t, const RectSeq& shapes) {
    CombResult out;
    out.trail.push_back(t);
    std::uint64_t cap = static_cast<std::uint64_t>(shapes.total_cells()) * predicted_vertex_count(shapes);
    TensorElement cur = t;
    std::uint64_t steps = 0;
    for (;;) {
        auto next = rcomb(cur, shapes);
        if (!next) break;
        cur = *next;
        out.trail.push_back(cur);
        if (++steps > cap) throw VerificationError("comb_to_row: iteration cap exceeded");
    }
    out.net_promotions = static_cast<int>(steps % static_cast<std::uint64_t>(shapes.total_cells()));
    return out;
}

} // namespace krdeg

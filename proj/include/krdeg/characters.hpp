#pragma once

#include "krdeg/deg.hpp"
#include "krdeg/symfun.hpp"

namespace krdeg {

namespace detail {

inline std::vector<int> classical_part(const DescentSet& d, int n) {
    std::vector<int> out;
    for (int x : d)
        if (x != n) out.push_back(x);
    return out;
}

} // namespace detail

// Sum of F_{D(T) minus the affine letter} over one connected component.
inline QSymFunc component_fundamental_sum(const KRDegGraph& g, int component) {
    if (component < 0 || component >= static_cast<int>(g.components.size()))
        throw DomainError("component index out of range");
    std::vector<std::vector<int>> subsets;
    for (int v : g.components[static_cast<std::size_t>(component)])
        subsets.push_back(detail::classical_part(g.descents[static_cast<std::size_t>(v)], g.n()));
    return fundamental_sum(subsets, g.n());
}

inline QSymFunc graph_fundamental_sum(const KRDegGraph& g) {
    std::vector<std::vector<int>> subsets;
    for (const auto& d : g.descents) subsets.push_back(detail::classical_part(d, g.n()));
    return fundamental_sum(subsets, g.n());
}

// Schur expansion of one component's character.
inline SymFunc component_character(const KRDegGraph& g, int component) {
    return f_to_schur(component_fundamental_sum(g, component));
}

// The product of the rectangular Schur functions, for cross-checks.
inline SymFunc rectangle_schur_product(const RectSeq& shapes) {
    SymFunc acc(Basis::powersum, 0);
    acc.terms[{}] = 1;
    for (const auto& r : shapes.rects)
        acc = multiply(acc, SymFunc::single(Basis::schur, r.shape()));
    return convert(acc, Basis::schur);
}

// The conjectured component character: a cyclic character plethysm applied to
// the product over distinct shapes of s_R^{multiplicity/d_R}.
inline SymFunc predicted_component_character(const RectSeq& shapes, int residue) {
    int d = shapes.d_R();
    SymFunc base(Basis::powersum, 0);
    base.terms[{}] = 1;
    for (const auto& [rect, mult] : shapes.multiplicities())
        for (int copy = 0; copy < mult / d; ++copy)
            base = multiply(base, SymFunc::single(Basis::schur, rect.shape()));
    return convert(plethysm(cyclic_character(d, residue), base), Basis::schur);
}

} // namespace krdeg

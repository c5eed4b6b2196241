#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "krdeg/deg.hpp"
#include "krdeg/symfun.hpp"

namespace krdeg {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Tableau <-> {"outer":[...],"inner":[...],"rows":[[null,1,...],...]}
// Rows are padded with null on the inner cells.
// ---------------------------------------------------------------------------

inline json tableau_to_json(const Tableau& t) {
    json rows = json::array();
    for (int r = 1; r <= t.rows(); ++r) {
        json row = json::array();
        for (int c = 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c) {
            if (t.has_cell(r, c))
                row.push_back(t.at(r, c));
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    json out;
    out["outer"] = t.outer;
    if (!t.inner.empty()) out["inner"] = t.inner;
    out["rows"] = std::move(rows);
    return out;
}

inline Tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw ValidationError("tableau: missing rows");
    Partition outer, inner;
    std::vector<std::vector<int>> cells;
    for (const auto& jrow : j.at("rows")) {
        std::vector<int> row;
        int pad = 0;
        bool content = false;
        for (const auto& v : jrow) {
            if (v.is_null()) {
                if (content) throw ValidationError("tableau: null after entries in a row");
                ++pad;
            } else {
                content = true;
                row.push_back(v.get<int>());
            }
        }
        outer.push_back(pad + static_cast<int>(row.size()));
        inner.push_back(pad);
        cells.push_back(std::move(row));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    Tableau t(outer, inner, cells);
    if (j.contains("outer") && j.at("outer").get<Partition>() != t.outer)
        throw ValidationError("tableau: declared outer shape disagrees with rows");
    if (j.contains("inner")) {
        Partition declared = j.at("inner").get<Partition>();
        while (!declared.empty() && declared.back() == 0) declared.pop_back();
        if (declared != t.inner)
            throw ValidationError("tableau: declared inner shape disagrees with rows");
    }
    if (!is_valid_shape(t)) throw ValidationError("tableau: rows do not form a skew shape");
    if (!is_semistandard(t)) throw ValidationError("tableau: not semistandard");
    return t;
}

// ---------------------------------------------------------------------------
// TensorElement <-> {"n":5,"shapes":[[2,2],[1,1]],"factors":[[[1,2],[3,5]],[[4]]]}
// ---------------------------------------------------------------------------

inline json tensor_to_json(const TensorElement& t) {
    json shapes = json::array();
    for (const auto& r : t.shapes().rects) shapes.push_back({r.rows, r.cols});
    json factors = json::array();
    for (const auto& f : t.factors) {
        json rows = json::array();
        for (const auto& row : f.cells) rows.push_back(row);
        factors.push_back(std::move(rows));
    }
    return json{{"n", t.n}, {"shapes", std::move(shapes)}, {"factors", std::move(factors)}};
}

inline TensorElement tensor_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("factors"))
        throw ValidationError("tensor element: need n and factors");
    std::vector<Tableau> fs;
    for (const auto& jf : j.at("factors")) {
        std::vector<std::vector<int>> rows;
        for (const auto& jrow : jf) rows.push_back(jrow.get<std::vector<int>>());
        fs.emplace_back(rows);
    }
    TensorElement t(j.at("n").get<int>(), std::move(fs));
    if (j.contains("shapes")) {
        std::vector<Rectangle> declared;
        for (const auto& s : j.at("shapes")) declared.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
        if (RectSeq(declared) != t.shapes())
            throw ValidationError("tensor element: declared shapes disagree with factors");
    }
    validate_tensor_element(t);
    return t;
}

// ---------------------------------------------------------------------------
// Graph <-> JSON, plus DOT
// ---------------------------------------------------------------------------

inline json graph_to_json(const KRDegGraph& g) {
    json shapes = json::array();
    for (const auto& r : g.shapes.rects) shapes.push_back({r.rows, r.cols});
    json vertices = json::array();
    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
        json factors = json::array();
        for (const auto& f : g.vertices[vi].factors) {
            json rows = json::array();
            for (const auto& row : f.cells) rows.push_back(row);
            factors.push_back(std::move(rows));
        }
        vertices.push_back({{"id", vi},
                            {"factors", std::move(factors)},
                            {"descents", g.descents[vi]},
                            {"charge", g.charges[vi]}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"labels", e.labels}});
    return json{{"shapes", std::move(shapes)},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"components", g.components}};
}

inline KRDegGraph graph_from_json(const json& j) {
    KRDegGraph g;
    std::vector<Rectangle> rects;
    for (const auto& s : j.at("shapes")) rects.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    g.shapes = RectSeq(std::move(rects));
    int n = g.shapes.total_cells();
    for (const auto& jv : j.at("vertices")) {
        std::vector<Tableau> fs;
        for (const auto& jf : jv.at("factors")) {
            std::vector<std::vector<int>> rows;
            for (const auto& jrow : jf) rows.push_back(jrow.get<std::vector<int>>());
            fs.emplace_back(rows);
        }
        TensorElement t(n, std::move(fs));
        validate_tensor_element(t);
        g.vertices.push_back(std::move(t));
        g.descents.push_back(jv.at("descents").get<DescentSet>());
        g.charges.push_back(jv.at("charge").get<long long>());
    }
    for (const auto& je : j.at("edges"))
        g.edges.push_back({je.at("u").get<int>(), je.at("v").get<int>(),
                           je.at("labels").get<std::vector<std::string>>()});
    g.components = j.at("components").get<std::vector<std::vector<int>>>();
    g.component_of.assign(g.vertices.size(), -1);
    for (std::size_t ci = 0; ci < g.components.size(); ++ci)
        for (int v : g.components[ci]) g.component_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
    g.rebuild_keys();
    return g;
}

inline std::string word_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += w[i] >= 10 || w[i - 1] >= 10 ? "." : "";
        s += std::to_string(w[i]);
    }
    return s;
}

// One cluster per connected component; vertices labeled by row word.
inline std::string graph_to_dot(const KRDegGraph& g) {
    std::ostringstream os;
    os << "graph krdeg {\n";
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        os << "  subgraph cluster_" << ci << " {\n";
        os << "    label=\"component " << ci << "\";\n";
        for (int v : g.components[ci])
            os << "    v" << v << " [label=\"" << word_string(row_word(g.vertices[static_cast<std::size_t>(v)]))
               << "\"];\n";
        os << "  }\n";
    }
    for (const auto& e : g.edges) {
        os << "  v" << e.u << " -- v" << e.v << " [label=\"";
        for (std::size_t i = 0; i < e.labels.size(); ++i) os << (i ? "," : "") << e.labels[i];
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// SymFunc <-> {"basis":"s","degree":8,"terms":{"[6,2]":1,"[5,2,1]":2}}
// ---------------------------------------------------------------------------

inline json symfunc_to_json(const SymFunc& f) {
    json terms = json::object();
    for (const auto& [idx, c] : f.terms) {
        if (c == 0) continue;
        std::string key = "[";
        for (std::size_t i = 0; i < idx.size(); ++i) key += (i ? "," : "") + std::to_string(idx[i]);
        key += "]";
        if (boost::multiprecision::denominator(c) == 1)
            terms[key] = static_cast<long long>(boost::multiprecision::numerator(c));
        else
            terms[key] = c.str();
    }
    return json{{"basis", basis_letter(f.basis)}, {"degree", f.degree}, {"terms", std::move(terms)}};
}

} // namespace krdeg

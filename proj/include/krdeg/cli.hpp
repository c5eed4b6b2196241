#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "krdeg/characters.hpp"
#include "krdeg/io.hpp"

namespace krdeg {

struct RunConfig {
    std::string shapes;          // RxS(,RxS)* with R rows and S columns
    std::string format = "text"; // dot | json | text
    std::string out;             // output path; empty writes to the stream
    std::string cache_dir;       // empty falls back to KRDEG_CACHE_DIR
    std::uint64_t guard = 100000;
    int jobs = 1;
    bool force = false;
    int component = -1;
    std::string element_path;
    std::string suite;
};

inline RectSeq parse_shapes(const std::string& text) {
    std::vector<Rectangle> rects;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t x = token.find('x');
        if (x == std::string::npos || x == 0 || x + 1 == token.size())
            throw UsageError("shapes: expected RxS tokens, got '" + token + "'");
        try {
            int rows = std::stoi(token.substr(0, x));
            int cols = std::stoi(token.substr(x + 1));
            if (rows < 1 || cols < 1) throw std::invalid_argument("");
            rects.push_back({rows, cols});
        } catch (const std::exception&) {
            throw UsageError("shapes: expected positive RxS, got '" + token + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (rects.empty()) throw UsageError("shapes: at least one RxS token required");
    return RectSeq(std::move(rects));
}

namespace detail {

inline std::optional<std::filesystem::path> cache_path(const RunConfig& cfg, const RectSeq& shapes) {
    std::string dir = cfg.cache_dir;
    if (dir.empty()) {
        const char* env = std::getenv("KRDEG_CACHE_DIR");
        if (env) dir = env;
    }
    if (dir.empty()) return std::nullopt;
    return std::filesystem::path(dir) / ("krdeg-" + shapes.to_string() + ".json");
}

inline void emit(const RunConfig& cfg, std::ostream& stream, const std::string& payload) {
    if (cfg.out.empty()) {
        stream << payload;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output path " + cfg.out);
    file << payload;
}

} // namespace detail

// Load the graph from the cache when possible, otherwise build it (behind the
// vertex-count guard) and populate the cache.
inline KRDegGraph load_or_build(const RunConfig& cfg, std::ostream& diag) {
    RectSeq shapes = parse_shapes(cfg.shapes);
    if (!shapes.is_grouped())
        diag << "warning: equal shapes are not contiguous; semicharge depends on grouped form\n";
    auto cached = detail::cache_path(cfg, shapes);
    if (cached && std::filesystem::exists(*cached)) {
        std::ifstream file(*cached);
        json j;
        file >> j;
        return graph_from_json(j);
    }
    std::uint64_t predicted = predicted_vertex_count(shapes);
    if (!cfg.force && predicted > cfg.guard)
        throw ResourceError("refusing to build " + std::to_string(predicted) +
                            " vertices (guard " + std::to_string(cfg.guard) +
                            "); pass --force to override");
    KRDegGraph g = build_graph(shapes, cfg.jobs);
    if (cached) {
        std::filesystem::create_directories(cached->parent_path());
        std::ofstream file(*cached, std::ios::binary);
        file << graph_to_json(g).dump();
    }
    return g;
}

inline int cmd_graph(const RunConfig& cfg, std::ostream& stream, std::ostream& err) {
    try {
        KRDegGraph g = load_or_build(cfg, err);
        if (cfg.format == "dot") {
            detail::emit(cfg, stream, graph_to_dot(g));
        } else if (cfg.format == "json") {
            detail::emit(cfg, stream, graph_to_json(g).dump() + "\n");
        } else if (cfg.format == "text") {
            std::ostringstream os;
            os << "shapes " << g.shapes.to_string() << "\n";
            os << "vertices " << g.vertices.size() << "\n";
            os << "edges " << g.edges.size() << "\n";
            os << "components " << g.components.size() << " sizes";
            for (const auto& comp : g.components) os << " " << comp.size();
            os << "\n";
            detail::emit(cfg, stream, os.str());
        } else {
            throw UsageError("unknown format " + cfg.format);
        }
        return 0;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

inline int cmd_components(const RunConfig& cfg, std::ostream& stream, std::ostream& err) {
    try {
        KRDegGraph g = load_or_build(cfg, err);
        int d = g.shapes.d_R();
        auto residues = components_by_charge(g);
        if (cfg.format == "json") {
            json comps = json::array();
            for (const auto& [residue, ci] : residues)
                comps.push_back({{"residue", residue},
                                 {"component", ci},
                                 {"size", g.components[static_cast<std::size_t>(ci)].size()}});
            detail::emit(cfg, stream, json{{"d_R", d}, {"components", comps}}.dump() + "\n");
        } else {
            std::ostringstream os;
            os << "d_R " << d << "\n";
            for (const auto& [residue, ci] : residues)
                os << "component " << ci << ": size " << g.components[static_cast<std::size_t>(ci)].size()
                   << ", charge residue " << residue << "\n";
            detail::emit(cfg, stream, os.str());
        }
        return 0;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
}

inline int cmd_charge(const RunConfig& cfg, std::ostream& stream, std::ostream& err) {
    try {
        std::ifstream file(cfg.element_path);
        if (!file) throw UsageError("cannot read element file " + cfg.element_path);
        json j;
        file >> j;
        TensorElement t = tensor_from_json(j);
        std::ostringstream os;
        os << "charge " << charge(t) << "\n";
        os << "semicharge " << semicharge(t) << "\n";
        os << "weight";
        for (int c : weight(t)) os << " " << c;
        os << "\n";
        if (has_standard_content(t)) {
            os << "descents";
            for (int d : descent_set(t)) os << " " << d;
            os << "\n";
        }
        detail::emit(cfg, stream, os.str());
        return 0;
    } catch (const ValidationError& e) {
        err << "invalid element: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "invalid element: " << e.what() << "\n";
        return 1;
    }
}

inline int cmd_character(const RunConfig& cfg, std::ostream& stream, std::ostream& err) {
    try {
        KRDegGraph g = load_or_build(cfg, err);
        std::ostringstream os;
        if (cfg.component >= 0) {
            SymFunc chi = component_character(g, cfg.component);
            if (cfg.format == "json")
                os << symfunc_to_json(chi).dump() << "\n";
            else
                os << chi.to_string() << "\n";
        } else {
            SymFunc total = f_to_schur(graph_fundamental_sum(g));
            if (cfg.format == "json") {
                json comps = json::array();
                for (std::size_t ci = 0; ci < g.components.size(); ++ci)
                    comps.push_back(symfunc_to_json(component_character(g, static_cast<int>(ci))));
                os << json{{"total", symfunc_to_json(total)}, {"components", comps}}.dump() << "\n";
            } else {
                os << "total " << total.to_string() << "\n";
                for (std::size_t ci = 0; ci < g.components.size(); ++ci)
                    os << "component " << ci << " "
                       << component_character(g, static_cast<int>(ci)).to_string() << "\n";
            }
        }
        detail::emit(cfg, stream, os.str());
        return 0;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

// Named property suites. Each prints one PASS/FAIL line; the exit status is
// nonzero when anything failed.
inline int cmd_verify(const RunConfig& cfg, std::ostream& stream, std::ostream& err) {
    const std::string& suite = cfg.suite;
    if (suite != "thm-components" && suite != "thm-commutator" && suite != "thm-characters" &&
        suite != "conj-plethysm" && suite != "props-charge")
        throw UsageError("unknown suite " + suite);
    try {
        KRDegGraph g = load_or_build(cfg, err);
        int d = g.shapes.d_R();
        std::ostringstream os;
        bool ok = true;
        if (suite == "thm-components") {
            try {
                auto residues = components_by_charge(g);
                os << "PASS thm-components " << g.shapes.to_string() << " components="
                   << g.components.size() << " d_R=" << d << "\n";
            } catch (const VerificationError& e) {
                ok = false;
                os << "FAIL thm-components " << g.shapes.to_string() << " " << e.what() << "\n";
            }
        } else if (suite == "thm-commutator") {
            bool equal = commutator_edge_set(g) == definitional_edge_set(g, cfg.jobs);
            ok = equal;
            os << (equal ? "PASS" : "FAIL") << " thm-commutator " << g.shapes.to_string()
               << " edges=" << g.edges.size() << "\n";
        } else if (suite == "thm-characters") {
            SymFunc total = f_to_schur(graph_fundamental_sum(g));
            SymFunc expect = rectangle_schur_product(g.shapes);
            ok = total == expect;
            os << (ok ? "PASS" : "FAIL") << " thm-characters " << g.shapes.to_string() << " total="
               << total.to_string() << "\n";
        } else if (suite == "conj-plethysm") {
            auto residues = components_by_charge(g);
            for (const auto& [residue, ci] : residues) {
                SymFunc actual = component_character(g, ci);
                SymFunc expect = predicted_component_character(g.shapes, residue);
                if (actual == expect) {
                    os << "PASS conj-plethysm " << g.shapes.to_string() << " residue=" << residue
                       << "\n";
                } else {
                    ok = false;
                    os << "FAIL conj-plethysm " << g.shapes.to_string() << " residue=" << residue
                       << " counterexample: component " << actual.to_string() << " vs plethysm "
                       << expect.to_string() << "\n";
                }
            }
        } else if (suite == "props-charge") {
            std::string fail;
            for (std::size_t vi = 0; vi < g.vertices.size() && fail.empty(); ++vi) {
                const TensorElement& t = g.vertices[vi];
                long long c = g.charges[vi], s = semicharge(t);
                if (((c - s) % d + d) % d != 0) fail = "charge/semicharge residue split";
                if (((semicharge(promote_tensor(t)) - s + 1) % d + d) % d != 0)
                    fail = "promotion semicharge step";
                if (auto up = tensor_e(t, t.n))
                    if (((semicharge(*up) - s - 1) % d + d) % d != 0) fail = "e_n semicharge step";
                if (auto down = tensor_f(t, t.n))
                    if (((semicharge(*down) - s + 1) % d + d) % d != 0) fail = "f_n semicharge step";
                for (int i = 1; i < t.n && fail.empty(); ++i)
                    if (auto down = tensor_f(t, i))
                        if (charge(*down) != c) fail = "classical operator moved charge";
            }
            ok = fail.empty();
            os << (ok ? "PASS" : "FAIL") << " props-charge " << g.shapes.to_string()
               << (ok ? "" : " " + fail) << "\n";
        }
        detail::emit(cfg, stream, os.str());
        return ok ? 0 : 1;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace krdeg

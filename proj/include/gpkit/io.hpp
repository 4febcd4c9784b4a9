#ifndef GPKIT_IO_HPP
#define GPKIT_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gpkit/verdicts.hpp"

namespace gpkit {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Word grammar: whitespace-separated tokens
//   name        one generator step (exponent 1 / table index 1)
//   name^k      cyclic or infinite-cyclic exponent k (k may be negative)
//   name:idx    table element by index
inline std::string print_word(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Syllable& s : w) {
        if (!out.empty()) out += " ";
        const VertexGroupSpec& G = p.group(s.vertex);
        out += p.graph.name(s.vertex);
        if (G.kind == GroupKind::FiniteTable)
            out += ":" + std::to_string(s.elt);
        else if (s.elt != 1)
            out += "^" + std::to_string(s.elt);
    }
    return out;
}

inline Word parse_word(const Presentation& p, const std::string& text) {
    std::istringstream in(text);
    std::vector<Syllable> raw;
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        Elt e = 1;
        bool table_elt = false;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            name = tok.substr(0, pos);
            e = std::stoll(tok.substr(pos + 1));
        } else if (auto qos = tok.find(':'); qos != std::string::npos) {
            name = tok.substr(0, qos);
            e = std::stoll(tok.substr(qos + 1));
            table_elt = true;
        }
        VertexId v = p.graph.vertex(name);
        const VertexGroupSpec& G = p.group(v);
        if (table_elt != (G.kind == GroupKind::FiniteTable))
            throw std::invalid_argument("token '" + tok + "' does not match the group kind of " +
                                        name);
        if (G.kind == GroupKind::Cyclic) e = ((e % G.order) + G.order) % G.order;
        if (e != 0 && !G.valid(e))
            throw std::invalid_argument("element out of range in token '" + tok + "'");
        if (e != 0) raw.push_back({v, e});
    }
    return reduce(p, raw);
}

struct PresentationConfig {
    Presentation presentation;
    VertexGroupMeta meta;
};

// Config grammar (one declaration per line, '#' comments):
//   vertex <name> cyclic <n>
//   vertex <name> infinite-cyclic
//   vertex <name> table <k> <k*k entries row-major> [gens <idx...>]
//   edge <a> <b>
//   meta <name> graphically-irreducible <true|false>
//   meta clique-part aut-finite <true|false>
inline PresentationConfig parse_config_text(const std::string& text) {
    std::vector<std::string> names;
    std::vector<VertexGroupSpec> specs;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, bool>> gi_flags;
    std::optional<bool> aut_clique;
    std::map<std::string, bool> finite_ab;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        try {
            if (kw == "vertex") {
                std::string name, kind;
                if (!(ls >> name >> kind)) throw std::runtime_error("expected: vertex <name> <kind>");
                for (const auto& n : names)
                    if (n == name) throw std::runtime_error("duplicate vertex " + name);
                if (kind == "cyclic") {
                    std::int64_t n;
                    if (!(ls >> n)) throw std::runtime_error("expected cyclic order");
                    specs.push_back(VertexGroupSpec::cyclic(n));
                } else if (kind == "infinite-cyclic") {
                    specs.push_back(VertexGroupSpec::infinite_cyclic());
                } else if (kind == "table") {
                    std::int64_t k;
                    if (!(ls >> k)) throw std::runtime_error("expected table size");
                    std::vector<Elt> table;
                    for (std::int64_t i = 0; i < k * k; ++i) {
                        Elt e;
                        if (!(ls >> e)) throw std::runtime_error("expected k*k table entries");
                        table.push_back(e);
                    }
                    std::vector<Elt> gens;
                    std::string more;
                    if (ls >> more) {
                        if (more != "gens") throw std::runtime_error("expected 'gens'");
                        Elt e;
                        while (ls >> e) gens.push_back(e);
                    }
                    specs.push_back(VertexGroupSpec::finite_table(std::move(table), k, gens));
                } else {
                    throw std::runtime_error("unknown group kind " + kind);
                }
                names.push_back(name);
            } else if (kw == "edge") {
                std::string a, b;
                if (!(ls >> a >> b)) throw std::runtime_error("expected: edge <a> <b>");
                edges.emplace_back(a, b);
            } else if (kw == "meta") {
                std::string name, flag, value;
                if (!(ls >> name >> flag >> value))
                    throw std::runtime_error("expected: meta <name> <flag> <true|false>");
                bool b = value == "true";
                if (!b && value != "false") throw std::runtime_error("expected true or false");
                if (name == "clique-part" && flag == "aut-finite")
                    aut_clique = b;
                else if (flag == "graphically-irreducible")
                    gi_flags.emplace_back(name, b);
                else if (flag == "finite-abelianization")
                    finite_ab[name] = b;
                else
                    throw std::runtime_error("unknown meta flag " + flag);
            } else {
                throw std::runtime_error("unknown declaration " + kw);
            }
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (names.empty()) throw ParseError(lineno, "no vertices declared");

    SimplicialGraph g(names);
    int edge_line = 0;
    for (const auto& [a, b] : edges) {
        ++edge_line;
        if (!g.has_vertex(a)) throw ParseError(0, "edge endpoint is not a declared vertex: " + a);
        if (!g.has_vertex(b)) throw ParseError(0, "edge endpoint is not a declared vertex: " + b);
        g.add_edge(g.vertex(a), g.vertex(b));
    }
    PresentationConfig cfg{Presentation{g, specs}, {}};
    cfg.meta = VertexGroupMeta::defaults(cfg.presentation);
    for (const auto& [name, flag] : gi_flags) {
        if (!g.has_vertex(name)) throw ParseError(0, "meta names unknown vertex: " + name);
        cfg.meta.is_graphically_irreducible[g.vertex(name)] = flag;
    }
    for (const auto& [name, flag] : finite_ab) {
        if (!g.has_vertex(name)) throw ParseError(0, "meta names unknown vertex: " + name);
        cfg.meta.finite_abelianization_override[g.vertex(name)] = flag;
    }
    cfg.meta.aut_of_clique_part_finite = aut_clique;
    return cfg;
}

inline PresentationConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

inline std::string serialize_config(const PresentationConfig& cfg) {
    const Presentation& p = cfg.presentation;
    std::ostringstream out;
    for (VertexId v = 0; v < p.graph.size(); ++v) {
        const VertexGroupSpec& G = p.group(v);
        out << "vertex " << p.graph.name(v) << " ";
        switch (G.kind) {
            case GroupKind::Cyclic: out << "cyclic " << G.order; break;
            case GroupKind::InfiniteCyclic: out << "infinite-cyclic"; break;
            case GroupKind::FiniteTable: {
                out << "table " << G.table_size;
                for (Elt e : G.table) out << " " << e;
                out << " gens";
                for (Elt e : G.generators) out << " " << e;
                break;
            }
        }
        out << "\n";
    }
    for (VertexId a = 0; a < p.graph.size(); ++a)
        for (VertexId b = a + 1; b < p.graph.size(); ++b)
            if (p.graph.adjacent(a, b))
                out << "edge " << p.graph.name(a) << " " << p.graph.name(b) << "\n";
    for (VertexId v = 0; v < p.graph.size(); ++v)
        if (!cfg.meta.is_graphically_irreducible[v])
            out << "meta " << p.graph.name(v) << " graphically-irreducible false\n";
    if (cfg.meta.aut_of_clique_part_finite)
        out << "meta clique-part aut-finite "
            << (*cfg.meta.aut_of_clique_part_finite ? "true" : "false") << "\n";
    return out.str();
}

inline std::string dot_graph(const SimplicialGraph& g, const std::string& name = "gamma") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.size(); ++v) out << "  \"" << g.name(v) << "\";\n";
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b))
                out << "  \"" << g.name(a) << "\" -- \"" << g.name(b) << "\";\n";
    out << "}\n";
    return out.str();
}

inline std::string dot_window(const Presentation& p, const HyperplaneWindow& win) {
    std::ostringstream out;
    out << "graph crossing_window {\n";
    for (std::size_t i = 0; i < win.walls.size(); ++i)
        out << "  w" << i << " [label=\"" << p.graph.name(win.walls[i].label) << " @ "
            << print_word(p, win.walls[i].carrier.rep) << "\"];\n";
    for (std::size_t i = 0; i < win.walls.size(); ++i)
        for (std::size_t j = i + 1; j < win.walls.size(); ++j)
            if (win.adjacent[i][j]) out << "  w" << i << " -- w" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gpkit

#endif

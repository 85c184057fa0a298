#pragma once

// Line-oriented text format for graphs and drawings, and DOT export.
//
//   graph <name>
//   v <token>                          one per vertex
//   e <a> <b>                          one per edge
//   x <a> <b> <c> <d>                  edge ab crosses edge cd
//   rot <v> : <w1> <w2> ...            counter-clockwise neighbors at v
//   xrot <a> <b> <c> <d> : <p> <q> <r> <s>   cyclic order at crossing ab x cd
//   end
//
// `#` starts a comment. The canonical form sorts vertices, edges (smaller
// endpoint first) and crossings, starts every rotation at its smallest
// token, and lists x lines, then rot lines, then xrot lines.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cf1p/drawing.hpp"
#include "cf1p/error.hpp"
#include "cf1p/graph.hpp"

namespace cf1p {

struct ParsedFile {
    std::string name;
    Graph graph;
    std::optional<DrawingData> drawing;  // present iff the file has x/rot/xrot lines
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct RawCrossing {
    std::array<std::string, 4> ends;
    std::size_t line;
};

struct RawRotation {
    std::vector<std::string> tokens;
    std::size_t line;
};

}  // namespace detail

inline ParsedFile parse_file(std::string_view text) {
    enum Section { in_header, in_vertices, in_edges, in_drawing, in_done };
    Section at = in_header;
    ParsedFile out;
    std::vector<std::string> verts;
    std::vector<std::size_t> vert_lines;
    std::vector<TokenEdge> edges;
    std::vector<std::size_t> edge_lines;
    std::vector<detail::RawCrossing> xs;
    std::vector<std::pair<detail::RawCrossing, std::vector<std::string>>> xrots;
    std::vector<std::pair<std::string, detail::RawRotation>> rots;
    bool has_drawing = false;

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        auto line = text.substr(start, stop - start);
        start = stop + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = detail::split_ws(line);
        if (tok.empty()) {
            if (stop == text.size()) break;
            continue;
        }
        const auto& kw = tok[0];
        if (at == in_done) throw InputError("content after end", lineno);
        if (at == in_header) {
            if (kw != "graph" || tok.size() != 2) throw InputError("expected 'graph <name>'", lineno);
            if (!valid_token(tok[1])) throw InputError("invalid graph name", lineno);
            out.name = tok[1];
            at = in_vertices;
        } else if (kw == "v") {
            if (at != in_vertices) throw InputError("vertex line after edges or drawing", lineno);
            if (tok.size() != 2) throw InputError("expected 'v <token>'", lineno);
            verts.push_back(tok[1]);
            vert_lines.push_back(lineno);
        } else if (kw == "e") {
            if (at == in_drawing) throw InputError("edge line inside drawing block", lineno);
            if (tok.size() != 3) throw InputError("expected 'e <a> <b>'", lineno);
            at = in_edges;
            edges.push_back({tok[1], tok[2]});
            edge_lines.push_back(lineno);
        } else if (kw == "x") {
            if (tok.size() != 5) throw InputError("expected 'x <a> <b> <c> <d>'", lineno);
            at = in_drawing;
            has_drawing = true;
            xs.push_back({{tok[1], tok[2], tok[3], tok[4]}, lineno});
        } else if (kw == "rot") {
            if (tok.size() < 3 || tok[2] != ":") throw InputError("expected 'rot <v> : ...'", lineno);
            at = in_drawing;
            has_drawing = true;
            rots.push_back({tok[1], {{tok.begin() + 3, tok.end()}, lineno}});
        } else if (kw == "xrot") {
            if (tok.size() != 10 || tok[5] != ":")
                throw InputError("expected 'xrot <a> <b> <c> <d> : <p> <q> <r> <s>'", lineno);
            at = in_drawing;
            has_drawing = true;
            xrots.push_back({{{tok[1], tok[2], tok[3], tok[4]}, lineno}, {tok.begin() + 6, tok.end()}});
        } else if (kw == "end") {
            if (tok.size() != 1) throw InputError("unexpected tokens after end", lineno);
            at = in_done;
        } else {
            throw InputError("unknown record '" + kw + "'", lineno);
        }
        if (stop == text.size()) break;
    }
    if (at == in_header) throw InputError("empty input: expected 'graph <name>'", lineno);
    if (at != in_done) throw InputError("missing 'end'", lineno);

    // Vertex and edge errors are re-raised with their line.
    {
        std::map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (!valid_token(verts[i])) throw InputError("invalid vertex token '" + verts[i] + "'", vert_lines[i]);
            if (!seen.emplace(verts[i], i).second) throw InputError("duplicate vertex " + verts[i], vert_lines[i]);
        }
        std::map<std::pair<std::string, std::string>, std::size_t> eseen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& [a, b] = edges[i];
            for (const auto* t : {&a, &b})
                if (!seen.count(*t)) throw InputError("edge references unknown vertex " + *t, edge_lines[i]);
            if (a == b) throw InputError("self-loop at " + a, edge_lines[i]);
            auto key = a < b ? std::pair(a, b) : std::pair(b, a);
            if (!eseen.emplace(key, i).second) throw InputError("duplicate edge " + a + " " + b, edge_lines[i]);
        }
    }
    out.graph = Graph::build(verts, edges);
    if (!has_drawing) return out;

    const auto& g = out.graph;
    auto vertex = [&](const std::string& t, std::size_t line) {
        auto v = g.find(t);
        if (!v) throw InputError("unknown vertex " + t, line);
        return *v;
    };
    DrawingData d(g);
    using Key = std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>;
    auto key_of = [&](const detail::RawCrossing& c) {
        std::array<Vertex, 4> v{};
        for (int i = 0; i < 4; ++i) v[i] = vertex(c.ends[i], c.line);
        auto a = std::minmax(v[0], v[1]);
        auto b = std::minmax(v[2], v[3]);
        return a < b ? Key{a, b} : Key{b, a};
    };
    std::map<Key, std::size_t> crossing_index;
    for (const auto& c : xs) {
        std::array<Vertex, 4> v{};
        for (int i = 0; i < 4; ++i) v[i] = vertex(c.ends[i], c.line);
        auto key = key_of(c);
        if (crossing_index.count(key)) throw InputError("duplicate crossing", c.line);
        crossing_index[key] = d.crossings.size();
        d.crossings.push_back({{v[0], v[1]}, {v[2], v[3]}, {}, c.line});
    }
    std::vector<char> has_xrot(d.crossings.size(), 0);
    for (const auto& [c, order] : xrots) {
        auto it = crossing_index.find(key_of(c));
        if (it == crossing_index.end()) throw InputError("xrot for undeclared crossing", c.line);
        if (has_xrot[it->second]) throw InputError("duplicate xrot for crossing", c.line);
        has_xrot[it->second] = 1;
        for (const auto& t : order) d.crossings[it->second].order.push_back(vertex(t, c.line));
    }
    for (const auto& [v, r] : rots) {
        auto idx = vertex(v, r.line);
        if (d.rotations[idx]) throw InputError("duplicate rotation for " + v, r.line);
        std::vector<Vertex> seq;
        for (const auto& t : r.tokens) seq.push_back(vertex(t, r.line));
        d.rotations[idx] = std::move(seq);
        d.rotation_lines[idx] = r.line;
    }
    out.drawing = std::move(d);
    return out;
}

inline Graph parse_graph_file(std::string_view text) { return parse_file(text).graph; }

// Parses and validates; the first violation is raised with its line.
inline OnePlaneDrawing parse_drawing_file(std::string_view text) {
    auto f = parse_file(text);
    if (!f.drawing) throw InputError("no drawing block (x/rot/xrot lines)");
    return build_drawing(std::move(*f.drawing));
}

namespace detail {

inline void write_header(std::ostringstream& os, const std::string& name, const Graph& g) {
    os << "graph " << name << '\n';
    for (Vertex v : g.lex_order()) os << "v " << g.name(v) << '\n';
    for (const auto& e : g.edges()) os << "e " << g.name(e.u) << ' ' << g.name(e.v) << '\n';
}

// Rotation rotated to start at its smallest token.
inline std::vector<Vertex> canonical_cycle(const Graph& g, const std::vector<Vertex>& r) {
    if (r.empty()) return r;
    auto it = std::min_element(r.begin(), r.end(), [&](Vertex a, Vertex b) { return g.before(a, b); });
    std::vector<Vertex> out(it, r.end());
    out.insert(out.end(), r.begin(), it);
    return out;
}

}  // namespace detail

inline std::string serialize_graph(const std::string& name, const Graph& g) {
    std::ostringstream os;
    detail::write_header(os, name, g);
    os << "end\n";
    return os.str();
}

inline std::string serialize_drawing(const std::string& name, const OnePlaneDrawing& d) {
    const auto& g = d.base();
    std::ostringstream os;
    detail::write_header(os, name, g);
    struct Row {
        Edge a, b;
        std::vector<Vertex> order;
    };
    std::vector<Row> rows;
    for (const auto& c : d.crossings()) {
        Edge a = g.normalized(c.first.u, c.first.v), b = g.normalized(c.second.u, c.second.v);
        auto k = [&](const Edge& e) { return std::pair(g.rank(e.u), g.rank(e.v)); };
        if (k(b) < k(a)) std::swap(a, b);
        rows.push_back({a, b, detail::canonical_cycle(g, c.order)});
    }
    std::sort(rows.begin(), rows.end(), [&](const Row& l, const Row& r) {
        auto k = [&](const Row& x) {
            return std::tuple(g.rank(x.a.u), g.rank(x.a.v), g.rank(x.b.u), g.rank(x.b.v));
        };
        return k(l) < k(r);
    });
    auto quad = [&](const Row& r) {
        return g.name(r.a.u) + ' ' + g.name(r.a.v) + ' ' + g.name(r.b.u) + ' ' + g.name(r.b.v);
    };
    for (const auto& r : rows) os << "x " << quad(r) << '\n';
    for (Vertex v : g.lex_order()) {
        os << "rot " << g.name(v) << " :";
        for (Vertex w : detail::canonical_cycle(g, d.rotation(v))) os << ' ' << g.name(w);
        os << '\n';
    }
    for (const auto& r : rows) {
        os << "xrot " << quad(r) << " :";
        for (Vertex w : r.order) os << ' ' << g.name(w);
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace detail

// True vertices as circles, crossings as diamond nodes, crossed edges split
// at their crossing node. No layout hints beyond that.
inline std::string export_dot(const std::string& name, const OnePlaneDrawing& d) {
    const auto& g = d.base();
    const auto& p = d.planarization();
    std::ostringstream os;
    os << "graph " << detail::dot_quote(name) << " {\n";
    os << "  node [shape=circle];\n";
    for (Vertex v : g.lex_order()) os << "  " << detail::dot_quote(g.name(v)) << ";\n";
    std::vector<Vertex> fakes;
    for (Vertex x = 0; x < p.order(); ++x)
        if (p.is_fake(x)) fakes.push_back(x);
    std::sort(fakes.begin(), fakes.end(), [&](Vertex a, Vertex b) { return p.name(a) < p.name(b); });
    for (Vertex x : fakes)
        os << "  " << detail::dot_quote(p.name(x)) << " [shape=diamond, label=\"\", width=0.15, height=0.15];\n";
    for (const auto& e : g.edges())
        if (!d.crossing_of(e.u, e.v))
            os << "  " << detail::dot_quote(g.name(e.u)) << " -- " << detail::dot_quote(g.name(e.v)) << ";\n";
    for (Vertex x : fakes) {
        auto nb = p.rotation(x);
        std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return g.before(a, b); });
        for (Vertex w : nb)
            os << "  " << detail::dot_quote(g.name(w)) << " -- " << detail::dot_quote(p.name(x))
               << " [color=blue];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cf1p

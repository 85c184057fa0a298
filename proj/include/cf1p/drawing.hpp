#pragma once

// Combinatorial 1-plane drawings.
//
// A drawing is a graph plus a set of crossing pairs and a rotation system of
// its planarization: for every vertex the counter-clockwise order of its
// neighbors (a crossed edge is still named by its far endpoint), and for
// every crossing the cyclic order of the four endpoints around the crossing
// point. `DrawingData` holds this raw and possibly broken; `OnePlaneDrawing`
// can only be obtained through validation.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cf1p/error.hpp"
#include "cf1p/graph.hpp"
#include "cf1p/plane_graph.hpp"

namespace cf1p {

struct CrossingSpec {
    Edge first;
    Edge second;
    // Cyclic order of the four endpoints around the crossing point.
    std::vector<Vertex> order;
    std::size_t line = 0;  // source line when parsed from a file
};

struct DrawingData {
    Graph base;
    std::vector<CrossingSpec> crossings;
    // Per vertex; nullopt when no rotation was given.
    std::vector<std::optional<std::vector<Vertex>>> rotations;
    std::vector<std::size_t> rotation_lines;  // parallel to rotations, 0 if unknown

    explicit DrawingData(Graph g = {}) : base(std::move(g)), rotations(base.order()), rotation_lines(base.order(), 0) {}
};

enum class ViolationKind {
    unknown_edge,
    adjacent_crossing,
    multiple_crossing,
    rotation_mismatch,
    fake_rotation_mismatch,
    alternation,
    euler,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::unknown_edge: return "unknown-edge";
        case ViolationKind::adjacent_crossing: return "adjacent-edge-crossing";
        case ViolationKind::multiple_crossing: return "multiple-crossing";
        case ViolationKind::rotation_mismatch: return "rotation-mismatch";
        case ViolationKind::fake_rotation_mismatch: return "fake-rotation-mismatch";
        case ViolationKind::alternation: return "alternation";
        case ViolationKind::euler: return "euler";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::string witness;
    std::size_t line = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::size_t count(ViolationKind k) const {
        return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                      [k](const Violation& v) { return v.kind == k; }));
    }
};

namespace detail {

inline std::string crossing_name(const Graph& g, const CrossingSpec& c) {
    return g.edge_name(g.normalized(c.first.u, c.first.v)) + " x " +
           g.edge_name(g.normalized(c.second.u, c.second.v));
}

inline bool alternates(const CrossingSpec& c) {
    const auto& o = c.order;
    // Opposite positions must hold the two ends of the same edge.
    auto same_edge = [&](Vertex a, Vertex b) {
        return (Edge{a, b} == c.first || Edge{b, a} == c.first) ||
               (Edge{a, b} == c.second || Edge{b, a} == c.second);
    };
    return same_edge(o[0], o[2]) && same_edge(o[1], o[3]);
}

// Planarization of structurally sound data (every local check passed).
inline PlaneGraph planarize_unchecked(const DrawingData& d) {
    const auto& g = d.base;
    const auto n = g.order();
    const auto c = d.crossings.size();
    std::vector<std::string> names = g.names();
    std::vector<char> fake(n, 0);
    fake.resize(n + c, 1);
    std::vector<std::int64_t> via(g.size(), -1);  // edge -> fake vertex
    std::vector<std::array<Vertex, 4>> ends;
    for (std::size_t i = 0; i < c; ++i) {
        const auto& x = d.crossings[i];
        auto a = g.normalized(x.first.u, x.first.v);
        auto b = g.normalized(x.second.u, x.second.v);
        names.push_back("(" + g.edge_name(a) + "|" + g.edge_name(b) + ")");
        via[*g.edge_index(a.u, a.v)] = static_cast<std::int64_t>(n + i);
        via[*g.edge_index(b.u, b.v)] = static_cast<std::int64_t>(n + i);
        ends.push_back({a.u, a.v, b.u, b.v});
    }
    std::vector<std::vector<Vertex>> rot(n + c);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : *d.rotations[v]) {
            auto e = via[*g.edge_index(v, w)];
            rot[v].push_back(e >= 0 ? static_cast<Vertex>(e) : w);
        }
    for (std::size_t i = 0; i < c; ++i) rot[n + i] = d.crossings[i].order;
    return PlaneGraph(std::move(names), std::move(fake), std::move(rot), std::move(ends));
}

}  // namespace detail

// Checks every drawing convention and reports each violation with a locator.
// The Euler (sphere embedding) check only runs when all local checks pass,
// since the planarization is undefined otherwise.
inline ValidationReport validate_drawing(const DrawingData& d) {
    ValidationReport report;
    auto add = [&](ViolationKind k, std::string w, std::size_t line) {
        report.violations.push_back({k, std::move(w), line});
    };
    const auto& g = d.base;
    const auto n = g.order();

    std::vector<std::vector<std::size_t>> crossed_in(g.size());
    std::vector<char> sound(d.crossings.size(), 0);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const auto& x = d.crossings[i];
        auto known = [&](const Edge& e) { return e.u < n && e.v < n && g.adjacent(e.u, e.v); };
        if (!known(x.first) || !known(x.second)) {
            std::string name;
            for (const Edge* e : {&x.first, &x.second}) {
                if (!name.empty()) name += " x ";
                name += (e->u < n ? g.name(e->u) : "?") + "-" + (e->v < n ? g.name(e->v) : "?");
            }
            add(ViolationKind::unknown_edge, name, x.line);
            continue;
        }
        if (x.first.touches(x.second)) {
            add(ViolationKind::adjacent_crossing, detail::crossing_name(g, x), x.line);
            continue;
        }
        crossed_in[*g.edge_index(x.first.u, x.first.v)].push_back(i);
        crossed_in[*g.edge_index(x.second.u, x.second.v)].push_back(i);
        sound[i] = 1;
    }
    bool multiple = false;
    for (std::size_t e = 0; e < g.size(); ++e) {
        if (crossed_in[e].size() < 2) continue;
        multiple = true;
        std::string w = g.edge_name(g.edges()[e]) + " in";
        for (auto i : crossed_in[e]) w += " [" + detail::crossing_name(g, d.crossings[i]) + "]";
        add(ViolationKind::multiple_crossing, w, d.crossings[crossed_in[e][1]].line);
    }

    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (!sound[i]) continue;
        const auto& x = d.crossings[i];
        std::array<Vertex, 4> want{x.first.u, x.first.v, x.second.u, x.second.v};
        auto got = x.order;
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (got.size() != 4 || !std::equal(want.begin(), want.end(), got.begin())) {
            add(ViolationKind::fake_rotation_mismatch, detail::crossing_name(g, x), x.line);
            continue;
        }
        if (!detail::alternates(x)) add(ViolationKind::alternation, detail::crossing_name(g, x), x.line);
    }

    if (d.rotations.size() != n) {
        add(ViolationKind::rotation_mismatch, "rotation table size", 0);
    } else {
        for (Vertex v = 0; v < n; ++v) {
            const auto& r = d.rotations[v];
            auto line = v < d.rotation_lines.size() ? d.rotation_lines[v] : 0;
            if (!r) {
                if (g.degree(v) > 0) add(ViolationKind::rotation_mismatch, g.name(v) + ": missing rotation", line);
                continue;
            }
            std::vector<Vertex> got = *r;
            std::vector<Vertex> want = g.neighbors(v);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) add(ViolationKind::rotation_mismatch, g.name(v), line);
        }
    }

    if (!report.ok() || multiple) return report;
    DrawingData normalized = d;
    for (Vertex v = 0; v < n; ++v)
        if (!normalized.rotations[v]) normalized.rotations[v] = std::vector<Vertex>{};
    auto plane = detail::planarize_unchecked(normalized);
    auto chi = component_characteristics(plane);
    auto comp = plane.components();
    for (std::size_t c = 0; c < chi.size(); ++c) {
        if (chi[c] == 2) continue;
        Vertex first = 0;
        while (comp[first] != c) ++first;
        add(ViolationKind::euler,
            "component of " + plane.name(first) + ": V-E+F = " + std::to_string(chi[c]), 0);
    }
    return report;
}

class OnePlaneDrawing {
public:
    OnePlaneDrawing() = default;

    const Graph& base() const { return data_.base; }
    const DrawingData& data() const { return data_; }
    const PlaneGraph& planarization() const { return plane_; }
    std::size_t crossing_count() const { return data_.crossings.size(); }
    const std::vector<CrossingSpec>& crossings() const { return data_.crossings; }

    // Counter-clockwise neighbor order at a true vertex.
    const std::vector<Vertex>& rotation(Vertex v) const {
        if (v >= base().order()) throw InputError("rotation: unknown vertex");
        return *data_.rotations[v];
    }
    std::vector<std::string> rotation(const std::string& token) const {
        std::vector<std::string> out;
        for (Vertex w : rotation(base().at(token))) out.push_back(base().name(w));
        return out;
    }

    // Index of the crossing that `e` takes part in, if any.
    std::optional<std::size_t> crossing_of(Vertex a, Vertex b) const {
        auto idx = base().edge_index(a, b);
        if (!idx || crossing_of_[*idx] < 0) return std::nullopt;
        return static_cast<std::size_t>(crossing_of_[*idx]);
    }
    // The edge crossing ab, if any.
    std::optional<Edge> crossing_partner(Vertex a, Vertex b) const {
        auto c = crossing_of(a, b);
        if (!c) return std::nullopt;
        const auto& x = data_.crossings[*c];
        Edge e = base().normalized(a, b);
        Edge f = base().normalized(x.first.u, x.first.v);
        return e == f ? base().normalized(x.second.u, x.second.v) : f;
    }

    friend OnePlaneDrawing build_drawing(DrawingData data);

private:
    DrawingData data_;
    PlaneGraph plane_;
    std::vector<std::int64_t> crossing_of_;
};

// Accepts the data only if validate_drawing reports nothing; the first
// violation becomes the InputError message.
inline OnePlaneDrawing build_drawing(DrawingData data) {
    auto report = validate_drawing(data);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw InputError(std::string(to_string(v.kind)) + ": " + v.witness, v.line);
    }
    for (auto& r : data.rotations)
        if (!r) r = std::vector<Vertex>{};
    OnePlaneDrawing d;
    d.plane_ = detail::planarize_unchecked(data);
    d.crossing_of_.assign(data.base.size(), -1);
    for (std::size_t i = 0; i < data.crossings.size(); ++i) {
        const auto& x = data.crossings[i];
        d.crossing_of_[*data.base.edge_index(x.first.u, x.first.v)] = static_cast<std::int64_t>(i);
        d.crossing_of_[*data.base.edge_index(x.second.u, x.second.v)] = static_cast<std::int64_t>(i);
    }
    d.data_ = std::move(data);
    return d;
}

inline const PlaneGraph& planarize(const OnePlaneDrawing& d) { return d.planarization(); }

inline ValidationReport validate_drawing(const OnePlaneDrawing& d) { return validate_drawing(d.data()); }

// Drawing of G[U]: crossings survive only when both edges survive, rotations
// are filtered in place.
inline OnePlaneDrawing restrict_drawing(const OnePlaneDrawing& d, const std::vector<Vertex>& subset) {
    const auto& g = d.base();
    std::vector<char> keep(g.order(), 0);
    for (Vertex v : subset) {
        if (v >= g.order()) throw InputError("restrict_drawing: unknown vertex");
        keep[v] = 1;
    }
    std::vector<std::string> names;
    std::vector<Vertex> remap(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        if (keep[v]) {
            remap[v] = static_cast<Vertex>(names.size());
            names.push_back(g.name(v));
        }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (keep[e.u] && keep[e.v]) edges.push_back({remap[e.u], remap[e.v]});
    DrawingData out(Graph::from_indices(names, edges));
    for (const auto& x : d.crossings()) {
        if (!(keep[x.first.u] && keep[x.first.v] && keep[x.second.u] && keep[x.second.v])) continue;
        CrossingSpec c{{remap[x.first.u], remap[x.first.v]}, {remap[x.second.u], remap[x.second.v]}, {}, 0};
        for (Vertex w : x.order) c.order.push_back(remap[w]);
        out.crossings.push_back(std::move(c));
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!keep[v]) continue;
        std::vector<Vertex> r;
        for (Vertex w : d.rotation(v))
            if (keep[w]) r.push_back(remap[w]);
        out.rotations[remap[v]] = std::move(r);
    }
    return build_drawing(std::move(out));
}

inline OnePlaneDrawing restrict_drawing(const OnePlaneDrawing& d, const std::vector<std::string>& tokens) {
    std::vector<Vertex> subset;
    for (const auto& t : tokens) subset.push_back(d.base().at(t));
    return restrict_drawing(d, subset);
}

}  // namespace cf1p

#pragma once

// Fixture graphs with bundled drawings, and the two gluing constructions.
//
// Hand drawings were transcribed as straight-line sketches and reduced to
// crossing pairs plus rotations; every table is validated on construction,
// and the claimed parameters are recomputed by the tests.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cf1p/drawing.hpp"
#include "cf1p/error.hpp"
#include "cf1p/graph.hpp"

namespace cf1p {

struct FixtureClaims {
    std::size_t delta = 0;
    std::size_t kappa = 0;
    bool claw_free = false;
};

struct Fixture {
    std::string name;
    Graph graph;
    OnePlaneDrawing drawing;
    FixtureClaims claims;
};

// Token-level drawing description, convenient to write down and to glue.
struct DrawingTables {
    using Crossing = std::pair<std::array<std::string, 4>, std::array<std::string, 4>>;  // {a b c d}, order
    std::vector<std::string> vertices;
    std::vector<TokenEdge> edges;
    std::vector<Crossing> crossings;
    std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
};

inline OnePlaneDrawing drawing_from_tables(const DrawingTables& t) {
    DrawingData d(build_graph(t.vertices, t.edges));
    const auto& g = d.base;
    for (const auto& [ends, order] : t.crossings) {
        CrossingSpec c{{g.at(ends[0]), g.at(ends[1])}, {g.at(ends[2]), g.at(ends[3])}, {}, 0};
        for (const auto& w : order) c.order.push_back(g.at(w));
        d.crossings.push_back(std::move(c));
    }
    for (const auto& [v, rot] : t.rotations) {
        std::vector<Vertex> r;
        for (const auto& w : rot) r.push_back(g.at(w));
        d.rotations[g.at(v)] = std::move(r);
    }
    return build_drawing(std::move(d));
}

inline DrawingTables tables_from_drawing(const OnePlaneDrawing& d) {
    const auto& g = d.base();
    DrawingTables t;
    t.vertices = g.names();
    for (const auto& e : g.edges()) t.edges.emplace_back(g.name(e.u), g.name(e.v));
    for (const auto& x : d.crossings()) {
        DrawingTables::Crossing c{{g.name(x.first.u), g.name(x.first.v), g.name(x.second.u), g.name(x.second.v)}, {}};
        for (std::size_t i = 0; i < 4; ++i) c.second[i] = g.name(x.order[i]);
        t.crossings.push_back(std::move(c));
    }
    for (Vertex v = 0; v < g.order(); ++v) t.rotations.emplace_back(g.name(v), d.rotation(g.name(v)));
    return t;
}

namespace detail {

inline const DrawingTables& h0_tables() {
    static const DrawingTables t{
        {"y'", "z'", "x'", "s'", "t'", "u", "s", "t", "y", "z", "x"},
        {{"x'", "u"}, {"s'", "u"}, {"s'", "t'"}, {"t'", "u"}, {"x'", "y'"}, {"y'", "z'"}, {"z'", "x'"}, {"s'", "y'"}, {"t'", "z'"}, {"u", "x"}, {"x", "y"}, {"y", "z"}, {"z", "x"}, {"u", "s"}, {"y", "s"}, {"s", "t"}, {"u", "t"}, {"t", "z"}, {"s", "s'"}, {"t", "t'"}, {"x'", "s'"}, {"y'", "u"}, {"u", "y"}, {"s", "x"}, {"t", "x"}, {"u", "z"}, {"u", "z'"}, {"t'", "x'"}, {"s", "z"}, {"y", "t"}, {"s'", "z'"}, {"t'", "y'"}},
        {{{"x'", "s'", "y'", "u"}, {"y'", "s'", "u", "x'"}}, {{"u", "y", "s", "x"}, {"s", "y", "x", "u"}}, {{"t", "x", "u", "z"}, {"z", "t", "u", "x"}}, {{"u", "z'", "t'", "x'"}, {"t'", "z'", "x'", "u"}}, {{"s", "z", "y", "t"}, {"s", "t", "z", "y"}}, {{"s'", "z'", "t'", "y'"}, {"y'", "z'", "t'", "s'"}}},
        {{"y'", {"z'", "t'", "s'", "u", "x'"}}, {"z'", {"x'", "u", "t'", "s'", "y'"}}, {"x'", {"y'", "s'", "u", "t'", "z'"}}, {"s'", {"y'", "z'", "t'", "s", "u", "x'"}}, {"t'", {"y'", "z'", "x'", "u", "t", "s'"}}, {"u", {"y'", "s'", "s", "y", "x", "z", "t", "t'", "z'", "x'"}}, {"s", {"s'", "t", "z", "y", "x", "u"}}, {"t", {"t'", "u", "x", "z", "y", "s"}}, {"y", {"s", "t", "z", "x", "u"}}, {"z", {"s", "t", "u", "x", "y"}}, {"x", {"s", "y", "z", "t", "u"}}},
    };
    return t;
}

// G_1: u has degree 10, the path of G_k hangs off v.
inline const DrawingTables& g1_tables() {
    static const DrawingTables t{
        {"a", "v", "u", "b", "c", "d", "e", "f", "g", "h", "i"},
        {{"a", "u"}, {"u", "v"}, {"v", "a"}, {"b", "u"}, {"u", "c"}, {"c", "b"}, {"b", "g"}, {"g", "h"}, {"h", "i"}, {"i", "g"}, {"h", "u"}, {"i", "c"}, {"a", "d"}, {"d", "e"}, {"e", "f"}, {"f", "d"}, {"e", "v"}, {"u", "f"}, {"d", "v"}, {"e", "a"}, {"a", "f"}, {"d", "u"}, {"u", "e"}, {"f", "v"}, {"u", "i"}, {"c", "h"}, {"h", "b"}, {"g", "u"}, {"i", "b"}, {"g", "c"}},
        {{{"d", "v", "e", "a"}, {"v", "e", "d", "a"}}, {{"a", "f", "d", "u"}, {"f", "u", "a", "d"}}, {{"u", "e", "f", "v"}, {"v", "u", "f", "e"}}, {{"u", "i", "c", "h"}, {"u", "c", "i", "h"}}, {{"h", "b", "g", "u"}, {"u", "h", "g", "b"}}, {{"i", "b", "g", "c"}, {"i", "c", "b", "g"}}},
        {{"a", {"v", "e", "d", "f", "u"}}, {"v", {"u", "f", "e", "d", "a"}}, {"u", {"c", "i", "h", "g", "b", "a", "d", "f", "e", "v"}}, {"b", {"u", "h", "g", "i", "c"}}, {"c", {"b", "g", "i", "h", "u"}}, {"d", {"v", "e", "f", "u", "a"}}, {"e", {"v", "u", "f", "d", "a"}}, {"f", {"v", "u", "a", "d", "e"}}, {"g", {"u", "h", "i", "c", "b"}}, {"h", {"u", "c", "i", "g", "b"}}, {"i", {"u", "c", "b", "g", "h"}}},
    };
    return t;
}

inline const DrawingTables& fig1_left_tables() {
    static const DrawingTables t{
        {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
        {{"a", "b"}, {"b", "d"}, {"d", "c"}, {"c", "a"}, {"e", "f"}, {"a", "f"}, {"b", "e"}, {"f", "d"}, {"a", "e"}, {"f", "b"}, {"a", "d"}, {"b", "c"}, {"a", "g"}, {"g", "i"}, {"i", "c"}, {"f", "j"}, {"j", "i"}, {"g", "h"}, {"h", "j"}, {"e", "h"}, {"a", "h"}, {"e", "g"}, {"a", "i"}, {"g", "c"}, {"c", "j"}, {"b", "j"}, {"i", "d"}, {"g", "j"}, {"h", "i"}, {"h", "f"}, {"e", "j"}, {"j", "d"}},
        {{{"a", "f", "b", "e"}, {"e", "f", "b", "a"}}, {{"f", "d", "b", "j"}, {"j", "d", "b", "f"}}, {{"a", "d", "b", "c"}, {"a", "b", "d", "c"}}, {{"a", "h", "e", "g"}, {"g", "h", "e", "a"}}, {{"a", "i", "g", "c"}, {"c", "i", "g", "a"}}, {{"c", "j", "i", "d"}, {"c", "d", "j", "i"}}, {{"g", "j", "h", "i"}, {"i", "j", "h", "g"}}, {{"h", "f", "e", "j"}, {"h", "j", "f", "e"}}},
        {{"a", {"c", "i", "g", "h", "e", "f", "b", "d"}}, {"b", {"e", "f", "j", "d", "c", "a"}}, {"c", {"d", "j", "i", "g", "a", "b"}}, {"d", {"a", "b", "f", "j", "i", "c"}}, {"e", {"g", "h", "j", "f", "b", "a"}}, {"f", {"h", "j", "d", "b", "a", "e"}}, {"g", {"c", "i", "j", "h", "e", "a"}}, {"h", {"i", "j", "f", "e", "a", "g"}}, {"i", {"c", "d", "j", "h", "g", "a"}}, {"j", {"c", "d", "b", "f", "e", "h", "g", "i"}}},
    };
    return t;
}

inline const DrawingTables& fig1_right_tables() {
    static const DrawingTables t{
        {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"},
        {{"a", "b"}, {"b", "d"}, {"d", "c"}, {"c", "a"}, {"e", "f"}, {"a", "f"}, {"b", "e"}, {"f", "d"}, {"a", "e"}, {"f", "b"}, {"a", "d"}, {"b", "c"}, {"a", "g"}, {"g", "i"}, {"i", "c"}, {"f", "j"}, {"j", "i"}, {"g", "h"}, {"e", "h"}, {"a", "h"}, {"e", "g"}, {"a", "i"}, {"g", "c"}, {"c", "j"}, {"b", "j"}, {"i", "d"}, {"h", "i"}, {"h", "f"}, {"e", "k"}, {"k", "g"}, {"j", "k"}, {"f", "i"}, {"k", "i"}, {"k", "f"}, {"j", "d"}, {"h", "k"}},
        {{{"a", "f", "b", "e"}, {"e", "f", "b", "a"}}, {{"f", "d", "b", "j"}, {"j", "d", "b", "f"}}, {{"a", "d", "b", "c"}, {"a", "b", "d", "c"}}, {{"a", "h", "e", "g"}, {"g", "h", "e", "a"}}, {{"a", "i", "g", "c"}, {"c", "i", "g", "a"}}, {{"c", "j", "i", "d"}, {"c", "d", "j", "i"}}, {{"h", "i", "k", "g"}, {"i", "k", "h", "g"}}, {{"h", "f", "e", "k"}, {"h", "k", "f", "e"}}, {{"j", "k", "f", "i"}, {"i", "j", "f", "k"}}},
        {{"a", {"c", "i", "g", "h", "e", "f", "b", "d"}}, {"b", {"e", "f", "j", "d", "c", "a"}}, {"c", {"d", "j", "i", "g", "a", "b"}}, {"d", {"a", "b", "f", "j", "i", "c"}}, {"e", {"g", "h", "k", "f", "b", "a"}}, {"f", {"h", "k", "i", "j", "d", "b", "a", "e"}}, {"g", {"c", "i", "k", "h", "e", "a"}}, {"h", {"g", "i", "k", "f", "e", "a"}}, {"i", {"c", "d", "j", "f", "k", "h", "g", "a"}}, {"j", {"c", "d", "b", "f", "k", "i"}}, {"k", {"i", "j", "f", "e", "h", "g"}}},
    };
    return t;
}

inline const DrawingTables& fig5_ii_tables() {
    static const DrawingTables t{
        {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
        {{"b", "a"}, {"a", "c"}, {"c", "b"}, {"a", "d"}, {"d", "e"}, {"e", "c"}, {"d", "b"}, {"b", "e"}, {"d", "c"}, {"a", "e"}, {"a", "f"}, {"f", "d"}, {"f", "e"}, {"f", "b"}, {"f", "g"}, {"g", "d"}, {"g", "e"}, {"g", "a"}, {"f", "h"}, {"h", "d"}, {"g", "h"}, {"h", "e"}, {"f", "i"}, {"i", "h"}, {"i", "g"}, {"i", "d"}},
        {{{"a", "d", "f", "b"}, {"b", "d", "f", "a"}}, {{"b", "e", "d", "c"}, {"b", "c", "e", "d"}}, {{"f", "e", "g", "a"}, {"g", "e", "a", "f"}}, {{"g", "d", "h", "e"}, {"d", "e", "g", "h"}}, {{"f", "h", "i", "d"}, {"d", "h", "i", "f"}}},
        {{"a", {"b", "d", "f", "g", "e", "c"}}, {"b", {"c", "e", "d", "f", "a"}}, {"c", {"a", "e", "d", "b"}}, {"d", {"b", "c", "e", "g", "h", "i", "f", "a"}}, {"e", {"b", "c", "a", "f", "g", "h", "d"}}, {"f", {"b", "d", "h", "i", "g", "e", "a"}}, {"g", {"d", "e", "a", "f", "i", "h"}}, {"h", {"d", "e", "g", "i", "f"}}, {"i", {"d", "h", "g", "f"}}},
    };
    return t;
}

// Found by the oracle (6 crossings, the Euler minimum); regenerate with
// `cf1p gen k2222 --search`.
inline const DrawingTables& k2222_tables() {
    static const DrawingTables t{
        {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"},
        {{"a1", "b1"}, {"a1", "b2"}, {"a1", "c1"}, {"a1", "c2"}, {"a1", "d1"}, {"a1", "d2"}, {"a2", "b1"}, {"a2", "b2"}, {"a2", "c1"}, {"a2", "c2"}, {"a2", "d1"}, {"a2", "d2"}, {"b1", "c1"}, {"b1", "c2"}, {"b1", "d1"}, {"b1", "d2"}, {"b2", "c1"}, {"b2", "c2"}, {"b2", "d1"}, {"b2", "d2"}, {"c1", "d1"}, {"c1", "d2"}, {"c2", "d1"}, {"c2", "d2"}},
        {{{"a1", "b2", "c1", "d1"}, {"a1", "c1", "b2", "d1"}}, {{"a1", "c2", "b1", "d1"}, {"a1", "d1", "c2", "b1"}}, {{"a1", "d2", "b1", "c1"}, {"a1", "b1", "d2", "c1"}}, {{"a2", "b1", "c2", "d2"}, {"b1", "c2", "a2", "d2"}}, {{"a2", "c1", "b2", "d2"}, {"a2", "b2", "c1", "d2"}}, {{"a2", "d1", "b2", "c2"}, {"d1", "b2", "a2", "c2"}}},
        {{"a1", {"b1", "d2", "c1", "b2", "d1", "c2"}}, {"a2", {"d1", "b2", "c1", "d2", "b1", "c2"}}, {"b1", {"d1", "c2", "a2", "d2", "c1", "a1"}}, {"b2", {"c2", "d1", "a1", "c1", "d2", "a2"}}, {"c1", {"a1", "b1", "d2", "a2", "b2", "d1"}}, {"c2", {"b1", "a1", "d1", "b2", "a2", "d2"}}, {"d1", {"a1", "c1", "b2", "a2", "c2", "b1"}}, {"d2", {"b1", "c2", "a2", "b2", "c1", "a1"}}},
    };
    return t;
}

inline const DrawingTables& k5_tables() {
    static const DrawingTables t{
        {"a", "b", "c", "d", "e"},
        {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "c"}, {"b", "d"}, {"b", "e"}, {"c", "d"}, {"c", "e"}, {"d", "e"}},
        {{{"b", "e", "c", "d"}, {"b", "c", "e", "d"}}},
        {{"a", {"b", "d", "e", "c"}}, {"b", {"c", "e", "d", "a"}}, {"c", {"a", "e", "d", "b"}}, {"d", {"a", "b", "c", "e"}}, {"e", {"a", "d", "b", "c"}}},
    };
    return t;
}

inline const DrawingTables& k6_tables() {
    static const DrawingTables t{
        {"a", "b", "c", "d", "e", "f"},
        {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"}, {"a", "f"}, {"b", "c"}, {"b", "d"}, {"b", "e"}, {"b", "f"}, {"c", "d"}, {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}, {"e", "f"}},
        {{{"a", "e", "b", "c"}, {"a", "c", "e", "b"}}, {{"a", "f", "b", "d"}, {"a", "b", "f", "d"}}, {{"c", "f", "d", "e"}, {"e", "c", "d", "f"}}},
        {{"a", {"b", "f", "d", "c", "e"}}, {"b", {"c", "e", "f", "d", "a"}}, {"c", {"a", "d", "f", "e", "b"}}, {"d", {"a", "b", "f", "e", "c"}}, {"e", {"b", "a", "c", "d", "f"}}, {"f", {"b", "e", "c", "d", "a"}}},
    };
    return t;
}

inline std::vector<std::string>& rotation_of(DrawingTables& t, const std::string& v) {
    for (auto& [w, r] : t.rotations)
        if (w == v) return r;
    throw std::logic_error("no rotation for " + v);
}

// Glues `inner` into the face of `outer` bounded by the triangle tri, listed
// counter-clockwise as seen from inside that face. The inner triangle
// (identified with tri in the same order) must bound a face of `inner` whose
// corners sit between the next and the previous triangle vertex. Inner
// vertices not identified get `suffix` appended.
inline DrawingTables glue_into_triangle(DrawingTables outer, const std::array<std::string, 3>& tri,
                                       const DrawingTables& inner, const std::array<std::string, 3>& inner_tri,
                                       const std::string& suffix) {
    std::map<std::string, std::string> rename;
    for (const auto& v : inner.vertices) rename[v] = v + suffix;
    for (int i = 0; i < 3; ++i) rename[inner_tri[i]] = tri[i];
    auto shared = [&](const std::string& v) {
        return v == inner_tri[0] || v == inner_tri[1] || v == inner_tri[2];
    };

    for (const auto& v : inner.vertices)
        if (!shared(v)) outer.vertices.push_back(rename[v]);
    for (const auto& [a, b] : inner.edges)
        if (!(shared(a) && shared(b))) outer.edges.emplace_back(rename[a], rename[b]);
    for (const auto& [ends, order] : inner.crossings) {
        DrawingTables::Crossing c;
        for (int i = 0; i < 4; ++i) {
            c.first[i] = rename[ends[i]];
            c.second[i] = rename[order[i]];
        }
        outer.crossings.push_back(std::move(c));
    }
    for (const auto& [v, rot] : inner.rotations) {
        if (shared(v)) continue;
        std::vector<std::string> r;
        for (const auto& w : rot) r.push_back(rename[w]);
        outer.rotations.emplace_back(rename[v], std::move(r));
    }
    for (int i = 0; i < 3; ++i) {
        const auto& p = tri[i];
        const auto& q = tri[(i + 1) % 3];
        const auto& r = tri[(i + 2) % 3];
        auto& out_rot = rotation_of(outer, p);
        std::size_t at = 0;
        while (at < out_rot.size() && out_rot[at] != q) ++at;
        if (at == out_rot.size() || out_rot[(at + 1) % out_rot.size()] != r)
            throw std::logic_error("glue: " + p + " has no corner from " + q + " to " + r);

        auto in_rot = inner.rotations.end();
        for (auto it = inner.rotations.begin(); it != inner.rotations.end(); ++it)
            if (it->first == inner_tri[i]) in_rot = it;
        if (in_rot == inner.rotations.end()) throw std::logic_error("glue: inner triangle vertex has no rotation");
        const auto& ir = in_rot->second;
        std::size_t s = 0;
        while (s < ir.size() && ir[s] != inner_tri[(i + 1) % 3]) ++s;
        if (s == ir.size() || ir[(s + ir.size() - 1) % ir.size()] != inner_tri[(i + 2) % 3])
            throw std::logic_error("glue: inner triangle does not bound a face at " + inner_tri[i]);
        std::vector<std::string> insert;
        for (std::size_t k = 1; k + 1 < ir.size(); ++k) insert.push_back(rename[ir[(s + k) % ir.size()]]);
        out_rot.insert(out_rot.begin() + static_cast<std::ptrdiff_t>(at + 1), insert.begin(), insert.end());
    }
    return outer;
}

inline Fixture make_fixture(std::string name, const DrawingTables& t, FixtureClaims claims) {
    auto d = drawing_from_tables(t);
    Graph g = d.base();
    return {std::move(name), std::move(g), std::move(d), claims};
}

}  // namespace detail

inline Fixture gen_h0() { return detail::make_fixture("h0", detail::h0_tables(), {10, 3, true}); }

// Copy c >= 2 carries the suffix ".c"; its x', y', z' become x, y, z of copy
// c - 1 and the copy sits in the face inside that triangle.
inline Fixture glue_h0_chain(int m) {
    if (m < 1) throw InputError("glue_h0_chain: m must be >= 1");
    auto t = detail::h0_tables();
    auto named = [](const char* v, int c) { return c == 1 ? std::string(v) : std::string(v) + "." + std::to_string(c); };
    for (int c = 2; c <= m; ++c)
        t = detail::glue_into_triangle(std::move(t), {named("x", c - 1), named("y", c - 1), named("z", c - 1)},
                                       detail::h0_tables(), {"x'", "y'", "z'"}, "." + std::to_string(c));
    return detail::make_fixture(m == 1 ? "h0" : "h0-chain-" + std::to_string(m), t, {10, 3, true});
}

inline Fixture gen_g1() { return detail::make_fixture("g1", detail::g1_tables(), {10, 1, true}); }

// G_1 plus the path v p2 ... pk, drawn in the corner of v after u.
inline Fixture gen_gk(int k) {
    if (k < 1) throw InputError("gen_gk: k must be >= 1");
    auto t = detail::g1_tables();
    auto p = [](int i) { return i == 1 ? std::string("v") : "p" + std::to_string(i); };
    for (int i = 2; i <= k; ++i) {
        t.vertices.push_back(p(i));
        t.edges.emplace_back(p(i - 1), p(i));
        std::vector<std::string> r{p(i - 1)};
        if (i < k) r.push_back(p(i + 1));
        t.rotations.emplace_back(p(i), std::move(r));
    }
    if (k >= 2) {
        auto& rv = detail::rotation_of(t, "v");
        rv.insert(rv.begin() + 1, p(2));
    }
    return detail::make_fixture("g" + std::to_string(k), t, {10, 1, true});
}

inline Fixture gen_fig1_left() { return detail::make_fixture("fig1-left", detail::fig1_left_tables(), {8, 6, true}); }
inline Fixture gen_fig1_right() {
    return detail::make_fixture("fig1-right", detail::fig1_right_tables(), {8, 6, true});
}
inline Fixture gen_fig5_ii() { return detail::make_fixture("fig5-ii", detail::fig5_ii_tables(), {8, 4, true}); }
inline Fixture gen_k2222() { return detail::make_fixture("k2222", detail::k2222_tables(), {6, 6, true}); }
inline Fixture gen_k5() { return detail::make_fixture("k5", detail::k5_tables(), {4, 4, true}); }
inline Fixture gen_k6() { return detail::make_fixture("k6", detail::k6_tables(), {5, 5, true}); }

struct CatalogEntry {
    std::string name;
    FixtureClaims claims;
};

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"h0", "h0-chain-2", "h0-chain-3", "h0-chain-4", "g1",
                                                "g2", "g3",         "g4",         "g5",         "fig1-left",
                                                "fig1-right", "k2222", "fig5-ii", "k5",         "k6"};
    return names;
}

// Accepts every catalog name; "h0-chain" and "gk" take the parameter.
inline Fixture generate(const std::string& name, std::optional<int> k = std::nullopt,
                        std::optional<int> m = std::nullopt) {
    auto suffix_int = [&](std::size_t from) -> std::optional<int> {
        if (name.size() <= from) return std::nullopt;
        int v = 0;
        for (std::size_t i = from; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9' || v > 100000) return std::nullopt;
            v = v * 10 + (name[i] - '0');
        }
        return v;
    };
    if (name == "h0") return gen_h0();
    if (name == "h0-chain") return glue_h0_chain(m.value_or(1));
    if (name.rfind("h0-chain-", 0) == 0)
        if (auto v = suffix_int(9)) return glue_h0_chain(*v);
    if (name == "gk") return gen_gk(k.value_or(1));
    if (name.size() > 1 && name[0] == 'g')
        if (auto v = suffix_int(1)) return gen_gk(*v);
    if (name == "fig1-left") return gen_fig1_left();
    if (name == "fig1-right") return gen_fig1_right();
    if (name == "fig5-ii") return gen_fig5_ii();
    if (name == "k2222") return gen_k2222();
    if (name == "k5") return gen_k5();
    if (name == "k6") return gen_k6();
    throw InputError("unknown fixture: " + name);
}

inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    for (const auto& n : fixture_names()) out.push_back({n, generate(n).claims});
    return out;
}

inline std::vector<Fixture> corpus() {
    std::vector<Fixture> out;
    for (const auto& n : fixture_names()) out.push_back(generate(n));
    return out;
}

}  // namespace cf1p

#pragma once

// Consistency checks for the structural results on claw-free 1-planar
// graphs: the degree and connectivity bounds, the non-separation properties
// of short cycles in the planarization, and the local rotation properties of
// highly connected 1-plane graphs. None of these can fail on correct data;
// a failure means a broken drawing, a broken checker, or a counterexample.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cf1p/connectivity.hpp"
#include "cf1p/drawing.hpp"
#include "cf1p/error.hpp"
#include "cf1p/plane_graph.hpp"
#include "cf1p/properties.hpp"

namespace cf1p {

struct AuditCheck {
    std::string name;
    bool applicable = false;
    bool passed = false;  // meaningful only when applicable
    std::vector<std::string> witnesses;  // one per violation
};

struct AuditReport {
    std::vector<AuditCheck> checks;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.applicable && !c.passed) ++n;
        return n;
    }
    bool ok() const { return failures() == 0; }
    const AuditCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    void append(const AuditReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

inline const char* status_of(const AuditCheck& c) {
    if (!c.applicable) return "n/a";
    return c.passed ? "pass" : "fail";
}

// One line per check, one more per extra witness: `name status [witness]`.
inline std::string format_report(const AuditReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        if (c.witnesses.empty()) {
            os << c.name << ' ' << status_of(c) << '\n';
            continue;
        }
        for (const auto& w : c.witnesses) os << c.name << ' ' << status_of(c) << ' ' << w << '\n';
    }
    return os.str();
}

namespace detail {

inline AuditCheck not_applicable(std::string name) { return {std::move(name), false, false, {}}; }

inline AuditCheck finish(std::string name, std::vector<std::string> witnesses) {
    bool ok = witnesses.empty();
    return {std::move(name), true, ok, std::move(witnesses)};
}

inline void check_base(const Graph& g, const OnePlaneDrawing& d) {
    if (!(d.base() == g)) throw InputError("audit: drawing is not a drawing of the given graph");
}

inline std::size_t checked_kappa(const OnePlaneDrawing& d, int assumed_kappa, bool verify) {
    if (assumed_kappa < 0) throw InputError("audit: assumed connectivity must be >= 0");
    if (verify) {
        auto k = vertex_connectivity(d.base());
        if (static_cast<std::size_t>(assumed_kappa) > k)
            throw InputError("audit: assumed connectivity " + std::to_string(assumed_kappa) +
                             " exceeds the actual " + std::to_string(k));
    }
    return static_cast<std::size_t>(assumed_kappa);
}

}  // namespace detail

// T1: claw-free => max degree <= 10. T2: claw-free, kappa >= 6 => max degree
// <= 8. T3: claw-free => kappa <= 6. C1: kappa >= 7 => an induced claw. All
// need a 1-plane drawing as evidence of 1-planarity.
inline AuditReport audit_theorems(const Graph& g, const std::optional<OnePlaneDrawing>& d = std::nullopt) {
    AuditReport r;
    if (d) detail::check_base(g, *d);
    const bool drawn = d.has_value();
    const bool claw_free = is_claw_free(g);
    const auto delta = max_degree(g);
    const auto conn = connectivity_with_cut(g);
    const auto kappa = conn.kappa;

    auto max_vertex = [&] {
        for (Vertex v : g.lex_order())
            if (g.degree(v) == delta) return g.name(v);
        return std::string("-");
    };
    auto degree_witness = [&] { return "delta=" + std::to_string(delta) + " at " + max_vertex(); };

    if (drawn && claw_free)
        r.checks.push_back(detail::finish("T1", delta <= 10 ? std::vector<std::string>{}
                                                            : std::vector<std::string>{degree_witness()}));
    else
        r.checks.push_back(detail::not_applicable("T1"));

    if (drawn && claw_free && kappa >= 6)
        r.checks.push_back(detail::finish("T2", delta <= 8 ? std::vector<std::string>{}
                                                           : std::vector<std::string>{degree_witness()}));
    else
        r.checks.push_back(detail::not_applicable("T2"));

    if (drawn && claw_free)
        r.checks.push_back(detail::finish(
            "T3", kappa <= 6 ? std::vector<std::string>{}
                             : std::vector<std::string>{"kappa=" + std::to_string(kappa)}));
    else
        r.checks.push_back(detail::not_applicable("T3"));

    if (drawn && kappa >= 7)
        r.checks.push_back(detail::finish(
            "C1", claw_free ? std::vector<std::string>{"kappa=" + std::to_string(kappa) + " and no induced claw"}
                            : std::vector<std::string>{}));
    else
        r.checks.push_back(detail::not_applicable("C1"));
    return r;
}

inline AuditReport audit_theorems(const OnePlaneDrawing& d) { return audit_theorems(d.base(), d); }

// Clauses: (i) kappa >= 4: 3-cycles with exactly one fake vertex do not
// separate; (ii) kappa >= 6: type-I 4-cycles do not separate; (iii) kappa = 7:
// no 3-cycle separates. `verify_kappa` = false skips the check that the
// assumption holds, which only negative tests should do.
inline AuditReport audit_lemma3(const OnePlaneDrawing& d, int assumed_kappa, bool verify_kappa = true) {
    const auto k = detail::checked_kappa(d, assumed_kappa, verify_kappa);
    const auto& p = d.planarization();
    auto separating = [&](const std::vector<CycleInPlane>& cycles) {
        std::vector<std::string> w;
        for (const auto& c : cycles)
            if (is_separating_cycle(p, c)) w.push_back(describe(p, c));
        return w;
    };
    AuditReport r;
    r.checks.push_back(k >= 4 ? detail::finish("lemma3-i", separating(enumerate_fake_3cycles(p)))
                              : detail::not_applicable("lemma3-i"));
    r.checks.push_back(k >= 6 ? detail::finish("lemma3-ii", separating(enumerate_type_I_4cycles(p)))
                              : detail::not_applicable("lemma3-ii"));
    r.checks.push_back(k == 7 ? detail::finish("lemma3-iii", separating(enumerate_3cycles(p)))
                              : detail::not_applicable("lemma3-iii"));
    return r;
}

namespace detail {

// Every configuration (u, x, y, S) with x, y neighbors of u, S the neighbors
// strictly counter-clockwise between x and y, |S| >= 2 and xy an edge.
template <class Fn>
void for_each_wedge(const OnePlaneDrawing& d, Vertex u, Fn&& fn) {
    const auto& g = d.base();
    const auto& rot = d.rotation(u);
    const auto k = rot.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto gap = (j + k - i) % k - 1;
            if (gap < 2 || !g.adjacent(rot[i], rot[j])) continue;
            std::vector<Vertex> between;
            for (std::size_t s = 1; s <= gap; ++s) between.push_back(rot[(i + s) % k]);
            fn(rot[i], rot[j], between);
        }
}

inline std::string wedge_name(const Graph& g, Vertex u, Vertex x, Vertex y, const std::vector<Vertex>& between) {
    std::string s = "u=" + g.name(u) + " x=" + g.name(x) + " y=" + g.name(y) + " S=";
    for (std::size_t i = 0; i < between.size(); ++i) s += (i ? "," : "") + g.name(between[i]);
    return s;
}

}  // namespace detail

// Violations of the degree-k >= 7 rotation properties at u: (i) rotation
// positions i, j with 3 <= |i - j| <= k - 3 are non-adjacent; (ii) an edge
// u_i u_{i+2} crosses u u_{i+1}.
struct Prop3Violations {
    std::vector<std::string> far_chords;     // clause (i)
    std::vector<std::string> short_chords;   // clause (ii)
};

inline Prop3Violations prop3_violations_at(const OnePlaneDrawing& d, Vertex u) {
    const auto& g = d.base();
    const auto& rot = d.rotation(u);
    const auto k = rot.size();
    Prop3Violations out;
    if (k < 7) return out;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 3; j < k && j + 3 <= i + k; ++j)
            if (g.adjacent(rot[i], rot[j]))
                out.far_chords.push_back("u=" + g.name(u) + " " + g.name(rot[i]) + "~" + g.name(rot[j]) + " at " +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1));
    for (std::size_t i = 0; i < k; ++i) {
        Vertex a = rot[i], mid = rot[(i + 1) % k], b = rot[(i + 2) % k];
        if (!g.adjacent(a, b)) continue;
        auto partner = d.crossing_partner(a, b);
        if (partner && *partner == g.normalized(u, mid)) continue;
        out.short_chords.push_back("u=" + g.name(u) + " " + g.name(a) + "-" + g.name(b) + " does not cross " +
                                   g.name(u) + "-" + g.name(mid));
    }
    return out;
}

// Prop 1 (kappa >= 4): for a wedge (u, x, y, S), xy crosses no edge uv with
// v in S. Prop 2 (kappa >= 6): xy crosses no edge with an endpoint in S,
// checked on both sides of u. Prop 3 (kappa = 7): prop3_violations_at at
// every vertex of degree >= 7.
inline AuditReport audit_propositions(const OnePlaneDrawing& d, int assumed_kappa, bool verify_kappa = true) {
    const auto k = detail::checked_kappa(d, assumed_kappa, verify_kappa);
    const auto& g = d.base();
    std::vector<std::string> p1, p2, p3i, p3ii;
    for (Vertex u : g.lex_order()) {
        detail::for_each_wedge(d, u, [&](Vertex x, Vertex y, const std::vector<Vertex>& between) {
            auto partner = d.crossing_partner(x, y);
            if (!partner) return;
            auto in_s = [&](Vertex w) { return std::find(between.begin(), between.end(), w) != between.end(); };
            auto where = detail::wedge_name(g, u, x, y, between) + " crosses " + g.edge_name(*partner);
            if (partner->has(u) && in_s(partner->other(u))) p1.push_back(where);
            if (in_s(partner->u) || in_s(partner->v)) p2.push_back(where);
        });
        if (k == 7) {
            auto v = prop3_violations_at(d, u);
            p3i.insert(p3i.end(), v.far_chords.begin(), v.far_chords.end());
            p3ii.insert(p3ii.end(), v.short_chords.begin(), v.short_chords.end());
        }
    }
    AuditReport r;
    r.checks.push_back(k >= 4 ? detail::finish("prop1", std::move(p1)) : detail::not_applicable("prop1"));
    r.checks.push_back(k >= 6 ? detail::finish("prop2", std::move(p2)) : detail::not_applicable("prop2"));
    r.checks.push_back(k == 7 ? detail::finish("prop3-i", std::move(p3i)) : detail::not_applicable("prop3-i"));
    r.checks.push_back(k == 7 ? detail::finish("prop3-ii", std::move(p3ii)) : detail::not_applicable("prop3-ii"));
    return r;
}

// Negative-test generator: damages a valid drawing in one specific way.
inline const std::vector<std::string>& mutation_operators() {
    static const std::vector<std::string> ops{"break-alternation",  "cross-adjacent",           "cross-twice",
                                              "drop-rotation-entry", "duplicate-rotation-entry", "permute-rotation",
                                              "none"};
    return ops;
}

inline DrawingData mutate(const OnePlaneDrawing& d, const std::string& op, std::uint64_t seed) {
    DrawingData out = d.data();
    const auto& g = out.base;
    const auto n = g.order();
    auto pick = [&](std::size_t count) { return static_cast<std::size_t>(seed % count); };
    auto vertices_with_degree = [&](std::size_t at_least) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) >= at_least) vs.push_back(v);
        if (vs.empty()) throw InputError("mutate " + op + ": no vertex of degree >= " + std::to_string(at_least));
        return vs;
    };

    if (op == "none") return out;
    if (op == "break-alternation") {
        if (out.crossings.empty()) throw InputError("mutate break-alternation: drawing has no crossing");
        auto& o = out.crossings[pick(out.crossings.size())].order;
        std::swap(o[1], o[2]);
        return out;
    }
    if (op == "cross-adjacent") {
        auto vs = vertices_with_degree(2);
        Vertex v = vs[pick(vs.size())];
        const auto& nb = g.neighbors(v);
        Vertex a = nb[0], b = nb[1];
        out.crossings.push_back({{v, a}, {v, b}, {v, a, v, b}, 0});
        return out;
    }
    if (op == "cross-twice") {
        // An edge that is already crossed gets a second crossing with some
        // edge disjoint from it.
        std::vector<std::pair<Edge, Edge>> options;
        for (const auto& x : out.crossings)
            for (const auto& f : g.edges())
                if (!x.first.touches(f) && !(g.normalized(x.second.u, x.second.v) == f)) options.emplace_back(x.first, f);
        if (options.empty()) throw InputError("mutate cross-twice: no candidate pair");
        auto [e, f] = options[pick(options.size())];
        out.crossings.push_back({e, f, {e.u, f.u, e.v, f.v}, 0});
        return out;
    }
    if (op == "drop-rotation-entry" || op == "duplicate-rotation-entry") {
        auto vs = vertices_with_degree(1);
        Vertex v = vs[pick(vs.size())];
        auto& r = *out.rotations[v];
        const auto at = static_cast<std::ptrdiff_t>(pick(r.size()));
        if (op == "drop-rotation-entry")
            r.erase(r.begin() + at);
        else
            r.insert(r.begin() + at, r[static_cast<std::size_t>(at)]);
        return out;
    }
    if (op == "permute-rotation") {
        // Swap two neighbors in one true rotation; the first swap (from a
        // seed-chosen start) that breaks the face count wins.
        auto vs = vertices_with_degree(3);
        for (std::size_t t = 0; t < vs.size(); ++t) {
            Vertex v = vs[(pick(vs.size()) + t) % vs.size()];
            const auto deg = g.degree(v);
            for (std::size_t i = 0; i < deg; ++i)
                for (std::size_t j = i + 1; j < deg; ++j) {
                    DrawingData trial = out;
                    auto& r = *trial.rotations[v];
                    std::swap(r[(i + seed) % deg], r[(j + seed) % deg]);
                    if (validate_drawing(trial).count(ViolationKind::euler) > 0) return trial;
                }
        }
        throw InputError("mutate permute-rotation: every swap keeps a sphere embedding");
    }
    throw InputError("mutate: unknown operator " + op);
}

}  // namespace cf1p

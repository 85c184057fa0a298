#pragma once

// Plane graphs as rotation systems on the sphere, plus the cycle and side
// machinery used to state separation properties of the planarization.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cf1p/error.hpp"
#include "cf1p/graph.hpp"

namespace cf1p {

// One face as the closed walk of vertices met along its boundary.
struct Face {
    std::vector<Vertex> walk;
};

class PlaneGraph {
public:
    PlaneGraph() = default;

    // `rotations[v]` is the counter-clockwise neighbor order at v. Neighbors
    // must be symmetric and distinct; faces are traced eagerly.
    PlaneGraph(std::vector<std::string> names, std::vector<char> fake,
               std::vector<std::vector<Vertex>> rotations,
               std::vector<std::array<Vertex, 4>> crossing_ends = {})
        : names_(std::move(names)),
          fake_(std::move(fake)),
          rot_(std::move(rotations)),
          crossing_ends_(std::move(crossing_ends)) {
        const auto n = names_.size();
        if (fake_.size() != n || rot_.size() != n)
            throw InputError("plane graph: inconsistent vertex data");
        pos_.assign(n * n, -1);
        for (Vertex v = 0; v < n; ++v)
            for (std::size_t i = 0; i < rot_[v].size(); ++i) {
                Vertex w = rot_[v][i];
                if (w >= n || w == v || pos_[v * n + w] >= 0)
                    throw InputError("plane graph: bad rotation at " + names_[v]);
                pos_[v * n + w] = static_cast<std::int32_t>(i);
                ++edge_ends_;
            }
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : rot_[v])
                if (pos_[w * n + v] < 0)
                    throw InputError("plane graph: asymmetric adjacency " + names_[v] + " " + names_[w]);
        trace_faces();
    }

    std::size_t order() const { return names_.size(); }
    std::size_t size() const { return edge_ends_ / 2; }
    const std::string& name(Vertex v) const { return names_[v]; }
    bool is_fake(Vertex v) const { return fake_[v] != 0; }
    std::size_t fake_count() const {
        return static_cast<std::size_t>(std::count(fake_.begin(), fake_.end(), 1));
    }
    const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
    std::size_t degree(Vertex v) const { return rot_[v].size(); }
    bool adjacent(Vertex a, Vertex b) const { return pos_[a * order() + b] >= 0; }
    std::size_t position(Vertex v, Vertex w) const {
        return static_cast<std::size_t>(pos_[v * order() + w]);
    }
    const std::vector<Face>& faces() const { return faces_; }

    // For a fake vertex built from crossing ab x cd: {a, b, c, d}.
    const std::array<Vertex, 4>& crossing_ends(Vertex fake) const {
        return crossing_ends_.at(fake - (order() - crossing_ends_.size()));
    }

    // Vertices grouped by connected component; component ids per vertex.
    std::vector<std::size_t> components(std::size_t* count = nullptr) const {
        std::vector<std::size_t> comp(order(), SIZE_MAX);
        std::size_t c = 0;
        for (Vertex s = 0; s < order(); ++s) {
            if (comp[s] != SIZE_MAX) continue;
            std::vector<Vertex> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : rot_[v])
                    if (comp[w] == SIZE_MAX) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
        if (count) *count = c;
        return comp;
    }

    // The dart following v->w along the face on its right: at w, the
    // neighbor just before v in counter-clockwise order.
    Vertex next_after(Vertex v, Vertex w) const {
        const auto& r = rot_[w];
        auto i = position(w, v);
        return r[(i + r.size() - 1) % r.size()];
    }

private:
    void trace_faces() {
        const auto n = order();
        std::vector<char> used(n * n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (rot_[v].empty()) {
                faces_.push_back({{v}});  // isolated vertex: one face around it
                continue;
            }
            for (Vertex w : rot_[v]) {
                if (used[v * n + w]) continue;
                Face f;
                Vertex a = v, b = w;
                while (!used[a * n + b]) {
                    used[a * n + b] = 1;
                    f.walk.push_back(a);
                    Vertex c = next_after(a, b);
                    a = b;
                    b = c;
                }
                faces_.push_back(std::move(f));
            }
        }
    }

    std::vector<std::string> names_;
    std::vector<char> fake_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::array<Vertex, 4>> crossing_ends_;
    std::vector<std::int32_t> pos_;
    std::size_t edge_ends_ = 0;
    std::vector<Face> faces_;
};

struct EulerCount {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::size_t components = 0;

    bool holds() const { return vertices + faces == edges + 1 + components; }
};

inline std::vector<Face> faces(const PlaneGraph& p) { return p.faces(); }

// Face walks are traced per component; in one plane the C outer faces are a
// single face, so F = walks - (C - 1).
inline EulerCount euler_count(const PlaneGraph& p) {
    EulerCount c{p.order(), p.size(), p.faces().size(), 0};
    p.components(&c.components);
    if (c.components > 1) c.faces -= c.components - 1;
    return c;
}

// V - E + F = 1 + C, i.e. every component is embedded on its own sphere.
inline bool euler_check(const PlaneGraph& p) { return euler_count(p).holds(); }

// Per-component Euler characteristic; entries differ from 2 where the
// rotation system is not a sphere embedding. Indexed by component id.
inline std::vector<long> component_characteristics(const PlaneGraph& p) {
    std::size_t count = 0;
    auto comp = p.components(&count);
    std::vector<long> vertices(count, 0), edge_ends(count, 0), chi(count, 0);
    for (Vertex v = 0; v < p.order(); ++v) {
        vertices[comp[v]] += 1;
        edge_ends[comp[v]] += static_cast<long>(p.degree(v));
    }
    for (const auto& f : p.faces()) chi[comp[f.walk.front()]] += 1;
    for (std::size_t c = 0; c < count; ++c) chi[c] += vertices[c] - edge_ends[c] / 2;
    return chi;
}

struct CycleInPlane {
    std::vector<Vertex> vertices;  // cyclic order
};

struct CycleSides {
    std::vector<Vertex> side_a;  // ends counter-clockwise from next to prev, index order
    std::vector<Vertex> side_b;
};

inline bool is_cycle(const PlaneGraph& p, const CycleInPlane& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) return false;
    std::vector<char> seen(p.order(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= p.order() || seen[vs[i]]) return false;
        seen[vs[i]] = 1;
        if (!p.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
    }
    return true;
}

// Splits V(P) \ V(C) into the two sides of C. At each cycle vertex the edge
// ends strictly between the outgoing and incoming cycle edges (counter-
// clockwise from next to prev) lie on side A, the others on side B; labels
// then spread through the components of P - V(C). Throws if a component
// receives both labels, which cannot happen for a sphere embedding.
inline CycleSides cycle_sides(const PlaneGraph& p, const CycleInPlane& c) {
    if (!is_cycle(p, c)) throw InputError("cycle_sides: not a cycle of the plane graph");
    const auto& vs = c.vertices;
    const auto k = vs.size();
    std::vector<int> label(p.order(), -1);
    std::vector<char> on_cycle(p.order(), 0);
    for (Vertex v : vs) on_cycle[v] = 1;

    std::vector<Vertex> stack;
    auto seed = [&](Vertex w, int side) {
        if (on_cycle[w]) return;
        if (label[w] >= 0 && label[w] != side)
            throw InputError("cycle_sides: inconsistent side assignment at " + p.name(w));
        if (label[w] < 0) {
            label[w] = side;
            stack.push_back(w);
        }
    };
    for (std::size_t i = 0; i < k; ++i) {
        Vertex v = vs[i], prev = vs[(i + k - 1) % k], next = vs[(i + 1) % k];
        const auto& r = p.rotation(v);
        const auto d = r.size();
        auto from = p.position(v, next);
        for (std::size_t step = 1; step < d; ++step) {
            Vertex w = r[(from + step) % d];
            if (w == prev) {
                for (std::size_t rest = step + 1; rest < d; ++rest) seed(r[(from + rest) % d], 1);
                break;
            }
            seed(w, 0);
        }
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : p.rotation(v)) seed(w, label[v]);
    }
    CycleSides out;
    for (Vertex v = 0; v < p.order(); ++v) {
        if (label[v] == 0) out.side_a.push_back(v);
        if (label[v] == 1) out.side_b.push_back(v);
    }
    return out;
}

inline bool is_separating_cycle(const PlaneGraph& p, const CycleInPlane& c) {
    auto sides = cycle_sides(p, c);
    return !sides.side_a.empty() && !sides.side_b.empty();
}

// 3-cycles with exactly one fake vertex, as (fake, a, b) with a < b by index.
inline std::vector<CycleInPlane> enumerate_fake_3cycles(const PlaneGraph& p) {
    std::vector<CycleInPlane> out;
    for (Vertex x = 0; x < p.order(); ++x) {
        if (!p.is_fake(x)) continue;
        auto nb = p.rotation(x);
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!p.is_fake(nb[i]) && !p.is_fake(nb[j]) && p.adjacent(nb[i], nb[j]))
                    out.push_back({{x, nb[i], nb[j]}});
    }
    return out;
}

// Every 3-cycle of P as (a, b, c) with a < b < c by index.
inline std::vector<CycleInPlane> enumerate_3cycles(const PlaneGraph& p) {
    std::vector<CycleInPlane> out;
    for (Vertex a = 0; a < p.order(); ++a)
        for (Vertex b : p.rotation(a)) {
            if (b <= a) continue;
            for (Vertex c : p.rotation(b))
                if (c > b && p.adjacent(a, c)) out.push_back({{a, b, c}});
        }
    std::sort(out.begin(), out.end(),
              [](const CycleInPlane& l, const CycleInPlane& r) { return l.vertices < r.vertices; });
    return out;
}

// Type-I 4-cycles x-y-c-z-x: c the only fake vertex, and the two crossing
// edges through c are different edges leaving y and z, i.e. their far
// endpoints are off the cycle. When y and z are the two ends of a single
// crossed edge (the other configuration) the cycle is excluded. Output as
// (x, y, c, z) with y < z by index, sorted.
inline std::vector<CycleInPlane> enumerate_type_I_4cycles(const PlaneGraph& p) {
    std::vector<CycleInPlane> out;
    for (Vertex c = 0; c < p.order(); ++c) {
        if (!p.is_fake(c)) continue;
        const auto& ends = p.crossing_ends(c);  // {a, b} crosses {c', d}
        auto far_end = [&](Vertex t) {
            for (int i = 0; i < 4; ++i)
                if (ends[i] == t) return ends[i ^ 1];
            return t;
        };
        auto nb = p.rotation(c);
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex y = nb[i], z = nb[j];
                for (Vertex x : p.rotation(y)) {
                    if (x == c || x == z || p.is_fake(x) || !p.adjacent(x, z)) continue;
                    Vertex dy = far_end(y), dz = far_end(z);
                    bool off = dy != x && dy != y && dy != z && dz != x && dz != y && dz != z;
                    if (off) out.push_back({{x, y, c, z}});
                }
            }
    }
    std::sort(out.begin(), out.end(),
              [](const CycleInPlane& l, const CycleInPlane& r) { return l.vertices < r.vertices; });
    return out;
}

inline std::string describe(const PlaneGraph& p, const CycleInPlane& c) {
    std::string s;
    for (Vertex v : c.vertices) {
        if (!s.empty()) s += ' ';
        s += p.name(v);
    }
    return s;
}

}  // namespace cf1p

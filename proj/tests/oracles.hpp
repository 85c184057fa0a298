#pragma once

// Independent reference computations for the tests. Deliberately naive:
// subset enumeration, full scans, and region growing over faces instead of
// the rotation-arc rule used by the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cf1p/graph.hpp"
#include "cf1p/plane_graph.hpp"

namespace oracle {

using cf1p::Graph;
using cf1p::PlaneGraph;
using cf1p::Vertex;

inline bool connected_without(const Graph& g, std::uint32_t removed) {
    const auto n = g.order();
    int start = -1;
    std::size_t alive = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!(removed >> v & 1u)) {
            ++alive;
            if (start < 0) start = static_cast<int>(v);
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    seen[start] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w] && !(removed >> w & 1u)) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == alive;
}

// Smallest vertex set whose removal disconnects g, by enumerating subsets in
// order of size; n - 1 if no such set exists.
inline std::size_t brute_connectivity(const Graph& g) {
    const auto n = g.order();
    if (n <= 1) return 0;
    if (!connected_without(g, 0)) return 0;
    for (std::size_t k = 1; k + 2 <= n; ++k)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            if (static_cast<std::size_t>(__builtin_popcount(mask)) == k && !connected_without(g, mask)) return k;
    return n - 1;
}

inline bool brute_claw_free(const Graph& g) {
    const auto n = g.order();
    for (Vertex c = 0; c < n; ++c)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex d = b + 1; d < n; ++d) {
                    if (c == a || c == b || c == d) continue;
                    if (g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && !g.adjacent(a, b) &&
                        !g.adjacent(a, d) && !g.adjacent(b, d))
                        return false;
                }
    return true;
}

inline std::size_t brute_triangle_count(const Graph& g) {
    std::size_t t = 0;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            for (Vertex c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++t;
    return t;
}

// Groups the faces of p into regions: two faces merge when they share an
// edge that is not on the cycle. Returns the vertex sets (minus the cycle)
// touched by each region, sorted.
inline std::vector<std::vector<Vertex>> regions(const PlaneGraph& p, const std::vector<Vertex>& cycle) {
    const auto k = cycle.size();
    std::set<std::pair<Vertex, Vertex>> on_cycle;
    for (std::size_t i = 0; i < k; ++i) {
        on_cycle.insert({cycle[i], cycle[(i + 1) % k]});
        on_cycle.insert({cycle[(i + 1) % k], cycle[i]});
    }
    const auto& faces = p.faces();
    std::vector<std::size_t> parent(faces.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Dart (a, b) -> face containing it.
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> darts;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& w = faces[f].walk;
        for (std::size_t i = 0; i < w.size(); ++i) darts.push_back({{w[i], w[(i + 1) % w.size()]}, f});
    }
    std::sort(darts.begin(), darts.end());
    auto face_of = [&](Vertex a, Vertex b) {
        auto it = std::lower_bound(darts.begin(), darts.end(), std::pair{std::pair{a, b}, std::size_t{0}});
        return it->second;
    };
    for (const auto& [d, f] : darts) {
        if (on_cycle.count(d)) continue;
        parent[find(f)] = find(face_of(d.second, d.first));
    }
    std::vector<char> in_cycle(p.order(), 0);
    for (Vertex v : cycle) in_cycle[v] = 1;
    std::vector<std::set<Vertex>> by_root(faces.size());
    std::vector<char> used(faces.size(), 0);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        used[find(f)] = 1;
        for (Vertex v : faces[f].walk)
            if (!in_cycle[v]) by_root[find(f)].insert(v);
    }
    std::vector<std::vector<Vertex>> out;
    for (std::size_t r = 0; r < faces.size(); ++r)
        if (used[r]) out.emplace_back(by_root[r].begin(), by_root[r].end());
    std::sort(out.begin(), out.end());
    return out;
}

// 3-cycles of p with exactly one fake vertex, by a full triple scan.
inline std::size_t brute_fake_3cycles(const PlaneGraph& p) {
    std::size_t count = 0;
    const auto n = p.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                int fakes = p.is_fake(a) + p.is_fake(b) + p.is_fake(c);
                if (fakes == 1 && p.adjacent(a, b) && p.adjacent(b, c) && p.adjacent(a, c)) ++count;
            }
    return count;
}

// Every 4-cycle x-y-c-z with c the only fake vertex, classified by whether y
// and z are the two ends of one crossed edge.
struct FourCycles {
    std::size_t same_edge = 0;
    std::size_t different_edges = 0;
};

inline FourCycles brute_fake_4cycles(const PlaneGraph& p) {
    FourCycles out;
    const auto n = p.order();
    for (Vertex c = 0; c < n; ++c) {
        if (!p.is_fake(c)) continue;
        const auto& ends = p.crossing_ends(c);
        for (Vertex y = 0; y < n; ++y)
            for (Vertex z = y + 1; z < n; ++z)
                for (Vertex x = 0; x < n; ++x) {
                    if (x == y || x == z || p.is_fake(x) || p.is_fake(y) || p.is_fake(z)) continue;
                    if (!(p.adjacent(c, y) && p.adjacent(c, z) && p.adjacent(x, y) && p.adjacent(x, z))) continue;
                    bool same = (ends[0] == y && ends[1] == z) || (ends[0] == z && ends[1] == y) ||
                                (ends[2] == y && ends[3] == z) || (ends[2] == z && ends[3] == y);
                    ++(same ? out.same_edge : out.different_edges);
                }
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<cf1p::TokenEdge> edges;
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(names[i], names[j]);
    return cf1p::build_graph(names, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<cf1p::TokenEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
    return cf1p::build_graph(names, edges);
}

// Same graph with tokens permuted by `perm` (token i becomes token perm[i]).
inline Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
    std::vector<std::string> names(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) names[i] = g.name(static_cast<Vertex>(perm[i]));
    std::vector<cf1p::TokenEdge> edges;
    for (const auto& e : g.edges()) edges.emplace_back(names[e.u], names[e.v]);
    return cf1p::build_graph(names, edges);
}

}  // namespace oracle

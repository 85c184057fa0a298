#pragma once

// Graph-theoretic invariants that do not depend on a drawing.

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cf1p/graph.hpp"

namespace cf1p {

inline std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

inline std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    std::size_t best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

// Some vertex adjacent to every other vertex, first in token order.
inline std::optional<Vertex> dominating_vertex(const Graph& g) {
    for (Vertex v : g.lex_order())
        if (g.order() > 0 && g.degree(v) + 1 == g.order()) return v;
    return std::nullopt;
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b)) edges.push_back({a, b});
    return Graph::from_indices(g.names(), edges);
}

// G[U]; vertices keep their relative order from g.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& subset) {
    std::vector<char> keep(g.order(), 0);
    for (Vertex v : subset) {
        if (v >= g.order()) throw InputError("induced_subgraph: vertex index out of range");
        keep[v] = 1;
    }
    std::vector<std::string> names;
    std::vector<Vertex> remap(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!keep[v]) continue;
        remap[v] = static_cast<Vertex>(names.size());
        names.push_back(g.name(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (keep[e.u] && keep[e.v]) edges.push_back({remap[e.u], remap[e.v]});
    return Graph::from_indices(std::move(names), edges);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<std::string>& tokens) {
    std::vector<Vertex> subset;
    for (const auto& t : tokens) subset.push_back(g.at(t));
    return induced_subgraph(g, subset);
}

inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
    auto out = g.neighbors(v);
    out.push_back(v);
    return out;
}

// L(G). Vertex i of the result is edge i of g, named "a-b".
inline Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    std::vector<std::string> names;
    names.reserve(es.size());
    for (const auto& e : es) names.push_back(g.edge_name(e));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < es.size(); ++i)
        for (Vertex j = i + 1; j < es.size(); ++j)
            if (es[i].touches(es[j])) edges.push_back({i, j});
    return Graph::from_indices(std::move(names), edges);
}

struct ClawWitness {
    Vertex center = 0;
    std::array<Vertex, 3> leaves{};

    bool holds_in(const Graph& g) const {
        for (Vertex l : leaves)
            if (!g.adjacent(center, l)) return false;
        return !g.adjacent(leaves[0], leaves[1]) && !g.adjacent(leaves[0], leaves[2]) &&
               !g.adjacent(leaves[1], leaves[2]);
    }
};

// First induced K_{1,3}: centers in token order, then the lexicographically
// least leaf triple among that center's neighbors.
inline std::optional<ClawWitness> find_induced_claw(const Graph& g) {
    for (Vertex c : g.lex_order()) {
        const auto& nb = g.neighbors(c);  // already token-sorted
        const auto d = nb.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < d; ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return ClawWitness{c, {nb[i], nb[j], nb[k]}};
            }
    }
    return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_induced_claw(g).has_value(); }

// Lexicographically first triangle (a < b < c in token order).
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    for (Vertex a : g.lex_order())
        for (Vertex b : g.neighbors(a)) {
            if (!g.before(a, b)) continue;
            for (Vertex c : g.neighbors(b))
                if (g.before(b, c) && g.adjacent(a, c)) return std::array{a, b, c};
        }
    return std::nullopt;
}

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;            // 0/1 per vertex when bipartite
    std::vector<Vertex> odd_cycle;    // closed walk order, no repetition, when not
};

// BFS 2-coloring. Edgeless graphs (including K_1) count as bipartite with
// one side possibly empty.
inline Bipartition is_bipartite(const Graph& g) {
    const auto n = g.order();
    std::vector<int> color(n, -1);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::size_t> depth(n, 0);
    for (Vertex root : g.lex_order()) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        parent[root] = root;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            for (Vertex b : g.neighbors(a)) {
                if (color[b] < 0) {
                    color[b] = 1 - color[a];
                    parent[b] = a;
                    depth[b] = depth[a] + 1;
                    q.push(b);
                } else if (color[b] == color[a]) {
                    // Tree paths a->lca and b->lca plus edge ab form an odd cycle.
                    std::vector<Vertex> left{a}, right{b};
                    Vertex x = a, y = b;
                    while (depth[x] > depth[y]) left.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) right.push_back(y = parent[y]);
                    while (x != y) {
                        left.push_back(x = parent[x]);
                        right.push_back(y = parent[y]);
                    }
                    right.pop_back();  // lca already in left
                    Bipartition out;
                    out.odd_cycle = std::move(left);
                    out.odd_cycle.insert(out.odd_cycle.begin(), right.rbegin(), right.rend());
                    return out;
                }
            }
        }
    }
    return {true, std::move(color), {}};
}

}  // namespace cf1p

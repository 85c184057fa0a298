#pragma once

// Integer arithmetic behind the maximum-degree bound for claw-free 1-planar
// graphs, and an exhaustive check of the Erdos bound for small orders.
//
// For a vertex v of degree k the complement of G[N(v)] is triangle-free
// (a triangle there is an induced claw at v). If it is also non-bipartite,
// Erdos gives e(complement) <= floor((k-1)^2 / 4) + 1, so
// e(G[N[v]]) >= k + C(k,2) - that. G[N[v]] has a dominating vertex, so a
// 1-planar one has at most 4(k+1) - 9 edges. The two meet for k <= 10.

#include <cstdint>
#include <optional>
#include <vector>

#include "cf1p/drawing.hpp"
#include "cf1p/error.hpp"
#include "cf1p/properties.hpp"

namespace cf1p {

// floor((n-1)^2 / 4) + 1: edges of a non-bipartite triangle-free graph.
inline std::int64_t erdos_bound(std::int64_t n) {
    if (n < 1) throw InputError("erdos_bound: n must be >= 1");
    return (n - 1) * (n - 1) / 4 + 1;
}

// 4n - 9: edges of a 1-planar graph on n >= 3 vertices with a dominating vertex.
inline std::int64_t dominating_oneplanar_edge_bound(std::int64_t n) {
    if (n < 3) throw InputError("dominating_oneplanar_edge_bound: n must be >= 3");
    return 4 * n - 9;
}

// k + C(k,2) - erdos_bound(k): fewest edges in G[N[v]] for d(v) = k.
inline std::int64_t neighborhood_edge_lower_bound(std::int64_t k) {
    if (k < 1) throw InputError("neighborhood_edge_lower_bound: k must be >= 1");
    return k + k * (k - 1) / 2 - erdos_bound(k);
}

struct BoundLedgerRow {
    std::int64_t k = 0;
    std::int64_t erdos = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool feasible = false;
};

// Row for degree k. For k = 1 the closed neighborhood has two vertices, below
// the range of the dominating-vertex bound; the trivial C(2,2) = 1 is used.
inline BoundLedgerRow bound_ledger_row(std::int64_t k) {
    BoundLedgerRow row;
    row.k = k;
    row.erdos = erdos_bound(k);
    row.lower = neighborhood_edge_lower_bound(k);
    row.upper = k + 1 >= 3 ? dominating_oneplanar_edge_bound(k + 1) : (k + 1) * k / 2;
    row.feasible = row.lower <= row.upper;
    return row;
}

inline std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw InputError("isqrt: negative argument");
    std::int64_t r = 0;
    std::int64_t bit = std::int64_t{1} << 62;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

// floor(6 + sqrt(21)), evaluated as floor((6P + floor(sqrt(21 P^2))) / P).
inline std::int64_t six_plus_sqrt21_floor(std::int64_t precision = 1'000'000) {
    return (6 * precision + isqrt(21 * precision * precision)) / precision;
}

struct BoundSolve {
    std::int64_t max_degree = 0;
    std::vector<BoundLedgerRow> ledger;  // k = 1..15
};

// Largest k in 1..15 whose row is feasible. The comparison reduces to
// k^2 - 12k + 15 <= 0, so the window contains the crossover.
inline BoundSolve max_degree_bound_solve() {
    BoundSolve out;
    for (std::int64_t k = 1; k <= 15; ++k) {
        out.ledger.push_back(bound_ledger_row(k));
        if (out.ledger.back().feasible) out.max_degree = k;
    }
    return out;
}

// Exact maximum e(G) over non-bipartite triangle-free graphs on n labeled
// vertices, 3 <= n <= 7; nullopt when the class is empty
// (n = 3, 4: the shortest odd cycle without a chord is C5). Edge sets
// are grown edge by edge in index order and abandoned as soon as they
// contain a triangle.
inline std::optional<int> brute_force_max_edges_nonbipartite_trianglefree(int n) {
    if (n < 3 || n > 7) throw InputError("brute force supports 3 <= n <= 7");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    std::optional<int> best;

    auto bipartite = [&] {
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w = 0; w < n; ++w) {
                    if (!(adj[v] >> w & 1u)) continue;
                    if (color[w] < 0) {
                        color[w] = 1 - color[v];
                        stack.push_back(w);
                    } else if (color[w] == color[v]) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t i, int edges) -> void {
        if (i == pairs.size()) {
            if (!bipartite() && (!best || edges > *best)) best = edges;
            return;
        }
        auto [a, b] = pairs[i];
        self(self, i + 1, edges);
        if ((adj[a] & adj[b]) == 0) {  // adding ab keeps it triangle-free
            adj[a] |= 1u << b;
            adj[b] |= 1u << a;
            self(self, i + 1, edges + 1);
            adj[a] &= ~(1u << b);
            adj[b] &= ~(1u << a);
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

// e <= 4n - 9 on a drawn graph with a dominating vertex. A false result
// means the drawing or the validator is wrong, not the bound.
inline bool check_lemma2_on_fixture(const OnePlaneDrawing& d) {
    const auto& g = d.base();
    if (g.order() < 3 || max_degree(g) + 1 != g.order())
        throw InputError("check_lemma2_on_fixture: needs n >= 3 and a dominating vertex");
    return static_cast<std::int64_t>(g.size()) <= dominating_oneplanar_edge_bound(static_cast<std::int64_t>(g.order()));
}

}  // namespace cf1p

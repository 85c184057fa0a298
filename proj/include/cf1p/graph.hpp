#pragma once

// Simple undirected graphs over opaque vertex tokens.
//
// Vertices keep the order in which they were given; every "first witness"
// style result instead uses the lexicographic order of the tokens, which is
// what `Graph::lex_order()` and `Graph::before()` expose. Edges are stored
// normalized (lexicographically smaller endpoint first) and sorted, so
// `edges()` is the canonical edge order used by the serializer and the
// 1-planarity search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cf1p/error.hpp"

namespace cf1p {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool has(Vertex w) const { return u == w || v == w; }
    bool touches(const Edge& o) const { return has(o.u) || has(o.v); }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

using TokenEdge = std::pair<std::string, std::string>;

inline bool valid_token(std::string_view t) {
    if (t.empty()) return false;
    return std::all_of(t.begin(), t.end(), [](char c) {
        auto uc = static_cast<unsigned char>(c);
        return uc > 0x20 && uc < 0x7f && c != '#' && c != ':';
    });
}

class Graph {
public:
    Graph() = default;

    // build_graph: validates tokens and edges, throws InputError on any
    // duplicate vertex, self-loop, duplicate edge or unknown endpoint.
    static Graph build(std::vector<std::string> vertices, const std::vector<TokenEdge>& edges) {
        Graph g(std::move(vertices));
        std::vector<Edge> ids;
        ids.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            auto ia = g.find(a);
            auto ib = g.find(b);
            if (!ia) throw InputError("edge " + a + " " + b + " references unknown vertex " + a);
            if (!ib) throw InputError("edge " + a + " " + b + " references unknown vertex " + b);
            ids.push_back({*ia, *ib});
        }
        g.set_edges(ids);
        return g;
    }

    // Same checks as build(), endpoints given by index into `vertices`.
    static Graph from_indices(std::vector<std::string> vertices, std::span<const Edge> edges) {
        Graph g(std::move(vertices));
        g.set_edges(edges);
        return g;
    }

    std::size_t order() const { return names_.size(); }
    std::size_t size() const { return edges_.size(); }

    const std::string& name(Vertex v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Vertex> find(std::string_view token) const {
        auto it = index_.find(std::string(token));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Vertex at(std::string_view token) const {
        auto v = find(token);
        if (!v) throw InputError("unknown vertex " + std::string(token));
        return *v;
    }

    bool adjacent(Vertex a, Vertex b) const { return edge_id_[a * order() + b] >= 0; }

    // Index into edges(), or nullopt when ab is not an edge.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
        auto id = edge_id_[a * order() + b];
        if (id < 0) return std::nullopt;
        return static_cast<std::size_t>(id);
    }

    // Neighbors sorted by token order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    const std::vector<Edge>& edges() const { return edges_; }

    // Vertices sorted by token.
    const std::vector<Vertex>& lex_order() const { return lex_; }
    bool before(Vertex a, Vertex b) const { return rank_[a] < rank_[b]; }
    std::size_t rank(Vertex v) const { return rank_[v]; }

    // Edge with its endpoints in token order.
    Edge normalized(Vertex a, Vertex b) const { return before(a, b) ? Edge{a, b} : Edge{b, a}; }

    std::string edge_name(const Edge& e) const { return names_[e.u] + "-" + names_[e.v]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    explicit Graph(std::vector<std::string> vertices) : names_(std::move(vertices)) {
        for (Vertex i = 0; i < names_.size(); ++i) {
            if (!valid_token(names_[i])) throw InputError("invalid vertex token '" + names_[i] + "'");
            if (!index_.emplace(names_[i], i).second)
                throw InputError("duplicate vertex " + names_[i]);
        }
        lex_.resize(names_.size());
        std::iota(lex_.begin(), lex_.end(), Vertex{0});
        std::sort(lex_.begin(), lex_.end(), [&](Vertex a, Vertex b) { return names_[a] < names_[b]; });
        rank_.resize(names_.size());
        for (std::size_t r = 0; r < lex_.size(); ++r) rank_[lex_[r]] = r;
        adj_.assign(names_.size(), {});
        edge_id_.assign(names_.size() * names_.size(), -1);
    }

    void set_edges(std::span<const Edge> edges) {
        const auto n = order();
        for (const auto& e : edges) {
            if (e.u >= n || e.v >= n) throw InputError("edge references unknown vertex");
            if (e.u == e.v) throw InputError("self-loop at " + names_[e.u]);
            if (edge_id_[e.u * n + e.v] >= 0)
                throw InputError("duplicate edge " + names_[e.u] + " " + names_[e.v]);
            edge_id_[e.u * n + e.v] = edge_id_[e.v * n + e.u] = 0;
            edges_.push_back(normalized(e.u, e.v));
        }
        std::sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            return std::pair(rank_[a.u], rank_[a.v]) < std::pair(rank_[b.u], rank_[b.v]);
        });
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            edge_id_[e.u * n + e.v] = edge_id_[e.v * n + e.u] = static_cast<std::int32_t>(i);
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& list : adj_)
            std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Vertex> lex_;
    std::vector<std::size_t> rank_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> edge_id_;
};

inline Graph build_graph(std::vector<std::string> vertices, const std::vector<TokenEdge>& edges) {
    return Graph::build(std::move(vertices), edges);
}

}  // namespace cf1p

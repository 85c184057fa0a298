#pragma once

// Planarity with embedding extraction, backed by Boost's Boyer-Myrvold test.
// Embeddings come back as rotation systems (neighbor cycles per vertex) and
// are checked independently through face tracing in the tests.

#include <span>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "cf1p/graph.hpp"
#include "cf1p/plane_graph.hpp"

namespace cf1p {

struct PlanarityResult {
    bool planar = false;
    // One consistent orientation per vertex; empty when not planar.
    std::vector<std::vector<Vertex>> rotation;
};

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace detail

// Planarity of the simple graph on vertices 0..n-1 with the given edges.
inline PlanarityResult planar_embedding(std::size_t n, std::span<const Edge> edges, bool want_embedding = true) {
    detail::BoostGraph bg(n);
    int idx = 0;
    for (const auto& e : edges) {
        auto [ed, ok] = boost::add_edge(e.u, e.v, bg);
        (void)ok;
        boost::put(boost::edge_index, bg, ed, idx++);
    }
    if (!want_embedding) return {boost::boyer_myrvold_planarity_test(bg), {}};

    using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
    PlanarityResult out{planar, {}};
    if (!planar) return out;
    out.rotation.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& ed : embedding[v]) {
            auto s = boost::source(ed, bg), t = boost::target(ed, bg);
            out.rotation[v].push_back(static_cast<Vertex>(s == v ? t : s));
        }
    return out;
}

inline PlanarityResult is_planar(const Graph& g) { return planar_embedding(g.order(), g.edges()); }

// Plane graph built from a planar graph's embedding.
inline PlaneGraph plane_embedding(const Graph& g) {
    auto r = is_planar(g);
    if (!r.planar) throw InputError("plane_embedding: graph is not planar");
    return PlaneGraph(g.names(), std::vector<char>(g.order(), 0), std::move(r.rotation));
}

}  // namespace cf1p

#pragma once

// Vertex connectivity by Menger: for non-adjacent s, t the maximum number of
// internally disjoint s-t paths equals the minimum s-t vertex separator, and
// both are computed as a unit-capacity max flow on the split graph (v_in ->
// v_out with capacity 1 for every inner vertex).

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "cf1p/graph.hpp"

namespace cf1p {

namespace detail {

class SplitFlow {
public:
    explicit SplitFlow(const Graph& g) : n_(g.order()), head_(2 * n_, -1) {
        for (Vertex v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (const auto& e : g.edges()) {
            add_arc(out(e.u), in(e.v), kInf);
            add_arc(out(e.v), in(e.u), kInf);
        }
    }

    // Max flow from s to t (non-adjacent), stopping once it reaches `cap`.
    int run(Vertex s, Vertex t, int cap) {
        for (auto& a : arcs_) a.flow = 0;
        const int src = out(s), sink = in(t);
        int flow = 0;
        std::vector<int> via(head_.size());
        while (flow < cap) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(src);
            via[src] = static_cast<int>(arcs_.size());
            while (!q.empty() && via[sink] < 0) {
                int x = q.front();
                q.pop();
                for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
                    const auto& arc = arcs_[a];
                    if (arc.cap - arc.flow > 0 && via[arc.to] < 0) {
                        via[arc.to] = a;
                        q.push(arc.to);
                    }
                }
            }
            if (via[sink] < 0) break;
            for (int x = sink; x != src;) {
                int a = via[x];
                arcs_[a].flow += 1;
                arcs_[a ^ 1].flow -= 1;
                x = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

    // After a run() that reached max flow: inner vertices whose split arc
    // crosses the residual cut.
    std::vector<Vertex> cut(Vertex s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(out(s));
        seen[out(s)] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
                const auto& arc = arcs_[a];
                if (arc.cap - arc.flow > 0 && !seen[arc.to]) {
                    seen[arc.to] = 1;
                    q.push(arc.to);
                }
            }
        }
        std::vector<Vertex> result;
        for (Vertex v = 0; v < n_; ++v)
            if (v != s && seen[in(v)] && !seen[out(v)]) result.push_back(v);
        return result;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    struct Arc {
        int to;
        int cap;
        int flow;
        int next;
    };

    int in(Vertex v) const { return static_cast<int>(2 * v); }
    int out(Vertex v) const { return static_cast<int>(2 * v + 1); }

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, cap, 0, head_[from]});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, 0, head_[to]});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::size_t n_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

}  // namespace detail

struct ConnectivityResult {
    std::size_t kappa = 0;
    // A minimum separator; empty for complete graphs and for graphs that are
    // already disconnected or have at most one vertex.
    std::vector<Vertex> separator;
};

inline ConnectivityResult connectivity_with_cut(const Graph& g) {
    const auto n = g.order();
    if (n <= 1 || !detail::is_connected(g)) return {0, {}};
    ConnectivityResult best{n - 1, {}};
    detail::SplitFlow flow(g);
    for (Vertex s : g.lex_order())
        for (Vertex t : g.lex_order()) {
            if (!g.before(s, t) || g.adjacent(s, t)) continue;
            int cap = static_cast<int>(best.kappa);
            int f = flow.run(s, t, cap);
            if (f < cap) {
                best.kappa = static_cast<std::size_t>(f);
                best.separator = flow.cut(s);
                std::sort(best.separator.begin(), best.separator.end(),
                          [&](Vertex a, Vertex b) { return g.before(a, b); });
            }
        }
    return best;
}

inline std::size_t vertex_connectivity(const Graph& g) { return connectivity_with_cut(g).kappa; }

}  // namespace cf1p

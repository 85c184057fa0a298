#pragma once

// Exact 1-planarity for small graphs by exhaustive crossing-pair search.
//
// Edges are processed in canonical order. Each undecided edge is either
// drawn uncrossed or paired with a later, undecided, non-adjacent edge. After
// every decision the planarization of the decided part (pairs as degree-4
// crossing vertices, uncrossed edges as they are) must be planar: that
// subdrawing sits inside any 1-plane drawing that completes the branch, so
// the prune never discards a solution. A second prune uses Euler's bound on
// the planarization, c >= e - (3n - 6).
//
// Work is split into a fixed list of subtrees independent of the thread
// count; the reported witness is the one from the first subtree (in DFS
// order) that has any, and node accounting follows the same order, so
// results do not depend on how many workers run.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "cf1p/drawing.hpp"
#include "cf1p/graph.hpp"
#include "cf1p/planarity.hpp"

namespace cf1p {

struct SearchBudget {
    std::size_t max_crossings = std::numeric_limits<std::size_t>::max();
    std::uint64_t node_limit = 20'000'000;
    unsigned threads = 1;
    // Refute e > 4n - 8 without searching.
    bool density_prune = true;
};

enum class OracleStatus { witness, refuted, budget_exceeded };

inline const char* to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::witness: return "witness";
        case OracleStatus::refuted: return "refuted";
        case OracleStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct OracleResult {
    OracleStatus status = OracleStatus::refuted;
    std::optional<OnePlaneDrawing> witness;
    std::uint64_t nodes = 0;
};

// Least number of crossings any planarization of g needs: e - (3n - 6).
inline std::size_t euler_crossing_lower_bound(const Graph& g) {
    const auto n = static_cast<long>(g.order()), e = static_cast<long>(g.size());
    if (n < 3) return 0;
    return static_cast<std::size_t>(std::max(0L, e - (3 * n - 6)));
}

namespace detail {

class CrossingSearch {
public:
    static constexpr int kUndecided = -2;
    static constexpr int kUncrossed = -1;
    static constexpr std::size_t kTaskTarget = 64;

    struct State {
        std::vector<int> partner;
        std::size_t crossings = 0;
        std::size_t decided = 0;
        std::size_t next = 0;  // first edge that may still be undecided
    };

    CrossingSearch(const Graph& g, const SearchBudget& budget)
        : g_(g),
          budget_(budget),
          m_(g.size()),
          required_(euler_crossing_lower_bound(g)),
          max_crossings_(std::min(budget.max_crossings, g.size() / 2)) {}

    OracleResult run() {
        if (budget_.density_prune && g_.order() >= 3 && g_.size() > 4 * g_.order() - 8)
            return {OracleStatus::refuted, std::nullopt, 0};
        if (required_ > max_crossings_) return {OracleStatus::refuted, std::nullopt, 0};

        State root{std::vector<int>(m_, kUndecided), 0, 0, 0};
        std::uint64_t nodes = 0;
        std::vector<State> frontier{root};
        while (frontier.size() < kTaskTarget) {
            bool grew = false;
            std::vector<State> next;
            for (auto& s : frontier) {
                if (s.decided == m_) {
                    next.push_back(std::move(s));
                    continue;
                }
                ++nodes;
                grew = true;
                auto kids = children(s);
                for (auto& k : kids) next.push_back(std::move(k));
            }
            frontier = std::move(next);
            if (!grew || frontier.empty()) break;
        }
        if (nodes > budget_.node_limit) return {OracleStatus::budget_exceeded, std::nullopt, nodes};
        if (frontier.empty()) return {OracleStatus::refuted, std::nullopt, nodes};

        // Each task gets an equal share, so the total stays within the limit
        // and a task's outcome does not depend on how the others ran.
        const auto task_cap = std::max<std::uint64_t>(1, (budget_.node_limit - nodes) / frontier.size());
        std::vector<TaskResult> results(frontier.size());
        std::atomic<std::size_t> next_task{0};
        std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
        auto worker = [&] {
            for (;;) {
                auto t = next_task.fetch_add(1);
                if (t >= frontier.size()) return;
                if (t > best.load()) continue;
                results[t] = run_task(frontier[t], t, task_cap, best);
                if (results[t].found) {
                    auto cur = best.load();
                    while (t < cur && !best.compare_exchange_weak(cur, t)) {
                    }
                }
            }
        };
        const unsigned threads = std::max(1u, budget_.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        // Tasks before the first witness always run to the end or to their
        // cap, so this scan sees the same results for any thread count.
        bool cut = false;
        for (const auto& r : results) {
            nodes += r.nodes;
            if (r.found) return {OracleStatus::witness, reconstruct(r.partner), nodes};
            cut = cut || r.cut;
        }
        return {cut ? OracleStatus::budget_exceeded : OracleStatus::refuted, std::nullopt, nodes};
    }

private:
    struct TaskResult {
        bool found = false;
        bool cut = false;
        std::uint64_t nodes = 0;
        std::vector<int> partner;
    };

    std::vector<State> children(const State& s) const {
        std::vector<State> out;
        std::size_t i = s.next;
        while (i < m_ && s.partner[i] != kUndecided) ++i;
        const auto& ei = g_.edges()[i];
        const auto undecided_after = m_ - s.decided - 1;

        // Uncrossed first.
        if (s.crossings + undecided_after / 2 >= required_) {
            State c = s;
            c.partner[i] = kUncrossed;
            c.decided += 1;
            c.next = i + 1;
            if (decided_planar(c)) out.push_back(std::move(c));
        }
        if (undecided_after == 0 || s.crossings + 1 > max_crossings_) return out;
        if (s.crossings + 1 + (undecided_after - 1) / 2 < required_) return out;
        for (std::size_t j = i + 1; j < m_; ++j) {
            if (s.partner[j] != kUndecided || ei.touches(g_.edges()[j])) continue;
            State c = s;
            c.partner[i] = static_cast<int>(j);
            c.partner[j] = static_cast<int>(i);
            c.crossings += 1;
            c.decided += 2;
            c.next = i + 1;
            if (decided_planar(c)) out.push_back(std::move(c));
        }
        return out;
    }

    // Planarization of the decided part: vertices 0..n-1, then one per pair.
    std::pair<std::size_t, std::vector<Edge>> decided_planarization(const std::vector<int>& partner,
                                                                   std::vector<int>* fake_of = nullptr) const {
        const auto n = g_.order();
        std::vector<Edge> edges;
        Vertex fake = static_cast<Vertex>(n);
        if (fake_of) fake_of->assign(m_, -1);
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& e = g_.edges()[i];
            if (partner[i] == kUncrossed) {
                edges.push_back(e);
            } else if (partner[i] >= 0 && static_cast<std::size_t>(partner[i]) > i) {
                const auto& f = g_.edges()[static_cast<std::size_t>(partner[i])];
                edges.push_back({e.u, fake});
                edges.push_back({e.v, fake});
                edges.push_back({f.u, fake});
                edges.push_back({f.v, fake});
                if (fake_of) (*fake_of)[i] = (*fake_of)[static_cast<std::size_t>(partner[i])] = static_cast<int>(fake);
                ++fake;
            }
        }
        return {fake, std::move(edges)};
    }

    bool decided_planar(const State& s) const {
        auto [count, edges] = decided_planarization(s.partner);
        if (count >= 3 && edges.size() > 3 * count - 6) return false;
        return planar_embedding(count, edges, false).planar;
    }

    TaskResult run_task(const State& start, std::size_t index, std::uint64_t cap,
                        const std::atomic<std::size_t>& best) const {
        TaskResult r;
        State s = start;
        dfs(s, index, cap, best, r);
        return r;
    }

    // Returns true to stop (found, cut, or superseded by an earlier task).
    bool dfs(const State& s, std::size_t index, std::uint64_t cap, const std::atomic<std::size_t>& best,
             TaskResult& r) const {
        if (s.decided == m_) {
            r.found = true;
            r.partner = s.partner;
            return true;
        }
        if (best.load(std::memory_order_relaxed) < index) return true;
        if (++r.nodes > cap) {
            r.cut = true;
            return true;
        }
        for (const auto& c : children(s))
            if (dfs(c, index, cap, best, r)) return true;
        return false;
    }

    OnePlaneDrawing reconstruct(const std::vector<int>& partner) const {
        const auto n = g_.order();
        std::vector<int> fake_of;
        auto [count, edges] = decided_planarization(partner, &fake_of);
        auto emb = planar_embedding(count, edges, true);
        if (!emb.planar) throw std::logic_error("oracle: final planarization is not planar");

        // Far endpoint of v's edge through fake vertex x.
        std::vector<std::array<Vertex, 4>> ends(count - n);
        for (std::size_t i = 0; i < m_; ++i) {
            if (partner[i] < 0 || static_cast<std::size_t>(partner[i]) < i) continue;
            const auto& e = g_.edges()[i];
            const auto& f = g_.edges()[static_cast<std::size_t>(partner[i])];
            ends[static_cast<std::size_t>(fake_of[i]) - n] = {e.u, e.v, f.u, f.v};
        }
        auto far = [&](Vertex v, Vertex x) {
            const auto& q = ends[x - n];
            for (int k = 0; k < 4; ++k)
                if (q[k] == v) return q[k ^ 1];
            throw std::logic_error("oracle: vertex not on crossing");
        };

        DrawingData d(g_);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> r;
            for (Vertex w : emb.rotation[v]) r.push_back(w < n ? w : far(v, w));
            d.rotations[v] = std::move(r);
        }
        for (Vertex x = static_cast<Vertex>(n); x < count; ++x) {
            const auto& q = ends[x - n];
            CrossingSpec c{{q[0], q[1]}, {q[2], q[3]}, {}, 0};
            for (Vertex w : emb.rotation[x]) c.order.push_back(w);
            if (!alternates(c)) continue;  // the two edges can be drawn apart here
            d.crossings.push_back(std::move(c));
        }
        std::sort(d.crossings.begin(), d.crossings.end(), [&](const CrossingSpec& a, const CrossingSpec& b) {
            auto key = [&](const CrossingSpec& c) {
                return std::tuple(g_.rank(c.first.u), g_.rank(c.first.v), g_.rank(c.second.u), g_.rank(c.second.v));
            };
            return key(a) < key(b);
        });
        return build_drawing(std::move(d));
    }

    const Graph& g_;
    SearchBudget budget_;
    std::size_t m_;
    std::size_t required_;
    std::size_t max_crossings_;
};

}  // namespace detail

inline OracleResult find_one_planar_drawing(const Graph& g, const SearchBudget& budget = {}) {
    return detail::CrossingSearch(g, budget).run();
}

struct MinCrossingsResult {
    OracleStatus status = OracleStatus::refuted;  // witness: found; refuted: none up to cap
    std::size_t crossings = 0;
    std::optional<OnePlaneDrawing> witness;
};

// Least c <= cap for which a 1-plane drawing with at most c crossings exists.
// Every smaller c has been refuted exhaustively when a value is returned.
inline MinCrossingsResult min_crossings_one_planar(const Graph& g, std::size_t cap, SearchBudget budget = {}) {
    for (std::size_t c = euler_crossing_lower_bound(g); c <= cap; ++c) {
        budget.max_crossings = c;
        auto r = find_one_planar_drawing(g, budget);
        if (r.status == OracleStatus::budget_exceeded) return {r.status, c, std::nullopt};
        if (r.status == OracleStatus::witness) return {r.status, r.witness->crossing_count(), std::move(r.witness)};
    }
    return {OracleStatus::refuted, 0, std::nullopt};
}

}  // namespace cf1p

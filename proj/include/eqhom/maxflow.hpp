#pragma once

// Dinic's blocking-flow max flow with integer capacities and a residual
// min cut.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "eqhom/error.hpp"

namespace eqhom {

class FlowNetwork {
public:
    static constexpr std::int64_t infinity = std::numeric_limits<std::int64_t>::max() / 4;

    explicit FlowNetwork(std::size_t n) : adj_(n) {}

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return arcs_.size() / 2; }

    /// Adds u -> v with the given capacity; returns the edge id.
    std::size_t add_edge(std::size_t u, std::size_t v, std::int64_t capacity) {
        if (u >= adj_.size() || v >= adj_.size()) throw PreconditionError("edge endpoint out of range");
        if (capacity < 0) throw PreconditionError("negative capacity");
        adj_[u].push_back(arcs_.size());
        arcs_.push_back({v, capacity, 0});
        adj_[v].push_back(arcs_.size());
        arcs_.push_back({u, 0, 0});
        return edge_count() - 1;
    }

    std::size_t tail(std::size_t e) const { return arcs_[2 * e + 1].to; }
    std::size_t head(std::size_t e) const { return arcs_[2 * e].to; }
    std::int64_t capacity(std::size_t e) const { return arcs_[2 * e].cap; }
    std::int64_t flow(std::size_t e) const { return arcs_[2 * e].flow; }

    struct Arc {
        std::size_t to;
        std::int64_t cap;
        std::int64_t flow;
    };

private:
    friend struct MaxFlowSolver;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Arc> arcs_;
};

struct MaxFlowResult {
    std::int64_t value = 0;
    std::vector<bool> source_side;   // residual reachability from the source
    std::vector<std::size_t> cut;    // edges from source side to sink side
    std::int64_t cut_capacity = 0;
};

struct MaxFlowSolver {
    FlowNetwork& net;
    std::size_t s, t;
    std::vector<int> level;
    std::vector<std::size_t> it;

    bool bfs() {
        level.assign(net.adj_.size(), -1);
        std::deque<std::size_t> q{s};
        level[s] = 0;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t a : net.adj_[u]) {
                const auto& arc = net.arcs_[a];
                if (arc.cap - arc.flow > 0 && level[arc.to] < 0) {
                    level[arc.to] = level[u] + 1;
                    q.push_back(arc.to);
                }
            }
        }
        return level[t] >= 0;
    }

    std::int64_t dfs(std::size_t u, std::int64_t pushed) {
        if (u == t) return pushed;
        for (; it[u] < net.adj_[u].size(); ++it[u]) {
            std::size_t a = net.adj_[u][it[u]];
            auto& arc = net.arcs_[a];
            if (arc.cap - arc.flow <= 0 || level[arc.to] != level[u] + 1) continue;
            std::int64_t got = dfs(arc.to, std::min(pushed, arc.cap - arc.flow));
            if (got > 0) {
                arc.flow += got;
                net.arcs_[a ^ 1U].flow -= got;
                return got;
            }
        }
        return 0;
    }
};

/// Exact integral max flow; the network keeps the final flow.
inline MaxFlowResult max_flow(FlowNetwork& net, std::size_t source, std::size_t sink) {
    if (source >= net.vertex_count() || sink >= net.vertex_count() || source == sink)
        throw PreconditionError("bad source or sink");
    MaxFlowSolver solver{net, source, sink, {}, {}};
    MaxFlowResult r;
    while (solver.bfs()) {
        solver.it.assign(net.vertex_count(), 0);
        while (std::int64_t f = solver.dfs(source, FlowNetwork::infinity)) r.value += f;
    }
    solver.bfs();
    r.source_side.resize(net.vertex_count());
    for (std::size_t v = 0; v < net.vertex_count(); ++v) r.source_side[v] = solver.level[v] >= 0;
    for (std::size_t e = 0; e < net.edge_count(); ++e)
        if (r.source_side[net.tail(e)] && !r.source_side[net.head(e)]) {
            r.cut.push_back(e);
            r.cut_capacity += net.capacity(e);
        }
    return r;
}

}  // namespace eqhom

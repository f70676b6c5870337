// Shared fixtures and independent oracles for the test suites. Everything in
// here recomputes results from first principles and must stay decoupled from
// the implementation paths it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "community.hpp"
#include "graph.hpp"

namespace testutil {

using fkcd::EdgeId;
using fkcd::Graph;
using fkcd::NodeId;

inline Graph make_graph(std::size_t n,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    return Graph::from_edges(n, std::move(edges));
}

inline Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }
inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph single_edge() { return make_graph(2, {{0, 1}}); }

// center 0, leaves 1..k
inline Graph star(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return make_graph(leaves + 1, std::move(edges));
}

inline Graph two_triangles() {
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// two triangles joined by the bridge edge (2,3); 7 edges, bridge id last
inline Graph bridged_triangles() {
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Erdos-Renyi-ish graph with at least one edge; node count in [2, max_n].
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_n,
                          double edge_prob = 0.35) {
    std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        std::size_t n = pick_n(rng);
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (coin(rng) < edge_prob)
                    edges.push_back({u, v});
        if (!edges.empty())
            return make_graph(n, std::move(edges));
    }
}

// random spanning tree plus a few extra edges
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n,
                                    double extra_prob = 0.3) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::set<std::pair<NodeId, NodeId>> present;
    for (NodeId v = 1; v < n; ++v) {
        NodeId u = NodeId(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        edges.push_back({u, v});
        present.insert({u, v});
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (!present.count({u, v}) && coin(rng) < extra_prob)
                edges.push_back({u, v});
    return make_graph(n, std::move(edges));
}

// From-scratch weighted modularity, straight from the definition: intra weight
// per community (self-loops once) over m, minus squared strength fractions.
inline double modularity_oracle(const fkcd::WeightedGraph& wg,
                                const std::vector<NodeId>& assignment) {
    double m = wg.total_weight;
    std::map<NodeId, double> intra, strength;
    for (const auto& e : wg.edges) {
        if (assignment[e.u] == assignment[e.v])
            intra[assignment[e.u]] += e.weight;
        if (e.u == e.v) {
            strength[assignment[e.u]] += 2.0 * e.weight;
        } else {
            strength[assignment[e.u]] += e.weight;
            strength[assignment[e.v]] += e.weight;
        }
    }
    std::set<NodeId> comms(assignment.begin(), assignment.end());
    double q = 0.0;
    for (NodeId c : comms) {
        double in = intra.count(c) ? intra[c] : 0.0;
        double st = strength.count(c) ? strength[c] : 0.0;
        q += in / m - (st / (2.0 * m)) * (st / (2.0 * m));
    }
    return q;
}

// Enumerate every set partition of [0, n) as a restricted-growth string and
// report the best modularity. Exponential; n <= 8 only.
inline double brute_force_best_q(const fkcd::WeightedGraph& wg) {
    std::size_t n = wg.node_count;
    std::vector<NodeId> assignment(n, 0);
    double best = -2.0;
    // iterate restricted growth strings
    std::vector<NodeId> maxima(n, 0);
    for (;;) {
        best = std::max(best, modularity_oracle(wg, assignment));
        std::size_t i = n;
        while (i-- > 1) {
            if (assignment[i] <= maxima[i - 1]) {
                ++assignment[i];
                maxima[i] = std::max(maxima[i - 1], assignment[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    assignment[j] = 0;
                    maxima[j] = maxima[i];
                }
                break;
            }
        }
        if (i == 0)
            break;
    }
    return best;
}

// Exact bounded-path edge centrality by exhaustive enumeration: for every
// source, count all edge-simple paths of 1..kappa edges and the number of
// those traversing each edge, then sum the per-source fractions.
inline std::vector<double> exact_kpath_centrality(const Graph& g,
                                                  unsigned kappa) {
    std::vector<double> centrality(g.edge_count(), 0.0);
    std::vector<std::uint64_t> through(g.edge_count());
    std::vector<bool> used(g.edge_count());

    for (NodeId s = 0; s < g.node_count(); ++s) {
        std::fill(through.begin(), through.end(), 0);
        std::uint64_t total = 0;
        std::vector<EdgeId> stack;

        auto dfs = [&](auto&& self, NodeId v) -> void {
            if (stack.size() >= kappa)
                return;
            for (const auto& nb : g.neighbors(v)) {
                if (used[nb.edge])
                    continue;
                used[nb.edge] = true;
                stack.push_back(nb.edge);
                ++total;
                for (EdgeId e : stack)
                    ++through[e];
                self(self, nb.node);
                stack.pop_back();
                used[nb.edge] = false;
            }
        };
        dfs(dfs, s);

        if (total > 0)
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                centrality[e] += double(through[e]) / double(total);
    }
    return centrality;
}

inline bool is_connected(const Graph& g) {
    if (g.node_count() == 0)
        return false;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> queue{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!queue.empty()) {
        NodeId v = queue.back();
        queue.pop_back();
        for (const auto& nb : g.neighbors(v))
            if (!seen[nb.node]) {
                seen[nb.node] = true;
                ++visited;
                queue.push_back(nb.node);
            }
    }
    return visited == g.node_count();
}

}  // namespace testutil

#include "community.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>

#include "proximity.hpp"

namespace fkcd {

WeightedGraph WeightedGraph::from_edges(std::size_t node_count,
                                        std::vector<WeightedEdge> edges) {
    WeightedGraph wg;
    wg.node_count = node_count;
    wg.adjacency.resize(node_count);
    wg.self_loop.assign(node_count, 0.0);
    wg.strength.assign(node_count, 0.0);
    for (auto& e : edges) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u >= node_count || e.v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (!(e.weight > 0.0))
            throw std::invalid_argument("edge weights must be positive");
        wg.total_weight += e.weight;
        if (e.u == e.v) {
            wg.self_loop[e.u] += e.weight;
            wg.strength[e.u] += 2.0 * e.weight;
        } else {
            wg.adjacency[e.u].emplace_back(e.v, e.weight);
            wg.adjacency[e.v].emplace_back(e.u, e.weight);
            wg.strength[e.u] += e.weight;
            wg.strength[e.v] += e.weight;
        }
    }
    wg.edges = std::move(edges);
    return wg;
}

WeightedGraph WeightedGraph::unit_weights(const Graph& g) {
    std::vector<WeightedEdge> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        edges.push_back({u, v, 1.0});
    }
    return WeightedGraph::from_edges(g.node_count(), std::move(edges));
}

Partition Partition::singletons(const WeightedGraph& wg) {
    std::vector<NodeId> assignment(wg.node_count);
    std::iota(assignment.begin(), assignment.end(), 0);
    return from_assignment(wg, std::move(assignment));
}

Partition Partition::from_assignment(const WeightedGraph& wg,
                                     std::vector<NodeId> assignment) {
    if (assignment.size() != wg.node_count)
        throw std::invalid_argument("partition does not match graph");
    NodeId max_comm = 0;
    for (NodeId c : assignment)
        max_comm = std::max(max_comm, c);
    Partition p;
    p.assignment = std::move(assignment);
    p.internal_weight.assign(max_comm + 1, 0.0);
    p.total_strength.assign(max_comm + 1, 0.0);
    p.m = wg.total_weight;
    for (NodeId v = 0; v < wg.node_count; ++v)
        p.total_strength[p.assignment[v]] += wg.strength[v];
    for (const auto& e : wg.edges)
        if (p.assignment[e.u] == p.assignment[e.v])
            p.internal_weight[p.assignment[e.u]] += e.weight;
    return p;
}

double modularity(const WeightedGraph& wg, const Partition& p) {
    if (p.assignment.size() != wg.node_count ||
        std::abs(p.m - wg.total_weight) > 1e-9 * std::max(1.0, wg.total_weight))
        throw std::invalid_argument("partition does not match graph");
    double q = 0.0;
    for (std::size_t c = 0; c < p.community_count(); ++c) {
        double frac = p.total_strength[c] / (2.0 * p.m);
        q += p.internal_weight[c] / p.m - frac * frac;
    }
    return q;
}

double modularity_gain(const Partition& p, double node_strength,
                       double strength_to_target, NodeId target) {
    if (target >= p.community_count())
        throw std::invalid_argument("unknown community id");
    return strength_to_target / p.m -
           p.total_strength[target] * node_strength / (2.0 * p.m * p.m);
}

namespace {

void compact_communities(Partition& p, const WeightedGraph& wg) {
    std::vector<NodeId> remap(p.community_count(), std::numeric_limits<NodeId>::max());
    // Dense ids in ascending order of the old ids.
    NodeId next = 0;
    std::vector<bool> used(p.community_count(), false);
    for (NodeId c : p.assignment)
        used[c] = true;
    for (std::size_t c = 0; c < used.size(); ++c)
        if (used[c])
            remap[c] = next++;
    for (NodeId& c : p.assignment)
        c = remap[c];
    Partition fresh = Partition::from_assignment(wg, std::move(p.assignment));
    p = std::move(fresh);
}

}  // namespace

bool louvain_phase1(const WeightedGraph& wg, Partition& p, Rng& rng) {
    if (p.assignment.size() != wg.node_count)
        throw std::invalid_argument("partition does not match graph");

    std::vector<NodeId> order(wg.node_count);
    std::iota(order.begin(), order.end(), 0);

    // community -> accumulated link weight for the node under consideration
    std::vector<double> link_weight(p.community_count(), 0.0);
    std::vector<NodeId> touched;

    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (NodeId v : order) {
            NodeId home = p.assignment[v];
            double k_v = wg.strength[v];

            touched.clear();
            for (auto [w, weight] : wg.adjacency[v]) {
                NodeId c = p.assignment[w];
                if (link_weight[c] == 0.0)
                    touched.push_back(c);
                link_weight[c] += weight;
            }

            // Take v out of its community.
            p.internal_weight[home] -= link_weight[home] + wg.self_loop[v];
            p.total_strength[home] -= k_v;

            // Move only on a strictly positive net gain over staying put;
            // equal-gain candidates resolve to the lowest community id.
            NodeId best = home;
            double best_gain = modularity_gain(p, k_v, link_weight[home], home);
            for (NodeId c : touched) {
                if (c == home)
                    continue;
                double gain = modularity_gain(p, k_v, link_weight[c], c);
                if (gain > best_gain || (gain == best_gain && best != home && c < best)) {
                    best_gain = gain;
                    best = c;
                }
            }

            p.internal_weight[best] += link_weight[best] + wg.self_loop[v];
            p.total_strength[best] += k_v;
            p.assignment[v] = best;
            if (best != home) {
                moved = true;
                any_move = true;
            }

            for (NodeId c : touched)
                link_weight[c] = 0.0;
        }
    }
    compact_communities(p, wg);
    return any_move;
}

WeightedGraph aggregate(const WeightedGraph& wg, const Partition& p) {
    if (p.assignment.size() != wg.node_count)
        throw std::invalid_argument("partition does not match graph");
    // Meta-node ids follow ascending community id.
    std::map<std::pair<NodeId, NodeId>, double> meta;
    for (const auto& e : wg.edges) {
        NodeId cu = p.assignment[e.u];
        NodeId cv = p.assignment[e.v];
        if (cu > cv)
            std::swap(cu, cv);
        meta[{cu, cv}] += e.weight;
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(meta.size());
    for (const auto& [key, weight] : meta)
        edges.push_back({key.first, key.second, weight});
    return WeightedGraph::from_edges(p.community_count(), std::move(edges));
}

Dendrogram louvain(const WeightedGraph& wg, double epsilon, std::uint64_t seed) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("epsilon must be positive");
    Rng rng(seed);

    Dendrogram result;
    result.flat.resize(wg.node_count);
    std::iota(result.flat.begin(), result.flat.end(), 0);

    WeightedGraph current = wg;
    double prev_q = -std::numeric_limits<double>::infinity();
    while (true) {
        Partition p = Partition::singletons(current);
        louvain_phase1(current, p, rng);
        double q = modularity(current, p);
        if (!result.levels.empty() && q - prev_q < epsilon)
            break;
        result.levels.push_back({current.node_count, current.edges.size(), q});
        for (NodeId& c : result.flat)
            c = p.assignment[c];
        prev_q = q;
        if (p.community_count() == current.node_count)
            break;  // nothing merged, a further level cannot improve
        current = aggregate(current, p);
    }
    result.final_q = prev_q;
    result.community_count = result.levels.empty()
                                 ? wg.node_count
                                 : 1 + *std::max_element(result.flat.begin(),
                                                         result.flat.end());
    return result;
}

Dendrogram fkcd_detect(const Graph& g, unsigned kappa, double epsilon,
                       std::uint64_t seed, unsigned threads,
                       WeightTransform transform) {
    CentralityMap c = werw_kpath(g, kappa, seed, threads);
    WeightedGraph wg = build_weighted_graph(g, c, transform);
    return louvain(wg, epsilon, seed);
}

Dendrogram louvain_baseline(const Graph& g, double epsilon, std::uint64_t seed) {
    return louvain(WeightedGraph::unit_weights(g), epsilon, seed);
}

void write_partition(std::ostream& out, const NodeIdMap& ids,
                     const std::vector<NodeId>& assignment) {
    for (NodeId v = 0; v < assignment.size(); ++v)
        out << ids.label(v) << ' ' << assignment[v] << '\n';
}

void write_dendrogram_summary(std::ostream& out, const Dendrogram& d) {
    out << std::setprecision(17);
    for (std::size_t i = 0; i < d.levels.size(); ++i)
        out << i << ' ' << d.levels[i].node_count << ' ' << d.levels[i].edge_count
            << ' ' << d.levels[i].q << '\n';
}

}  // namespace fkcd

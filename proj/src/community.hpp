#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "centrality.hpp"
#include "graph.hpp"

namespace fkcd {

struct WeightedEdge {
    NodeId u;  // u <= v; u == v is a self-loop (meta-graph levels only)
    NodeId v;
    double weight;
};

/// Graph plus positive per-edge weights, the substrate the local-move layer
/// works on. Self-loop weight counts twice in a node's strength so that
/// modularity is invariant under coarsening.
struct WeightedGraph {
    std::size_t node_count = 0;
    std::vector<WeightedEdge> edges;
    std::vector<std::vector<std::pair<NodeId, double>>> adjacency;  // no self-loops
    std::vector<double> self_loop;  // per-node self-loop weight (once)
    std::vector<double> strength;   // weighted degree, self-loops doubled
    double total_weight = 0.0;      // m, each edge counted once

    static WeightedGraph from_edges(std::size_t node_count,
                                    std::vector<WeightedEdge> edges);
    static WeightedGraph unit_weights(const Graph& g);
};

/// Node-to-community assignment with the running aggregates the local moves
/// need: per-community internal weight and total strength.
struct Partition {
    std::vector<NodeId> assignment;
    std::vector<double> internal_weight;  // intra edges once, self-loops once
    std::vector<double> total_strength;   // sum of member strengths
    double m = 0.0;

    static Partition singletons(const WeightedGraph& wg);
    static Partition from_assignment(const WeightedGraph& wg,
                                     std::vector<NodeId> assignment);

    std::size_t community_count() const { return internal_weight.size(); }
};

double modularity(const WeightedGraph& wg, const Partition& p);

/// Gain of inserting a node of strength `node_strength`, currently assigned to
/// no community, into `target` to which it has links of weight
/// `strength_to_target`.
double modularity_gain(const Partition& p, double node_strength,
                       double strength_to_target, NodeId target);

/// Greedy local-move sweeps in seeded random order until a full sweep moves
/// nothing. Ties between equal-gain targets break toward the lowest community
/// id. Returns true if any move was made. Community ids are compacted on exit.
bool louvain_phase1(const WeightedGraph& wg, Partition& p, Rng& rng);

/// Coarsen: one meta-node per community, inter-community weights summed into
/// meta-edges, intra-community weight into meta self-loops. Communities map to
/// meta-nodes in ascending community-id order.
WeightedGraph aggregate(const WeightedGraph& wg, const Partition& p);

struct DendrogramLevel {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double q = 0.0;
};

struct Dendrogram {
    std::vector<DendrogramLevel> levels;
    std::vector<NodeId> flat;  // original node -> final community
    std::size_t community_count = 0;
    double final_q = 0.0;
};

/// Multi-level driver: phase-1 sweeps then aggregation, repeated while each
/// level improves Q by at least epsilon.
Dendrogram louvain(const WeightedGraph& wg, double epsilon, std::uint64_t seed);

enum class WeightTransform { direct, inverse };

/// Full pipeline: edge centrality by bounded random walks, proximity-derived
/// edge weights, then the multi-level partitioning.
Dendrogram fkcd_detect(const Graph& g, unsigned kappa, double epsilon,
                       std::uint64_t seed, unsigned threads = 1,
                       WeightTransform transform = WeightTransform::direct);

/// Same driver on unit edge weights (the comparison baseline).
Dendrogram louvain_baseline(const Graph& g, double epsilon, std::uint64_t seed);

/// "label community" lines in internal node order.
void write_partition(std::ostream& out, const NodeIdMap& ids,
                     const std::vector<NodeId>& assignment);

/// "level node_count edge_count Q" lines.
void write_dendrogram_summary(std::ostream& out, const Dendrogram& d);

}  // namespace fkcd

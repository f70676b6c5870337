#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "graph.hpp"

namespace fkcd {

using Rng = std::mt19937_64;

/// Per-edge centrality estimates produced by the bounded random-walk simulation.
/// Weights live in [1/|E|, 1] and sum to 1 + traversals/|E|.
struct CentralityMap {
    std::vector<double> weights;
    unsigned kappa = 0;
    std::size_t rho = 0;
    std::uint64_t seed = 0;
};

/// Node sampling weight: each undirected incident edge counts as both ingoing
/// and outgoing, so the density is degree(v)/|E|.
double local_effective_density(const Graph& g, NodeId v);

/// Every edge starts at 1/|E|; the per-traversal bonus has the same value.
CentralityMap initial_weights(const Graph& g);

/// Degree-proportional source distribution, sampled by cumulative-sum inversion.
class SourceDistribution {
public:
    explicit SourceDistribution(const Graph& g);

    NodeId sample(Rng& rng) const;
    double probability(NodeId v) const;

private:
    std::vector<double> cumulative_;
    double total_ = 0.0;
};

/// One bounded walk from `start`. Each step picks an untraversed incident edge
/// with probability proportional to its current weight, awards it the 1/|E|
/// bonus in `weights`, and advances. Stops after `kappa` hops or when every
/// incident edge has already been traversed this walk. Returns the edge ids
/// in traversal order.
std::vector<EdgeId> message_propagation(const Graph& g, CentralityMap& weights,
                                        NodeId start, unsigned kappa, Rng& rng);

/// Full simulation: rho = |E|-1 walks from degree-biased sources. `threads` > 1
/// runs walks on private delta accumulators merged by summation; output is then
/// reproducible per (seed, threads) rather than matching the sequential run.
CentralityMap werw_kpath(const Graph& g, unsigned kappa, std::uint64_t seed,
                         unsigned threads = 1);

/// "u v weight" lines, descending by weight, external labels.
void write_centrality(std::ostream& out, const Graph& g, const NodeIdMap& ids,
                      const CentralityMap& centrality);

}  // namespace fkcd

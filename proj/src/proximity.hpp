#pragma once

#include <ostream>

#include "community.hpp"

namespace fkcd {

/// Degree-normalized L2 comparison of the centralities around an existing edge
/// (i, j). The index k runs over N(i) ∪ N(j) minus the endpoints themselves;
/// a missing edge contributes centrality 0.
double proximity(const Graph& g, const CentralityMap& c, NodeId i, NodeId j);

/// Weight every edge by its proximity plus a 1/|E| floor (so perfectly matched
/// neighborhoods do not produce zero-weight edges). The inverse transform maps
/// r to 1/(r + floor) instead.
WeightedGraph build_weighted_graph(const Graph& g, const CentralityMap& c,
                                   WeightTransform transform = WeightTransform::direct);

/// "u v proximity" lines, external labels, edge-id order.
void write_proximity(std::ostream& out, const Graph& g, const NodeIdMap& ids,
                     const CentralityMap& c);

}  // namespace fkcd

#pragma once

#include <istream>
#include <span>
#include <vector>

#include "community.hpp"
#include "graph.hpp"

namespace fkcd {

/// Normalized mutual information between two labelings of the same node set,
/// arithmetic-mean normalization, natural logs. Both single-cluster: 1.
/// Exactly one with zero entropy: 0.
double nmi(std::span<const NodeId> a, std::span<const NodeId> b);

/// Fraction of total edge weight that is intra-community.
double coverage(const WeightedGraph& wg, const Partition& p);

/// Ground-truth file: "node_label community_label" lines, '#' comments.
/// Must cover exactly the graph's node set.
std::vector<NodeId> load_labels(std::istream& in, const NodeIdMap& ids);

}  // namespace fkcd

#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace fkcd {

namespace {

std::size_t cluster_count(std::span<const NodeId> labels) {
    NodeId max_label = 0;
    for (NodeId c : labels)
        max_label = std::max(max_label, c);
    return labels.empty() ? 0 : std::size_t(max_label) + 1;
}

}  // namespace

double nmi(std::span<const NodeId> a, std::span<const NodeId> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partitions cover different node sets");
    if (a.empty())
        throw std::invalid_argument("empty partitions");

    std::size_t n = a.size();
    std::size_t ca = cluster_count(a), cb = cluster_count(b);
    std::vector<double> pa(ca, 0.0), pb(cb, 0.0);
    std::unordered_map<std::uint64_t, double> joint;
    for (std::size_t v = 0; v < n; ++v) {
        pa[a[v]] += 1.0;
        pb[b[v]] += 1.0;
        joint[(std::uint64_t(a[v]) << 32) | b[v]] += 1.0;
    }

    double ha = 0.0, hb = 0.0, mutual = 0.0;
    for (double c : pa)
        if (c > 0.0)
            ha -= c / n * std::log(c / n);
    for (double c : pb)
        if (c > 0.0)
            hb -= c / n * std::log(c / n);
    for (const auto& [key, c] : joint) {
        double pij = c / n;
        double pi = pa[key >> 32] / n;
        double pj = pb[key & 0xffffffffu] / n;
        mutual += pij * std::log(pij / (pi * pj));
    }

    if (ha == 0.0 && hb == 0.0)
        return 1.0;  // both trivially single-cluster
    if (ha == 0.0 || hb == 0.0)
        return 0.0;
    // identical up to relabeling: every joint cell matches a full cluster on
    // both sides, so the measure is exactly 1 and rounding must not erode it
    bool bijective = joint.size() == ca && joint.size() == cb;
    if (bijective)
        for (const auto& [key, c] : joint)
            if (c != pa[key >> 32] || c != pb[key & 0xffffffffu])
                bijective = false;
    if (bijective)
        return 1.0;
    double value = 2.0 * mutual / (ha + hb);
    return std::clamp(value, 0.0, 1.0);
}

double coverage(const WeightedGraph& wg, const Partition& p) {
    if (p.assignment.size() != wg.node_count)
        throw std::invalid_argument("partition does not match graph");
    double intra = 0.0;
    for (const auto& e : wg.edges)
        if (p.assignment[e.u] == p.assignment[e.v])
            intra += e.weight;
    return wg.total_weight > 0.0 ? intra / wg.total_weight : 0.0;
}

std::vector<NodeId> load_labels(std::istream& in, const NodeIdMap& ids) {
    std::vector<NodeId> labels(ids.size(), std::numeric_limits<NodeId>::max());
    std::vector<bool> filled(ids.size(), false);
    std::unordered_map<std::string, NodeId> communities;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string node, comm, extra;
        if (!(tokens >> node))
            continue;
        if (node.front() == '#')
            continue;
        if (!(tokens >> comm) || (tokens >> extra))
            throw ParseError(line_no, "expected node and community labels");
        auto id = ids.lookup(node);
        if (!id)
            throw ParseError(line_no, "node '" + node + "' not in graph");
        auto [it, _] = communities.try_emplace(comm, NodeId(communities.size()));
        labels[*id] = it->second;
        filled[*id] = true;
    }
    for (std::size_t v = 0; v < filled.size(); ++v)
        if (!filled[v])
            throw std::invalid_argument("ground truth missing node '" +
                                        ids.label(NodeId(v)) + "'");
    return labels;
}

}  // namespace fkcd

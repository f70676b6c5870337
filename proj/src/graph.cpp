#include "graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace fkcd {

Graph Graph::from_edges(std::size_t node_count,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    Graph g;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size());
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop in edge list");
        if (u > v)
            std::swap(u, v);
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (!seen.insert((std::uint64_t(u) << 32) | v).second)
            throw std::invalid_argument("duplicate edge in edge list");
    }
    g.endpoints_ = std::move(edges);

    std::vector<std::size_t> deg(node_count, 0);
    for (auto [u, v] : g.endpoints_) {
        ++deg[u];
        ++deg[v];
    }
    g.adjacency_offsets_.assign(node_count + 1, 0);
    for (std::size_t v = 0; v < node_count; ++v)
        g.adjacency_offsets_[v + 1] = g.adjacency_offsets_[v] + deg[v];
    g.adjacency_.resize(g.adjacency_offsets_.back());

    std::vector<std::size_t> cursor(g.adjacency_offsets_.begin(),
                                    g.adjacency_offsets_.end() - 1);
    for (EdgeId e = 0; e < g.endpoints_.size(); ++e) {
        auto [u, v] = g.endpoints_[e];
        g.adjacency_[cursor[u]++] = {v, e};
        g.adjacency_[cursor[v]++] = {u, e};
    }
    for (std::size_t v = 0; v < node_count; ++v)
        std::sort(g.adjacency_.begin() + g.adjacency_offsets_[v],
                  g.adjacency_.begin() + g.adjacency_offsets_[v + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    return g;
}

std::optional<EdgeId> Graph::edge_between(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto adj = neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Neighbor& n, NodeId id) { return n.node < id; });
    if (it != adj.end() && it->node == v)
        return it->edge;
    return std::nullopt;
}

NodeId NodeIdMap::intern(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, NodeId(labels_.size()));
    if (inserted)
        labels_.push_back(label);
    return it->second;
}

std::optional<NodeId> NodeIdMap::lookup(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

LoadResult load_edge_list(std::istream& in) {
    LoadResult result;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::unordered_set<std::uint64_t> seen;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a))
            continue;  // blank line
        if (a.front() == '#')
            continue;
        if (!(tokens >> b) || (tokens >> extra))
            throw ParseError(line_no, "expected exactly two node labels");
        NodeId u = result.ids.intern(a);
        NodeId v = result.ids.intern(b);
        if (u == v) {
            ++result.dropped_records;
            continue;
        }
        NodeId lo = std::min(u, v), hi = std::max(u, v);
        if (!seen.insert((std::uint64_t(lo) << 32) | hi).second) {
            ++result.dropped_records;
            continue;
        }
        edges.emplace_back(lo, hi);
    }
    if (edges.empty())
        throw EmptyGraphError();
    result.graph = Graph::from_edges(result.ids.size(), std::move(edges));
    return result;
}

}  // namespace fkcd

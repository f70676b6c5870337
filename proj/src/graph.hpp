#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fkcd {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyGraphError : public std::runtime_error {
public:
    EmptyGraphError() : std::runtime_error("graph has no edges") {}
};

struct Neighbor {
    NodeId node;
    EdgeId edge;
};

/// Immutable simple undirected graph. Node ids are dense in [0, node_count),
/// edge ids dense in [0, edge_count) with endpoints stored as (u, v), u < v.
class Graph {
public:
    Graph() = default;

    // edges must be free of self-loops and duplicates (either orientation).
    static Graph from_edges(std::size_t node_count,
                            std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return adjacency_offsets_.size() - 1; }
    std::size_t edge_count() const { return endpoints_.size(); }

    std::size_t degree(NodeId v) const {
        check_node(v);
        return adjacency_offsets_[v + 1] - adjacency_offsets_[v];
    }

    std::span<const Neighbor> neighbors(NodeId v) const {
        check_node(v);
        return {adjacency_.data() + adjacency_offsets_[v],
                adjacency_.data() + adjacency_offsets_[v + 1]};
    }

    std::pair<NodeId, NodeId> endpoints(EdgeId e) const {
        if (e >= endpoints_.size())
            throw std::out_of_range("edge id out of range");
        return endpoints_[e];
    }

    // Edge id between u and v, if adjacent. Binary search in adj(u).
    std::optional<EdgeId> edge_between(NodeId u, NodeId v) const;

private:
    void check_node(NodeId v) const {
        if (v >= node_count())
            throw std::out_of_range("node id out of range");
    }

    std::vector<std::size_t> adjacency_offsets_{0};  // node_count + 1
    std::vector<Neighbor> adjacency_;             // sorted by neighbor id per node
    std::vector<std::pair<NodeId, NodeId>> endpoints_;
};

/// Bijection between external labels from the input file and dense internal ids.
class NodeIdMap {
public:
    NodeId intern(const std::string& label);
    const std::string& label(NodeId v) const { return labels_.at(v); }
    std::optional<NodeId> lookup(const std::string& label) const;
    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

struct LoadResult {
    Graph graph;
    NodeIdMap ids;
    std::uint64_t dropped_records = 0;  // self-loops + duplicate edges
};

/// Parse SNAP-style edge-list text: '#' comment lines, two whitespace-separated
/// labels per data line. Duplicates and self-loops are dropped and counted.
LoadResult load_edge_list(std::istream& in);

}  // namespace fkcd

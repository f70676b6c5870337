#include "proximity.hpp"

#include <cmath>
#include <iomanip>

namespace fkcd {

namespace {

double centrality_or_zero(const Graph& g, const CentralityMap& c, NodeId a,
                          NodeId b) {
    auto e = g.edge_between(a, b);
    return e ? c.weights[*e] : 0.0;
}

}  // namespace

double proximity(const Graph& g, const CentralityMap& c, NodeId i, NodeId j) {
    if (c.weights.size() != g.edge_count())
        throw std::invalid_argument("centrality map does not match graph");
    if (!g.edge_between(i, j))
        throw std::invalid_argument("proximity requires an existing edge");

    // Merge the two sorted neighbor lists; each k contributes once.
    auto ni = g.neighbors(i);
    auto nj = g.neighbors(j);
    std::size_t a = 0, b = 0;
    double sum = 0.0;
    auto term = [&](NodeId k) {
        if (k == i || k == j)
            return;
        double lik = centrality_or_zero(g, c, i, k);
        double lkj = centrality_or_zero(g, c, k, j);
        double diff = lik - lkj;
        sum += diff * diff / double(g.degree(k));
    };
    while (a < ni.size() || b < nj.size()) {
        if (b == nj.size() || (a < ni.size() && ni[a].node < nj[b].node)) {
            term(ni[a].node);
            ++a;
        } else if (a == ni.size() || nj[b].node < ni[a].node) {
            term(nj[b].node);
            ++b;
        } else {
            term(ni[a].node);
            ++a;
            ++b;
        }
    }
    return std::sqrt(sum);
}

WeightedGraph build_weighted_graph(const Graph& g, const CentralityMap& c,
                                   WeightTransform transform) {
    double floor = 1.0 / double(g.edge_count());
    std::vector<WeightedEdge> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        double r = proximity(g, c, u, v);
        double w = transform == WeightTransform::direct ? r + floor
                                                        : 1.0 / (r + floor);
        edges.push_back({u, v, w});
    }
    return WeightedGraph::from_edges(g.node_count(), std::move(edges));
}

void write_proximity(std::ostream& out, const Graph& g, const NodeIdMap& ids,
                     const CentralityMap& c) {
    out << std::setprecision(17);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        out << ids.label(u) << ' ' << ids.label(v) << ' ' << proximity(g, c, u, v)
            << '\n';
    }
}

}  // namespace fkcd

#include "centrality.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <thread>

namespace fkcd {

namespace {

// Shared walk kernel. Effective edge weight is base[e] + delta[e]; bonuses go
// into delta. Sequential mode passes the live weight vector as delta with a
// zero base; parallel workers pass the frozen start-of-run weights as base and
// a private delta.
std::vector<EdgeId> propagate(const Graph& g, NodeId start, unsigned kappa,
                              Rng& rng, const double* base, double* delta,
                              double bonus) {
    std::vector<EdgeId> traversed;
    traversed.reserve(kappa);
    auto is_traversed = [&](EdgeId e) {
        return std::find(traversed.begin(), traversed.end(), e) != traversed.end();
    };
    auto weight_of = [&](EdgeId e) {
        return (base ? base[e] : 0.0) + delta[e];
    };

    NodeId current = start;
    for (unsigned hop = 0; hop < kappa; ++hop) {
        double gamma = 0.0;
        for (const Neighbor& n : g.neighbors(current))
            if (!is_traversed(n.edge))
                gamma += weight_of(n.edge);
        if (gamma <= 0.0)
            break;  // every incident edge already traversed this walk

        double draw = std::uniform_real_distribution<double>(0.0, gamma)(rng);
        EdgeId chosen = 0;
        NodeId next = current;
        bool found = false;
        for (const Neighbor& n : g.neighbors(current)) {
            if (is_traversed(n.edge))
                continue;
            chosen = n.edge;
            next = n.node;
            found = true;
            draw -= weight_of(n.edge);
            if (draw < 0.0)
                break;
        }
        if (!found)
            break;
        delta[chosen] += bonus;
        traversed.push_back(chosen);
        current = next;
    }
    return traversed;
}

}  // namespace

double local_effective_density(const Graph& g, NodeId v) {
    return double(g.degree(v)) / double(g.edge_count());
}

CentralityMap initial_weights(const Graph& g) {
    if (g.edge_count() == 0)
        throw EmptyGraphError();
    CentralityMap map;
    map.weights.assign(g.edge_count(), 1.0 / double(g.edge_count()));
    return map;
}

SourceDistribution::SourceDistribution(const Graph& g) {
    cumulative_.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        total_ += local_effective_density(g, v);
        cumulative_.push_back(total_);
    }
}

NodeId SourceDistribution::sample(Rng& rng) const {
    double draw = std::uniform_real_distribution<double>(0.0, total_)(rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), draw);
    if (it == cumulative_.end())
        --it;
    return NodeId(it - cumulative_.begin());
}

double SourceDistribution::probability(NodeId v) const {
    double prev = v == 0 ? 0.0 : cumulative_[v - 1];
    return (cumulative_.at(v) - prev) / total_;
}

std::vector<EdgeId> message_propagation(const Graph& g, CentralityMap& weights,
                                        NodeId start, unsigned kappa, Rng& rng) {
    if (weights.weights.size() != g.edge_count())
        throw std::invalid_argument("centrality map does not match graph");
    if (start >= g.node_count())
        throw std::out_of_range("start node out of range");
    double bonus = 1.0 / double(g.edge_count());
    return propagate(g, start, kappa, rng, nullptr, weights.weights.data(), bonus);
}

CentralityMap werw_kpath(const Graph& g, unsigned kappa, std::uint64_t seed,
                         unsigned threads) {
    if (g.edge_count() == 0)
        throw EmptyGraphError();
    if (kappa < 1)
        throw std::invalid_argument("kappa must be >= 1");

    CentralityMap map = initial_weights(g);
    map.kappa = kappa;
    map.seed = seed;
    map.rho = g.edge_count() - 1;

    SourceDistribution sources(g);
    double bonus = 1.0 / double(g.edge_count());

    if (threads <= 1) {
        Rng rng(seed);
        for (std::size_t walk = 0; walk < map.rho; ++walk) {
            NodeId start = sources.sample(rng);
            propagate(g, start, kappa, rng, nullptr, map.weights.data(), bonus);
        }
        return map;
    }

    // Each worker sees the start-of-run weights plus its own deltas only.
    std::vector<std::vector<double>> deltas(threads,
                                            std::vector<double>(g.edge_count(), 0.0));
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        std::size_t begin = map.rho * w / threads;
        std::size_t end = map.rho * (w + 1) / threads;
        workers.emplace_back([&, w, begin, end] {
            Rng rng(seed + 0x9e3779b97f4a7c15ULL * (w + 1));
            for (std::size_t walk = begin; walk < end; ++walk) {
                NodeId start = sources.sample(rng);
                propagate(g, start, kappa, rng, map.weights.data(),
                          deltas[w].data(), bonus);
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (const auto& delta : deltas)
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            map.weights[e] += delta[e];
    return map;
}

void write_centrality(std::ostream& out, const Graph& g, const NodeIdMap& ids,
                      const CentralityMap& centrality) {
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return centrality.weights[a] > centrality.weights[b];
    });
    out << std::setprecision(17);
    for (EdgeId e : order) {
        auto [u, v] = g.endpoints(e);
        out << ids.label(u) << ' ' << ids.label(v) << ' '
            << centrality.weights[e] << '\n';
    }
}

}  // namespace fkcd

#include "fkcd.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "centrality.hpp"
#include "community.hpp"
#include "graph.hpp"
#include "metrics.hpp"
#include "proximity.hpp"

struct fkcd_graph {
    fkcd::Graph graph;
    fkcd::NodeIdMap ids;
    std::uint64_t dropped = 0;
};

struct fkcd_centrality {
    fkcd::CentralityMap map;
};

struct fkcd_result {
    fkcd::Dendrogram dendrogram;
    double coverage = 0.0;
};

namespace {

thread_local std::string g_last_error;

fkcd_status fail(fkcd_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
fkcd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const fkcd::ParseError& e) {
        return fail(FKCD_ERROR_PARSE, e.what());
    } catch (const fkcd::EmptyGraphError& e) {
        return fail(FKCD_ERROR_EMPTY_GRAPH, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FKCD_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(FKCD_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FKCD_ERROR_INTERNAL, e.what());
    }
}

fkcd_status load_stream(std::istream& in, fkcd_graph** out) {
    auto loaded = fkcd::load_edge_list(in);
    *out = new fkcd_graph{std::move(loaded.graph), std::move(loaded.ids),
                          loaded.dropped_records};
    return FKCD_OK;
}

fkcd_status write_file(const char* path, const std::string& what,
                       const std::ostringstream& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        return fail(FKCD_ERROR_IO, "cannot open " + what + " file '" + path + "'");
    out << content.str();
    if (!out.flush())
        return fail(FKCD_ERROR_IO, "write failed for '" + std::string(path) + "'");
    return FKCD_OK;
}

}  // namespace

extern "C" {

const char* fkcd_status_name(fkcd_status status) {
    switch (status) {
        case FKCD_OK: return "ok";
        case FKCD_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case FKCD_ERROR_IO: return "io error";
        case FKCD_ERROR_PARSE: return "parse error";
        case FKCD_ERROR_EMPTY_GRAPH: return "empty graph";
        case FKCD_ERROR_NODE_SET_MISMATCH: return "node set mismatch";
        case FKCD_ERROR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* fkcd_last_error(void) { return g_last_error.c_str(); }

fkcd_status fkcd_graph_load_path(const char* path, fkcd_graph** out) {
    if (!path || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    std::ifstream in(path);
    if (!in)
        return fail(FKCD_ERROR_IO, "file not found: '" + std::string(path) + "'");
    return guarded([&] { return load_stream(in, out); });
}

fkcd_status fkcd_graph_load_buffer(const char* data, size_t size,
                                   fkcd_graph** out) {
    if (!data || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    std::istringstream in(std::string(data, size));
    return guarded([&] { return load_stream(in, out); });
}

void fkcd_graph_free(fkcd_graph* graph) { delete graph; }

uint32_t fkcd_graph_node_count(const fkcd_graph* graph) {
    return graph ? uint32_t(graph->graph.node_count()) : 0;
}

uint32_t fkcd_graph_edge_count(const fkcd_graph* graph) {
    return graph ? uint32_t(graph->graph.edge_count()) : 0;
}

uint64_t fkcd_graph_dropped_records(const fkcd_graph* graph) {
    return graph ? graph->dropped : 0;
}

fkcd_status fkcd_graph_degree(const fkcd_graph* graph, uint32_t node,
                              uint32_t* out) {
    if (!graph || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = uint32_t(graph->graph.degree(node));
        return FKCD_OK;
    });
}

fkcd_status fkcd_graph_edge_endpoints(const fkcd_graph* graph, uint32_t edge,
                                      uint32_t* u, uint32_t* v) {
    if (!graph || !u || !v)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto [a, b] = graph->graph.endpoints(edge);
        *u = a;
        *v = b;
        return FKCD_OK;
    });
}

fkcd_status fkcd_graph_node_label(const fkcd_graph* graph, uint32_t node,
                                  const char** out) {
    if (!graph || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (node >= graph->graph.node_count())
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "node id out of range");
    *out = graph->ids.label(node).c_str();
    return FKCD_OK;
}

fkcd_status fkcd_centrality_compute(const fkcd_graph* graph, uint32_t kappa,
                                    uint64_t seed, uint32_t threads,
                                    fkcd_centrality** out) {
    if (!graph || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto map = fkcd::werw_kpath(graph->graph, kappa, seed,
                                    threads == 0 ? 1 : threads);
        *out = new fkcd_centrality{std::move(map)};
        return FKCD_OK;
    });
}

void fkcd_centrality_free(fkcd_centrality* centrality) { delete centrality; }

fkcd_status fkcd_centrality_edge_weight(const fkcd_centrality* centrality,
                                        uint32_t edge, double* out) {
    if (!centrality || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (edge >= centrality->map.weights.size())
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "edge id out of range");
    *out = centrality->map.weights[edge];
    return FKCD_OK;
}

fkcd_status fkcd_centrality_write_path(const fkcd_centrality* centrality,
                                       const fkcd_graph* graph,
                                       const char* path) {
    if (!centrality || !graph || !path)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::ostringstream content;
        fkcd::write_centrality(content, graph->graph, graph->ids,
                               centrality->map);
        return write_file(path, "centrality", content);
    });
}

void fkcd_params_init(fkcd_params* params) {
    if (!params)
        return;
    params->algorithm = FKCD_ALGO_FKCD;
    params->kappa = 20;
    params->epsilon = 1e-6;
    params->seed = 42;
    params->threads = 1;
    params->weight_transform = FKCD_WEIGHT_DIRECT;
}

fkcd_status fkcd_run(const fkcd_graph* graph, const fkcd_params* params,
                     fkcd_result** out) {
    if (!graph || !params || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (params->algorithm != FKCD_ALGO_FKCD &&
        params->algorithm != FKCD_ALGO_LOUVAIN)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "unknown algorithm");
    if (params->kappa < 1)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "kappa must be >= 1");
    if (!(params->epsilon > 0.0))
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "epsilon must be positive");
    return guarded([&] {
        fkcd::WeightedGraph wg;
        if (params->algorithm == FKCD_ALGO_FKCD) {
            auto c = fkcd::werw_kpath(graph->graph, params->kappa, params->seed,
                                      params->threads == 0 ? 1 : params->threads);
            auto transform = params->weight_transform == FKCD_WEIGHT_INVERSE
                                 ? fkcd::WeightTransform::inverse
                                 : fkcd::WeightTransform::direct;
            wg = fkcd::build_weighted_graph(graph->graph, c, transform);
        } else {
            wg = fkcd::WeightedGraph::unit_weights(graph->graph);
        }
        auto dendrogram = fkcd::louvain(wg, params->epsilon, params->seed);
        auto p = fkcd::Partition::from_assignment(wg, dendrogram.flat);
        double cov = fkcd::coverage(wg, p);
        *out = new fkcd_result{std::move(dendrogram), cov};
        return FKCD_OK;
    });
}

void fkcd_result_free(fkcd_result* result) { delete result; }

uint32_t fkcd_result_level_count(const fkcd_result* result) {
    return result ? uint32_t(result->dendrogram.levels.size()) : 0;
}

fkcd_status fkcd_result_level(const fkcd_result* result, uint32_t level,
                              uint32_t* node_count, uint32_t* edge_count,
                              double* q) {
    if (!result || !node_count || !edge_count || !q)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (level >= result->dendrogram.levels.size())
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "level out of range");
    const auto& l = result->dendrogram.levels[level];
    *node_count = uint32_t(l.node_count);
    *edge_count = uint32_t(l.edge_count);
    *q = l.q;
    return FKCD_OK;
}

double fkcd_result_modularity(const fkcd_result* result) {
    return result ? result->dendrogram.final_q : 0.0;
}

double fkcd_result_coverage(const fkcd_result* result) {
    return result ? result->coverage : 0.0;
}

uint32_t fkcd_result_community_count(const fkcd_result* result) {
    return result ? uint32_t(result->dendrogram.community_count) : 0;
}

fkcd_status fkcd_result_community_of(const fkcd_result* result, uint32_t node,
                                     uint32_t* out) {
    if (!result || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (node >= result->dendrogram.flat.size())
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "node id out of range");
    *out = result->dendrogram.flat[node];
    return FKCD_OK;
}

fkcd_status fkcd_result_write_partition_path(const fkcd_result* result,
                                             const fkcd_graph* graph,
                                             const char* path) {
    if (!result || !graph || !path)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (result->dendrogram.flat.size() != graph->graph.node_count())
        return fail(FKCD_ERROR_NODE_SET_MISMATCH,
                    "result does not belong to this graph");
    return guarded([&] {
        std::ostringstream content;
        fkcd::write_partition(content, graph->ids, result->dendrogram.flat);
        return write_file(path, "partition", content);
    });
}

fkcd_status fkcd_result_write_summary_path(const fkcd_result* result,
                                           const char* path) {
    if (!result || !path)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::ostringstream content;
        fkcd::write_dendrogram_summary(content, result->dendrogram);
        return write_file(path, "summary", content);
    });
}

fkcd_status fkcd_result_nmi_path(const fkcd_result* result,
                                 const fkcd_graph* graph,
                                 const char* ground_truth_path, double* out) {
    if (!result || !graph || !ground_truth_path || !out)
        return fail(FKCD_ERROR_INVALID_ARGUMENT, "null argument");
    if (result->dendrogram.flat.size() != graph->graph.node_count())
        return fail(FKCD_ERROR_NODE_SET_MISMATCH,
                    "result does not belong to this graph");
    std::ifstream in(ground_truth_path);
    if (!in)
        return fail(FKCD_ERROR_IO,
                    "file not found: '" + std::string(ground_truth_path) + "'");
    return guarded([&]() -> fkcd_status {
        std::vector<fkcd::NodeId> truth;
        try {
            truth = fkcd::load_labels(in, graph->ids);
        } catch (const std::invalid_argument& e) {
            return fail(FKCD_ERROR_NODE_SET_MISMATCH, e.what());
        }
        *out = fkcd::nmi(result->dendrogram.flat, truth);
        return FKCD_OK;
    });
}

}  // extern "C"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fkcd.h"

namespace {

int die(fkcd_status status) {
    std::cerr << "error: " << fkcd_status_name(status) << ": "
              << fkcd_last_error() << "\n";
    return int(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Community detection by k-path edge centrality and modularity "
        "optimization"};

    std::string input, algo = "fkcd", transform = "direct";
    std::string ground_truth, out_partition, out_centrality, csv_path;
    unsigned kappa = 20, threads = 1;
    double epsilon = 1e-6;
    std::uint64_t seed = 42;

    app.add_option("--input", input, "Edge-list file (SNAP format)")
        ->required();
    app.add_option("--algo", algo, "Algorithm: fkcd | louvain")
        ->check(CLI::IsMember({"fkcd", "louvain"}));
    app.add_option("--kappa", kappa, "Walk-length bound (default 20)")
        ->check(CLI::PositiveNumber);
    app.add_option("--epsilon", epsilon, "Per-level modularity gain threshold")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "RNG seed (default 42)");
    app.add_option("--threads", threads,
                   "Walk workers; 1 = sequential reference mode");
    app.add_option("--weight-transform", transform,
                   "Proximity-to-weight mapping: direct | inverse")
        ->check(CLI::IsMember({"direct", "inverse"}));
    app.add_option("--ground-truth", ground_truth,
                   "Ground-truth communities for NMI evaluation");
    app.add_option("--out-partition", out_partition,
                   "Write the final partition to this file");
    app.add_option("--out-centrality", out_centrality,
                   "Write the edge-centrality ranking to this file (fkcd only)");
    app.add_option("--csv", csv_path, "Append a CSV result row to this file");

    CLI11_PARSE(app, argc, argv);

    fkcd_graph* graph = nullptr;
    fkcd_status status = fkcd_graph_load_path(input.c_str(), &graph);
    if (status != FKCD_OK)
        return die(status);

    std::cout << "graph: " << fkcd_graph_node_count(graph) << " nodes, "
              << fkcd_graph_edge_count(graph) << " edges";
    if (fkcd_graph_dropped_records(graph) > 0)
        std::cout << " (" << fkcd_graph_dropped_records(graph)
                  << " self-loop/duplicate records dropped)";
    std::cout << "\n";

    fkcd_params params;
    fkcd_params_init(&params);
    params.algorithm = algo == "fkcd" ? FKCD_ALGO_FKCD : FKCD_ALGO_LOUVAIN;
    params.kappa = kappa;
    params.epsilon = epsilon;
    params.seed = seed;
    params.threads = threads;
    params.weight_transform = transform == "inverse" ? FKCD_WEIGHT_INVERSE
                                                     : FKCD_WEIGHT_DIRECT;

    auto start = std::chrono::steady_clock::now();

    if (!out_centrality.empty()) {
        if (params.algorithm != FKCD_ALGO_FKCD) {
            std::cerr << "error: --out-centrality requires --algo fkcd\n";
            fkcd_graph_free(graph);
            return int(FKCD_ERROR_INVALID_ARGUMENT);
        }
        fkcd_centrality* centrality = nullptr;
        status = fkcd_centrality_compute(graph, params.kappa, params.seed,
                                         params.threads, &centrality);
        if (status == FKCD_OK)
            status = fkcd_centrality_write_path(centrality, graph,
                                               out_centrality.c_str());
        fkcd_centrality_free(centrality);
        if (status != FKCD_OK) {
            fkcd_graph_free(graph);
            return die(status);
        }
    }

    fkcd_result* result = nullptr;
    status = fkcd_run(graph, &params, &result);
    if (status != FKCD_OK) {
        fkcd_graph_free(graph);
        return die(status);
    }

    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    for (uint32_t i = 0; i < fkcd_result_level_count(result); ++i) {
        uint32_t nodes = 0, edges = 0;
        double q = 0.0;
        fkcd_result_level(result, i, &nodes, &edges, &q);
        std::printf("level %u: %u nodes, %u edges, Q = %.6f\n", i, nodes, edges,
                    q);
    }

    double nmi_value = -1.0;
    if (!ground_truth.empty()) {
        status = fkcd_result_nmi_path(result, graph, ground_truth.c_str(),
                                      &nmi_value);
        if (status != FKCD_OK) {
            fkcd_result_free(result);
            fkcd_graph_free(graph);
            return die(status);
        }
    }

    std::printf("communities: %u\n", fkcd_result_community_count(result));
    std::printf("modularity: %.6f\n", fkcd_result_modularity(result));
    std::printf("coverage: %.6f\n", fkcd_result_coverage(result));
    if (nmi_value >= 0.0)
        std::printf("nmi: %.6f\n", nmi_value);
    std::printf("time: %.3fs\n", seconds);

    if (!out_partition.empty()) {
        status = fkcd_result_write_partition_path(result, graph,
                                                  out_partition.c_str());
        if (status != FKCD_OK) {
            fkcd_result_free(result);
            fkcd_graph_free(graph);
            return die(status);
        }
    }

    if (!csv_path.empty()) {
        bool fresh = !std::filesystem::exists(csv_path);
        std::ofstream csv(csv_path, std::ios::app);
        if (!csv) {
            std::cerr << "error: cannot open csv file '" << csv_path << "'\n";
            fkcd_result_free(result);
            fkcd_graph_free(graph);
            return int(FKCD_ERROR_IO);
        }
        if (fresh)
            csv << "input,algo,kappa,epsilon,seed,threads,levels,communities,"
                   "modularity,coverage,nmi,seconds\n";
        csv << input << ',' << algo << ',' << kappa << ',' << epsilon << ','
            << seed << ',' << threads << ',' << fkcd_result_level_count(result)
            << ',' << fkcd_result_community_count(result) << ','
            << fkcd_result_modularity(result) << ','
            << fkcd_result_coverage(result) << ',';
        if (nmi_value >= 0.0)
            csv << nmi_value;
        csv << ',' << seconds << '\n';
    }

    fkcd_result_free(result);
    fkcd_graph_free(graph);
    return 0;
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "crossmin/crossmin.h"

namespace {

struct GraphHandle {
    cm_graph* g;
    explicit GraphHandle(cm_graph* graph) : g(graph) {}
    ~GraphHandle() { cm_graph_free(g); }
};

} // namespace

TEST_CASE("graph lifecycle through the C API") {
    cm_graph* g = cm_graph_new();
    REQUIRE(g != nullptr);
    int32_t a = cm_graph_add_vertex(g);
    int32_t b = cm_graph_add_vertex(g);
    int32_t c = cm_graph_add_vertex(g);
    CHECK(a == 0);
    CHECK(c == 2);
    CHECK(cm_graph_add_edge(g, a, b) >= 0);
    CHECK(cm_graph_add_edge(g, b, c) >= 0);
    CHECK(cm_graph_vertex_count(g) == 3);
    CHECK(cm_graph_edge_count(g) == 2);
    CHECK(cm_graph_degree(g, b) == 2);

    CHECK(cm_graph_add_edge(g, 0, 99) == -1);
    CHECK(std::string(cm_last_error()).find("unknown") != std::string::npos);

    CHECK(cm_graph_delete_vertex(g, b) == CM_OK);
    CHECK(cm_graph_vertex_count(g) == 2);
    CHECK(cm_graph_edge_count(g) == 0);
    CHECK(cm_graph_delete_vertex(g, b) == CM_ERR_STRUCTURE);
    cm_graph_free(g);
}

TEST_CASE("generator specs and planarity") {
    GraphHandle k5(cm_graph_generate("complete:5"));
    REQUIRE(k5.g != nullptr);
    CHECK(cm_graph_vertex_count(k5.g) == 5);
    CHECK(cm_graph_edge_count(k5.g) == 10);
    int32_t planar = -1;
    CHECK(cm_graph_is_planar(k5.g, &planar) == CM_OK);
    CHECK(planar == 0);

    GraphHandle k4(cm_graph_generate("complete:4"));
    REQUIRE(k4.g != nullptr);
    CHECK(cm_graph_is_planar(k4.g, &planar) == CM_OK);
    CHECK(planar == 1);

    CHECK(cm_graph_generate("petersen:nope") == nullptr);
    CHECK(cm_graph_generate(nullptr) == nullptr);
}

TEST_CASE("file round trip through the C API") {
    const char* path = "/tmp/crossmin_capi_graph.txt";
    GraphHandle g(cm_graph_generate("petersen:5x2"));
    REQUIRE(g.g != nullptr);
    REQUIRE(cm_graph_write(g.g, path) == CM_OK);
    GraphHandle h(cm_graph_read(path));
    REQUIRE(h.g != nullptr);
    CHECK(cm_graph_vertex_count(h.g) == 10);
    CHECK(cm_graph_edge_count(h.g) == 15);
    std::remove(path);
    CHECK(cm_graph_read("/nonexistent/missing.txt") == nullptr);
}

TEST_CASE("cm_run_heuristic: known answers and error paths") {
    GraphHandle k5(cm_graph_generate("complete:5"));
    REQUIRE(k5.g != nullptr);
    cm_run_stats stats{};
    REQUIRE(cm_run_heuristic(k5.g, "mim-both-srm", 0, &stats) == CM_OK);
    CHECK(stats.crossings == 1);
    CHECK(stats.time_us >= 0);

    GraphHandle k4(cm_graph_generate("complete:4"));
    REQUIRE(cm_run_heuristic(k4.g, "fix-none", 0, &stats) == CM_OK);
    CHECK(stats.crossings == 0);

    CHECK(cm_run_heuristic(k5.g, "bogus-config", 0, &stats) == CM_ERR_PARSE);
    CHECK(cm_run_heuristic(nullptr, "fix-none", 0, &stats) == CM_ERR_INVALID_ARGUMENT);
    CHECK(cm_run_heuristic(k5.g, "fix-none", 0, nullptr) == CM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cm_run_heuristic is deterministic per seed") {
    GraphHandle g(cm_graph_generate("cbip:4x4"));
    REQUIRE(g.g != nullptr);
    cm_run_stats a{}, b{};
    REQUIRE(cm_run_heuristic(g.g, "ccm-srm", 5, &a) == CM_OK);
    REQUIRE(cm_run_heuristic(g.g, "ccm-srm", 5, &b) == CM_OK);
    CHECK(a.crossings == b.crossings);
    CHECK(a.sweeps == b.sweeps);
}

TEST_CASE("cm_run_matrix writes a results CSV, cm_aggregate_csv groups it") {
    const char* results = "/tmp/crossmin_capi_results.csv";
    const char* agg = "/tmp/crossmin_capi_agg.csv";
    const char* best = "/tmp/crossmin_capi_best.csv";

    const char* instances[] = {"complete:5", "complete:4"};
    const char* configs[] = {"fix-none", "mim-both"};
    REQUIRE(cm_run_matrix(instances, 2, configs, 2, 3, 7, 2, results) == CM_OK);

    std::ifstream in(results);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "instance,config,seed,crossings,time_us,alpha_removed,beta_removed,sweeps");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == 2 * 2 * 3);

    REQUIRE(cm_aggregate_csv(results, agg, best) == CM_OK);
    std::ifstream ain(agg);
    std::getline(ain, header);
    CHECK(header == "instance,config,permutations,best,mean,relative_improvement");
    std::ifstream bin(best);
    std::getline(bin, header);
    CHECK(header == "instance,best");
    std::getline(bin, line);
    CHECK(line == "complete:4,0");
    std::getline(bin, line);
    CHECK(line == "complete:5,1");

    std::remove(results);
    std::remove(agg);
    std::remove(best);

    CHECK(cm_run_matrix(nullptr, 0, configs, 2, 1, 0, 1, results) == CM_ERR_INVALID_ARGUMENT);
    CHECK(cm_aggregate_csv("/nonexistent/in.csv", agg, nullptr) == CM_ERR_IO);
}

TEST_CASE("version string") {
    CHECK(std::string(cm_version()).find("crossmin") != std::string::npos);
}

#include "crossmin/crossmin.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <string>

#include "bench.hpp"
#include "graph.hpp"
#include "heuristics.hpp"
#include "instances.hpp"
#include "planarity.hpp"

using namespace crossmin;

namespace {

thread_local std::string tl_error;

void set_error(const std::string& msg) {
    tl_error = msg;
}

cm_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::InvalidArgument: return CM_ERR_INVALID_ARGUMENT;
        case ErrorCode::Structure: return CM_ERR_STRUCTURE;
        case ErrorCode::Parse: return CM_ERR_PARSE;
        case ErrorCode::Io: return CM_ERR_IO;
        case ErrorCode::Unsupported: return CM_ERR_UNSUPPORTED;
        case ErrorCode::Internal: return CM_ERR_INTERNAL;
    }
    return CM_ERR_INTERNAL;
}

template <typename Fn>
cm_status guarded(Fn&& fn) {
    try {
        fn();
        return CM_OK;
    } catch (const Error& e) {
        set_error(e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_error(e.what());
        return CM_ERR_INTERNAL;
    }
}

} // namespace

struct cm_graph {
    Graph g;
};

extern "C" {

const char* cm_version(void) {
    return "crossmin 1.0.0";
}

const char* cm_last_error(void) {
    return tl_error.c_str();
}

cm_graph* cm_graph_new(void) {
    return new (std::nothrow) cm_graph{};
}

void cm_graph_free(cm_graph* g) {
    delete g;
}

int32_t cm_graph_add_vertex(cm_graph* g) {
    if (!g) {
        set_error("null graph handle");
        return -1;
    }
    return g->g.add_vertex().value;
}

int32_t cm_graph_add_edge(cm_graph* g, int32_t u, int32_t v) {
    if (!g) {
        set_error("null graph handle");
        return -1;
    }
    int32_t out = -1;
    guarded([&] { out = g->g.add_edge(VertexId{u}, VertexId{v}).value; });
    return out;
}

cm_status cm_graph_delete_edge(cm_graph* g, int32_t e) {
    if (!g) {
        set_error("null graph handle");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { g->g.delete_edge(EdgeId{e}); });
}

cm_status cm_graph_delete_vertex(cm_graph* g, int32_t v) {
    if (!g) {
        set_error("null graph handle");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { g->g.delete_vertex(VertexId{v}); });
}

int32_t cm_graph_vertex_count(const cm_graph* g) {
    return g ? g->g.vertex_count() : -1;
}

int32_t cm_graph_edge_count(const cm_graph* g) {
    return g ? g->g.edge_count() : -1;
}

int32_t cm_graph_degree(const cm_graph* g, int32_t v) {
    if (!g) {
        set_error("null graph handle");
        return -1;
    }
    int32_t out = -1;
    guarded([&] { out = g->g.degree(VertexId{v}); });
    return out;
}

cm_status cm_graph_is_planar(const cm_graph* g, int32_t* out_planar) {
    if (!g || !out_planar) {
        set_error("null argument");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out_planar = is_planar(g->g) ? 1 : 0; });
}

cm_graph* cm_graph_generate(const char* spec) {
    if (!spec) {
        set_error("null spec");
        return nullptr;
    }
    cm_graph* out = nullptr;
    guarded([&] {
        InstanceSpec s = InstanceSpec::parse(spec);
        out = new cm_graph{s.build()};
    });
    return out;
}

cm_graph* cm_graph_read(const char* path) {
    if (!path) {
        set_error("null path");
        return nullptr;
    }
    cm_graph* out = nullptr;
    guarded([&] { out = new cm_graph{read_graph_file(path)}; });
    return out;
}

cm_status cm_graph_write(const cm_graph* g, const char* path) {
    if (!g || !path) {
        set_error("null argument");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { write_graph_file(g->g, path); });
}

cm_status cm_run_heuristic(const cm_graph* g, const char* config, uint64_t seed,
                           cm_run_stats* out) {
    if (!g || !config || !out) {
        set_error("null argument");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        HeuristicConfig cfg = HeuristicConfig::parse(config);
        InstanceInit init = prepare_instance(g->g);
        auto start = std::chrono::steady_clock::now();
        PipelineResult pr = run_pipeline(g->g, init, cfg, seed);
        auto stop = std::chrono::steady_clock::now();
        out->crossings = pr.stats.crossings;
        out->time_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        out->alpha_removed = pr.stats.alpha_removed;
        out->beta_removed = pr.stats.beta_removed;
        out->sweeps = pr.stats.sweeps;
    });
}

cm_status cm_run_matrix(const char* const* instance_specs, int32_t n_instances,
                        const char* const* configs, int32_t n_configs,
                        int32_t permutations, uint64_t master_seed, int32_t jobs,
                        const char* out_csv) {
    if (!instance_specs || !configs || !out_csv || n_instances <= 0 || n_configs <= 0) {
        set_error("null or empty argument");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::vector<InstanceSpec> instances;
        for (int32_t i = 0; i < n_instances; ++i)
            instances.push_back(InstanceSpec::parse(instance_specs[i]));
        std::vector<HeuristicConfig> cfgs;
        for (int32_t i = 0; i < n_configs; ++i)
            cfgs.push_back(HeuristicConfig::parse(configs[i]));

        MatrixOptions options;
        options.permutations = permutations;
        options.master_seed = master_seed;
        options.jobs = jobs;
        MatrixResult mr = run_matrix(instances, cfgs, options);

        std::ofstream out(out_csv, std::ios::binary);
        if (!out)
            throw Error(ErrorCode::Io, std::string("cannot open output CSV: ") + out_csv);
        emit_csv(mr.records, out);
        if (!out)
            throw Error(ErrorCode::Io, std::string("error writing output CSV: ") + out_csv);

        if (!mr.failures.empty())
            set_error("some runs failed, e.g. " + mr.failures.front());
        if (mr.records.empty() && !mr.failures.empty())
            throw Error(ErrorCode::Internal, "all runs failed: " + mr.failures.front());
    });
}

cm_status cm_aggregate_csv(const char* in_csv, const char* out_csv,
                           const char* best_csv_or_null) {
    if (!in_csv || !out_csv) {
        set_error("null argument");
        return CM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::ifstream in(in_csv);
        if (!in)
            throw Error(ErrorCode::Io, std::string("cannot open results CSV: ") + in_csv);
        auto records = read_records_csv(in);

        std::ofstream out(out_csv, std::ios::binary);
        if (!out)
            throw Error(ErrorCode::Io, std::string("cannot open output CSV: ") + out_csv);
        emit_csv(aggregate(records), out);

        if (best_csv_or_null) {
            std::ofstream bout(best_csv_or_null, std::ios::binary);
            if (!bout)
                throw Error(ErrorCode::Io,
                            std::string("cannot open best CSV: ") + best_csv_or_null);
            emit_best_csv(best_overall(records), bout);
        }
    });
}

} // extern "C"

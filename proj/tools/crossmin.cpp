// Command-line experiment runner for the crossmin library. Talks to the
// shared library through its C API only.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossmin/crossmin.h"

namespace {

int fail(const char* what) {
    std::fprintf(stderr, "crossmin: %s: %s\n", what, cm_last_error());
    return 1;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(s.c_str());
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossmin: crossing minimization heuristics over planarizations"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "Generate an instance and write it as a graph file");
    std::string gen_family, gen_out;
    int64_t gen_n = 0, gen_n1 = 0, gen_n2 = 0, gen_i = 0, gen_j = 0, gen_m = 0, gen_k = 0,
            gen_d = 0;
    uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family,
                    "complete | complete_bipartite | cycle_product | petersen | random_regular")
        ->required();
    gen->add_option("--out", gen_out, "Output graph file")->required();
    gen->add_option("--n", gen_n, "Vertices (complete, random_regular)");
    gen->add_option("--n1", gen_n1, "Left side (complete_bipartite)");
    gen->add_option("--n2", gen_n2, "Right side (complete_bipartite)");
    gen->add_option("--i", gen_i, "First cycle length (cycle_product)");
    gen->add_option("--j", gen_j, "Second cycle length (cycle_product)");
    gen->add_option("--m", gen_m, "Outer cycle length (petersen)");
    gen->add_option("--k", gen_k, "Inner step (petersen)");
    gen->add_option("--d", gen_d, "Degree (random_regular)");
    gen->add_option("--seed", gen_seed, "Generator seed (random_regular)");

    // ---- run ----
    auto* run = app.add_subcommand("run", "Run an instance x config x permutation matrix");
    std::vector<std::string> run_instances, run_configs;
    int32_t run_perms = 1, run_jobs = 0;
    uint64_t run_master_seed = 0;
    std::string run_out;
    run->add_option("--instances", run_instances,
                    "Instance specs (e.g. complete:8, cbip:4x4, rr:30x4x1) or graph files")
        ->required()
        ->expected(-1);
    run->add_option("--configs", run_configs,
                    "Heuristic configs (e.g. fix-none, fix-all, ccm-srm, mim-both-srm)")
        ->required()
        ->expected(-1);
    run->add_option("--perms", run_perms, "Permutations per (instance, config)")
        ->default_val(1);
    run->add_option("--out", run_out, "Output results CSV")->required();
    run->add_option("--master-seed", run_master_seed, "Master seed for the permutation batch")
        ->default_val(0);
    run->add_option("--jobs", run_jobs, "Parallel runs (0: $CROSSMIN_JOBS or hardware)")
        ->default_val(0);

    // ---- aggregate ----
    auto* agg = app.add_subcommand("aggregate", "Aggregate a results CSV per (instance, config)");
    std::string agg_in, agg_out, agg_best;
    agg->add_option("input", agg_in, "Results CSV from 'crossmin run'")->required();
    agg->add_option("--out", agg_out, "Output aggregate CSV")->required();
    agg->add_option("--best", agg_best, "Also write per-instance BEST CSV here");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        std::string spec;
        if (gen_family == "complete") {
            spec = "complete:" + std::to_string(gen_n);
        } else if (gen_family == "complete_bipartite") {
            spec = "complete_bipartite:" + std::to_string(gen_n1) + "x" + std::to_string(gen_n2);
        } else if (gen_family == "cycle_product") {
            spec = "cycle_product:" + std::to_string(gen_i) + "x" + std::to_string(gen_j);
        } else if (gen_family == "petersen") {
            spec = "petersen:" + std::to_string(gen_m) + "x" + std::to_string(gen_k);
        } else if (gen_family == "random_regular") {
            spec = "random_regular:" + std::to_string(gen_n) + "x" + std::to_string(gen_d) + "x" +
                   std::to_string(gen_seed);
        } else {
            std::fprintf(stderr, "crossmin: unknown family '%s'\n", gen_family.c_str());
            return 1;
        }
        cm_graph* g = cm_graph_generate(spec.c_str());
        if (!g)
            return fail("generation failed");
        if (cm_graph_write(g, gen_out.c_str()) != CM_OK) {
            cm_graph_free(g);
            return fail("write failed");
        }
        std::printf("%s: %d vertices, %d edges -> %s\n", spec.c_str(), cm_graph_vertex_count(g),
                    cm_graph_edge_count(g), gen_out.c_str());
        cm_graph_free(g);
        return 0;
    }

    if (run->parsed()) {
        auto instances = c_strings(run_instances);
        auto configs = c_strings(run_configs);
        cm_status st = cm_run_matrix(instances.data(), (int32_t)instances.size(), configs.data(),
                                     (int32_t)configs.size(), run_perms, run_master_seed, run_jobs,
                                     run_out.c_str());
        if (st != CM_OK)
            return fail("matrix run failed");
        if (cm_last_error()[0] != '\0')
            std::fprintf(stderr, "crossmin: warning: %s\n", cm_last_error());
        std::printf("results written to %s\n", run_out.c_str());
        return 0;
    }

    if (agg->parsed()) {
        cm_status st = cm_aggregate_csv(agg_in.c_str(), agg_out.c_str(),
                                        agg_best.empty() ? nullptr : agg_best.c_str());
        if (st != CM_OK)
            return fail("aggregation failed");
        std::printf("aggregates written to %s\n", agg_out.c_str());
        return 0;
    }

    return 0;
}

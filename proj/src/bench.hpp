#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heuristics.hpp"
#include "instances.hpp"

namespace crossmin {

struct RunRecord {
    std::string instance;
    std::string config;
    uint64_t seed = 0;  // permutation index within the batch
    int64_t crossings = 0;
    int64_t time_us = 0;
    int64_t alpha_removed = 0;
    int64_t beta_removed = 0;
    int64_t sweeps = 0;
};

struct AggregateRecord {
    std::string instance;
    std::string config;
    int64_t permutations = 0;
    int64_t best = 0;
    double mean = 0.0;
    double relative_improvement = 1.0;  // best / mean, 1.0 when mean == 0
};

struct MatrixOptions {
    int permutations = 1;
    uint64_t master_seed = 0;
    int jobs = 0;  // 0: CROSSMIN_JOBS env var, else hardware concurrency
};

struct MatrixResult {
    std::vector<RunRecord> records;   // ordered by (instance, config, seed)
    std::vector<std::string> failures;
};

/// Runs every (instance, config, seed in 0..permutations) combination.
/// Initialization (maximal planar subgraph, chordless cycle) is computed once
/// per instance and shared by all runs; wall time covers the heuristic only.
/// Per-run failures are recorded and the matrix continues.
MatrixResult run_matrix(const std::vector<InstanceSpec>& instances,
                        const std::vector<HeuristicConfig>& configs,
                        const MatrixOptions& options);

std::vector<AggregateRecord> aggregate(const std::vector<RunRecord>& records);

/// Per-instance minimum crossings over all configs and seeds.
std::vector<std::pair<std::string, int64_t>> best_overall(const std::vector<RunRecord>& records);

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out);
void emit_csv(const std::vector<AggregateRecord>& aggregates, std::ostream& out);
void emit_best_csv(const std::vector<std::pair<std::string, int64_t>>& best, std::ostream& out);

std::vector<RunRecord> read_records_csv(std::istream& in);

/// Seed fed to the run RNG for permutation index `perm` under a master seed.
uint64_t derive_run_seed(uint64_t master_seed, uint64_t perm);

} // namespace crossmin

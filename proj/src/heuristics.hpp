#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "insertion.hpp"
#include "planarization.hpp"

namespace crossmin {

enum class BaseHeuristic { PlmFix, Ccm, Mim };
enum class MimVariant { Random, HighG, LowG, HighF, LowF, Both };
enum class PlmPost { None, All, Inc };

/// Parsed form of a config string:
///   <base>[-<variant>][-<post>][-srm][-keepns]
/// e.g. "fix-none", "fix-all-srm", "ccm-srm", "mim-both", "mim-high_G-srm".
/// "fix" alone means fix-none, "mim" alone means mim-both. "-keepns" turns
/// off the removal of non-simple crossings (on by default).
struct HeuristicConfig {
    BaseHeuristic base = BaseHeuristic::PlmFix;
    MimVariant mim_variant = MimVariant::Both;
    PlmPost post = PlmPost::None;
    bool srm = false;
    bool remove_nonsimple = true;

    std::string to_string() const;
    static HeuristicConfig parse(const std::string& s);

    bool operator==(const HeuristicConfig&) const = default;
};

/// Shared per-instance initialization: all permutation runs of an instance
/// start from the same maximal planar subgraph and the same chordless cycle.
struct InstanceInit {
    std::vector<EdgeId> kept;
    std::vector<EdgeId> deleted;
    std::vector<VertexId> cycle;  // empty when the instance is acyclic
};

InstanceInit prepare_instance(const Graph& g);

struct RunStats {
    int64_t crossings = 0;
    int64_t alpha_removed = 0;
    int64_t beta_removed = 0;
    int64_t sweeps = 0;
};

struct PipelineResult {
    RunStats stats;
    Planarization plan;
};

/// One heuristic execution: builds the base planarization, applies srm when
/// configured, validates the result. Deterministic in (g, init, cfg, seed).
PipelineResult run_pipeline(const Graph& g, const InstanceInit& init,
                            const HeuristicConfig& cfg, uint64_t seed);

// Individual phases, exposed for direct testing.

Planarization plm_fix(const Graph& g, const InstanceInit& init, const HeuristicConfig& cfg,
                      std::mt19937_64& rng, RunStats& stats);
Planarization ccm(const Graph& g, const InstanceInit& init, const HeuristicConfig& cfg,
                  std::mt19937_64& rng, RunStats& stats);
Planarization mim(const Graph& g, const InstanceInit& init, const HeuristicConfig& cfg,
                  std::mt19937_64& rng, RunStats& stats);

/// Delete-and-reinsert sweeps over all currently embedded edges, repeated to
/// a fixpoint (capped at 100 sweeps). Crossings never increase.
void postprocess_all(Planarization& p, const HeuristicConfig& cfg, std::mt19937_64& rng,
                     RunStats& stats);

/// Star reinsertion sweeps: first improvement restarts the sweep with a fresh
/// permutation; equal-cost re-realizations are kept (never reset). Stops at a
/// local optimum.
void srm(Planarization& p, const HeuristicConfig& cfg, std::mt19937_64& rng, RunStats& stats);

} // namespace crossmin

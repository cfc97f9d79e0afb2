#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

namespace crossmin {

/// Planarity test with embedding extraction. Returns a rotation system whose
/// face structure satisfies Euler's formula on planar input, std::nullopt on
/// non-planar input. Works per biconnected block (face embedding of each
/// block, merged at cut vertices), so disconnected input is fine too.
std::optional<RotationSystem> test_planarity(const Graph& g);

bool is_planar(const Graph& g);

struct PlanarSubgraphResult {
    std::vector<EdgeId> kept;     // ascending edge id
    std::vector<EdgeId> deleted;  // in rejection order
};

/// Inclusion-wise maximal planar subgraph: edges are tried in an order_seed
/// shuffled order; an edge is kept iff adding it preserves planarity. Since
/// planarity is monotone under edge removal, a single pass is already maximal.
/// Requires g connected and simple.
PlanarSubgraphResult maximal_planar_subgraph(const Graph& g, uint64_t order_seed);

/// Some chordless cycle of g, as a cyclic vertex sequence: a fundamental
/// cycle of a BFS tree, shortcut across chords until none remain. Throws if
/// g is acyclic.
std::vector<VertexId> chordless_cycle(const Graph& g);

} // namespace crossmin

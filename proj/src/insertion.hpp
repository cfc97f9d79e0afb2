#pragma once

#include <cstdint>
#include <vector>

#include "planarization.hpp"

namespace crossmin {

/// Hop distances in the dual of the current host embedding, from the
/// contracted vertex of a source: all faces incident to the source's host
/// vertex start at distance 0 (the contraction is implicit, realized as a
/// multi-source BFS). dist is -1 for faces in other host components.
struct DualDistanceMap {
    std::vector<int32_t> dist;  // by FaceId
    std::vector<Dart> pred;     // dart crossed into the face; invalid on sources

    int32_t at(FaceId f) const { return dist[f]; }
};

DualDistanceMap dual_bfs(const Planarization& p, VertexId src_orig);

/// Optimal fixed-embedding edge insertion: BFS in the dual from v1's
/// contracted vertex; the path ends at the v2-incident face of minimum
/// distance (ties: lowest face id). If v1 and v2 lie in different host
/// components the result is a free join (zero crossings).
InsertionPath eif(const Planarization& p, VertexId v1, VertexId v2);

struct SifResult {
    FaceId face = -1;
    InsertionSpider spider;
    int cost = 0;
};

/// Optimal fixed-embedding star insertion: one BFS per ray from the far
/// endpoint's contracted vertex; the center face minimizes the distance sum
/// (ties: lowest face id). The spider's ray paths are extracted from a final
/// BFS rooted at that face, so all rays follow one predecessor tree and can
/// be realized without crossing each other.
SifResult sif(const Planarization& p, const Star& star);

} // namespace crossmin

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

namespace crossmin {

/// A vertex with a subset of its incident edges.
struct Star {
    VertexId center;
    std::vector<EdgeId> rays;
};

/// Face route for inserting one original edge: faces[0..k-1] with the host
/// dart crossed between consecutive faces. crossed[i] lies on the boundary of
/// faces[i] (the side the route comes from); crossing it leads to faces[i+1].
///
/// A route with two faces and no crossed dart is a free join: the endpoints
/// live in different host components and the edge reconnects them without
/// creating a crossing.
struct InsertionPath {
    std::vector<FaceId> faces;
    std::vector<Dart> crossed;
    uint64_t version = 0;  // planarization version this was computed against

    int crossings() const { return (int)crossed.size(); }
    bool is_free_join() const { return crossed.empty() && faces.size() == 2; }
};

/// One insertion path per ray, all ending at a common center face.
struct InsertionSpider {
    FaceId center_face = -1;
    std::vector<EdgeId> ray_edges;     // original edges, aligned with rays
    std::vector<InsertionPath> rays;   // traveler order: far endpoint -> center
    uint64_t version = 0;

    int cost() const {
        int c = 0;
        for (const auto& r : rays)
            c += r.crossings();
        return c;
    }
};

struct NonSimpleReport {
    struct BetaEntry {
        EdgeId e1, e2;                  // e1 < e2
        std::vector<VertexId> dummies;  // all crossings of this pair, >= 2
    };
    std::vector<VertexId> alphas;  // dummies whose two edges share an endpoint
    std::vector<BetaEntry> betas;

    bool empty() const { return alphas.empty() && betas.empty(); }
};

struct NonSimpleRemoved {
    int64_t alpha = 0;
    int64_t beta = 0;
    int64_t total() const { return alpha + beta; }
};

/// Planar host graph + embedding representing a drawing of the original
/// graph. Each original edge maps to a chain of host edges; each crossing is
/// a degree-4 dummy vertex shared by exactly two chains, with the two chains
/// alternating in its rotation.
///
/// Single-owner mutable; copy the object for independent runs.
class Planarization {
public:
    /// Host = the kept edges on all original vertices; no crossings.
    static Planarization from_planar_subgraph(const Graph& original, std::span<const EdgeId> kept);
    /// Host = an arbitrary planar subgraph on a vertex subset (ccm starts
    /// from a chordless cycle).
    static Planarization from_embedded_subgraph(const Graph& original,
                                                std::span<const VertexId> verts,
                                                std::span<const EdgeId> edges);

    const Graph& original() const { return *original_; }
    const Graph& host() const { return host_; }
    const RotationSystem& rotation() const { return rot_; }
    /// Face structure of the current host embedding (lazily recomputed).
    const FaceStructure& faces() const;
    uint64_t version() const { return version_; }

    bool vertex_embedded(VertexId orig_v) const { return host_of_[orig_v.value].valid(); }
    bool edge_embedded(EdgeId orig_e) const { return !chain_[orig_e.value].empty(); }
    VertexId host_of(VertexId orig_v) const { return host_of_[orig_v.value]; }
    /// Invalid id when host_v is a dummy.
    VertexId original_of(VertexId host_v) const { return orig_of_[host_v.value]; }
    bool is_dummy(VertexId host_v) const { return !orig_of_[host_v.value].valid(); }
    EdgeId origin(EdgeId host_e) const { return origin_[host_e.value]; }

    const std::vector<EdgeId>& chain(EdgeId orig_e) const { return chain_[orig_e.value]; }
    int chain_crossings(EdgeId orig_e) const {
        return edge_embedded(orig_e) ? (int)chain_[orig_e.value].size() - 1 : 0;
    }
    int crossing_count() const { return (int)dummies_.size(); }
    /// The two original edges crossing at a dummy.
    std::pair<EdgeId, EdgeId> crossing_pair(VertexId dummy) const;
    std::vector<VertexId> embedded_vertices() const;
    std::vector<EdgeId> embedded_edges() const;

    /// Inserts an unembedded original edge along the given route. One new
    /// dummy per crossed host edge. Throws on a stale route (version
    /// mismatch) or inconsistent endpoints.
    void realize_path(EdgeId orig_e, const InsertionPath& path);

    /// Places an unembedded original vertex inside the spider's center face
    /// and realizes all rays. All rays are routed along one predecessor tree
    /// (as produced by sif), which keeps them pairwise non-crossing;
    /// violations are detected while nesting the bundles and raise an error.
    /// Creates exactly spider.cost() dummies.
    void realize_spider(VertexId center_orig, const InsertionSpider& spider);

    /// Removes an embedded vertex with all chains of its incident original
    /// edges; dummies on those chains are smoothed away. Returns the number
    /// of crossings removed.
    int remove_star(VertexId orig_v);

    /// Removes one embedded edge's chain (endpoints stay embedded).
    /// Returns the number of crossings removed.
    int remove_chain(EdgeId orig_e);

    NonSimpleReport detect_nonsimple() const;
    /// Repeatedly removes alpha- and beta-crossings until none remain.
    /// Alpha removal re-splices the two adjacent chains (-1 crossing), beta
    /// removal swaps the chain segments between a bigon pair (-2 crossings).
    /// Chain segments change ownership in the process, which may surface new
    /// non-simple crossings; the loop runs to exhaustion.
    NonSimpleRemoved remove_nonsimple();

    /// All TYPE invariants; returns human-readable violations (empty = ok).
    std::vector<std::string> validate() const;

    /// Host edge list in the instances text format, chains appended as
    /// comment lines. For fixture tests.
    void debug_dump(std::ostream& os) const;

private:
    Planarization() = default;

    void grow_host_edge_maps();
    void grow_host_vertex_maps();
    void bump() { ++version_; }

    // Splits a host edge at a fresh dummy; near piece touches from_side.
    // The replaced darts at both former endpoints are reported so callers can
    // keep pre-split anchor darts usable.
    struct SplitResult {
        VertexId dummy;
        EdgeId near_edge;
        EdgeId far_edge;
        Dart replaced_from, replacement_from;
        Dart replaced_far, replacement_far;
    };
    SplitResult split_host_edge(EdgeId he, VertexId from_side);

    // Merges two host edges sharing the degree-2-to-be vertex mid into one
    // edge with the given chain origin; fixes rotations at the far ends.
    EdgeId merge_at(VertexId mid, EdgeId a, EdgeId b, EdgeId new_origin);

    // Rebuilds chain(orig_e) by walking host edges with origin == orig_e.
    void rebuild_chain(EdgeId orig_e);
    // Refreshes the registered crossing pair of every interior dummy of e's chain.
    void reregister_chain_dummies(EdgeId orig_e);

    std::vector<VertexId> chain_interior(EdgeId orig_e) const;

    void fix_alpha(VertexId dummy);
    void fix_beta(const NonSimpleReport::BetaEntry& entry);

    const Graph* original_ = nullptr;
    Graph host_;
    RotationSystem rot_;
    uint64_t version_ = 0;

    std::vector<std::vector<EdgeId>> chain_;  // by original edge id
    std::vector<EdgeId> origin_;              // by host edge id
    std::vector<VertexId> host_of_;           // by original vertex id
    std::vector<VertexId> orig_of_;           // by host vertex id
    std::map<VertexId, std::pair<EdgeId, EdgeId>> dummies_;  // dummy -> crossing pair (min,max)

    mutable FaceStructure faces_;
    mutable uint64_t faces_version_ = ~0ull;
};

} // namespace crossmin

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace crossmin {

/// Stable opaque handle for a vertex. Ids are never reused within one Graph.
struct VertexId {
    int32_t value = -1;

    bool valid() const { return value >= 0; }
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Stable opaque handle for an edge. Ids are never reused within one Graph.
struct EdgeId {
    int32_t value = -1;

    bool valid() const { return value >= 0; }
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Undirected multigraph with stable identifiers. Parallel edges and
/// self-loops are allowed (dual graphs need both). Deleting elements leaves
/// holes in the id space; ids are never compacted or reused, so chains in a
/// planarization can reference edges across arbitrarily many mutations.
///
/// A self-loop contributes 2 to the degree of its vertex and appears twice in
/// the incidence list.
class Graph {
public:
    Graph() = default;

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);
    void delete_edge(EdgeId e);
    /// Removes v and all incident edges.
    void delete_vertex(VertexId v);

    bool has_vertex(VertexId v) const {
        return v.value >= 0 && v.value < (int32_t)verts_.size() && verts_[v.value].alive;
    }
    bool has_edge(EdgeId e) const {
        return e.value >= 0 && e.value < (int32_t)edges_.size() && edges_[e.value].alive;
    }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
        require_edge(e);
        return {edges_[e.value].u, edges_[e.value].v};
    }
    VertexId source(EdgeId e) const { require_edge(e); return edges_[e.value].u; }
    VertexId target(EdgeId e) const { require_edge(e); return edges_[e.value].v; }
    bool is_loop(EdgeId e) const { require_edge(e); return edges_[e.value].u == edges_[e.value].v; }

    VertexId other_end(EdgeId e, VertexId v) const {
        auto [a, b] = endpoints(e);
        if (v == a) return b;
        if (v == b) return a;
        throw Error(ErrorCode::InvalidArgument, "vertex is not an endpoint of edge");
    }

    bool is_incident(EdgeId e, VertexId v) const {
        auto [a, b] = endpoints(e);
        return v == a || v == b;
    }

    int degree(VertexId v) const {
        require_vertex(v);
        return (int)verts_[v.value].incident.size();
    }

    /// Incident edges in insertion order; a self-loop appears twice.
    std::span<const EdgeId> incident_edges(VertexId v) const {
        require_vertex(v);
        return verts_[v.value].incident;
    }

    int vertex_count() const { return n_alive_; }
    int edge_count() const { return m_alive_; }

    /// Upper bound on vertex id values (for id-indexed arrays).
    int vertex_capacity() const { return (int)verts_.size(); }
    int edge_capacity() const { return (int)edges_.size(); }

    /// Alive vertices in ascending id order.
    std::vector<VertexId> vertices() const;
    /// Alive edges in ascending id order.
    std::vector<EdgeId> edges() const;

    /// Does v have an edge to w (loop counts for v == w)?
    bool adjacent(VertexId v, VertexId w) const;
    /// Some edge between v and w, or invalid id if none.
    EdgeId find_edge(VertexId v, VertexId w) const;

private:
    struct VertexRec {
        std::vector<EdgeId> incident;
        bool alive = false;
    };
    struct EdgeRec {
        VertexId u, v;
        bool alive = false;
    };

    void require_vertex(VertexId v) const {
        if (!has_vertex(v))
            throw Error(ErrorCode::Structure, "unknown vertex id");
    }
    void require_edge(EdgeId e) const {
        if (!has_edge(e))
            throw Error(ErrorCode::Structure, "unknown edge id");
    }
    void remove_from_incidence(VertexId v, EdgeId e);

    std::vector<VertexRec> verts_;
    std::vector<EdgeRec> edges_;
    int n_alive_ = 0;
    int m_alive_ = 0;
};

/// Number of edges in the set F that are incident to v. A self-loop in F
/// counts once (set membership, not degree contribution).
int degree_in_subset(const Graph& g, VertexId v, std::span<const EdgeId> subset);

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, ascending ids within each.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Vertices whose removal disconnects g. Requires g connected.
std::vector<VertexId> cut_vertices(const Graph& g);

/// Partition of E(g) into biconnected components (blocks). A bridge or a
/// self-loop forms its own block. Works on disconnected graphs.
std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g);

} // namespace crossmin

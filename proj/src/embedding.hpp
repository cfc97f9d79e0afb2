#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"

namespace crossmin {

using FaceId = int32_t;

/// One of the two directed sides of an undirected edge. end == 0 means the
/// dart's tail is the stored source of the edge, end == 1 the stored target.
struct Dart {
    EdgeId edge;
    int8_t end = 0;

    bool valid() const { return edge.valid(); }
    Dart twin() const { return Dart{edge, (int8_t)(1 - end)}; }
    /// Dense key for dart-indexed arrays.
    int key() const { return edge.value * 2 + end; }

    friend auto operator<=>(const Dart&, const Dart&) = default;
};

inline VertexId dart_tail(const Graph& g, Dart d) {
    return d.end == 0 ? g.source(d.edge) : g.target(d.edge);
}
inline VertexId dart_head(const Graph& g, Dart d) {
    return d.end == 0 ? g.target(d.edge) : g.source(d.edge);
}

/// Cyclic order of outgoing darts around each vertex. Together with the graph
/// this is a combinatorial embedding; faces are derived by orbit traversal.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(int vertex_capacity) : rot_(vertex_capacity) {}

    void ensure_vertex(VertexId v) {
        if ((size_t)v.value >= rot_.size())
            rot_.resize(v.value + 1);
    }

    std::span<const Dart> at(VertexId v) const { return rot_[v.value]; }
    std::vector<Dart>& mutable_at(VertexId v) { ensure_vertex(v); return rot_[v.value]; }

    void set(VertexId v, std::vector<Dart> order) {
        ensure_vertex(v);
        rot_[v.value] = std::move(order);
    }
    void append(VertexId v, Dart d) { mutable_at(v).push_back(d); }

    /// Insert nd into the cyclic order directly before pos.
    void insert_before(VertexId v, Dart pos, Dart nd);
    /// Insert nd into the cyclic order directly after pos.
    void insert_after(VertexId v, Dart pos, Dart nd);
    /// Replace old_d by nd at the same cyclic position.
    void replace(VertexId v, Dart old_d, Dart nd);
    void remove(VertexId v, Dart d);
    void clear_vertex(VertexId v) { mutable_at(v).clear(); }

    bool contains(VertexId v, Dart d) const;
    int size() const { return (int)rot_.size(); }

private:
    size_t index_of(VertexId v, Dart d) const;

    std::vector<std::vector<Dart>> rot_;
};

/// Faces of an embedding: orbits of the permutation
///   succ(d) = rotation-successor of twin(d) at twin(d)'s tail.
/// Every alive dart lies on exactly one face boundary.
struct FaceStructure {
    int face_count = 0;
    std::vector<FaceId> face_of;              // by dart key, -1 for dead darts
    std::vector<std::vector<Dart>> boundary;  // orbit order per face
    std::vector<std::vector<Dart>> boundary_sorted; // ascending (edge, end) per face

    FaceId face_of_dart(Dart d) const { return face_of[d.key()]; }
    int degree(FaceId f) const { return (int)boundary[f].size(); }

    /// Faces incident to v (deduplicated, ascending), derived from v's rotation.
    std::vector<FaceId> faces_at(const Graph& g, const RotationSystem& rot, VertexId v) const;
    /// Vertices visited by the boundary walk of f (with repetitions).
    std::vector<VertexId> boundary_vertices(const Graph& g, FaceId f) const;
};

/// Derives the face structure from a rotation system. Throws if the rotation
/// system is inconsistent with the graph (missing or duplicated darts).
FaceStructure compute_faces(const Graph& g, const RotationSystem& rot);

/// Genus-0 certificate: n - m + f == 2 on every connected component with at
/// least one edge. This is what makes a rotation system a *planar* embedding.
bool euler_formula_holds(const Graph& g, const FaceStructure& fs);
void require_planar_embedding(const Graph& g, const FaceStructure& fs);

/// Face-adjacency graph. Dual vertex ids correspond 1:1 to FaceIds in order;
/// one dual edge per primal edge (a self-loop when both sides of the primal
/// edge see the same face).
struct DualGraph {
    Graph graph;
    std::vector<VertexId> vertex_of_face;  // FaceId -> dual vertex
    std::vector<EdgeId> primal_of;         // dual edge id -> primal edge
    std::vector<EdgeId> dual_of;           // primal edge id -> dual edge
};

DualGraph build_dual(const Graph& g, const FaceStructure& fs);

} // namespace crossmin

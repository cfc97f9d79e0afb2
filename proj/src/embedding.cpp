#include "embedding.hpp"

#include <algorithm>

namespace crossmin {

size_t RotationSystem::index_of(VertexId v, Dart d) const {
    const auto& order = rot_[v.value];
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == d)
            return i;
    throw Error(ErrorCode::Internal, "dart not present in rotation");
}

void RotationSystem::insert_before(VertexId v, Dart pos, Dart nd) {
    auto& order = mutable_at(v);
    order.insert(order.begin() + index_of(v, pos), nd);
}

void RotationSystem::insert_after(VertexId v, Dart pos, Dart nd) {
    auto& order = mutable_at(v);
    order.insert(order.begin() + index_of(v, pos) + 1, nd);
}

void RotationSystem::replace(VertexId v, Dart old_d, Dart nd) {
    auto& order = mutable_at(v);
    order[index_of(v, old_d)] = nd;
}

void RotationSystem::remove(VertexId v, Dart d) {
    auto& order = mutable_at(v);
    order.erase(order.begin() + index_of(v, d));
}

bool RotationSystem::contains(VertexId v, Dart d) const {
    if ((size_t)v.value >= rot_.size())
        return false;
    const auto& order = rot_[v.value];
    return std::find(order.begin(), order.end(), d) != order.end();
}

std::vector<FaceId> FaceStructure::faces_at(const Graph& g, const RotationSystem& rot,
                                            VertexId v) const {
    (void)g;
    std::vector<FaceId> out;
    for (Dart d : rot.at(v))
        out.push_back(face_of[d.key()]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> FaceStructure::boundary_vertices(const Graph& g, FaceId f) const {
    std::vector<VertexId> out;
    out.reserve(boundary[f].size());
    for (Dart d : boundary[f])
        out.push_back(dart_tail(g, d));
    return out;
}

FaceStructure compute_faces(const Graph& g, const RotationSystem& rot) {
    const int dart_cap = g.edge_capacity() * 2;

    // Position of each dart within its tail's rotation, for O(1) successor.
    std::vector<int32_t> pos(dart_cap, -1);
    for (VertexId v : g.vertices()) {
        auto order = (size_t)v.value < (size_t)rot.size() ? rot.at(v) : std::span<const Dart>{};
        if ((int)order.size() != g.degree(v))
            throw Error(ErrorCode::Structure, "rotation size does not match degree");
        for (size_t i = 0; i < order.size(); ++i) {
            Dart d = order[i];
            if (!g.has_edge(d.edge) || dart_tail(g, d) != v)
                throw Error(ErrorCode::Structure, "rotation contains foreign dart");
            if (pos[d.key()] != -1)
                throw Error(ErrorCode::Structure, "dart duplicated in rotation");
            pos[d.key()] = (int32_t)i;
        }
    }

    auto succ = [&](Dart d) {
        Dart t = d.twin();
        VertexId v = dart_tail(g, t);
        auto order = rot.at(v);
        return order[(pos[t.key()] + 1) % order.size()];
    };

    FaceStructure fs;
    fs.face_of.assign(dart_cap, -1);
    for (EdgeId e : g.edges()) {
        for (int end = 0; end < 2; ++end) {
            Dart start{e, (int8_t)end};
            if (fs.face_of[start.key()] != -1)
                continue;
            FaceId f = fs.face_count++;
            std::vector<Dart> orbit;
            Dart d = start;
            do {
                fs.face_of[d.key()] = f;
                orbit.push_back(d);
                d = succ(d);
            } while (d != start);
            fs.boundary.push_back(std::move(orbit));
        }
    }
    fs.boundary_sorted = fs.boundary;
    for (auto& b : fs.boundary_sorted)
        std::sort(b.begin(), b.end());
    return fs;
}

bool euler_formula_holds(const Graph& g, const FaceStructure& fs) {
    // Component labels for vertices.
    auto comps = connected_components(g);
    std::vector<int> comp_of(g.vertex_capacity(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c])
            comp_of[v.value] = (int)c;

    std::vector<int64_t> n(comps.size(), 0), m(comps.size(), 0), f(comps.size(), 0);
    for (size_t c = 0; c < comps.size(); ++c)
        n[c] = (int64_t)comps[c].size();
    for (EdgeId e : g.edges())
        ++m[comp_of[g.source(e).value]];
    for (FaceId fid = 0; fid < fs.face_count; ++fid)
        ++f[comp_of[dart_tail(g, fs.boundary[fid][0]).value]];

    for (size_t c = 0; c < comps.size(); ++c) {
        if (m[c] == 0)
            continue; // isolated vertex, trivially planar
        if (n[c] - m[c] + f[c] != 2)
            return false;
    }
    return true;
}

void require_planar_embedding(const Graph& g, const FaceStructure& fs) {
    if (!euler_formula_holds(g, fs))
        throw Error(ErrorCode::Structure, "rotation system is not a planar embedding (Euler check failed)");
}

DualGraph build_dual(const Graph& g, const FaceStructure& fs) {
    DualGraph dual;
    dual.vertex_of_face.reserve(fs.face_count);
    for (FaceId f = 0; f < fs.face_count; ++f)
        dual.vertex_of_face.push_back(dual.graph.add_vertex());
    dual.dual_of.assign(g.edge_capacity(), EdgeId{});
    for (EdgeId e : g.edges()) {
        FaceId left = fs.face_of_dart(Dart{e, 0});
        FaceId right = fs.face_of_dart(Dart{e, 1});
        EdgeId de = dual.graph.add_edge(dual.vertex_of_face[left], dual.vertex_of_face[right]);
        check((size_t)de.value == dual.primal_of.size(), "dual edge ids dense");
        dual.primal_of.push_back(e);
        dual.dual_of[e.value] = de;
    }
    return dual;
}

} // namespace crossmin

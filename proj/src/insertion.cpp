#include "insertion.hpp"

#include <algorithm>

namespace crossmin {

namespace {

// Multi-source BFS over faces. Exploration scans each face's boundary darts
// in ascending (edge, end) order; together with ascending source seeding this
// fixes all ties.
DualDistanceMap face_bfs(const Planarization& p, std::vector<FaceId> sources) {
    const FaceStructure& fs = p.faces();
    DualDistanceMap map;
    map.dist.assign(fs.face_count, -1);
    map.pred.assign(fs.face_count, Dart{});

    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    std::vector<FaceId> queue;
    for (FaceId f : sources) {
        map.dist[f] = 0;
        queue.push_back(f);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        FaceId f = queue[qi];
        for (Dart d : fs.boundary_sorted[f]) {
            FaceId g = fs.face_of_dart(d.twin());
            if (map.dist[g] == -1) {
                map.dist[g] = map.dist[f] + 1;
                map.pred[g] = d;
                queue.push_back(g);
            }
        }
    }
    return map;
}

std::vector<FaceId> faces_at_host_vertex(const Planarization& p, VertexId hv) {
    const FaceStructure& fs = p.faces();
    std::vector<FaceId> out;
    for (Dart d : p.rotation().at(hv))
        out.push_back(fs.face_of_dart(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexId require_embedded(const Planarization& p, VertexId orig_v) {
    VertexId hv = p.host_of(orig_v);
    if (!hv.valid())
        throw Error(ErrorCode::Structure, "vertex not embedded in planarization");
    return hv;
}

} // namespace

DualDistanceMap dual_bfs(const Planarization& p, VertexId src_orig) {
    VertexId hv = require_embedded(p, src_orig);
    auto sources = faces_at_host_vertex(p, hv);
    if (sources.empty())
        throw Error(ErrorCode::Structure, "source vertex is isolated in the host");
    return face_bfs(p, sources);
}

InsertionPath eif(const Planarization& p, VertexId v1, VertexId v2) {
    if (v1 == v2)
        throw Error(ErrorCode::InvalidArgument, "edge insertion endpoints coincide");
    VertexId h1 = require_embedded(p, v1);
    VertexId h2 = require_embedded(p, v2);

    DualDistanceMap map = dual_bfs(p, v1);
    auto targets = faces_at_host_vertex(p, h2);
    if (targets.empty())
        throw Error(ErrorCode::Structure, "target vertex is isolated in the host");

    FaceId best = -1;
    for (FaceId f : targets)
        if (map.dist[f] >= 0 && (best == -1 || map.dist[f] < map.dist[best]))
            best = f;

    InsertionPath path;
    path.version = p.version();
    if (best == -1) {
        // Different host components; reconnect with a free join.
        path.faces = {faces_at_host_vertex(p, h1).front(), targets.front()};
        return path;
    }

    FaceId f = best;
    while (map.pred[f].valid()) {
        path.crossed.push_back(map.pred[f]);
        f = p.faces().face_of_dart(map.pred[f]);
    }
    std::reverse(path.crossed.begin(), path.crossed.end());
    path.faces.push_back(f);
    for (Dart d : path.crossed)
        path.faces.push_back(p.faces().face_of_dart(d.twin()));
    check((int)path.faces.back() == best, "path reconstruction reaches the target face");
    return path;
}

SifResult sif(const Planarization& p, const Star& star) {
    if (star.rays.empty())
        throw Error(ErrorCode::InvalidArgument, "star insertion without rays");
    if (p.host_of(star.center).valid())
        throw Error(ErrorCode::Structure, "star center already embedded");

    std::vector<EdgeId> rays(star.rays.begin(), star.rays.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    const FaceStructure& fs = p.faces();
    std::vector<VertexId> far_host(rays.size());
    std::vector<DualDistanceMap> maps;
    maps.reserve(rays.size());
    for (size_t j = 0; j < rays.size(); ++j) {
        VertexId far = p.original().other_end(rays[j], star.center);
        far_host[j] = require_embedded(p, far);
        maps.push_back(dual_bfs(p, far));
    }

    // Minimum distance sum over all faces.
    FaceId best = -1;
    int64_t best_sum = -1;
    for (FaceId f = 0; f < fs.face_count; ++f) {
        int64_t sum = 0;
        bool ok = true;
        for (const auto& m : maps) {
            if (m.dist[f] < 0) {
                ok = false;
                break;
            }
            sum += m.dist[f];
        }
        if (ok && (best == -1 || sum < best_sum)) {
            best = f;
            best_sum = sum;
        }
    }
    if (best == -1)
        throw Error(ErrorCode::Structure, "no face reaches all ray endpoints (host disconnected)");

    // Final BFS from the chosen face; every ray path follows its tree.
    DualDistanceMap tree = face_bfs(p, {best});

    SifResult result;
    result.face = best;
    result.cost = (int)best_sum;
    result.spider.center_face = best;
    result.spider.version = p.version();
    for (size_t j = 0; j < rays.size(); ++j) {
        auto targets = faces_at_host_vertex(p, far_host[j]);
        FaceId g = -1;
        for (FaceId f : targets)
            if (tree.dist[f] >= 0 && (g == -1 || tree.dist[f] < tree.dist[g]))
                g = f;
        check(g != -1 && tree.dist[g] == maps[j].dist[best],
              "final BFS agrees with the per-ray distance maps");

        InsertionPath path;
        path.version = p.version();
        // Walk from the ray's start face down the tree to the center face.
        FaceId f = g;
        path.faces.push_back(f);
        while (tree.pred[f].valid()) {
            path.crossed.push_back(tree.pred[f].twin());
            f = fs.face_of_dart(tree.pred[f]);
            path.faces.push_back(f);
        }
        check(path.faces.back() == best, "ray path ends at the center face");
        result.spider.ray_edges.push_back(rays[j]);
        result.spider.rays.push_back(std::move(path));
    }
    return result;
}

} // namespace crossmin

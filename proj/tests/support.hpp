// Shared test helpers: independent brute-force oracles and random graph
// generators. Everything here is deliberately naive; these are the reference
// answers the implementation is checked against.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "planarization.hpp"

namespace crossmin::testsupport {

// ---------------------------------------------------------------------------
// small-graph connectivity oracles

inline bool connected_ignoring(const Graph& g, VertexId skip) {
    std::vector<VertexId> vs;
    for (VertexId v : g.vertices())
        if (v != skip)
            vs.push_back(v);
    if (vs.empty())
        return true;
    std::set<VertexId> seen{vs[0]};
    std::vector<VertexId> stack{vs[0]};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident_edges(v)) {
            VertexId w = g.other_end(e, v);
            if (w == skip || seen.count(w))
                continue;
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen.size() == vs.size();
}

inline std::vector<VertexId> brute_cut_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v : g.vertices())
        if (!connected_ignoring(g, v))
            out.push_back(v);
    return out;
}

// All simple cycles (as edge sets), by DFS path enumeration. Exponential;
// use on tiny graphs only.
inline std::vector<std::set<EdgeId>> all_simple_cycles(const Graph& g) {
    std::vector<std::set<EdgeId>> cycles;
    std::set<std::set<EdgeId>> dedup;
    auto vs = g.vertices();
    std::vector<EdgeId> path_edges;
    std::vector<VertexId> path_verts;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId cur) {
        for (EdgeId e : g.incident_edges(cur)) {
            if (!path_edges.empty() && e == path_edges.back())
                continue;
            VertexId nxt = g.other_end(e, cur);
            if (nxt == start && path_edges.size() >= 1) {
                std::set<EdgeId> cyc(path_edges.begin(), path_edges.end());
                cyc.insert(e);
                if (cyc.size() >= 2 || g.is_loop(e))
                    if (dedup.insert(cyc).second)
                        cycles.push_back(cyc);
                continue;
            }
            if (std::find(path_verts.begin(), path_verts.end(), nxt) != path_verts.end())
                continue;
            if (nxt < start)
                continue; // canonical: cycles enumerated from their smallest vertex
            path_edges.push_back(e);
            path_verts.push_back(nxt);
            dfs(start, nxt);
            path_edges.pop_back();
            path_verts.pop_back();
        }
    };
    for (VertexId v : vs) {
        path_verts = {v};
        path_edges.clear();
        dfs(v, v);
    }
    return cycles;
}

// Blocks via "two edges share a block iff they lie on a common simple cycle";
// bridges and loops end up as singleton blocks.
inline std::vector<std::set<EdgeId>> brute_biconnected_components(const Graph& g) {
    auto cycles = all_simple_cycles(g);
    auto edges = g.edges();
    std::map<EdgeId, int> comp;
    int next = 0;
    for (EdgeId e : edges)
        comp[e] = next++;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& cyc : cycles) {
            int target = -1;
            for (EdgeId e : cyc)
                target = target == -1 ? comp[e] : std::min(target, comp[e]);
            for (EdgeId e : cyc)
                if (comp[e] != target) {
                    comp[e] = target;
                    changed = true;
                }
        }
    }
    std::map<int, std::set<EdgeId>> by_comp;
    for (EdgeId e : edges)
        by_comp[comp[e]].insert(e);
    std::vector<std::set<EdgeId>> out;
    for (auto& [_, s] : by_comp)
        out.push_back(std::move(s));
    return out;
}

// ---------------------------------------------------------------------------
// Kuratowski subdivision search: planarity oracle for simple graphs with few
// vertices (independent of the embedding-based test under scrutiny).

struct SubdivisionSearcher {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<char> used;  // vertex used as branch vertex or path interior

    explicit SubdivisionSearcher(const Graph& g) : n(g.vertex_capacity()) {
        adj.assign(n, std::vector<char>(n, 0));
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.endpoints(e);
            if (u != v)
                adj[u.value][v.value] = adj[v.value][u.value] = 1;
        }
        used.assign(n, 0);
    }

    // Internally disjoint path from a to b whose interior uses only unused
    // non-branch vertices; tries all, recursing into the next pair on success.
    bool connect(const std::vector<std::pair<int, int>>& pairs, size_t idx) {
        if (idx == pairs.size())
            return true;
        auto [a, b] = pairs[idx];
        std::vector<int> interior;
        std::function<bool(int)> extend = [&](int cur) -> bool {
            if (adj[cur][b]) {
                if (connect(pairs, idx + 1))
                    return true;
            }
            for (int x = 0; x < n; ++x) {
                if (used[x] || !adj[cur][x])
                    continue;
                used[x] = 1;
                interior.push_back(x);
                if (extend(x))
                    return true;
                interior.pop_back();
                used[x] = 0;
            }
            return false;
        };
        return extend(a);
    }

    bool search(const std::vector<int>& branches, const std::vector<std::pair<int, int>>& pairs) {
        std::fill(used.begin(), used.end(), 0);
        for (int b : branches)
            used[b] = 1;
        return connect(pairs, 0);
    }
};

inline bool has_k5_subdivision(const Graph& g) {
    SubdivisionSearcher s(g);
    std::vector<int> verts;
    for (VertexId v : g.vertices())
        if (g.degree(v) >= 4)
            verts.push_back(v.value);
    int k = (int)verts.size();
    if (k < 5)
        return false;
    std::vector<int> idx(5);
    std::function<bool(int, int)> choose = [&](int pos, int from) -> bool {
        if (pos == 5) {
            std::vector<int> branches{verts[idx[0]], verts[idx[1]], verts[idx[2]], verts[idx[3]],
                                      verts[idx[4]]};
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    pairs.emplace_back(branches[i], branches[j]);
            return s.search(branches, pairs);
        }
        for (int i = from; i < k; ++i) {
            idx[pos] = i;
            if (choose(pos + 1, i + 1))
                return true;
        }
        return false;
    };
    return choose(0, 0);
}

inline bool has_k33_subdivision(const Graph& g) {
    SubdivisionSearcher s(g);
    std::vector<int> verts;
    for (VertexId v : g.vertices())
        if (g.degree(v) >= 3)
            verts.push_back(v.value);
    int k = (int)verts.size();
    if (k < 6)
        return false;
    std::vector<int> sel(6);
    // choose 6 vertices, then split them into two sides in all ways with the
    // first selected vertex pinned to side A
    std::function<bool(int, int)> choose = [&](int pos, int from) -> bool {
        if (pos == 6) {
            std::vector<int> six{verts[sel[0]], verts[sel[1]], verts[sel[2]],
                                 verts[sel[3]], verts[sel[4]], verts[sel[5]]};
            // pick 2 partners for six[0]
            for (int i = 1; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) {
                    std::vector<int> a{six[0], six[i], six[j]}, b;
                    for (int t = 1; t < 6; ++t)
                        if (t != i && t != j)
                            b.push_back(six[t]);
                    std::vector<std::pair<int, int>> pairs;
                    for (int x : a)
                        for (int y : b)
                            pairs.emplace_back(x, y);
                    if (s.search(six, pairs))
                        return true;
                }
            }
            return false;
        }
        for (int i = from; i < k; ++i) {
            sel[pos] = i;
            if (choose(pos + 1, i + 1))
                return true;
        }
        return false;
    };
    return choose(0, 0);
}

/// Kuratowski: planar iff no K5- and no K33-subdivision. Simple graphs only.
inline bool brute_planar(const Graph& g) {
    return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

// ---------------------------------------------------------------------------
// random graphs

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    Graph g;
    std::vector<VertexId> vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(g.add_vertex());
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                g.add_edge(vs[i], vs[j]);
    return g;
}

inline Graph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
    for (;;) {
        Graph g = gnp(n, p, rng);
        if (is_connected(g))
            return g;
    }
}

// Random planar graph: random stacked triangulation (Apollonian-style), then
// random edge deletions. Planar by construction.
inline Graph random_planar(int n, int deletions, std::mt19937_64& rng) {
    Graph g;
    std::vector<VertexId> vs;
    for (int i = 0; i < std::max(n, 3); ++i)
        vs.push_back(g.add_vertex());
    g.add_edge(vs[0], vs[1]);
    g.add_edge(vs[1], vs[2]);
    g.add_edge(vs[0], vs[2]);
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int i = 3; i < (int)vs.size(); ++i) {
        size_t f = rng() % faces.size();
        auto [a, b, c] = faces[f];
        g.add_edge(vs[i], vs[a]);
        g.add_edge(vs[i], vs[b]);
        g.add_edge(vs[i], vs[c]);
        faces.erase(faces.begin() + f);
        faces.push_back({a, b, i});
        faces.push_back({a, c, i});
        faces.push_back({b, c, i});
    }
    for (int d = 0; d < deletions && g.edge_count() > 0; ++d) {
        auto edges = g.edges();
        g.delete_edge(edges[rng() % edges.size()]);
    }
    return g;
}

// ---------------------------------------------------------------------------
// brute-force dual distances (naive relaxation over face pairs)

inline std::vector<std::vector<int>> face_apsp(const Planarization& p) {
    FaceStructure fs = compute_faces(p.host(), p.rotation());
    DualGraph dual = build_dual(p.host(), fs);
    const int f = fs.face_count;
    const int INF = 1 << 28;
    std::vector<std::vector<int>> dist(f, std::vector<int>(f, INF));
    for (int i = 0; i < f; ++i)
        dist[i][i] = 0;
    for (EdgeId de : dual.graph.edges()) {
        auto [a, b] = dual.graph.endpoints(de);
        dist[a.value][b.value] = std::min(dist[a.value][b.value], a == b ? 0 : 1);
        dist[b.value][a.value] = dist[a.value][b.value];
    }
    for (int k = 0; k < f; ++k)
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j)
                if (dist[i][k] + dist[k][j] < dist[i][j])
                    dist[i][j] = dist[i][k] + dist[k][j];
    return dist;
}

inline std::vector<FaceId> faces_of_vertex(const Planarization& p, VertexId orig_v) {
    FaceStructure fs = compute_faces(p.host(), p.rotation());
    std::vector<FaceId> out;
    for (Dart d : p.rotation().at(p.host_of(orig_v)))
        out.push_back(fs.face_of_dart(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline int brute_eif_cost(const Planarization& p, VertexId v1, VertexId v2) {
    auto dist = face_apsp(p);
    int best = 1 << 28;
    for (FaceId f1 : faces_of_vertex(p, v1))
        for (FaceId f2 : faces_of_vertex(p, v2))
            best = std::min(best, dist[f1][f2]);
    return best;
}

inline int brute_sif_cost(const Planarization& p, const Star& star) {
    auto dist = face_apsp(p);
    const int INF = 1 << 28;
    int fcount = (int)dist.size();
    int best = INF;
    for (FaceId f = 0; f < fcount; ++f) {
        int sum = 0;
        for (EdgeId ray : star.rays) {
            VertexId w = p.original().other_end(ray, star.center);
            int d = INF;
            for (FaceId fw : faces_of_vertex(p, w))
                d = std::min(d, dist[fw][f]);
            if (d >= INF) {
                sum = INF;
                break;
            }
            sum += d;
        }
        best = std::min(best, sum);
    }
    return best;
}

// ---------------------------------------------------------------------------
// known crossing numbers (computed here, independently of any library code)

inline int64_t guy_complete_crossings(int64_t n) {
    return (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4;
}

inline int64_t zarankiewicz_crossings(int64_t m, int64_t n) {
    return (m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2);
}

} // namespace crossmin::testsupport

#include "planarity.hpp"

#include <algorithm>
#include <random>

namespace crossmin {

namespace {

// Face orbits over the darts currently present in rot (the embedded subgraph
// during an incremental embedding). The full compute_faces validates against
// vertex degrees; here the rotation is authoritative.
FaceStructure faces_of_partial(const Graph& g, const RotationSystem& rot,
                               const std::vector<VertexId>& verts) {
    const int dart_cap = g.edge_capacity() * 2;
    std::vector<int32_t> pos(dart_cap, -1);
    for (VertexId v : verts) {
        auto order = rot.at(v);
        for (size_t i = 0; i < order.size(); ++i)
            pos[order[i].key()] = (int32_t)i;
    }
    auto succ = [&](Dart d) {
        Dart t = d.twin();
        VertexId v = dart_tail(g, t);
        auto order = rot.at(v);
        return order[(pos[t.key()] + 1) % order.size()];
    };

    FaceStructure fs;
    fs.face_of.assign(dart_cap, -1);
    for (VertexId v : verts) {
        for (Dart start : rot.at(v)) {
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
    return fs;
}

// Face-based incremental planarity for one 2-connected block, given as a
// subgraph copy. Produces the rotation system, or false if non-planar.
// Classic bridge/admissible-face scheme: start from a cycle, repeatedly embed
// a path of a bridge with the fewest admissible faces.
bool embed_block(const Graph& sub, RotationSystem& rot) {
    const int n = sub.vertex_count();
    const int m = sub.edge_count();
    auto verts = sub.vertices();
    auto all_edges = sub.edges();

    // Quick rejection for simple graphs.
    bool simple = true;
    for (EdgeId e : all_edges) {
        if (sub.is_loop(e)) { simple = false; break; }
        auto [u, v] = sub.endpoints(e);
        for (EdgeId f : sub.incident_edges(u))
            if (f != e && sub.other_end(f, u) == v) { simple = false; break; }
        if (!simple) break;
    }
    if (simple && n >= 3 && m > 3 * n - 6)
        return false;

    std::vector<char> v_emb(sub.vertex_capacity(), 0);
    std::vector<char> e_emb(sub.edge_capacity(), 0);
    int edges_left = m;

    // Initial cycle: BFS tree, first non-tree edge, meet-by-depth walk.
    {
        std::vector<int> depth(sub.vertex_capacity(), -1);
        std::vector<EdgeId> parent(sub.vertex_capacity(), EdgeId{});
        std::vector<VertexId> queue{verts.front()};
        depth[verts.front().value] = 0;
        std::vector<VertexId> cyc_verts;
        std::vector<EdgeId> cyc_edges;
        for (size_t qi = 0; qi < queue.size() && cyc_verts.empty(); ++qi) {
            VertexId v = queue[qi];
            for (EdgeId e : sub.incident_edges(v)) {
                if (e == parent[v.value])
                    continue;
                VertexId w = sub.other_end(e, v);
                if (depth[w.value] == -1) {
                    depth[w.value] = depth[v.value] + 1;
                    parent[w.value] = e;
                    queue.push_back(w);
                    continue;
                }
                // Non-tree edge (v, w); fundamental cycle via the tree paths.
                std::vector<VertexId> pv{v}, pw{w};
                std::vector<EdgeId> ev, ew;
                VertexId a = v, b = w;
                while (a != b) {
                    if (depth[a.value] >= depth[b.value]) {
                        ev.push_back(parent[a.value]);
                        a = sub.other_end(parent[a.value], a);
                        pv.push_back(a);
                    } else {
                        ew.push_back(parent[b.value]);
                        b = sub.other_end(parent[b.value], b);
                        pw.push_back(b);
                    }
                }
                // Cycle: v ..up.. lca ..down.. w, closed by e.
                cyc_verts = pv;
                cyc_edges = ev;
                for (size_t i = pw.size() - 1; i > 0; --i) {
                    cyc_verts.push_back(pw[i - 1]);
                    cyc_edges.push_back(ew[i - 1]);
                }
                cyc_edges.push_back(e);
                break;
            }
        }
        check(cyc_verts.size() >= 2 && cyc_verts.size() == cyc_edges.size(),
              "2-connected block contains a cycle");

        for (size_t i = 0; i < cyc_verts.size(); ++i) {
            VertexId a = cyc_verts[i];
            EdgeId to_prev = cyc_edges[i == 0 ? cyc_edges.size() - 1 : i - 1];
            EdgeId to_next = cyc_edges[i];
            Dart d_next{to_next, (int8_t)(sub.source(to_next) == a ? 0 : 1)};
            Dart d_prev{to_prev, (int8_t)(sub.source(to_prev) == a ? 0 : 1)};
            rot.set(a, {d_next, d_prev});
            v_emb[a.value] = 1;
        }
        for (EdgeId e : cyc_edges) {
            e_emb[e.value] = 1;
            --edges_left;
        }
    }

    std::vector<VertexId> emb_verts;
    auto refresh_emb_verts = [&]() {
        emb_verts.clear();
        for (VertexId v : verts)
            if (v_emb[v.value])
                emb_verts.push_back(v);
    };

    while (edges_left > 0) {
        refresh_emb_verts();
        FaceStructure fs = faces_of_partial(sub, rot, emb_verts);

        // Vertex sets per face for admissibility tests.
        std::vector<std::vector<char>> face_has(fs.face_count,
                                                std::vector<char>(sub.vertex_capacity(), 0));
        for (FaceId f = 0; f < fs.face_count; ++f)
            for (Dart d : fs.boundary[f])
                face_has[f][dart_tail(sub, d).value] = 1;

        // Bridges: equivalence over non-embedded edges joined at non-embedded
        // vertices.
        std::vector<int> bridge_of(sub.edge_capacity(), -1);
        std::vector<std::vector<EdgeId>> bridges;
        for (EdgeId e0 : all_edges) {
            if (e_emb[e0.value] || bridge_of[e0.value] != -1)
                continue;
            int id = (int)bridges.size();
            bridges.emplace_back();
            std::vector<EdgeId> queue{e0};
            bridge_of[e0.value] = id;
            while (!queue.empty()) {
                EdgeId e = queue.back();
                queue.pop_back();
                bridges[id].push_back(e);
                auto [a, b] = sub.endpoints(e);
                for (VertexId x : {a, b}) {
                    if (v_emb[x.value])
                        continue;
                    for (EdgeId f2 : sub.incident_edges(x)) {
                        if (!e_emb[f2.value] && bridge_of[f2.value] == -1) {
                            bridge_of[f2.value] = id;
                            queue.push_back(f2);
                        }
                    }
                }
            }
            std::sort(bridges[id].begin(), bridges[id].end());
        }

        // Choose the bridge with the fewest admissible faces.
        int best_bridge = -1;
        FaceId best_face = -1;
        size_t best_count = SIZE_MAX;
        for (int bi = 0; bi < (int)bridges.size(); ++bi) {
            // Attachments: embedded endpoints of bridge edges.
            std::vector<VertexId> attach;
            for (EdgeId e : bridges[bi]) {
                auto [a, b] = sub.endpoints(e);
                for (VertexId x : {a, b})
                    if (v_emb[x.value])
                        attach.push_back(x);
            }
            std::sort(attach.begin(), attach.end());
            attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
            check(attach.size() >= 2, "bridge of a 2-connected block has >= 2 attachments");

            size_t count = 0;
            FaceId first = -1;
            for (FaceId f = 0; f < fs.face_count; ++f) {
                bool ok = true;
                for (VertexId a : attach)
                    if (!face_has[f][a.value]) { ok = false; break; }
                if (ok) {
                    ++count;
                    if (first == -1)
                        first = f;
                }
            }
            if (count == 0)
                return false; // some bridge fits nowhere
            if (count < best_count) {
                best_count = count;
                best_bridge = bi;
                best_face = first;
            }
        }
        check(best_bridge >= 0, "at least one bridge pending");

        // Alpha-path between two attachments of the chosen bridge: BFS over
        // bridge edges, interior through non-embedded vertices only.
        const auto& bredges = bridges[best_bridge];
        std::vector<char> in_bridge(sub.edge_capacity(), 0);
        for (EdgeId e : bredges)
            in_bridge[e.value] = 1;
        VertexId start{-1};
        for (EdgeId e : bredges) {
            auto [a, b] = sub.endpoints(e);
            for (VertexId x : {a, b})
                if (v_emb[x.value] && (!start.valid() || x < start))
                    start = x;
        }

        std::vector<EdgeId> pred(sub.vertex_capacity(), EdgeId{});
        std::vector<char> visited(sub.vertex_capacity(), 0);
        visited[start.value] = 1;
        std::vector<VertexId> queue{start};
        VertexId goal{-1};
        for (size_t qi = 0; qi < queue.size() && !goal.valid(); ++qi) {
            VertexId x = queue[qi];
            if (x != start && v_emb[x.value])
                continue; // attachment reached; do not expand through it
            for (EdgeId e : sub.incident_edges(x)) {
                if (!in_bridge[e.value])
                    continue;
                VertexId y = sub.other_end(e, x);
                if (visited[y.value])
                    continue;
                visited[y.value] = 1;
                pred[y.value] = e;
                if (v_emb[y.value]) {
                    goal = y;
                    break;
                }
                queue.push_back(y);
            }
        }
        check(goal.valid(), "alpha-path exists inside bridge");

        std::vector<EdgeId> path_edges;
        {
            VertexId x = goal;
            while (x != start) {
                EdgeId e = pred[x.value];
                path_edges.push_back(e);
                x = sub.other_end(e, x);
            }
            std::reverse(path_edges.begin(), path_edges.end());
        }

        // Corner darts of the chosen face at both path ends.
        auto corner_at = [&](VertexId v) {
            for (Dart d : fs.boundary[best_face])
                if (dart_tail(sub, d) == v)
                    return d;
            throw Error(ErrorCode::Internal, "attachment not on admissible face");
        };
        Dart corner_start = corner_at(start);
        Dart corner_goal = corner_at(goal);

        // Splice the path into the rotation system.
        VertexId cur = start;
        for (size_t i = 0; i < path_edges.size(); ++i) {
            EdgeId e = path_edges[i];
            VertexId nxt = sub.other_end(e, cur);
            Dart d_out{e, (int8_t)(sub.source(e) == cur ? 0 : 1)};
            Dart d_in = d_out.twin();
            if (cur == start) {
                rot.insert_before(cur, corner_start, d_out);
            } else {
                rot.append(cur, d_out); // interior vertex, second dart
            }
            if (nxt == goal) {
                rot.insert_before(nxt, corner_goal, d_in);
            } else {
                rot.set(nxt, {d_in});
                v_emb[nxt.value] = 1;
            }
            e_emb[e.value] = 1;
            --edges_left;
            cur = nxt;
        }
    }
    return true;
}

} // namespace

std::optional<RotationSystem> test_planarity(const Graph& g) {
    RotationSystem rot(g.vertex_capacity());
    for (VertexId v : g.vertices())
        rot.ensure_vertex(v);

    auto blocks = biconnected_components(g);
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            EdgeId e = block[0];
            auto [u, v] = g.endpoints(e);
            if (u == v) {
                rot.append(u, Dart{e, 0});
                rot.append(u, Dart{e, 1}); // loop darts adjacent: one extra face
            } else {
                rot.append(u, Dart{e, (int8_t)(g.source(e) == u ? 0 : 1)});
                rot.append(v, Dart{e, (int8_t)(g.source(e) == v ? 0 : 1)});
            }
            continue;
        }

        // Copy the block into a compact subgraph.
        std::vector<VertexId> bverts;
        for (EdgeId e : block) {
            auto [u, v] = g.endpoints(e);
            bverts.push_back(u);
            bverts.push_back(v);
        }
        std::sort(bverts.begin(), bverts.end());
        bverts.erase(std::unique(bverts.begin(), bverts.end()), bverts.end());

        Graph sub;
        std::vector<int32_t> to_sub(g.vertex_capacity(), -1);
        for (VertexId v : bverts)
            to_sub[v.value] = sub.add_vertex().value;
        for (EdgeId e : block)
            sub.add_edge(VertexId{to_sub[g.source(e).value]}, VertexId{to_sub[g.target(e).value]});

        RotationSystem srot(sub.vertex_capacity());
        if (!embed_block(sub, srot))
            return std::nullopt;

        // Translate the block rotation back to g's ids and append; each
        // block's darts stay contiguous at shared (cut) vertices.
        for (size_t i = 0; i < bverts.size(); ++i) {
            VertexId v = bverts[i];
            for (Dart d : srot.at(VertexId{(int32_t)i}))
                rot.append(v, Dart{block[d.edge.value], d.end});
        }
    }
    return rot;
}

bool is_planar(const Graph& g) {
    return test_planarity(g).has_value();
}

PlanarSubgraphResult maximal_planar_subgraph(const Graph& g, uint64_t order_seed) {
    if (!is_connected(g))
        throw Error(ErrorCode::InvalidArgument, "maximal_planar_subgraph requires a connected graph");
    for (EdgeId e : g.edges())
        if (g.is_loop(e))
            throw Error(ErrorCode::InvalidArgument, "maximal_planar_subgraph requires a simple graph");

    std::vector<EdgeId> order = g.edges();
    std::mt19937_64 rng(order_seed);
    std::shuffle(order.begin(), order.end(), rng);

    Graph h;
    std::vector<int32_t> to_h(g.vertex_capacity(), -1);
    int n = 0;
    for (VertexId v : g.vertices()) {
        to_h[v.value] = h.add_vertex().value;
        ++n;
    }

    PlanarSubgraphResult result;
    int kept_edges = 0;
    for (EdgeId e : order) {
        // A graph on fewer than 9 edges is always planar; beyond 3n-6 never.
        if (n >= 3 && kept_edges + 1 > 3 * n - 6) {
            result.deleted.push_back(e);
            continue;
        }
        EdgeId he = h.add_edge(VertexId{to_h[g.source(e).value]}, VertexId{to_h[g.target(e).value]});
        if (kept_edges + 1 >= 9 && !is_planar(h)) {
            h.delete_edge(he);
            result.deleted.push_back(e);
        } else {
            result.kept.push_back(e);
            ++kept_edges;
        }
    }
    std::sort(result.kept.begin(), result.kept.end());
    return result;
}

std::vector<VertexId> chordless_cycle(const Graph& g) {
    // Fundamental cycle from a BFS tree.
    std::vector<VertexId> cycle;
    std::vector<int> depth(g.vertex_capacity(), -1);
    std::vector<EdgeId> parent(g.vertex_capacity(), EdgeId{});
    for (VertexId root : g.vertices()) {
        if (depth[root.value] != -1 || !cycle.empty())
            break;
        depth[root.value] = 0;
        std::vector<VertexId> queue{root};
        for (size_t qi = 0; qi < queue.size() && cycle.empty(); ++qi) {
            VertexId v = queue[qi];
            for (EdgeId e : g.incident_edges(v)) {
                if (e == parent[v.value])
                    continue;
                VertexId w = g.other_end(e, v);
                if (w == v)
                    continue; // chordless cycles are about simple structure; skip loops
                if (depth[w.value] == -1) {
                    depth[w.value] = depth[v.value] + 1;
                    parent[w.value] = e;
                    queue.push_back(w);
                } else {
                    // Non-tree edge: walk both endpoints up to the meeting point.
                    std::vector<VertexId> pv{v}, pw{w};
                    VertexId a = v, b = w;
                    while (a != b) {
                        if (depth[a.value] >= depth[b.value]) {
                            a = g.other_end(parent[a.value], a);
                            pv.push_back(a);
                        } else {
                            b = g.other_end(parent[b.value], b);
                            pw.push_back(b);
                        }
                    }
                    cycle.assign(pv.begin(), pv.end());
                    for (auto it = pw.rbegin(); it != pw.rend(); ++it)
                        if (*it != a)
                            cycle.push_back(*it);
                    break;
                }
            }
        }
    }
    if (cycle.empty())
        throw Error(ErrorCode::InvalidArgument, "graph is acyclic: no chordless cycle exists");

    // Shortcut across chords until none remain; the cycle strictly shrinks.
    for (;;) {
        const int len = (int)cycle.size();
        if (len == 3)
            break;
        std::vector<int> pos(g.vertex_capacity(), -1);
        for (int i = 0; i < len; ++i)
            pos[cycle[i].value] = i;

        bool found = false;
        for (int i = 0; i < len && !found; ++i) {
            VertexId v = cycle[i];
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                int j = w.value < (int)pos.size() ? pos[w.value] : -1;
                if (j == -1 || w == v)
                    continue;
                int d = std::abs(j - i);
                if (d == 0 || d == 1 || d == len - 1)
                    continue; // cycle edge or same vertex
                // Chord between positions i and j: keep the shorter arc.
                int lo = std::min(i, j), hi = std::max(i, j);
                std::vector<VertexId> inner(cycle.begin() + lo, cycle.begin() + hi + 1);
                std::vector<VertexId> outer;
                for (int k = hi; k != lo; k = (k + 1) % len)
                    outer.push_back(cycle[k]);
                outer.push_back(cycle[lo]);
                cycle = inner.size() <= outer.size() ? inner : outer;
                found = true;
                break;
            }
        }
        if (!found)
            break;
    }
    return cycle;
}

} // namespace crossmin

#include "planarization.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "planarity.hpp"

namespace crossmin {

namespace {

std::pair<EdgeId, EdgeId> norm_pair(EdgeId a, EdgeId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

// ---------------------------------------------------------------------------
// construction

Planarization Planarization::from_embedded_subgraph(const Graph& original,
                                                    std::span<const VertexId> verts,
                                                    std::span<const EdgeId> edges) {
    Planarization p;
    p.original_ = &original;
    p.host_of_.assign(original.vertex_capacity(), VertexId{});
    p.chain_.assign(original.edge_capacity(), {});

    std::vector<VertexId> vs(verts.begin(), verts.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VertexId v : vs) {
        if (!original.has_vertex(v))
            throw Error(ErrorCode::Structure, "unknown vertex in subgraph");
        VertexId hv = p.host_.add_vertex();
        p.host_of_[v.value] = hv;
        p.orig_of_.push_back(v);
    }

    std::vector<EdgeId> es(edges.begin(), edges.end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (EdgeId e : es) {
        auto [u, w] = original.endpoints(e);
        if (!p.host_of_[u.value].valid() || !p.host_of_[w.value].valid())
            throw Error(ErrorCode::Structure, "subgraph edge endpoint outside vertex set");
        EdgeId he = p.host_.add_edge(p.host_of_[u.value], p.host_of_[w.value]);
        p.origin_.push_back(e);
        p.chain_[e.value] = {he};
    }

    auto rot = test_planarity(p.host_);
    if (!rot)
        throw Error(ErrorCode::InvalidArgument, "subgraph is not planar");
    p.rot_ = std::move(*rot);
    for (VertexId v : p.host_.vertices())
        p.rot_.ensure_vertex(v);
    p.bump();
    return p;
}

Planarization Planarization::from_planar_subgraph(const Graph& original,
                                                  std::span<const EdgeId> kept) {
    return from_embedded_subgraph(original, original.vertices(), kept);
}

const FaceStructure& Planarization::faces() const {
    if (faces_version_ != version_) {
        faces_ = compute_faces(host_, rot_);
        faces_version_ = version_;
    }
    return faces_;
}

void Planarization::grow_host_edge_maps() {
    origin_.resize(host_.edge_capacity(), EdgeId{});
}

void Planarization::grow_host_vertex_maps() {
    orig_of_.resize(host_.vertex_capacity(), VertexId{});
}

std::pair<EdgeId, EdgeId> Planarization::crossing_pair(VertexId dummy) const {
    auto it = dummies_.find(dummy);
    if (it == dummies_.end())
        throw Error(ErrorCode::Structure, "vertex is not a dummy");
    return it->second;
}

std::vector<VertexId> Planarization::embedded_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : original_->vertices())
        if (host_of_[v.value].valid())
            out.push_back(v);
    return out;
}

std::vector<EdgeId> Planarization::embedded_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e : original_->edges())
        if (!chain_[e.value].empty())
            out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// low-level host surgery

namespace {

Dart dart_at(const Graph& g, EdgeId e, VertexId v) {
    check(!g.is_loop(e), "host chains contain no loops");
    return Dart{e, (int8_t)(g.source(e) == v ? 0 : 1)};
}

} // namespace

Planarization::SplitResult Planarization::split_host_edge(EdgeId he, VertexId from_side) {
    VertexId far = host_.other_end(he, from_side);
    EdgeId o = origin_[he.value];

    VertexId dv = host_.add_vertex();
    grow_host_vertex_maps();
    rot_.ensure_vertex(dv);

    Dart from_dart = dart_at(host_, he, from_side);
    Dart far_dart = dart_at(host_, he, far);

    EdgeId near_e = host_.add_edge(from_side, dv); // stored (from_side, dv)
    EdgeId far_e = host_.add_edge(dv, far);        // stored (dv, far)
    grow_host_edge_maps();
    origin_[near_e.value] = o;
    origin_[far_e.value] = o;

    rot_.replace(from_side, from_dart, Dart{near_e, 0});
    rot_.replace(far, far_dart, Dart{far_e, 1});
    rot_.set(dv, {Dart{near_e, 1}, Dart{far_e, 0}});

    host_.delete_edge(he);
    return SplitResult{dv,        near_e,           far_e,
                       from_dart, Dart{near_e, 0},  far_dart, Dart{far_e, 1}};
}

EdgeId Planarization::merge_at(VertexId mid, EdgeId a, EdgeId b, EdgeId new_origin) {
    VertexId x = host_.other_end(a, mid);
    VertexId y = host_.other_end(b, mid);
    check(x != mid && y != mid && x != y, "smoothing never forms a loop");

    EdgeId m = host_.add_edge(x, y); // stored (x, y)
    grow_host_edge_maps();
    origin_[m.value] = new_origin;

    rot_.replace(x, dart_at(host_, a, x), Dart{m, 0});
    rot_.replace(y, dart_at(host_, b, y), Dart{m, 1});
    rot_.remove(mid, dart_at(host_, a, mid));
    rot_.remove(mid, dart_at(host_, b, mid));

    host_.delete_edge(a);
    host_.delete_edge(b);
    return m;
}

void Planarization::rebuild_chain(EdgeId orig_e) {
    VertexId cur = host_of_[original_->source(orig_e).value];
    VertexId goal = host_of_[original_->target(orig_e).value];
    check(cur.valid() && goal.valid(), "chain endpoints embedded");

    std::vector<EdgeId> walk;
    EdgeId prev{};
    int guard = host_.edge_count() + 1;
    while (true) {
        EdgeId next{};
        for (EdgeId he : host_.incident_edges(cur)) {
            if (he != prev && origin_[he.value] == orig_e) {
                check(!next.valid(), "chain branches");
                next = he;
            }
        }
        if (!next.valid())
            break;
        walk.push_back(next);
        cur = host_.other_end(next, cur);
        prev = next;
        if (cur == goal)
            break;
        check(--guard > 0, "chain walk terminates");
    }
    check(!walk.empty() && cur == goal, "chain connects its endpoints");
    chain_[orig_e.value] = std::move(walk);
}

std::vector<VertexId> Planarization::chain_interior(EdgeId orig_e) const {
    const auto& ch = chain_[orig_e.value];
    std::vector<VertexId> out;
    if (ch.empty())
        return out;
    VertexId cur = host_of_[original_->source(orig_e).value];
    for (size_t i = 0; i + 1 < ch.size(); ++i) {
        cur = host_.other_end(ch[i], cur);
        out.push_back(cur);
    }
    return out;
}

void Planarization::reregister_chain_dummies(EdgeId orig_e) {
    for (VertexId dv : chain_interior(orig_e)) {
        EdgeId other{};
        for (EdgeId he : host_.incident_edges(dv)) {
            if (origin_[he.value] != orig_e) {
                check(!other.valid() || other == origin_[he.value], "dummy joins exactly two chains");
                other = origin_[he.value];
            }
        }
        check(other.valid(), "dummy has a second chain");
        dummies_[dv] = norm_pair(orig_e, other);
    }
}

// ---------------------------------------------------------------------------
// edge insertion

void Planarization::realize_path(EdgeId orig_e, const InsertionPath& path) {
    if (path.version != version_)
        throw Error(ErrorCode::InvalidArgument, "stale insertion path (embedding changed)");
    if (!original_->has_edge(orig_e) || edge_embedded(orig_e))
        throw Error(ErrorCode::Structure, "edge missing or already embedded");
    VertexId u = host_of_[original_->source(orig_e).value];
    VertexId w = host_of_[original_->target(orig_e).value];
    if (!u.valid() || !w.valid())
        throw Error(ErrorCode::Structure, "edge endpoints not embedded");
    if (u == w)
        throw Error(ErrorCode::Unsupported, "self-loop insertion");

    if (path.is_free_join()) {
        // Endpoints in different host components; reconnect without crossing.
        EdgeId he = host_.add_edge(u, w);
        grow_host_edge_maps();
        origin_[he.value] = orig_e;
        auto attach = [&](VertexId v, Dart d) {
            auto& order = rot_.mutable_at(v);
            order.insert(order.begin(), d);
        };
        attach(u, Dart{he, 0});
        attach(w, Dart{he, 1});
        chain_[orig_e.value] = {he};
        bump();
        return;
    }

    if (path.faces.empty() || path.crossed.size() + 1 != path.faces.size())
        throw Error(ErrorCode::InvalidArgument, "malformed insertion path");

    const FaceStructure& fs = faces();
    auto corner = [&](FaceId f, VertexId v) {
        for (Dart d : fs.boundary[f])
            if (dart_tail(host_, d) == v)
                return d;
        throw Error(ErrorCode::InvalidArgument, "path face not incident to endpoint");
    };
    Dart corner_u = corner(path.faces.front(), u);
    Dart corner_w = corner(path.faces.back(), w);

    for (size_t i = 0; i < path.crossed.size(); ++i) {
        Dart c = path.crossed[i];
        if (!host_.has_edge(c.edge) || fs.face_of_dart(c) != path.faces[i] ||
            fs.face_of_dart(c.twin()) != path.faces[i + 1])
            throw Error(ErrorCode::InvalidArgument, "insertion path inconsistent with embedding");
    }

    // The corner darts (and, for hand-built routes, in/out anchors) can be
    // replaced by later splits; keep them resolvable.
    std::map<Dart, Dart> renamed;
    auto resolve = [&](Dart d) {
        auto it = renamed.find(d);
        while (it != renamed.end()) {
            d = it->second;
            it = renamed.find(d);
        }
        return d;
    };

    std::vector<EdgeId> affected;
    VertexId prev = u;
    Dart prev_out_anchor{};  // dart after which the outgoing chain dart goes
    for (size_t i = 0; i < path.crossed.size(); ++i) {
        Dart c = path.crossed[i];  // tail a, head b; source face on the (a->b) side
        EdgeId o = origin_[c.edge.value];
        affected.push_back(o);

        // Split from head(c): near piece touches b, far piece touches a.
        SplitResult sp = split_host_edge(c.edge, dart_head(host_, c));
        renamed[sp.replaced_from] = sp.replacement_from;
        renamed[sp.replaced_far] = sp.replacement_far;
        Dart toward_a{sp.far_edge, 0};
        Dart toward_b{sp.near_edge, 1};

        EdgeId ce = host_.add_edge(prev, sp.dummy);
        grow_host_edge_maps();
        origin_[ce.value] = orig_e;
        if (prev == u)
            rot_.insert_before(u, resolve(corner_u), Dart{ce, 0});
        else
            rot_.insert_after(prev, prev_out_anchor, Dart{ce, 0});
        // Corner (toward_a -> toward_b) lies in the source face: in after
        // toward_a, out after toward_b.
        rot_.insert_after(sp.dummy, toward_a, Dart{ce, 1});

        dummies_[sp.dummy] = norm_pair(orig_e, o);
        prev = sp.dummy;
        prev_out_anchor = toward_b;
    }

    EdgeId fe = host_.add_edge(prev, w);
    grow_host_edge_maps();
    origin_[fe.value] = orig_e;
    if (prev == u)
        rot_.insert_before(u, resolve(corner_u), Dart{fe, 0});
    else
        rot_.insert_after(prev, prev_out_anchor, Dart{fe, 0});
    rot_.insert_before(w, resolve(corner_w), Dart{fe, 1});

    bump();
    rebuild_chain(orig_e);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (EdgeId o : affected)
        rebuild_chain(o);
}

// ---------------------------------------------------------------------------
// star insertion (bundle realization along the spider's predecessor tree)

void Planarization::realize_spider(VertexId center_orig, const InsertionSpider& spider) {
    if (spider.version != version_)
        throw Error(ErrorCode::InvalidArgument, "stale insertion spider (embedding changed)");
    if (!original_->has_vertex(center_orig) || host_of_[center_orig.value].valid())
        throw Error(ErrorCode::Structure, "spider center missing or already embedded");
    if (spider.rays.empty() || spider.rays.size() != spider.ray_edges.size())
        throw Error(ErrorCode::InvalidArgument, "spider without rays");

    const FaceStructure& fs = faces();
    const int nrays = (int)spider.rays.size();

    // Corner dart of each ray's start face at its far endpoint.
    std::vector<Dart> corner(nrays);
    std::map<Dart, int> corner_ray;
    for (int j = 0; j < nrays; ++j) {
        EdgeId re = spider.ray_edges[j];
        if (edge_embedded(re))
            throw Error(ErrorCode::Structure, "ray edge already embedded");
        VertexId far_orig = original_->other_end(re, center_orig);
        VertexId far = host_of_[far_orig.value];
        if (!far.valid())
            throw Error(ErrorCode::Structure, "ray far endpoint not embedded");
        const InsertionPath& path = spider.rays[j];
        if (path.faces.empty() || path.faces.back() != spider.center_face ||
            path.crossed.size() + 1 != path.faces.size())
            throw Error(ErrorCode::InvalidArgument, "ray path does not end at the center face");
        for (size_t i = 0; i < path.crossed.size(); ++i) {
            Dart c = path.crossed[i];
            if (!host_.has_edge(c.edge) || fs.face_of_dart(c) != path.faces[i] ||
                fs.face_of_dart(c.twin()) != path.faces[i + 1])
                throw Error(ErrorCode::InvalidArgument, "ray path inconsistent with embedding");
        }
        Dart cd{};
        for (Dart d : fs.boundary[path.faces.front()]) {
            if (dart_tail(host_, d) == far) {
                cd = d;
                break;
            }
        }
        if (!cd.valid())
            throw Error(ErrorCode::InvalidArgument, "ray start face not incident to far endpoint");
        corner[j] = cd;
        corner_ray[cd] = j;
    }

    // Ports: the crossings grouped by the dart seen from the face nearer the
    // center ("parent side"). All rays must cross a shared edge in the same
    // direction, otherwise the paths do not follow one tree.
    struct PortUse {
        int ray;
        int index; // crossing index on the ray's path
    };
    std::map<Dart, std::vector<PortUse>> ports;
    for (int j = 0; j < nrays; ++j) {
        const auto& crossed = spider.rays[j].crossed;
        for (size_t i = 0; i < crossed.size(); ++i)
            ports[crossed[i].twin()].push_back(PortUse{j, (int)i});
    }
    for (const auto& entry : ports)
        if (ports.count(entry.first.twin()))
            throw Error(ErrorCode::InvalidArgument,
                        "spider paths cross a shared edge in opposite directions");

    // Nesting: scan each used face's boundary once, recursing into child
    // ports. The resulting order per port is the dummy order along the
    // crossed edge from tail(port dart); the order at the center face is the
    // rotation of the rays around the new vertex.
    std::map<Dart, std::vector<int>> lambda;
    auto orbit_index = [&](FaceId f, Dart d) -> int {
        const auto& bd = fs.boundary[f];
        for (size_t i = 0; i < bd.size(); ++i)
            if (bd[i] == d)
                return (int)i;
        return -1;
    };
    std::function<std::vector<int>(FaceId, Dart)> scan = [&](FaceId f, Dart entry) {
        const auto& bd = fs.boundary[f];
        int start = 0, count = (int)bd.size();
        if (entry.valid()) {
            int pos = orbit_index(f, entry);
            check(pos >= 0, "port twin lies on the child face");
            start = pos + 1;
            count -= 1;
        }
        std::vector<int> out;
        for (int k = 0; k < count; ++k) {
            Dart x = bd[(start + k) % bd.size()];
            auto cit = corner_ray.find(x);
            if (cit != corner_ray.end())
                out.push_back(cit->second);
            auto pit = ports.find(x);
            if (pit != ports.end()) {
                auto sub = scan(fs.face_of_dart(x.twin()), x.twin());
                lambda[x] = sub;
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
        return out;
    };
    std::vector<int> sigma = scan(spider.center_face, Dart{});
    {
        std::vector<char> seen(nrays, 0);
        if ((int)sigma.size() != nrays)
            throw Error(ErrorCode::InvalidArgument, "spider paths pairwise crossing (not one tree)");
        for (int j : sigma) {
            if (seen[j])
                throw Error(ErrorCode::InvalidArgument, "spider paths pairwise crossing (ray duplicated)");
            seen[j] = 1;
        }
    }
    for (const auto& [pd, uses] : ports)
        if (!lambda.count(pd))
            throw Error(ErrorCode::InvalidArgument, "spider paths pairwise crossing (unreachable port)");

    // The boundary scan runs against the rotation orientation at the center:
    // the rotation there is its mirror. Port slot orders follow the boundary
    // walk itself and are used as scanned.
    std::reverse(sigma.begin(), sigma.end());

    // Subdivide each port's host edge, one dummy per ray crossing it, in
    // lambda order from tail(port dart). Anchors can be replaced by later
    // splits (cascading port splits, or ports on edges incident to some ray's
    // far endpoint), so keep a rename map.
    std::map<Dart, Dart> renamed;
    auto resolve = [&](Dart d) {
        auto it = renamed.find(d);
        while (it != renamed.end()) {
            d = it->second;
            it = renamed.find(d);
        }
        return d;
    };

    struct Crossing {
        VertexId dummy;
        Dart in_anchor;   // toward tail(crossed dart): the source-face gap
        Dart out_anchor;  // toward head(crossed dart): the target-face gap
    };
    std::vector<std::vector<Crossing>> ray_cross(nrays);
    for (int j = 0; j < nrays; ++j)
        ray_cross[j].resize(spider.rays[j].crossed.size());

    std::vector<EdgeId> affected;
    int created = 0;
    for (const auto& [pd, uses] : ports) {
        std::map<int, int> index_of_ray;
        for (const PortUse& pu : uses) {
            check(!index_of_ray.count(pu.ray), "a ray crosses a port once");
            index_of_ray[pu.ray] = pu.index;
        }
        const std::vector<int>& order = lambda[pd];
        check(order.size() == uses.size(), "lambda covers the port");

        // The ray travels child -> parent, i.e. it crosses twin(pd); the
        // child/source face lies on the far (head-of-twin) side of the split.
        EdgeId o = origin_[pd.edge.value];
        affected.push_back(o);
        EdgeId cur = pd.edge;
        VertexId from = dart_tail(host_, pd);
        for (int j : order) {
            auto it = index_of_ray.find(j);
            check(it != index_of_ray.end(), "lambda mentions only port rays");
            SplitResult sp = split_host_edge(cur, from);
            renamed[sp.replaced_from] = sp.replacement_from;
            renamed[sp.replaced_far] = sp.replacement_far;
            ray_cross[j][it->second] =
                Crossing{sp.dummy, Dart{sp.far_edge, 0}, Dart{sp.near_edge, 1}};
            dummies_[sp.dummy] = norm_pair(spider.ray_edges[j], o);
            ++created;
            cur = sp.far_edge;
            from = sp.dummy;
        }
    }
    check(created == spider.cost(), "spider realization creates cost many dummies");

    // Center vertex and the chain edges of every ray.
    VertexId hv = host_.add_vertex();
    grow_host_vertex_maps();
    rot_.ensure_vertex(hv);
    orig_of_[hv.value] = center_orig;
    host_of_[center_orig.value] = hv;

    std::vector<Dart> hv_rot(nrays);
    std::vector<int> sigma_pos(nrays, -1);
    for (int s = 0; s < nrays; ++s)
        sigma_pos[sigma[s]] = s;

    for (int j : sigma) {
        EdgeId re = spider.ray_edges[j];
        VertexId far = host_of_[original_->other_end(re, center_orig).value];
        const auto& crossings = ray_cross[j];

        VertexId prev = far;
        for (size_t i = 0; i <= crossings.size(); ++i) {
            VertexId nxt = i < crossings.size() ? crossings[i].dummy : hv;
            EdgeId ce = host_.add_edge(prev, nxt);
            grow_host_edge_maps();
            origin_[ce.value] = re;
            if (prev == far)
                rot_.insert_before(far, resolve(corner[j]), Dart{ce, 0});
            else
                rot_.insert_after(prev, resolve(crossings[i - 1].out_anchor), Dart{ce, 0});
            if (nxt == hv)
                hv_rot[sigma_pos[j]] = Dart{ce, 1};
            else
                rot_.insert_after(nxt, resolve(crossings[i].in_anchor), Dart{ce, 1});
            prev = nxt;
        }
    }
    rot_.set(hv, hv_rot);

    bump();
    for (int j = 0; j < nrays; ++j)
        rebuild_chain(spider.ray_edges[j]);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (EdgeId o : affected)
        rebuild_chain(o);
}

// ---------------------------------------------------------------------------
// removal

int Planarization::remove_chain(EdgeId orig_e) {
    if (!edge_embedded(orig_e))
        throw Error(ErrorCode::Structure, "edge not embedded");
    std::vector<VertexId> interior = chain_interior(orig_e);

    for (EdgeId he : chain_[orig_e.value]) {
        auto [a, b] = host_.endpoints(he);
        rot_.remove(a, dart_at(host_, he, a));
        rot_.remove(b, dart_at(host_, he, b));
        host_.delete_edge(he);
    }
    chain_[orig_e.value].clear();

    std::vector<EdgeId> affected;
    for (VertexId dv : interior) {
        auto inc = host_.incident_edges(dv);
        check(inc.size() == 2, "smoothed dummy had degree 4");
        EdgeId r0 = inc[0], r1 = inc[1];
        EdgeId o = origin_[r0.value];
        check(o == origin_[r1.value], "dummy remnants belong to one chain");
        merge_at(dv, r0, r1, o);
        host_.delete_vertex(dv);
        dummies_.erase(dv);
        affected.push_back(o);
    }

    bump();
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (EdgeId o : affected)
        rebuild_chain(o);
    return (int)interior.size();
}

int Planarization::remove_star(VertexId orig_v) {
    if (!original_->has_vertex(orig_v))
        throw Error(ErrorCode::Structure, "unknown vertex");
    VertexId hv = host_of_[orig_v.value];
    if (!hv.valid())
        throw Error(ErrorCode::Structure, "vertex not embedded");

    int removed = 0;
    std::vector<EdgeId> inc(original_->incident_edges(orig_v).begin(),
                            original_->incident_edges(orig_v).end());
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    for (EdgeId e : inc)
        if (edge_embedded(e))
            removed += remove_chain(e);

    check(host_.degree(hv) == 0, "all host edges at a vertex belong to its chains");
    rot_.clear_vertex(hv);
    host_.delete_vertex(hv);
    orig_of_[hv.value] = VertexId{};
    host_of_[orig_v.value] = VertexId{};
    bump();
    return removed;
}

// ---------------------------------------------------------------------------
// non-simple crossings

NonSimpleReport Planarization::detect_nonsimple() const {
    NonSimpleReport report;
    std::map<std::pair<EdgeId, EdgeId>, std::vector<VertexId>> by_pair;
    for (const auto& [dv, pair] : dummies_) {
        auto [e1, e2] = pair;
        auto [a1, b1] = original_->endpoints(e1);
        auto [a2, b2] = original_->endpoints(e2);
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
            report.alphas.push_back(dv);
        by_pair[pair].push_back(dv);
    }
    for (auto& [pair, ds] : by_pair) {
        if (ds.size() >= 2)
            report.betas.push_back(NonSimpleReport::BetaEntry{pair.first, pair.second, ds});
    }
    return report;
}

void Planarization::fix_alpha(VertexId dv) {
    auto [e1, e2] = dummies_.at(dv);
    auto [a1, b1] = original_->endpoints(e1);
    auto [a2, b2] = original_->endpoints(e2);
    VertexId x{};
    for (VertexId cand : {a1, b1})
        if ((cand == a2 || cand == b2) && (!x.valid() || cand < x))
            x = cand;
    check(x.valid(), "alpha pair shares an endpoint");

    // Split both chains at the dummy, in chain (source -> target) order.
    auto split = [&](EdgeId e) {
        const auto& ch = chain_[e.value];
        std::vector<EdgeId> before, after;
        VertexId cur = host_of_[original_->source(e).value];
        bool seen = false;
        for (EdgeId he : ch) {
            if (!seen)
                before.push_back(he);
            else
                after.push_back(he);
            cur = host_.other_end(he, cur);
            if (cur == dv)
                seen = true;
        }
        check(seen && !after.empty(), "dummy is interior to its chain");
        return std::make_pair(before, after);
    };
    auto [pre1, post1] = split(e1);
    auto [pre2, post2] = split(e2);

    bool e1_src_is_x = original_->source(e1) == x;
    bool e2_src_is_x = original_->source(e2) == x;
    // Edge of each chain at the dummy, on the x side and on the far side.
    EdgeId h1x = e1_src_is_x ? pre1.back() : post1.front();
    EdgeId h1a = e1_src_is_x ? post1.front() : pre1.back();
    EdgeId h2x = e2_src_is_x ? pre2.back() : post2.front();
    EdgeId h2b = e2_src_is_x ? post2.front() : pre2.back();
    const std::vector<EdgeId>& seg1x = e1_src_is_x ? pre1 : post1; // becomes part of e2
    const std::vector<EdgeId>& seg2x = e2_src_is_x ? pre2 : post2; // becomes part of e1

    // New pass-throughs: e1 = (e2's x segment) + (e1's far segment), e2
    // symmetric; the two pairs are rotation-adjacent at the dummy, so the
    // crossing disappears.
    merge_at(dv, h2x, h1a, e1);
    merge_at(dv, h1x, h2b, e2);
    host_.delete_vertex(dv);
    dummies_.erase(dv);

    for (EdgeId he : seg2x)
        if (host_.has_edge(he))
            origin_[he.value] = e1;
    for (EdgeId he : seg1x)
        if (host_.has_edge(he))
            origin_[he.value] = e2;

    bump();
    rebuild_chain(e1);
    rebuild_chain(e2);
    reregister_chain_dummies(e1);
    reregister_chain_dummies(e2);
}

void Planarization::fix_beta(const NonSimpleReport::BetaEntry& entry) {
    EdgeId e1 = entry.e1, e2 = entry.e2;

    auto interior_rank = [&](EdgeId e) {
        std::map<VertexId, int> rank;
        int i = 0;
        for (VertexId v : chain_interior(e))
            rank[v] = i++;
        return rank;
    };
    auto rank1 = interior_rank(e1);
    auto rank2 = interior_rank(e2);

    std::vector<VertexId> ds = entry.dummies;
    std::sort(ds.begin(), ds.end(),
              [&](VertexId a, VertexId b) { return rank1.at(a) < rank1.at(b); });
    std::vector<int> pos2_sorted;
    for (VertexId d : ds)
        pos2_sorted.push_back(rank2.at(d));

    // A bigon: two crossings consecutive along both chains (no other shared
    // crossing strictly between them on either chain). Two simple arcs with
    // excess intersections always contain one.
    VertexId p{}, q{};
    for (size_t i = 0; i + 1 < ds.size(); ++i) {
        int lo = std::min(pos2_sorted[i], pos2_sorted[i + 1]);
        int hi = std::max(pos2_sorted[i], pos2_sorted[i + 1]);
        bool blocked = false;
        for (size_t k = 0; k < ds.size(); ++k)
            if (k != i && k != i + 1 && pos2_sorted[k] > lo && pos2_sorted[k] < hi)
                blocked = true;
        if (!blocked) {
            p = ds[i];
            q = ds[i + 1];
            break;
        }
    }
    check(p.valid(), "beta pair contains a bigon");

    // Segments of both chains around p and q.
    auto segments = [&](EdgeId e, VertexId first, VertexId second) {
        // first/second in this chain's order
        std::vector<EdgeId> a, m, b;
        VertexId cur = host_of_[original_->source(e).value];
        int stage = 0;
        for (EdgeId he : chain_[e.value]) {
            (stage == 0 ? a : stage == 1 ? m : b).push_back(he);
            cur = host_.other_end(he, cur);
            if (cur == first && stage == 0)
                stage = 1;
            else if (cur == second && stage == 1)
                stage = 2;
        }
        check(stage == 2 && !a.empty() && !m.empty() && !b.empty(), "beta segments well formed");
        return std::make_tuple(a, m, b);
    };
    auto [A1, M1, B1] = segments(e1, p, q);
    bool p_first_on_2 = rank2.at(p) < rank2.at(q);
    auto [A2, M2, B2] = segments(e2, p_first_on_2 ? p : q, p_first_on_2 ? q : p);

    // Four incident edges at p and q, by role.
    EdgeId e1_outer_p = A1.back(), e1_mid_p = M1.front();
    EdgeId e1_mid_q = M1.back(), e1_outer_q = B1.front();
    EdgeId e2_outer_p = p_first_on_2 ? A2.back() : B2.front();
    EdgeId e2_mid_p = p_first_on_2 ? M2.front() : M2.back();
    EdgeId e2_mid_q = p_first_on_2 ? M2.back() : M2.front();
    EdgeId e2_outer_q = p_first_on_2 ? B2.front() : A2.back();

    // Swap the middle segments; both crossings turn into rotation-adjacent
    // pass-throughs and are smoothed.
    EdgeId mp1 = merge_at(p, e1_outer_p, e2_mid_p, e1);
    EdgeId mp2 = merge_at(p, e2_outer_p, e1_mid_p, e2);
    host_.delete_vertex(p);
    dummies_.erase(p);

    EdgeId cur_e2_mid_q = M2.size() == 1 ? mp1 : e2_mid_q;
    EdgeId cur_e1_mid_q = M1.size() == 1 ? mp2 : e1_mid_q;
    merge_at(q, cur_e2_mid_q, e1_outer_q, e1);
    merge_at(q, cur_e1_mid_q, e2_outer_q, e2);
    host_.delete_vertex(q);
    dummies_.erase(q);

    for (EdgeId he : M2)
        if (host_.has_edge(he))
            origin_[he.value] = e1;
    for (EdgeId he : M1)
        if (host_.has_edge(he))
            origin_[he.value] = e2;

    bump();
    rebuild_chain(e1);
    rebuild_chain(e2);
    reregister_chain_dummies(e1);
    reregister_chain_dummies(e2);
}

NonSimpleRemoved Planarization::remove_nonsimple() {
    NonSimpleRemoved removed;
    for (;;) {
        NonSimpleReport report = detect_nonsimple();
        if (report.empty())
            break;

        std::map<std::pair<EdgeId, EdgeId>, int> multiplicity;
        for (const auto& [dv, pair] : dummies_)
            ++multiplicity[pair];

        // Alpha first; pairs crossing more than once are handled as betas
        // (the tail swap of a multi-crossing pair would self-intersect).
        VertexId alpha{};
        for (VertexId dv : report.alphas) {
            if (multiplicity[dummies_.at(dv)] == 1) {
                alpha = dv;
                break;
            }
        }
        if (alpha.valid()) {
            fix_alpha(alpha);
            removed.alpha += 1;
            continue;
        }
        if (!report.betas.empty()) {
            fix_beta(report.betas.front());
            removed.beta += 2;
            continue;
        }
        break; // only alphas with multiplicity >= 2 remain: impossible, they are betas
    }
    return removed;
}

// ---------------------------------------------------------------------------
// validation / dump

std::vector<std::string> Planarization::validate() const {
    std::vector<std::string> bad;
    auto complain = [&](const std::string& s) { bad.push_back(s); };

    FaceStructure fs;
    try {
        fs = compute_faces(host_, rot_);
    } catch (const Error& err) {
        complain(std::string("rotation inconsistent: ") + err.what());
        return bad;
    }
    if (!euler_formula_holds(host_, fs))
        complain("Euler check failed: host embedding is not planar");

    // Vertex maps.
    for (VertexId v : original_->vertices()) {
        VertexId hv = host_of_[v.value];
        if (hv.valid()) {
            if (!host_.has_vertex(hv))
                complain("embedded vertex maps to dead host vertex");
            else if (orig_of_[hv.value] != v)
                complain("host/original vertex maps disagree");
        }
    }

    // Chains and origins.
    std::vector<int> covered(host_.edge_capacity(), 0);
    for (EdgeId e : original_->edges()) {
        const auto& ch = chain_[e.value];
        if (ch.empty())
            continue;
        VertexId cur = host_of_[original_->source(e).value];
        VertexId goal = host_of_[original_->target(e).value];
        if (!cur.valid() || !goal.valid()) {
            complain("embedded edge with unembedded endpoint");
            continue;
        }
        for (size_t i = 0; i < ch.size(); ++i) {
            EdgeId he = ch[i];
            if (!host_.has_edge(he)) {
                complain("chain references dead host edge");
                break;
            }
            ++covered[he.value];
            if (origin_[he.value] != e)
                complain("origin map disagrees with chain");
            cur = host_.other_end(he, cur);
            if (i + 1 < ch.size() && !is_dummy(cur))
                complain("chain interior vertex is not a dummy");
        }
        if (cur != goal)
            complain("chain does not reach its endpoint");
    }
    for (EdgeId he : host_.edges())
        if (covered[he.value] != 1)
            complain("host edge not covered by exactly one chain");

    // Dummies: degree 4, two chains alternating.
    int interior_total = 0;
    for (EdgeId e : original_->edges())
        if (!chain_[e.value].empty())
            interior_total += (int)chain_[e.value].size() - 1;
    if (interior_total != 2 * (int)dummies_.size())
        complain("chain interiors inconsistent with dummy registry");

    for (const auto& [dv, pair] : dummies_) {
        if (!host_.has_vertex(dv) || host_.degree(dv) != 4) {
            complain("dummy without degree 4");
            continue;
        }
        auto order = rot_.at(dv);
        EdgeId o0 = origin_[order[0].edge.value];
        EdgeId o1 = origin_[order[1].edge.value];
        EdgeId o2 = origin_[order[2].edge.value];
        EdgeId o3 = origin_[order[3].edge.value];
        if (!(o0 == o2 && o1 == o3 && o0 != o1))
            complain("dummy rotation does not alternate its two chains");
        if (norm_pair(o0, o1) != pair)
            complain("dummy registry pair mismatch");
    }
    return bad;
}

void Planarization::debug_dump(std::ostream& os) const {
    std::vector<int32_t> compact(host_.vertex_capacity(), -1);
    int32_t next = 0;
    for (VertexId v : host_.vertices())
        compact[v.value] = next++;
    os << host_.vertex_count() << ' ' << host_.edge_count() << '\n';
    for (EdgeId he : host_.edges())
        os << compact[host_.source(he).value] << ' ' << compact[host_.target(he).value] << '\n';
    for (EdgeId e : original_->edges()) {
        if (chain_[e.value].empty())
            continue;
        os << "# chain " << e.value << " :";
        for (EdgeId he : chain_[e.value])
            os << ' ' << compact[host_.source(he).value] << '-' << compact[host_.target(he).value];
        os << '\n';
    }
}

} // namespace crossmin

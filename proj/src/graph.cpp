#include "graph.hpp"

#include <algorithm>

namespace crossmin {

VertexId Graph::add_vertex() {
    VertexId id{(int32_t)verts_.size()};
    verts_.push_back(VertexRec{{}, true});
    ++n_alive_;
    return id;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    require_vertex(u);
    require_vertex(v);
    EdgeId id{(int32_t)edges_.size()};
    edges_.push_back(EdgeRec{u, v, true});
    verts_[u.value].incident.push_back(id);
    verts_[v.value].incident.push_back(id); // loops listed twice
    ++m_alive_;
    return id;
}

void Graph::remove_from_incidence(VertexId v, EdgeId e) {
    auto& inc = verts_[v.value].incident;
    inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
}

void Graph::delete_edge(EdgeId e) {
    require_edge(e);
    auto& rec = edges_[e.value];
    remove_from_incidence(rec.u, e);
    if (rec.v != rec.u)
        remove_from_incidence(rec.v, e);
    rec.alive = false;
    --m_alive_;
}

void Graph::delete_vertex(VertexId v) {
    require_vertex(v);
    // Copy: delete_edge mutates the incidence list.
    std::vector<EdgeId> inc(verts_[v.value].incident.begin(), verts_[v.value].incident.end());
    for (EdgeId e : inc)
        if (has_edge(e))
            delete_edge(e);
    verts_[v.value].alive = false;
    --n_alive_;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (int32_t i = 0; i < (int32_t)verts_.size(); ++i)
        if (verts_[i].alive)
            out.push_back(VertexId{i});
    return out;
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(m_alive_);
    for (int32_t i = 0; i < (int32_t)edges_.size(); ++i)
        if (edges_[i].alive)
            out.push_back(EdgeId{i});
    return out;
}

bool Graph::adjacent(VertexId v, VertexId w) const {
    return find_edge(v, w).valid();
}

EdgeId Graph::find_edge(VertexId v, VertexId w) const {
    require_vertex(v);
    require_vertex(w);
    for (EdgeId e : verts_[v.value].incident) {
        auto& rec = edges_[e.value];
        if ((rec.u == v && rec.v == w) || (rec.u == w && rec.v == v))
            return e;
    }
    return EdgeId{};
}

int degree_in_subset(const Graph& g, VertexId v, std::span<const EdgeId> subset) {
    int count = 0;
    for (EdgeId e : subset)
        if (g.is_incident(e, v))
            ++count;
    return count;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId start : g.vertices()) {
        if (seen[start.value])
            continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{start};
        seen[start.value] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (!seen[w.value]) {
                    seen[w.value] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1)
        return true;
    return connected_components(g).size() == 1;
}

namespace {

// Iterative Hopcroft-Tarjan lowpoint DFS shared by cut_vertices and
// biconnected_components. Self-loops are emitted as singleton blocks and do
// not influence lowpoints.
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<char> loop_done;
    std::vector<EdgeId> edge_stack;
    std::vector<std::vector<EdgeId>> blocks;
    int timer = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph),
          disc(graph.vertex_capacity(), -1),
          low(graph.vertex_capacity(), 0),
          is_cut(graph.vertex_capacity(), 0),
          loop_done(graph.edge_capacity(), 0) {}

    void pop_block(EdgeId until) {
        std::vector<EdgeId> block;
        for (;;) {
            EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until)
                break;
        }
        blocks.push_back(std::move(block));
    }

    struct Frame {
        VertexId v;
        VertexId parent;
        EdgeId parent_edge;
        size_t next = 0;
        int children = 0;
        bool parent_skipped = false;
    };

    void run(VertexId root) {
        std::vector<Frame> stack;
        stack.push_back(Frame{root, VertexId{}, EdgeId{}});
        disc[root.value] = low[root.value] = timer++;

        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident_edges(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.parent_edge && !f.parent_skipped) {
                    f.parent_skipped = true; // skip the tree edge once; parallels are back edges
                    continue;
                }
                if (g.is_loop(e)) {
                    if (!loop_done[e.value]) {
                        loop_done[e.value] = 1;
                        blocks.push_back({e});
                    }
                    continue;
                }
                VertexId w = g.other_end(e, f.v);
                if (disc[w.value] == -1) {
                    edge_stack.push_back(e);
                    ++f.children;
                    disc[w.value] = low[w.value] = timer++;
                    stack.push_back(Frame{w, f.v, e}); // invalidates f
                } else if (disc[w.value] < disc[f.v.value]) {
                    edge_stack.push_back(e);
                    low[f.v.value] = std::min(low[f.v.value], disc[w.value]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v.value] = std::min(low[p.v.value], low[done.v.value]);
                    if (low[done.v.value] >= disc[p.v.value]) {
                        if (p.parent.valid())
                            is_cut[p.v.value] = 1;
                        pop_block(done.parent_edge);
                    }
                } else if (done.children > 1) {
                    is_cut[done.v.value] = 1; // root rule
                }
            }
        }
    }
};

} // namespace

std::vector<VertexId> cut_vertices(const Graph& g) {
    if (!is_connected(g))
        throw Error(ErrorCode::InvalidArgument, "cut_vertices requires a connected graph");
    BlockDfs dfs(g);
    auto vs = g.vertices();
    if (!vs.empty())
        dfs.run(vs.front());
    std::vector<VertexId> out;
    for (VertexId v : vs)
        if (dfs.is_cut[v.value])
            out.push_back(v);
    return out;
}

std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g) {
    BlockDfs dfs(g);
    for (VertexId v : g.vertices())
        if (dfs.disc[v.value] == -1)
            dfs.run(v);
    // Sort for deterministic output: by smallest edge id per block.
    for (auto& blk : dfs.blocks)
        std::sort(blk.begin(), blk.end());
    std::sort(dfs.blocks.begin(), dfs.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return dfs.blocks;
}

} // namespace crossmin

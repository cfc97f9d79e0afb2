#include "heuristics.hpp"

#include <algorithm>

#include "planarity.hpp"

namespace crossmin {

// ---------------------------------------------------------------------------
// config strings

std::string HeuristicConfig::to_string() const {
    std::string s;
    switch (base) {
        case BaseHeuristic::PlmFix:
            s = "fix-";
            s += post == PlmPost::None ? "none" : post == PlmPost::All ? "all" : "inc";
            break;
        case BaseHeuristic::Ccm:
            s = "ccm";
            break;
        case BaseHeuristic::Mim:
            s = "mim-";
            switch (mim_variant) {
                case MimVariant::Random: s += "random"; break;
                case MimVariant::HighG: s += "high_G"; break;
                case MimVariant::LowG: s += "low_G"; break;
                case MimVariant::HighF: s += "high_F"; break;
                case MimVariant::LowF: s += "low_F"; break;
                case MimVariant::Both: s += "both"; break;
            }
            break;
    }
    if (srm)
        s += "-srm";
    if (!remove_nonsimple)
        s += "-keepns";
    return s;
}

HeuristicConfig HeuristicConfig::parse(const std::string& str) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : str) {
        if (c == '-') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);

    auto fail = [&]() -> HeuristicConfig {
        throw Error(ErrorCode::Parse, "unknown heuristic config: '" + str + "'");
    };

    HeuristicConfig cfg;
    size_t i = 0;
    if (tokens[i] == "fix") {
        cfg.base = BaseHeuristic::PlmFix;
        ++i;
        cfg.post = PlmPost::None;
        if (i < tokens.size()) {
            if (tokens[i] == "none") { cfg.post = PlmPost::None; ++i; }
            else if (tokens[i] == "all") { cfg.post = PlmPost::All; ++i; }
            else if (tokens[i] == "inc") { cfg.post = PlmPost::Inc; ++i; }
        }
    } else if (tokens[i] == "ccm") {
        cfg.base = BaseHeuristic::Ccm;
        ++i;
    } else if (tokens[i] == "mim") {
        cfg.base = BaseHeuristic::Mim;
        ++i;
        cfg.mim_variant = MimVariant::Both;
        if (i < tokens.size()) {
            const std::string& t = tokens[i];
            if (t == "random") { cfg.mim_variant = MimVariant::Random; ++i; }
            else if (t == "high_G") { cfg.mim_variant = MimVariant::HighG; ++i; }
            else if (t == "low_G") { cfg.mim_variant = MimVariant::LowG; ++i; }
            else if (t == "high_F") { cfg.mim_variant = MimVariant::HighF; ++i; }
            else if (t == "low_F") { cfg.mim_variant = MimVariant::LowF; ++i; }
            else if (t == "both") { cfg.mim_variant = MimVariant::Both; ++i; }
        }
    } else {
        return fail();
    }

    if (i < tokens.size() && tokens[i] == "srm") {
        cfg.srm = true;
        ++i;
    }
    if (i < tokens.size() && tokens[i] == "keepns") {
        cfg.remove_nonsimple = false;
        ++i;
    }
    if (i != tokens.size())
        return fail();
    return cfg;
}

// ---------------------------------------------------------------------------
// shared pieces

namespace {

void absorb(RunStats& stats, const NonSimpleRemoved& r) {
    stats.alpha_removed += r.alpha;
    stats.beta_removed += r.beta;
}

void tidy_nonsimple(Planarization& p, const HeuristicConfig& cfg, RunStats& stats) {
    if (cfg.remove_nonsimple)
        absorb(stats, p.remove_nonsimple());
}

template <typename T>
void shuffle_seeded(std::vector<T>& v, std::mt19937_64& rng) {
    std::shuffle(v.begin(), v.end(), rng);
}

// Would removing orig_v's star leave the embedded part of the drawing
// disconnected? (Only possible on instances that are not biconnected.)
bool star_removal_disconnects(const Planarization& p, VertexId orig_v) {
    const Graph& g = p.original();
    std::vector<VertexId> rest;
    for (VertexId v : p.embedded_vertices())
        if (v != orig_v)
            rest.push_back(v);
    if (rest.size() <= 1)
        return false;
    std::vector<char> in_rest(g.vertex_capacity(), 0);
    for (VertexId v : rest)
        in_rest[v.value] = 1;
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::vector<VertexId> queue{rest.front()};
    seen[rest.front().value] = 1;
    size_t reached = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId v = queue[qi];
        for (EdgeId e : g.incident_edges(v)) {
            if (!p.edge_embedded(e))
                continue;
            VertexId w = g.other_end(e, v);
            if (!in_rest[w.value] || seen[w.value])
                continue;
            seen[w.value] = 1;
            ++reached;
            queue.push_back(w);
        }
    }
    return reached != rest.size();
}

// Star of orig_v over its embedded neighbors; orig_v itself must be
// unembedded when this is used for sif.
Star embedded_star(const Planarization& p, VertexId orig_v) {
    const Graph& g = p.original();
    Star star{orig_v, {}};
    for (EdgeId e : g.incident_edges(orig_v)) {
        VertexId w = g.other_end(e, orig_v);
        if (w != orig_v && p.vertex_embedded(w))
            star.rays.push_back(e);
    }
    std::sort(star.rays.begin(), star.rays.end());
    star.rays.erase(std::unique(star.rays.begin(), star.rays.end()), star.rays.end());
    return star;
}

// Removes orig_v and reinserts it optimally as a star over all its currently
// relevant rays. In mim this may embed additional edges of the original
// graph, so the total crossing count may grow; in srm (full planarization)
// it never does, which srm asserts per visit.
void reinsert_vertex(Planarization& p, VertexId orig_v, const HeuristicConfig& cfg,
                     RunStats& stats) {
    p.remove_star(orig_v);
    Star star = embedded_star(p, orig_v);
    SifResult s = sif(p, star);
    p.realize_spider(orig_v, s.spider);
    tidy_nonsimple(p, cfg, stats);
}

void insert_edge_optimally(Planarization& p, EdgeId e, const HeuristicConfig& cfg,
                           RunStats& stats) {
    const Graph& g = p.original();
    InsertionPath path = eif(p, g.source(e), g.target(e));
    p.realize_path(e, path);
    tidy_nonsimple(p, cfg, stats);
}

} // namespace

InstanceInit prepare_instance(const Graph& g) {
    InstanceInit init;
    // One fixed subgraph and cycle per instance: every permutation run of a
    // batch starts from the same initialization.
    auto sub = maximal_planar_subgraph(g, /*order_seed=*/0);
    init.kept = std::move(sub.kept);
    init.deleted = std::move(sub.deleted);
    try {
        init.cycle = chordless_cycle(g);
    } catch (const Error&) {
        init.cycle.clear(); // acyclic instance; ccm will refuse it
    }
    return init;
}

// ---------------------------------------------------------------------------
// planarization method, fixed-embedding insertion

void postprocess_all(Planarization& p, const HeuristicConfig& cfg, std::mt19937_64& rng,
                     RunStats& stats) {
    const int sweep_cap = 100;
    for (int sweep = 0; sweep < sweep_cap; ++sweep) {
        ++stats.sweeps;
        bool improved = false;
        std::vector<EdgeId> order = p.embedded_edges();
        shuffle_seeded(order, rng);
        for (EdgeId e : order) {
            if (p.chain_crossings(e) == 0)
                continue;
            int before = p.crossing_count();
            p.remove_chain(e);
            insert_edge_optimally(p, e, cfg, stats);
            int after = p.crossing_count();
            check(after <= before, "postprocessing step never increases crossings");
            if (after < before)
                improved = true;
        }
        if (!improved)
            break;
    }
}

Planarization plm_fix(const Graph& g, const InstanceInit& init, const HeuristicConfig& cfg,
                      std::mt19937_64& rng, RunStats& stats) {
    Planarization p = Planarization::from_planar_subgraph(g, init.kept);
    std::vector<EdgeId> order = init.deleted;
    shuffle_seeded(order, rng);
    for (EdgeId e : order) {
        insert_edge_optimally(p, e, cfg, stats);
        if (cfg.post == PlmPost::Inc)
            postprocess_all(p, cfg, rng, stats);
    }
    if (cfg.post == PlmPost::All)
        postprocess_all(p, cfg, rng, stats);
    return p;
}

// ---------------------------------------------------------------------------
// chordless cycle method

Planarization ccm(const Graph& g, const InstanceInit& init, const HeuristicConfig& cfg,
                  std::mt19937_64& rng, RunStats& stats) {
    if (!is_connected(g))
        throw Error(ErrorCode::InvalidArgument, "ccm requires a connected graph");
    if (init.cycle.empty())
        throw Error(ErrorCode::InvalidArgument, "ccm requires a chordless cycle (instance is acyclic)");

    const auto& cyc = init.cycle;
    std::vector<EdgeId> cyc_edges;
    for (size_t i = 0; i < cyc.size(); ++i) {
        EdgeId e = g.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
        check(e.valid(), "chordless cycle edges exist");
        cyc_edges.push_back(e);
    }
    Planarization p = Planarization::from_embedded_subgraph(g, cyc, cyc_edges);

    // Seed-permuted fixed priority over all vertices; at each step the
    // eligible vertex (>= 1 embedded neighbor) of highest priority is chosen.
    std::vector<VertexId> priority = g.vertices();
    shuffle_seeded(priority, rng);
    std::vector<int> prio_of(g.vertex_capacity(), 0);
    for (size_t i = 0; i < priority.size(); ++i)
        prio_of[priority[i].value] = (int)i;

    int remaining = g.vertex_count() - (int)p.embedded_vertices().size();
    while (remaining > 0) {
        VertexId pick{};
        for (VertexId v : g.vertices()) {
            if (p.vertex_embedded(v))
                continue;
            bool eligible = false;
            for (EdgeId e : g.incident_edges(v)) {
                VertexId w = g.other_end(e, v);
                if (w != v && p.vertex_embedded(w)) {
                    eligible = true;
                    break;
                }
            }
            if (eligible && (!pick.valid() || prio_of[v.value] < prio_of[pick.value]))
                pick = v;
        }
        check(pick.valid(), "connected graph always has an eligible vertex");

        Star star = embedded_star(p, pick);
        SifResult s = sif(p, star);
        p.realize_spider(pick, s.spider);
        tidy_nonsimple(p, cfg, stats);
        --remaining;
    }

    // Vertices embedded; edges between embedded vertices that were never rays
    // cannot exist: every edge is a ray of the star of its later endpoint.
    return p;
}

// ---------------------------------------------------------------------------
// mixed insertion method

Planarization mim(const Graph& g, const InstanceInit& init, const HeuristicConfig& cfg,
                  std::mt19937_64& rng, RunStats& stats) {
    Planarization p = Planarization::from_planar_subgraph(g, init.kept);

    // Cut vertices of the initial planar subgraph, computed once up front.
    std::vector<char> is_cut(g.vertex_capacity(), 0);
    {
        Graph sub;
        std::vector<int32_t> to_sub(g.vertex_capacity(), -1);
        std::vector<VertexId> back;
        for (VertexId v : g.vertices()) {
            to_sub[v.value] = sub.add_vertex().value;
            back.push_back(v);
        }
        for (EdgeId e : init.kept)
            sub.add_edge(VertexId{to_sub[g.source(e).value]}, VertexId{to_sub[g.target(e).value]});
        for (VertexId cv : cut_vertices(sub))
            is_cut[back[cv.value].value] = 1;
    }

    // F-edges with no cut-vertex endpoint, for the high_F / low_F variants.
    std::vector<EdgeId> f_free;
    for (EdgeId e : init.deleted) {
        auto [u, w] = g.endpoints(e);
        if (!is_cut[u.value] && !is_cut[w.value])
            f_free.push_back(e);
    }

    auto reinsert = [&](VertexId v) {
        if (star_removal_disconnects(p, v))
            return false;
        reinsert_vertex(p, v, cfg, stats);
        return true;
    };

    std::vector<EdgeId> order = init.deleted;
    shuffle_seeded(order, rng);
    for (EdgeId e : order) {
        if (p.edge_embedded(e))
            continue; // inserted as part of an earlier star
        auto [u, w] = g.endpoints(e);
        bool ucut = is_cut[u.value], wcut = is_cut[w.value];

        if (ucut && wcut) {
            insert_edge_optimally(p, e, cfg, stats);
            continue;
        }
        if (ucut || wcut) {
            VertexId free_end = ucut ? w : u;
            if (!reinsert(free_end))
                insert_edge_optimally(p, e, cfg, stats);
            continue;
        }

        VertexId first = u, second = w;
        bool both = false;
        switch (cfg.mim_variant) {
            case MimVariant::Random:
                if (rng() & 1)
                    std::swap(first, second);
                break;
            case MimVariant::HighG:
                if (g.degree(w) > g.degree(u) || (g.degree(w) == g.degree(u) && w < u))
                    std::swap(first, second);
                break;
            case MimVariant::LowG:
                if (g.degree(w) < g.degree(u) || (g.degree(w) == g.degree(u) && w < u))
                    std::swap(first, second);
                break;
            case MimVariant::HighF: {
                int du = degree_in_subset(g, u, f_free), dw = degree_in_subset(g, w, f_free);
                if (dw > du || (dw == du && w < u))
                    std::swap(first, second);
                break;
            }
            case MimVariant::LowF: {
                int du = degree_in_subset(g, u, f_free), dw = degree_in_subset(g, w, f_free);
                if (dw < du || (dw == du && w < u))
                    std::swap(first, second);
                break;
            }
            case MimVariant::Both:
                both = true;
                break;
        }

        if (!reinsert(first)) {
            insert_edge_optimally(p, e, cfg, stats);
            continue;
        }
        if (both)
            reinsert(second);
    }
    return p;
}

// ---------------------------------------------------------------------------
// star reinsertion method

void srm(Planarization& p, const HeuristicConfig& cfg, std::mt19937_64& rng, RunStats& stats) {
    const Graph& g = p.original();
    for (;;) {
        ++stats.sweeps;
        std::vector<VertexId> order = p.embedded_vertices();
        shuffle_seeded(order, rng);
        bool improved = false;
        for (VertexId v : order) {
            if (g.degree(v) == 0)
                continue;
            if (star_removal_disconnects(p, v))
                continue;
            int before = p.crossing_count();
            reinsert_vertex(p, v, cfg, stats); // never reset: kept even on equal cost
            check(p.crossing_count() <= before, "srm visit never increases crossings");
            if (p.crossing_count() < before) {
                improved = true;
                break; // restart the sweep with a fresh permutation
            }
        }
        if (!improved)
            break;
    }
}

// ---------------------------------------------------------------------------
// dispatch

PipelineResult run_pipeline(const Graph& g, const InstanceInit& init,
                            const HeuristicConfig& cfg, uint64_t seed) {
    std::mt19937_64 rng(seed);
    RunStats stats;

    Planarization p = [&]() {
        switch (cfg.base) {
            case BaseHeuristic::PlmFix: return plm_fix(g, init, cfg, rng, stats);
            case BaseHeuristic::Ccm: return ccm(g, init, cfg, rng, stats);
            case BaseHeuristic::Mim: return mim(g, init, cfg, rng, stats);
        }
        throw Error(ErrorCode::Internal, "unreachable");
    }();

    if (cfg.srm)
        srm(p, cfg, rng, stats);

    for (EdgeId e : g.edges())
        check(p.edge_embedded(e), "pipeline embeds every original edge");
    auto violations = p.validate();
    if (!violations.empty())
        throw Error(ErrorCode::Internal, "pipeline produced invalid planarization: " + violations.front());
    if (cfg.remove_nonsimple)
        check(p.detect_nonsimple().empty(), "no non-simple crossings remain");

    stats.crossings = p.crossing_count();
    return PipelineResult{stats, std::move(p)};
}

} // namespace crossmin

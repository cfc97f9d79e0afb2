#include "instances.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "planarity.hpp"

namespace crossmin {

Graph complete(int n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "complete(n) requires n >= 1");
    Graph g;
    std::vector<VertexId> vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(g.add_vertex());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(vs[i], vs[j]);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw Error(ErrorCode::InvalidArgument, "complete_bipartite requires positive sides");
    Graph g;
    std::vector<VertexId> left, right;
    for (int i = 0; i < a; ++i)
        left.push_back(g.add_vertex());
    for (int i = 0; i < b; ++i)
        right.push_back(g.add_vertex());
    for (VertexId u : left)
        for (VertexId v : right)
            g.add_edge(u, v);
    return g;
}

Graph cycle_product(int ci, int cj) {
    if (ci < 3 || cj < 3)
        throw Error(ErrorCode::InvalidArgument, "cycle_product requires cycles of length >= 3");
    Graph g;
    std::vector<VertexId> vs;
    for (int i = 0; i < ci * cj; ++i)
        vs.push_back(g.add_vertex());
    auto at = [&](int a, int b) { return vs[a * cj + b]; };
    for (int a = 0; a < ci; ++a) {
        for (int b = 0; b < cj; ++b) {
            g.add_edge(at(a, b), at(a, (b + 1) % cj));
            g.add_edge(at(a, b), at((a + 1) % ci, b));
        }
    }
    return g;
}

Graph petersen(int m, int k) {
    if (m < 3 || k < 1 || 2 * k >= m)
        throw Error(ErrorCode::InvalidArgument, "petersen requires m >= 3 and 1 <= k < m/2");
    Graph g;
    std::vector<VertexId> outer, inner;
    for (int i = 0; i < m; ++i)
        outer.push_back(g.add_vertex());
    for (int i = 0; i < m; ++i)
        inner.push_back(g.add_vertex());
    for (int i = 0; i < m; ++i) {
        g.add_edge(outer[i], outer[(i + 1) % m]);
        g.add_edge(outer[i], inner[i]);
        g.add_edge(inner[i], inner[(i + k) % m]);
    }
    return g;
}

Graph random_regular(int n, int d, uint64_t seed) {
    if (n < 1 || d < 0 || d >= n)
        throw Error(ErrorCode::InvalidArgument, "random_regular requires 0 <= d < n");
    if ((int64_t)n * d % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "random_regular requires n*d even");

    // Incremental stub pairing: draw random stub pairs, accept only legal
    // ones (no loop, no parallel), restart from scratch on a dead end. A
    // plain configuration-model restart is hopeless beyond small degrees
    // (the simplicity probability decays like exp(-(d*d-1)/4)).
    std::mt19937_64 rng(seed);
    const int max_restarts = 1000000;
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve((size_t)n * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i)
                stubs.push_back(v);

        std::vector<std::pair<int, int>> pairs;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            bool accepted = false;
            for (int tries = 0; tries < 200 && !accepted; ++tries) {
                size_t i = rng() % stubs.size();
                size_t j = rng() % stubs.size();
                if (i == j)
                    continue;
                int u = stubs[i], v = stubs[j];
                if (u == v || seen[u][v])
                    continue;
                seen[u][v] = seen[v][u] = 1;
                pairs.emplace_back(u, v);
                if (i < j)
                    std::swap(i, j);
                stubs.erase(stubs.begin() + i);
                stubs.erase(stubs.begin() + j);
                accepted = true;
            }
            if (!accepted) {
                // exhaustive legality scan before declaring a dead end
                for (size_t i = 0; i < stubs.size() && !accepted; ++i) {
                    for (size_t j = i + 1; j < stubs.size() && !accepted; ++j) {
                        int u = stubs[i], v = stubs[j];
                        if (u == v || seen[u][v])
                            continue;
                        seen[u][v] = seen[v][u] = 1;
                        pairs.emplace_back(u, v);
                        stubs.erase(stubs.begin() + j);
                        stubs.erase(stubs.begin() + i);
                        accepted = true;
                    }
                }
                stuck = !accepted;
            }
        }
        if (stuck)
            continue;

        Graph g;
        std::vector<VertexId> vs;
        for (int v = 0; v < n; ++v)
            vs.push_back(g.add_vertex());
        for (auto [u, v] : pairs)
            g.add_edge(vs[u], vs[v]);
        return g;
    }
    throw Error(ErrorCode::Internal, "random_regular: restart limit exceeded");
}

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            return true;
        }
        if (required)
            throw Error(ErrorCode::Parse, "unexpected end of graph file at line " + std::to_string(lineno));
        return false;
    };

    if (!next_data_line(false))
        throw Error(ErrorCode::Parse, "empty graph file (header 'n m' required)");

    auto parse_two = [&](int64_t& a, int64_t& b) {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> a >> b) || (ss >> extra))
            throw Error(ErrorCode::Parse, "malformed line " + std::to_string(lineno) + ": '" + line + "'");
    };

    int64_t n, m;
    parse_two(n, m);
    if (n < 0 || m < 0)
        throw Error(ErrorCode::Parse, "negative counts in header at line " + std::to_string(lineno));

    Graph g;
    std::vector<VertexId> vs;
    for (int64_t i = 0; i < n; ++i)
        vs.push_back(g.add_vertex());
    for (int64_t i = 0; i < m; ++i) {
        next_data_line(true);
        int64_t u, v;
        parse_two(u, v);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::Parse, "vertex index out of range at line " + std::to_string(lineno));
        g.add_edge(vs[u], vs[v]);
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    std::vector<int32_t> compact(g.vertex_capacity(), -1);
    int32_t next = 0;
    for (VertexId v : g.vertices())
        compact[v.value] = next++;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e : g.edges())
        out << compact[g.source(e).value] << ' ' << compact[g.target(e).value] << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary); // '\n' endings, bit-exact
    if (!out)
        throw Error(ErrorCode::Io, "cannot open file for writing: " + path);
    write_graph(g, out);
    if (!out)
        throw Error(ErrorCode::Io, "error writing graph file: " + path);
}

std::vector<Graph> preprocess(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& block : biconnected_components(g)) {
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

        if (!is_planar(sub))
            out.push_back(std::move(sub));
    }
    return out;
}

InstanceSpec InstanceSpec::parse(const std::string& spec) {
    InstanceSpec s;
    s.id = spec;
    size_t colon = spec.find(':');
    std::string family = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto split_args = [&](size_t expected) {
        std::vector<int64_t> vals;
        std::istringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, 'x'))
            vals.push_back(std::stoll(tok));
        if (vals.size() != expected)
            throw Error(ErrorCode::Parse, "instance spec '" + spec + "': expected " +
                                          std::to_string(expected) + " 'x'-separated parameters");
        return vals;
    };

    try {
        if (family == "complete") {
            s.family = Family::Complete;
            s.p1 = split_args(1)[0];
        } else if (family == "complete_bipartite" || family == "cbip") {
            s.family = Family::CompleteBipartite;
            auto v = split_args(2);
            s.p1 = v[0];
            s.p2 = v[1];
        } else if (family == "cycle_product" || family == "cxc") {
            s.family = Family::CycleProduct;
            auto v = split_args(2);
            s.p1 = v[0];
            s.p2 = v[1];
        } else if (family == "petersen") {
            s.family = Family::Petersen;
            auto v = split_args(2);
            s.p1 = v[0];
            s.p2 = v[1];
        } else if (family == "random_regular" || family == "rr") {
            s.family = Family::RandomRegular;
            auto v = split_args(3);
            s.p1 = v[0];
            s.p2 = v[1];
            s.seed = (uint64_t)v[2];
        } else {
            s.family = Family::File;
            s.path = spec;
        }
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Parse, "instance spec '" + spec + "': bad integer parameter");
    } catch (const std::out_of_range&) {
        throw Error(ErrorCode::Parse, "instance spec '" + spec + "': parameter out of range");
    }
    return s;
}

Graph InstanceSpec::build() const {
    switch (family) {
        case Family::Complete: return complete((int)p1);
        case Family::CompleteBipartite: return complete_bipartite((int)p1, (int)p2);
        case Family::CycleProduct: return cycle_product((int)p1, (int)p2);
        case Family::Petersen: return petersen((int)p1, (int)p2);
        case Family::RandomRegular: return random_regular((int)p1, (int)p2, seed);
        case Family::File: return read_graph_file(path);
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

} // namespace crossmin

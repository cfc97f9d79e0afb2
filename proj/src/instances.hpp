#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graph.hpp"

namespace crossmin {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
/// Cartesian product of two cycles C_i x C_j: i*j vertices, 4-regular.
Graph cycle_product(int i, int j);
/// Generalized Petersen graph P(m, k): outer m-cycle, spokes, inner k-step
/// cycle. Requires m >= 3 and 1 <= k < m/2.
Graph petersen(int m, int k);
/// Simple d-regular graph on n vertices via the pairing model, restarting on
/// self-loop or parallel collisions. Deterministic per seed. Requires n*d
/// even and d < n.
Graph random_regular(int n, int d, uint64_t seed);

/// Text format: first line "n m", then m lines "u v" with 0-based indices.
/// Lines starting with '#' are comments. ASCII, '\n' endings, single spaces.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

/// Splits into biconnected components and returns the non-planar ones as
/// independent instances (planar blocks contribute no crossings).
std::vector<Graph> preprocess(const Graph& g);

/// Instance description for the benchmark harness. Compact spec strings
/// (comma-free so they can serve as unquoted CSV instance ids):
///   complete:N          complete_bipartite:AxB      cycle_product:IxJ
///   petersen:MxK        random_regular:NxDxSEED
/// (aliases: cbip, cxc, rr); anything else is a file path.
struct InstanceSpec {
    enum class Family { Complete, CompleteBipartite, CycleProduct, Petersen, RandomRegular, File };
    Family family = Family::File;
    int64_t p1 = 0, p2 = 0;
    uint64_t seed = 0;
    std::string path;
    std::string id;  // the spec string; used as the CSV instance id

    static InstanceSpec parse(const std::string& spec);
    Graph build() const;
};

} // namespace crossmin

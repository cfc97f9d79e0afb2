#include <doctest.h>

#include <fstream>
#include <sstream>

#include "instances.hpp"
#include "planarity.hpp"
#include "support.hpp"

using namespace crossmin;

TEST_CASE("complete graphs") {
    Graph k5 = complete(5);
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);
    Graph k1 = complete(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK_THROWS_AS(complete(0), Error);
}

TEST_CASE("complete bipartite graphs") {
    Graph g = complete_bipartite(3, 3);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    // bipartite: no odd cycle among the first three vertices
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(!g.adjacent(VertexId{i}, VertexId{j}));
}

TEST_CASE("cycle products are 4-regular with 2ij edges") {
    Graph g = cycle_product(3, 3);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 18);
    for (VertexId v : g.vertices())
        CHECK(g.degree(v) == 4);

    Graph h = cycle_product(3, 4);
    CHECK(h.vertex_count() == 12);
    CHECK(h.edge_count() == 24);
    CHECK_THROWS_AS(cycle_product(2, 5), Error);
}

TEST_CASE("generalized Petersen graphs") {
    Graph p52 = petersen(5, 2);
    CHECK(p52.vertex_count() == 10);
    CHECK(p52.edge_count() == 15);
    for (VertexId v : p52.vertices())
        CHECK(p52.degree(v) == 3);
    // girth 5: no 3- or 4-cycles
    for (const auto& cyc : crossmin::testsupport::all_simple_cycles(p52))
        CHECK(cyc.size() >= 5);

    Graph prism = petersen(3, 1);
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(is_planar(prism));

    Graph p72 = petersen(7, 2);
    CHECK(p72.vertex_count() == 14);
    CHECK(p72.edge_count() == 21);

    CHECK_THROWS_AS(petersen(4, 2), Error);  // k < m/2 violated
    CHECK_THROWS_AS(petersen(2, 1), Error);
}

TEST_CASE("random regular graphs: regular, simple, deterministic") {
    Graph g = random_regular(30, 4, 7);
    CHECK(g.vertex_count() == 30);
    CHECK(g.edge_count() == 60);
    for (VertexId v : g.vertices())
        CHECK(g.degree(v) == 4);
    for (EdgeId e : g.edges())
        CHECK(!g.is_loop(e));
    // no parallels
    for (VertexId v : g.vertices()) {
        std::set<int32_t> seen;
        for (EdgeId e : g.incident_edges(v))
            CHECK(seen.insert(g.other_end(e, v).value).second);
    }

    Graph h = random_regular(30, 4, 7);
    CHECK(g.edge_count() == h.edge_count());
    auto ge = g.edges();
    auto he = h.edges();
    for (size_t i = 0; i < ge.size(); ++i) {
        CHECK(g.endpoints(ge[i]) == h.endpoints(he[i]));
    }

    CHECK_THROWS_AS(random_regular(5, 3, 1), Error);  // odd n*d
    CHECK_THROWS_AS(random_regular(4, 4, 1), Error);  // d >= n
}

TEST_CASE("graph file round trip") {
    Graph g = complete(4);
    std::ostringstream os;
    write_graph(g, os);
    std::istringstream is(os.str());
    Graph h = read_graph(is);
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 6);
    for (EdgeId e : g.edges())
        CHECK(h.adjacent(g.source(e), g.target(e)));
}

TEST_CASE("graph format: comments, duplicates, malformed input") {
    {
        std::istringstream is("# header comment\n3 2\n0 1\n# between\n1 2\n");
        Graph g = read_graph(is);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
    }
    {
        // duplicate edge line preserved as a parallel edge
        std::istringstream is("2 2\n0 1\n0 1\n");
        Graph g = read_graph(is);
        CHECK(g.edge_count() == 2);
    }
    {
        std::istringstream is("");
        CHECK_THROWS_AS(read_graph(is), Error);
    }
    {
        std::istringstream is("3 1\n0 seven\n");
        CHECK_THROWS_WITH_AS(read_graph(is), doctest::Contains("line 2"), Error);
    }
    {
        std::istringstream is("2 2\n0 1\n");
        CHECK_THROWS_AS(read_graph(is), Error);  // truncated edge list
    }
    {
        std::istringstream is("2 1\n0 5\n");
        CHECK_THROWS_AS(read_graph(is), Error);  // index out of range
    }
}

TEST_CASE("write_graph_file / read_graph_file") {
    Graph g = petersen(5, 2);
    const std::string path = "/tmp/crossmin_test_graph.txt";
    write_graph_file(g, path);
    Graph h = read_graph_file(path);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_graph_file("/nonexistent/nope.txt"), Error);
}

TEST_CASE("preprocess: planar graphs vanish, non-planar blocks survive") {
    CHECK(preprocess(complete(4)).empty());

    // K5 with a pendant path
    Graph g = complete(5);
    VertexId a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(VertexId{0}, a);
    g.add_edge(a, b);
    auto out = preprocess(g);
    REQUIRE(out.size() == 1);
    CHECK(out[0].vertex_count() == 5);
    CHECK(out[0].edge_count() == 10);

    // two K5 blocks sharing a cut vertex
    Graph two = complete(5);
    std::vector<VertexId> more;
    for (int i = 0; i < 4; ++i)
        more.push_back(two.add_vertex());
    std::vector<VertexId> second{VertexId{0}, more[0], more[1], more[2], more[3]};
    for (size_t i = 0; i < second.size(); ++i)
        for (size_t j = i + 1; j < second.size(); ++j)
            two.add_edge(second[i], second[j]);
    auto blocks = preprocess(two);
    CHECK(blocks.size() == 2);
    for (const auto& blk : blocks) {
        CHECK(blk.vertex_count() == 5);
        CHECK(blk.edge_count() == 10);
    }
}

TEST_CASE("instance specs parse and build") {
    auto s = InstanceSpec::parse("complete:6");
    CHECK(s.id == "complete:6");
    CHECK(s.build().edge_count() == 15);

    CHECK(InstanceSpec::parse("cbip:3x4").build().edge_count() == 12);
    CHECK(InstanceSpec::parse("complete_bipartite:3x4").build().edge_count() == 12);
    CHECK(InstanceSpec::parse("cxc:3x3").build().edge_count() == 18);
    CHECK(InstanceSpec::parse("petersen:5x2").build().edge_count() == 15);
    CHECK(InstanceSpec::parse("rr:10x4x3").build().edge_count() == 20);

    CHECK_THROWS_AS(InstanceSpec::parse("complete:4x4"), Error);
    CHECK_THROWS_AS(InstanceSpec::parse("petersen:5"), Error);
    CHECK_THROWS_AS(InstanceSpec::parse("rr:axbxc"), Error);

    // unknown family falls back to a file path
    auto f = InstanceSpec::parse("/tmp/some_graph.txt");
    CHECK(f.family == InstanceSpec::Family::File);
}

TEST_CASE("C4 x C4 is triangle-free with plenty of 4-cycles") {
    Graph g = cycle_product(4, 4);
    for (VertexId a : g.vertices())
        for (VertexId b : g.vertices())
            for (VertexId c : g.vertices())
                if (a < b && b < c && g.adjacent(a, b) && g.adjacent(b, c))
                    CHECK(!g.adjacent(a, c));
    // a grid square
    CHECK(g.adjacent(VertexId{0}, VertexId{1}));
    CHECK(g.adjacent(VertexId{1}, VertexId{5}));
    CHECK(g.adjacent(VertexId{5}, VertexId{4}));
    CHECK(g.adjacent(VertexId{4}, VertexId{0}));
}

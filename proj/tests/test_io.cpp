#include "doctest.h"

#include <random>

#include "locham/decomposition.hpp"
#include "locham/io.hpp"
#include "support/builders.hpp"

using namespace locham;
using namespace locham::testing;

TEST_SUITE("io") {

TEST_CASE("graph parsing") {
    Graph k2 = parse_graph("graph 2\ne 1 2\n");
    CHECK(k2 == complete_graph(2));

    CHECK_THROWS_WITH_AS(parse_graph("graph 3\ne 1 1"), "line 2: self-loop at vertex 1",
                         ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\nedge 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 2\nlabel 1 a\nlabel 1 b\n"), ParseError);

    Graph commented = parse_graph("# a triangle\ngraph 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(commented == complete_graph(3));

    // either endpoint order is accepted; the writer canonicalizes
    CHECK(parse_graph("graph 2\ne 2 1\n") == complete_graph(2));
}

TEST_CASE("graph round trip including labels") {
    Graph c3 = cycle_graph(3);
    c3.set_label(2, "hub");
    Graph back = parse_graph(write_graph(c3));
    CHECK(back == c3);
    CHECK(back.label(2) == "hub");
    CHECK(back.label(1).empty());
    CHECK(write_graph(back) == write_graph(c3));
}

TEST_CASE("decomposition parse, validation and round trip") {
    Graph p4 = path_graph(4);
    std::string text = "td 3 4\nbag 1 1 2\nbag 2 2 3\nbag 3 3 4\nlink 1 2\nlink 2 3\n";
    TreeDecomposition td = parse_td(text, p4);
    CHECK(width(td) == 1);
    CHECK(parse_td(write_td(td), p4).bags == td.bags);

    CHECK_THROWS_AS(parse_td("td 1 4\nbag 1 1 9\n", p4), ParseError);
    // links forming a cycle surface as a validation violation
    CHECK_THROWS_AS(
        parse_td("td 3 4\nbag 1 1 2\nbag 2 2 3\nbag 3 3 4\nlink 1 2\nlink 2 3\nlink 1 3\n", p4),
        ValidationError);
    CHECK_THROWS_AS(parse_td("td 2 4\nbag 1 1 2\n", p4), ParseError); // bag 2 missing
}

TEST_CASE("witness parsing enforces totality and uniqueness") {
    Graph k2 = complete_graph(2);
    VertexMap f = parse_witness("map 1 1\nmap 2 2\n", k2, k2);
    CHECK(is_homomorphism(f));
    CHECK(f.image[1] == 1);

    CHECK_THROWS_AS(parse_witness("map 1 1\n", k2, k2), ParseError);
    CHECK_THROWS_AS(parse_witness("map 1 1\nmap 1 2\nmap 2 1\n", k2, k2), ParseError);
    CHECK_THROWS_AS(parse_witness("map 1 7\nmap 2 1\n", k2, k2), ParseError);
    CHECK(parse_witness(write_witness(f), k2, k2).image == f.image);
}

TEST_CASE("instance format") {
    ThreePartitionInstance inst = parse_instance("instance b=7 m=1 A=2,2,3\n");
    CHECK(inst.target_sum == 7);
    CHECK(inst.group_count == 1);
    CHECK(inst.elements == std::vector<long long>{2, 2, 3});
    CHECK(write_instance(inst) == "instance b=7 m=1 A=2,2,3\n");

    ThreePartitionInstance cli = parse_instance_cli("b=7;m=1;A=2,2,3");
    CHECK(cli.elements == inst.elements);

    CHECK_THROWS_AS(parse_instance("instance b=8 m=1 A=2,2,3\n"), ValidationError);
    CHECK_THROWS_AS(parse_instance_cli("b=7;m=1"), ParseError);
    CHECK_THROWS_AS(parse_instance_cli("m=1;b=7;A=2,2,3"), ParseError);
}

TEST_CASE("round trips hold on a random corpus") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, rand_int(rng, 0, 10), 0.3);
        CHECK(parse_graph(write_graph(g)) == g);
    }
    for (int t = 0; t < 30; ++t) {
        Graph g = random_connected(rng, rand_int(rng, 2, 9), 3);
        TreeDecomposition td = heuristic_decomposition(
            g, t % 2 ? EliminationStrategy::min_degree : EliminationStrategy::min_fill);
        TreeDecomposition back = parse_td(write_td(td), g);
        CHECK(back.bags == td.bags);
        CHECK(back.is_path == td.is_path);
        CHECK(write_td(back) == write_td(td));
    }
    for (int t = 0; t < 30; ++t) {
        Graph g = random_connected(rng, rand_int(rng, 1, 7), 2);
        Graph h = random_connected(rng, rand_int(rng, 1, 5), 2);
        std::vector<int> colors(g.vertex_count());
        for (auto& c : colors)
            c = rand_int(rng, 1, h.vertex_count());
        VertexMap f = make_vertex_map(g, h, colors);
        CHECK(parse_witness(write_witness(f), g, h).image == f.image);
    }
}

} // TEST_SUITE

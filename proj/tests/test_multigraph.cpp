#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "arrival/graphgen.hpp"
#include "arrival/multigraph.hpp"
#include "testutil.hpp"

using namespace arrival;

namespace {

MultiGraph<Rational> from_text(const std::string& text, std::optional<Rational> override_p = {},
                               bool missing_ok = false) {
    std::istringstream in(text);
    return parse_graph<Rational>(in, override_p, missing_ok);
}

}  // namespace

TEST_CASE("parser: vertices take bit positions in order of first mention") {
    auto g = from_text("p 1/2\nedge s a\nedge a t\n# comment\n");
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.vertex_names() == std::vector<std::string>{"s", "a", "t"});
    CHECK(g.vertex_index("t") == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.uniform_p() == Rational(1, 2));
}

TEST_CASE("parser: per-edge probability overrides the default line") {
    auto g = from_text("p 1/2\nedge s t 1/4\nedge s t\n");
    CHECK(g.edges()[0].p == Rational(1, 4));
    CHECK(g.edges()[1].p == Rational(1, 2));
    CHECK_FALSE(g.uniform_p().has_value());
}

TEST_CASE("parser: CLI override replaces every probability") {
    auto g = from_text("p 1/2\nedge s t 1/4\n", Rational(2, 3));
    CHECK(g.edges()[0].p == Rational(2, 3));
}

TEST_CASE("parser: errors") {
    CHECK_THROWS_AS(from_text("edge s s 1/2\n"), ParseError);          // loop
    CHECK_THROWS_AS(from_text("edge s t\n"), ParseError);              // unresolved p
    CHECK_THROWS_AS(from_text("edge s t 0\n"), ParseError);            // p out of range
    CHECK_THROWS_AS(from_text("edge s t 3/2\n"), ParseError);          // p out of range
    CHECK_THROWS_AS(from_text("vertex s\n"), ParseError);              // unknown directive
    CHECK_THROWS_AS(from_text("edge s\n"), ParseError);                // missing endpoint
    CHECK_NOTHROW(from_text("edge s t\n", {}, /*missing_ok=*/true));   // structure-only load

    std::string big;
    for (int i = 0; i < 31; ++i) big += "edge v" + std::to_string(i) + " w 1/2\n";
    CHECK_THROWS_AS(from_text(big), ParseError);                       // vertex cap
}

TEST_CASE("open_neighborhood") {
    auto path = make_path(2, Rational(1, 2));  // s=0, a=1, t=2
    CHECK(open_neighborhood(path, VertexSet::of({0})) == VertexSet::of({1}));
    CHECK(open_neighborhood(path, VertexSet::of({0, 1})) == VertexSet::of({2}));
    CHECK(open_neighborhood(path, path.vertices()).empty());
}

TEST_CASE("open_neighborhood is disjoint from its argument") {
    Philox4x32 rng(7, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto c = testutil::random_multigraph(rng, 7);
        VertexSet a(rng.next_u32() & c.graph.vertices().bits);
        CHECK((open_neighborhood(c.graph, a) & a).empty());
    }
}

TEST_CASE("cut_edges lists parallel edges individually") {
    auto pair = make_parallel_edges(2, Rational(1, 2));
    CHECK(cut_edges(pair, VertexSet::of({0}), VertexSet::of({1})) == std::vector<int>{0, 1});

    auto triangle = make_complete(3, Rational(1, 2));
    CHECK(cut_edges(triangle, VertexSet::of({0}), VertexSet::of({1, 2})).size() == 2);

    auto two_parts = from_text("edge a b 1/2\nedge c d 1/2\n");
    CHECK(cut_edges(two_parts, VertexSet::of({0}), VertexSet::of({2})).empty());
}

TEST_CASE("merge_vertices") {
    auto path = make_path(2, Rational(1, 2));
    auto merged = merge_vertices(path, VertexSet::of({0, 1}));
    CHECK(merged.vertex_count() == 2);
    CHECK(merged.edge_count() == 1);
    CHECK(merged.vertex_names()[0] == "v0+v1");

    auto triangle = make_complete(3, Rational(1, 2));
    auto merged_tri = merge_vertices(triangle, VertexSet::of({0, 1}));
    CHECK(merged_tri.vertex_count() == 2);
    CHECK(merged_tri.edge_count() == 2);  // two parallel edges survive

    auto all = merge_vertices(triangle, triangle.vertices());
    CHECK(all.vertex_count() == 1);
    CHECK(all.edge_count() == 0);

    CHECK_THROWS_AS(merge_vertices(path, VertexSet()), EmptyMergeSet);
}

TEST_CASE("merging preserves boundary multiplicities") {
    Philox4x32 rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto c = testutil::random_multigraph(rng, 7);
        const auto& g = c.graph;
        std::uint32_t raw = rng.next_u32() & g.vertices().bits;
        if (raw == 0) raw = 1;
        VertexSet x(raw);
        auto merged = merge_vertices(g, x);
        VertexSet xp = merged_vertex_set(x);
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (x.test(a)) continue;
            int in_g = static_cast<int>(cut_edges(g, x, VertexSet::single(a)).size());
            int mapped = merged.vertex_index(g.vertex_names()[a]);
            int in_merged =
                static_cast<int>(cut_edges(merged, xp, VertexSet::single(mapped)).size());
            CHECK(in_g == in_merged);
        }
    }
}

TEST_CASE("simplify_parallel") {
    auto pair = make_parallel_edges(2, Rational(1, 2));
    auto simple = simplify_parallel(pair);
    REQUIRE(simple.edge_count() == 1);
    CHECK(simple.edges()[0].p == Rational(3, 4));

    auto triple = make_parallel_edges(3, Rational(1, 2));
    CHECK(simplify_parallel(triple).edges()[0].p == Rational(7, 8));

    auto path = make_path(3, Rational(1, 3));
    auto same = simplify_parallel(path);
    CHECK(same.edge_count() == path.edge_count());
    CHECK(same.vertex_names() == path.vertex_names());
    for (int i = 0; i < path.edge_count(); ++i) CHECK(same.edges()[i].p == path.edges()[i].p);
}

TEST_CASE("distance") {
    auto p4 = make_path(4, Rational(1, 2));
    CHECK(distance(p4, 0, 4) == 4);
    CHECK(distance(p4, 1, 1) == 0);

    auto two_parts = from_text("edge a b 1/2\nedge c d 1/2\n");
    CHECK_FALSE(distance(two_parts, 0, 2).has_value());
}

TEST_CASE("graph conversion to float keeps structure") {
    auto g = from_text("p 1/4\nedge s a\nedge a t 1/3\n");
    auto f = convert_graph<double>(g);
    CHECK(f.vertex_names() == g.vertex_names());
    CHECK(f.edges()[0].p == doctest::Approx(0.25));
    CHECK(f.edges()[1].p == doctest::Approx(1.0 / 3.0));
}

#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "tperfect/canonical.hpp"
#include "tperfect/io.hpp"
#include "tperfect/patterns.hpp"

using namespace tperfect;

TEST_SUITE("graph") {
  TEST_CASE("construction validates and deduplicates") {
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), GraphError);
  }

  TEST_CASE("vertex sets beyond one word") {
    VertexSet s(130, {0, 64, 129});
    CHECK(s.size() == 3);
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 64);
    CHECK(s.next(64) == 129);
    CHECK(s.next(129) == -1);
    s.erase(64);
    CHECK(s.members() == std::vector<Vertex>{0, 129});
    CHECK(VertexSet::full(130).size() == 130);
  }

  TEST_CASE("induced subgraph keeps relative order") {
    const Graph c5 = named_graph(PatternName::cycle(5));
    const auto sub = induced_subgraph(c5, VertexSet(5, {1, 2, 4}));
    CHECK(sub.to_host == std::vector<Vertex>{1, 2, 4});
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.adjacent(0, 1));
    const auto del = delete_vertices(c5, VertexSet(5, {0}));
    CHECK(del.graph.order() == 4);
    CHECK(del.graph.edge_count() == 3);
  }

  TEST_CASE("complement and duplication") {
    const Graph c5 = named_graph(PatternName::cycle(5));
    CHECK(oracle::isomorphic(complement(c5), c5));
    const Graph d = duplicate_vertex(c5, 0, 2);
    CHECK(d.order() == 7);
    CHECK(d.neighbors(5).members() == std::vector<Vertex>{1, 4});
    CHECK(d.neighbors(6).members() == std::vector<Vertex>{1, 4});
    CHECK_FALSE(d.adjacent(0, 5));
    CHECK_FALSE(d.adjacent(5, 6));
  }

  TEST_CASE("components") {
    const Graph g = Graph::from_edges(6, {{0, 3}, {3, 5}, {1, 2}});
    const auto cs = connected_components(g);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].members() == std::vector<Vertex>{0, 3, 5});
    CHECK(cs[1].members() == std::vector<Vertex>{1, 2});
    CHECK(cs[2].members() == std::vector<Vertex>{4});
    CHECK_FALSE(is_connected(g));
  }
}

TEST_SUITE("io") {
  TEST_CASE("graph6 of known graphs") {
    CHECK(format_graph6(named_graph(PatternName::complete(4))) == "C~");
    CHECK(format_graph6(named_graph(PatternName::cycle(5))) == "Dhc");
    CHECK(format_graph6(Graph::from_edges(0, {})) == "?");
    CHECK(parse_graph6("Dhc") == named_graph(PatternName::cycle(5)));
    CHECK(parse_graph6(">>graph6<<C~\n") == named_graph(PatternName::complete(4)));
  }

  TEST_CASE("graph6 round trip including long-order header") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 7, 12, 62, 63, 64, 100}) {
      const Graph g = oracle::random_graph(rng, n, 0.3);
      CHECK(parse_graph6(format_graph6(g)) == g);
    }
  }

  TEST_CASE("edge list round trip and errors") {
    const Graph g = named_graph(PatternName::wheel(5));
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK(parse_graph(format_edge_list(g)) == g);
    CHECK(parse_graph("# comment\n3 1\n\n0 2\n") == Graph::from_edges(3, {{0, 2}}));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph6("D"), ParseError);
    CHECK_THROWS_AS(parse_graph6("D h c"), ParseError);
  }

  TEST_CASE("read_text from a stream") {
    std::istringstream in("C~\n");
    CHECK(read_text("-", in) == "C~\n");
    CHECK_THROWS_AS(read_text("/nonexistent/graph.el", in), GraphError);
  }
}

TEST_SUITE("canonical") {
  TEST_CASE("graph counts up to isomorphism") {
    // Number of unlabelled graphs on n vertices.
    const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
  }

  TEST_CASE("codes agree with brute-force isomorphism") {
    std::mt19937_64 rng(11);
    int same = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 3 + trial % 5;
      const Graph a = oracle::random_graph(rng, n, 0.5);
      Graph b = oracle::random_graph(rng, n, 0.5);
      if (trial % 2 == 0) {
        // Relabel a randomly so roughly half the pairs are isomorphic.
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<Edge> e;
        for (const auto& [u, v] : a.edges()) e.emplace_back(p[u], p[v]);
        b = Graph::from_edges(n, e);
      }
      const bool iso = oracle::isomorphic(a, b);
      same += iso;
      CHECK(are_isomorphic(a, b) == iso);
      CHECK((canonical_code(a) == canonical_code(b)) == iso);
    }
    CHECK(same >= 200);
  }

  TEST_CASE("canonical form is a relabelling") {
    const Graph g = named_graph(PatternName::figure4());
    const auto f = canonical_form(g);
    CHECK(oracle::is_iso_under(g, f.graph, [&] {
      std::vector<int> inv(f.labeling.size());
      for (std::size_t p = 0; p < f.labeling.size(); ++p) inv[static_cast<std::size_t>(f.labeling[p])] = static_cast<int>(p);
      return inv;
    }()));
    CHECK(canonical_code(f.graph) == f.code);
  }

  TEST_CASE("enumeration has no duplicates") {
    std::map<CanonicalCode, int> seen;
    for (const auto& g : enumerate_graphs(6)) CHECK(++seen[canonical_code(g)] == 1);
  }
}

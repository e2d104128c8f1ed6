#include <doctest.h>

#include "oracles.hpp"
#include "tperfect/canonical.hpp"
#include "tperfect/patterns.hpp"

using namespace tperfect;

TEST_SUITE("patterns") {
  TEST_CASE("named graph shapes") {
    CHECK(named_graph(PatternName::wheel(5)).order() == 6);
    CHECK(named_graph(PatternName::wheel(5)).edge_count() == 10);
    CHECK(named_graph(PatternName::c7_squared()).edge_count() == 14);
    CHECK(named_graph(PatternName::c10_squared()).edge_count() == 20);
    CHECK(oracle::isomorphic(named_graph(PatternName::wheel(3)), named_graph(PatternName::complete(4))));
    // C7^2 is the complement of C7.
    CHECK(oracle::isomorphic(named_graph(PatternName::c7_squared()), complement(named_graph(PatternName::cycle(7)))));
    CHECK_THROWS_AS(named_graph(PatternName::cycle(2)), GraphError);
  }

  TEST_CASE("names round trip") {
    for (const char* s : {"claw", "fork", "C5", "P4", "K4", "W5", "C7^2", "C10^2", "figure3a", "figure3a[2,4]",
                          "figure3b[1,3]", "figure3c", "figure4"})
      CHECK(PatternName::parse(s).to_string() == s);
    CHECK_THROWS_AS(PatternName::parse("Q5"), GraphError);
    CHECK_THROWS_AS(PatternName::parse("figure3c[1]"), GraphError);
    CHECK_THROWS_AS(PatternName::parse("figure3a[1]"), GraphError);
  }

  TEST_CASE("figure3 labels") {
    CHECK(figure3_labels(PatternName::parse("figure3a[3]")) ==
          std::vector<std::string>{"v1", "v2", "v3", "v4", "v5", "u2+", "u4+", "u3-"});
    CHECK(figure3_labels(PatternName::figure3(Figure3Variant::C)).size() == 8);
  }

  TEST_CASE("find_induced agrees with exhaustive search") {
    std::mt19937_64 rng(3);
    const std::vector<PatternName> patterns = {PatternName::claw(), PatternName::fork(), PatternName::cycle(5),
                                               PatternName::path(4), PatternName::complete(4), PatternName::wheel(5)};
    for (int trial = 0; trial < 120; ++trial) {
      const Graph host = oracle::random_graph(rng, 6 + trial % 3, 0.45);
      for (const auto& p : patterns) {
        const Graph pattern = named_graph(p);
        const auto e = find_induced(host, pattern);
        CHECK(e.has_value() == oracle::contains_induced(host, pattern));
        if (e) CHECK(verify_embedding(host, pattern, *e));
      }
    }
  }

  TEST_CASE("verify_embedding rejects non-induced maps") {
    const Graph k4 = named_graph(PatternName::complete(4));
    const Graph claw = named_graph(PatternName::claw());
    CHECK_FALSE(verify_embedding(k4, claw, Embedding{{0, 1, 2, 3}}));
    CHECK_FALSE(verify_embedding(k4, claw, Embedding{{0, 1, 1, 2}}));
    CHECK_FALSE(verify_embedding(k4, claw, Embedding{{0, 1, 2}}));
  }

  TEST_CASE("fork and claw detection") {
    CHECK_FALSE(is_fork_free(named_graph(PatternName::fork())));
    CHECK(is_fork_free(named_graph(PatternName::claw())));
    CHECK(contains_claw(named_graph(PatternName::claw())));
    CHECK_FALSE(contains_claw(named_graph(PatternName::cycle(7))));
    CHECK(is_fork_free(named_graph(PatternName::figure4())));
    for (const auto& g : enumerate_graphs(6)) CHECK(is_fork_free(g) == !oracle::has_fork(g));
  }

  TEST_CASE("small obstructions in order") {
    const auto& obs = small_obstructions();
    REQUIRE(obs.size() == 4);
    CHECK(obs[0] == PatternName::complete(4));
    const auto m = find_small_obstruction(named_graph(PatternName::c10_squared()));
    REQUIRE(m);
    CHECK(m->name == PatternName::c10_squared());
    CHECK_FALSE(find_small_obstruction(named_graph(PatternName::wheel(7))));
    const auto w = find_odd_wheel(named_graph(PatternName::wheel(7)));
    REQUIRE(w);
    CHECK(w->name == PatternName::wheel(7));
  }
}

#include <random>

#include "doctest.h"
#include "het/designs.hpp"
#include "het/errors.hpp"
#include "het/oracle.hpp"
#include "support.hpp"

using namespace het;

TEST_SUITE("oracle") {
  TEST_CASE("single edge has no family") {
    auto verdict = oracleEuler(makeHypergraph(3, {{0, 1, 2}}));
    CHECK_FALSE(verdict.familyExists);
    CHECK_FALSE(verdict.tourExists);
    CHECK_FALSE(verdict.spanningTourExists);
    CHECK(verdict.searchSize == 3);  // C(3,2) assignments, all odd somewhere
  }

  TEST_CASE("two-edge hypergraph: tour but never spanning") {
    auto h = makeHypergraph(4, {{0, 1, 2}, {0, 1, 3}});
    auto verdict = oracleEuler(h);
    CHECK(verdict.familyExists);
    CHECK(verdict.tourExists);
    CHECK_FALSE(verdict.spanningTourExists);  // using vertex 2 or 3 leaves it odd
    CHECK(verdict.searchSize == 9);           // full enumeration of 3 * 3 assignments
    REQUIRE(verdict.witness.has_value());
    CHECK(*verdict.witness == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}});
  }

  TEST_CASE("fano plane is spanning-Eulerian") {
    auto verdict = oracleEuler(genSTS(7));
    CHECK(verdict.familyExists);
    CHECK(verdict.tourExists);
    CHECK(verdict.spanningTourExists);
  }

  TEST_CASE("edge of size one admits nothing") {
    auto verdict = oracleEuler(makeHypergraph(2, {{0}, {0, 1}}));
    CHECK_FALSE(verdict.familyExists);
    CHECK(verdict.searchSize == 0);
  }

  TEST_CASE("empty hypergraph has the empty family") {
    auto verdict = oracleEuler(makeHypergraph(3, {}));
    CHECK(verdict.familyExists);
    CHECK_FALSE(verdict.tourExists);
  }

  TEST_CASE("verdict ordering invariant") {
    std::mt19937 rng(7401);
    for (int it = 0; it < 80; ++it) {
      auto h = test::randomHypergraph(rng, 7, 5, 2, 4);
      auto verdict = oracleEuler(h);
      if (verdict.spanningTourExists) CHECK(verdict.tourExists);
      if (verdict.tourExists) CHECK(verdict.familyExists);
      if (verdict.witness) {
        for (std::size_t i = 0; i < verdict.witness->size(); ++i) {
          auto [a, b] = (*verdict.witness)[i];
          CHECK(a != b);
          const auto& e = h.edges[i];
          CHECK(std::binary_search(e.begin(), e.end(), a));
          CHECK(std::binary_search(e.begin(), e.end(), b));
        }
      }
    }
  }

  TEST_CASE("cap is enforced") {
    CHECK_THROWS_AS(oracleEuler(genSQS8(), OracleMode::family, 1000), CapExceededError);
  }

  TEST_CASE("brute matching values") {
    Graph triangle(3);
    triangle.addEdge(0, 1);
    triangle.addEdge(1, 2);
    triangle.addEdge(0, 2);
    CHECK(bruteMatching(triangle) == 1);
    CHECK(bruteMatching(Graph(0)) == 0);
    CHECK(bruteMatching(Graph(4)) == 0);
    CHECK(bruteMatching(test::petersenGraph()) == 5);
    CHECK_THROWS_AS(bruteMatching(Graph(30)), CapExceededError);
  }
}

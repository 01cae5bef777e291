#include <stdexcept>

#include "doctest.h"
#include "het/designs.hpp"
#include "het/hypergraph.hpp"

using namespace het;

TEST_SUITE("designs") {
  TEST_CASE("triple system block counts") {
    CHECK(genSTS(7).edgeCount() == 7);
    CHECK(genSTS(9).edgeCount() == 12);
    CHECK(genSTS(13).edgeCount() == 26);
    CHECK(genSTS(15).edgeCount() == 35);
  }

  TEST_CASE("triple system orders outside 1,3 mod 6 are rejected") {
    CHECK_THROWS_AS(genSTS(8), std::invalid_argument);
    CHECK_THROWS_AS(genSTS(11), std::invalid_argument);
    CHECK_THROWS_AS(genSTS(3), std::invalid_argument);  // below the supported range
    CHECK_THROWS_AS(genSTS(0), std::invalid_argument);
  }

  TEST_CASE("generated triple systems are Steiner") {
    for (int n : {7, 9, 13, 15, 19, 21, 25, 27})
      CHECK(validateDesign(genSTS(n), {2, n, {3}, 1}));
  }

  TEST_CASE("the quadruple system of order 8") {
    auto sqs = genSQS8();
    CHECK(sqs.edgeCount() == 14);
    CHECK(validateDesign(sqs, {3, 8, {4}, 1}));
    CHECK(validateDesign(sqs, {2, 8, {4}, 3}));
    CHECK(validateDesign(sqs, {1, 8, {4}, 7}));
  }

  TEST_CASE("validate rejects mismatches") {
    auto fano = genSTS(7);
    CHECK(validateDesign(fano, {2, 7, {3}, 1}));
    CHECK_FALSE(validateDesign(fano, {3, 7, {3}, 1}));  // {1,2,4} is no block
    CHECK_FALSE(validateDesign(fano, {2, 8, {3}, 1}));  // wrong order
    CHECK_FALSE(validateDesign(fano, {2, 7, {4}, 1}));  // wrong block size
    CHECK_FALSE(validateDesign(fano, {2, 7, {3}, 2}));  // wrong index
    CHECK_THROWS_AS(validateDesign(fano, {0, 7, {3}, 1}), std::invalid_argument);
  }

  TEST_CASE("scaling multiplies degrees and multiplicity") {
    auto fano = genSTS(7);
    auto tripled = scale(fano, 3);
    CHECK(tripled.edgeCount() == 21);
    CHECK(validateDesign(tripled, {2, 7, {3}, 3}));
    auto prof = profile(tripled, {2});
    CHECK(prof.maxMultiplicity == 3);
    CHECK(prof.minDegree == std::vector<long long>{3});

    auto same = scale(fano, 1);
    CHECK(same.edges == fano.edges);

    CHECK(validateDesign(scale(genSQS8(), 2), {3, 8, {4}, 2}));
    CHECK_THROWS_AS(scale(fano, 0), std::invalid_argument);
  }

  TEST_CASE("scaling commutes with validation") {
    for (int n : {7, 9})
      for (int lambda : {2, 4})
        CHECK(validateDesign(scale(genSTS(n), lambda), {2, n, {3}, lambda}));
  }

  TEST_CASE("mixed block sizes validate against a size set") {
    auto h = makeHypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}});
    CHECK(validateDesign(h, {2, 4, {3, 4}, 3}));
    CHECK_FALSE(validateDesign(h, {2, 4, {3}, 3}));
  }
}

#include <doctest.h>

#include "topolab/enumerate.hpp"
#include "topolab/naive.hpp"

using namespace topolab;

TEST_CASE("enumerator counts for n = 1..4") {
  CHECK(all_spaces(1).size() == 1);
  CHECK(all_spaces(2).size() == 4);
  CHECK(all_spaces(3).size() == 29);
  CHECK(all_spaces(4).size() == 355);
}

TEST_CASE("enumerator equals the 2^(2^n) filter, order included, for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<SetFamily> expected = naive::all_topology_families(n);
    const std::vector<Space> got = all_spaces(n);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].opens() == expected[i]);
    }
  }
}

TEST_CASE("enumerator count for n = 5") {
  CHECK(all_spaces(5).size() == 6942);
}

TEST_CASE("enumerator capacity bounds") {
  CHECK_THROWS_AS(all_spaces(0), CapacityExceeded);
  CHECK_THROWS_AS(all_spaces(7), CapacityExceeded);
}

TEST_CASE("enumerated spaces have distinct open families") {
  const std::vector<Space> spaces = all_spaces(3);
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    CHECK(spaces[i - 1].opens().powerset_mask(3) <
          spaces[i].opens().powerset_mask(3));
  }
}

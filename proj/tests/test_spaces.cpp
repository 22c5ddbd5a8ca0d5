#include <doctest.h>

#include <random>

#include "topolab/enumerate.hpp"
#include "topolab/naive.hpp"
#include "topolab/space.hpp"

using namespace topolab;

namespace {

Space make_s2() {
  // Two points, one open singleton: the minimal workhorse fixture.
  return Space::build(2, default_point_names(2), SetFamily::of({0b00, 0b01, 0b11}));
}

}  // namespace

TEST_CASE("build_space accepts the two-point fixture") {
  const Space s = make_s2();
  CHECK(s.points() == 2);
  CHECK(s.opens().size() == 3);
  CHECK(s.names()[0] == "a");
  CHECK(s.set_label(PointSet{0b11}) == "{a,b}");
}

TEST_CASE("build_space rejects non-topologies with reason tags") {
  CHECK_THROWS_AS(
      Space::build(2, {}, SetFamily::of({0b00, 0b01})),  // missing X
      NotATopology);
  try {
    Space::build(2, {}, SetFamily::of({0b00, 0b01}));
  } catch (const NotATopology& e) {
    CHECK(e.reason() == NotATopology::Reason::missing_full);
  }

  try {
    Space::build(3, {}, SetFamily::of({0b000, 0b001, 0b010, 0b111}));
    FAIL("union gap not detected");
  } catch (const NotATopology& e) {
    CHECK(e.reason() == NotATopology::Reason::union_absent);
    CHECK(e.pair_first() == 0b001);
    CHECK(e.pair_second() == 0b010);
  }

  try {
    Space::build(2, {}, SetFamily::of({0b01, 0b11}));
    FAIL("missing empty set not detected");
  } catch (const NotATopology& e) {
    CHECK(e.reason() == NotATopology::Reason::missing_empty);
  }

  CHECK_THROWS_AS(Space::build(0, {}, SetFamily::of({0})), CapacityExceeded);
  CHECK_THROWS_AS(Space::build(65, {}, SetFamily{}), CapacityExceeded);
}

TEST_CASE("subbasis generation") {
  // Empty subbasis gives the indiscrete space.
  const Space ind = Space::from_subbasis(2, {}, SetFamily{});
  CHECK(ind.opens() == SetFamily::of({0b00, 0b11}));

  // A single open singleton generates the two-point fixture.
  const Space s2 = Space::from_subbasis(2, {}, SetFamily::of({0b01}));
  CHECK(s2.opens() == make_s2().opens());

  // {a} plus every {a,r} on four points: the opens are the empty set, X,
  // and every set containing a.
  const Space s = Space::from_subbasis(
      4, {}, SetFamily::of({0b0001, 0b0011, 0b0101, 0b1001}));
  std::vector<PointSet> expected;
  expected.emplace_back(0);
  for (std::uint64_t m = 0; m < 16; ++m) {
    if (m & 1) expected.emplace_back(m);
  }
  CHECK(s.opens() == SetFamily{expected});
}

TEST_CASE("minimal neighborhoods") {
  const Space s2 = make_s2();
  CHECK(s2.minimal_nbhd(0) == PointSet{0b01});
  CHECK(s2.minimal_nbhd(1) == PointSet{0b11});
  CHECK_THROWS_AS(s2.minimal_nbhd(2), PointOutOfRange);
  CHECK_THROWS_AS(s2.minimal_nbhd(-1), PointOutOfRange);

  const Space disc = Space::discrete(3);
  for (int x = 0; x < 3; ++x) CHECK(disc.minimal_nbhd(x) == PointSet::single(x));
}

TEST_CASE("closure and interior on the fixture") {
  const Space s2 = make_s2();
  CHECK(s2.closure(PointSet{0b01}) == PointSet{0b11});  // Cl({a}) = X
  CHECK(s2.closure(PointSet{0b10}) == PointSet{0b10});  // Cl({b}) = {b}
  CHECK(s2.closure(s2.universe()) == s2.universe());
  CHECK(s2.interior(PointSet::empty_set()) == PointSet::empty_set());
  CHECK(s2.interior(PointSet{0b10}) == PointSet::empty_set());
  CHECK(s2.interior(PointSet{0b01}) == PointSet{0b01});
}

TEST_CASE("Kuratowski closure laws hold on every space with n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Space& s : all_spaces(n)) {
      const std::uint64_t subsets = std::uint64_t{1} << n;
      CHECK(s.closure(PointSet::empty_set()) == PointSet::empty_set());
      for (std::uint64_t ra = 0; ra < subsets; ++ra) {
        const PointSet a{ra};
        const PointSet ca = s.closure(a);
        CHECK(a.subset_of(ca));
        CHECK(s.closure(ca) == ca);
        for (std::uint64_t rb = ra + 1; rb < subsets; ++rb) {
          const PointSet b{rb};
          CHECK(s.closure(a | b) == (ca | s.closure(b)));
        }
      }
    }
  }
}

TEST_CASE("closure matches the full-quantifier evaluation on n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      for (std::uint64_t ra = 0; ra < (std::uint64_t{1} << n); ++ra) {
        const PointSet a{ra};
        CHECK(s.closure(a) == naive::closure(s, a));
        CHECK(s.interior(a) == naive::interior(s, a));
      }
    }
  }
}

TEST_CASE("minimal neighborhoods form a base: every open is a union of them") {
  for (int n = 1; n <= 4; ++n) {
    for (const Space& s : all_spaces(n)) {
      for (const PointSet& u : s.opens()) {
        PointSet rebuilt;
        u.for_each([&](int x) { rebuilt |= s.minimal_nbhd(x); });
        CHECK(rebuilt == u);
      }
    }
  }
}

TEST_CASE("build_space after extracting opens is the identity") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      const Space rebuilt = Space::build(n, s.names(), s.opens());
      CHECK(rebuilt == s);
      for (int x = 0; x < n; ++x) {
        CHECK(rebuilt.minimal_nbhd(x) == s.minimal_nbhd(x));
      }
    }
  }
}

TEST_CASE("regularity on the stock examples") {
  CHECK(Space::discrete(3).is_regular());
  CHECK(Space::indiscrete(2).is_regular());
  CHECK(!make_s2().is_regular());
}

TEST_CASE("regularity matches the open-pair search on n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      CHECK(s.is_regular() == naive::is_regular(s));
    }
  }
}

TEST_CASE("canonical relabeling is invariant under permutations") {
  std::mt19937_64 rng(99);
  for (const Space& s : all_spaces(3)) {
    const Space canon = canonical_relabel(s);
    // Relabel randomly, canonicalize again, expect the same family.
    std::vector<int> perm{0, 1, 2};
    for (int i = 2; i > 0; --i) {
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    std::vector<PointSet> relabeled;
    for (const PointSet& u : s.opens()) {
      PointSet out;
      u.for_each([&](int p) {
        out |= PointSet::single(perm[static_cast<std::size_t>(p)]);
      });
      relabeled.push_back(out);
    }
    const Space shuffled =
        Space::build(3, default_point_names(3), SetFamily{relabeled});
    CHECK(canonical_relabel(shuffled).opens() == canon.opens());
    // Canonical form is minimal, hence no larger than the original encoding.
    CHECK(canon.opens().powerset_mask(3) <= s.opens().powerset_mask(3));
  }
}

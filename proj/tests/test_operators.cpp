#include <doctest.h>

#include "topolab/context.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/laws.hpp"
#include "topolab/naive.hpp"

using namespace topolab;

namespace {

Space make_s2() {
  return Space::build(2, default_point_names(2), SetFamily::of({0b00, 0b01, 0b11}));
}

Context s2_pa() { return Context{make_s2(), Ideal::principal(2, PointSet{0b01})}; }

const PointSet kA{0b01};
const PointSet kB{0b10};
const PointSet kX{0b11};
const PointSet kNone{0b00};

}  // namespace

TEST_CASE("local function on the fixture") {
  const Context ctx = s2_pa();
  CHECK(ctx.local_star(kB) == kB);
  CHECK(ctx.local_star(kA) == kNone);
  CHECK(ctx.local_star(kX) == kB);
  CHECK(ctx.cl_star(kA) == kA);
  CHECK(ctx.cl_star(kB) == kB);
  CHECK(ctx.cl_star(kNone) == kNone);
}

TEST_CASE("local function with the trivial and improper ideals") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      const Context trivial{s, Ideal::principal(n, PointSet::empty_set())};
      const Context improper{s, Ideal::principal(n, PointSet::full(n))};
      for (std::uint64_t ra = 0; ra < (std::uint64_t{1} << n); ++ra) {
        const PointSet a{ra};
        // With the minimal ideal the local function is closure; with the
        // improper ideal it vanishes.
        CHECK(trivial.local_star(a) == s.closure(a));
        CHECK(improper.local_star(a) == PointSet::empty_set());
        CHECK(trivial.gamma(a) == trivial.theta_closure(a));
        CHECK(improper.gamma(a) == PointSet::empty_set());
        CHECK(improper.psi_gamma(a) == s.universe());
      }
      CHECK(trivial.family(Slot::tau_star) == s.opens());
      CHECK(trivial.family(Slot::tau_omega) == s.opens());
      CHECK(trivial.family(Slot::tau_theta_omega) ==
            trivial.family(Slot::tau_theta));
      const SetFamily discrete = Space::discrete(n).opens();
      CHECK(improper.family(Slot::tau_star) == discrete);
      CHECK(improper.family(Slot::tau_omega) == discrete);
    }
  }
}

TEST_CASE("theta operators on the fixture") {
  const Context ctx = s2_pa();
  CHECK(ctx.theta_closure(kB) == kX);
  CHECK(ctx.theta_interior(kA) == kNone);
  CHECK(ctx.family(Slot::tau_theta) == SetFamily::of({0b00, 0b11}));

  const Context disc{Space::discrete(3), Ideal::principal(3, PointSet{0b001})};
  for (std::uint64_t ra = 0; ra < 8; ++ra) {
    CHECK(disc.theta_interior(PointSet{ra}) == PointSet{ra});
    CHECK(disc.theta_closure(PointSet{ra}) == PointSet{ra});
  }
}

TEST_CASE("gamma and psi on the fixture") {
  const Context ctx = s2_pa();
  CHECK(ctx.gamma(kB) == kX);
  CHECK(ctx.gamma(kA) == kNone);
  CHECK(ctx.psi_gamma(kA) == kNone);
  CHECK(ctx.psi_gamma(kB) == kX);
  CHECK(ctx.psi_gamma(kX) == kX);
}

TEST_CASE("derived topologies on the fixture match the brute-force values") {
  const Context ctx = s2_pa();
  const DerivedFamilies fams = ctx.derive_families();
  CHECK(fams[Slot::tau_theta] == SetFamily::of({0b00, 0b11}));
  CHECK(fams[Slot::tau] == SetFamily::of({0b00, 0b01, 0b11}));
  CHECK(fams[Slot::sigma] == SetFamily::of({0b00, 0b10, 0b11}));
  CHECK(fams[Slot::sigma0] == SetFamily::of({0b00, 0b10, 0b11}));
  CHECK(fams[Slot::tau_star] == SetFamily::of({0b00, 0b01, 0b10, 0b11}));
  CHECK(fams[Slot::tau_omega] == SetFamily::of({0b00, 0b01, 0b10, 0b11}));
  CHECK(fams[Slot::tau_theta_omega] == SetFamily::of({0b00, 0b01, 0b11}));

  // Same values straight from the definitional route.
  const Space s2 = make_s2();
  const Ideal pa = Ideal::principal(2, PointSet{0b01});
  CHECK(fams[Slot::tau_theta] == naive::tau_theta_family(s2));
  CHECK(fams[Slot::sigma] == naive::sigma_family(s2, pa));
  CHECK(fams[Slot::sigma0] == naive::sigma0_family(s2, pa));
  CHECK(fams[Slot::tau_star] == naive::tau_star_family(s2, pa));
  CHECK(fams[Slot::tau_omega] == naive::tau_omega_family(s2, pa));
  CHECK(fams[Slot::tau_theta_omega] == naive::tau_theta_omega_family(s2, pa));
}

TEST_CASE("theta-omega closure on the fixture") {
  const Context ctx = s2_pa();
  CHECK(ctx.theta_omega_closure(kA) == kX);
  CHECK(ctx.theta_omega_closure(kB) == kB);

  const Context disc{Space::discrete(3), Ideal::principal(3, PointSet{0b010})};
  for (std::uint64_t ra = 0; ra < 8; ++ra) {
    CHECK(disc.theta_omega_closure(PointSet{ra}) == PointSet{ra});
  }
}

TEST_CASE("fixture with the minimal ideal collapses to the theta topology") {
  const Context ctx{make_s2(), Ideal::principal(2, PointSet::empty_set())};
  CHECK(ctx.family(Slot::sigma) == SetFamily::of({0b00, 0b11}));
  CHECK(ctx.family(Slot::sigma0) == SetFamily::of({0b00, 0b11}));
  CHECK(ctx.family(Slot::tau_theta_omega) == SetFamily::of({0b00, 0b11}));
}

TEST_CASE("indiscrete bundle with improper ideal") {
  const Context ctx{Space::indiscrete(2), Ideal::principal(2, kX)};
  CHECK(ctx.family(Slot::tau_star) == Space::discrete(2).opens());
  CHECK(ctx.family(Slot::sigma0) == Space::discrete(2).opens());
}

TEST_CASE("indiscrete bundle with minimal ideal is fully indiscrete") {
  const Context ctx{Space::indiscrete(2),
                    Ideal::principal(2, PointSet::empty_set())};
  const DerivedFamilies fams = ctx.derive_families();
  for (Slot s : kAllSlots) {
    CHECK(fams[s] == SetFamily::of({0b00, 0b11}));
  }
}

TEST_CASE("discrete bundle is fully discrete for every ideal") {
  const int n = 3;
  const Space disc = Space::discrete(n);
  for (const Ideal& ideal : all_principal_ideals(n)) {
    const Context ctx{disc, ideal};
    const DerivedFamilies fams = ctx.derive_families();
    for (Slot s : kAllSlots) CHECK(fams[s] == disc.opens());
  }
}

TEST_CASE("point operators work on wide ground sets with small topologies") {
  // 40 points, opens generated by one singleton: set algebra runs at full
  // word width while the topology itself stays tiny.
  const int n = 40;
  const Space s = Space::from_subbasis(n, {}, SetFamily::of({0b1}));
  const Ideal ideal = Ideal::principal(n, PointSet{0xFFu});
  const Context ctx{s, ideal};

  const PointSet a{0x0F0F0F0F0Full};
  CHECK(ctx.local_star(a) == naive::local_star(s, ideal, a));
  CHECK(ctx.gamma(a) == naive::gamma(s, ideal, a));
  CHECK(ctx.theta_closure(a) == naive::theta_closure(s, a));
  // The reachability route for omega neighborhoods has no subset sweep, so
  // theta-omega closures stay available at this width for principal ideals.
  CHECK(ctx.theta_omega_closure(PointSet::single(39)).contains(39));
  // Deriving whole topologies would sweep 2^40 subsets.
  CHECK_THROWS_AS(ctx.family(Slot::tau_star), CapacityExceeded);
  CHECK_THROWS_AS(run_law_suite(ctx), CapacityExceeded);
}

TEST_CASE("context rejects mismatched ground sets") {
  CHECK_THROWS_AS(Context(make_s2(), Ideal::principal(3, PointSet{0b001})),
                  GroundSetMismatch);
}

TEST_CASE("minimal-neighborhood operators equal the full-quantifier route") {
  // Principal ideals on n <= 3, plus the two-generator semi-ideals on
  // n <= 2; the reductions rely only on downward closure, so they must
  // agree in both modes.
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      std::vector<Ideal> ideals = all_principal_ideals(n);
      if (n <= 2) {
        const std::uint64_t subsets = std::uint64_t{1} << n;
        for (std::uint64_t g1 = 1; g1 < subsets; ++g1) {
          for (std::uint64_t g2 = g1 + 1; g2 < subsets; ++g2) {
            const PointSet a{g1}, b{g2};
            if (a.subset_of(b) || b.subset_of(a)) continue;
            ideals.push_back(Ideal::downward(n, SetFamily::of({g1, g2})));
          }
        }
      }
      for (const Ideal& ideal : ideals) {
        const Context ctx{s, ideal};
        for (std::uint64_t ra = 0; ra < (std::uint64_t{1} << n); ++ra) {
          const PointSet a{ra};
          CHECK(ctx.local_star(a) == naive::local_star(s, ideal, a));
          CHECK(ctx.gamma(a) == naive::gamma(s, ideal, a));
          CHECK(ctx.theta_closure(a) == naive::theta_closure(s, a));
          CHECK(ctx.theta_interior(a) == naive::theta_interior(s, a));
          CHECK(ctx.theta_omega_closure(a) ==
                naive::theta_omega_closure(s, ideal, a));
        }
        CHECK(ctx.family(Slot::tau_omega) == naive::tau_omega_family(s, ideal));
        CHECK(ctx.family(Slot::tau_star) == naive::tau_star_family(s, ideal));
        CHECK(ctx.family(Slot::sigma) == naive::sigma_family(s, ideal));
        CHECK(ctx.family(Slot::sigma0) == naive::sigma0_family(s, ideal));
        CHECK(ctx.family(Slot::tau_theta_omega) ==
              naive::tau_theta_omega_family(s, ideal));
      }
    }
  }
}

TEST_CASE("paranoid contexts cross-check every call") {
  const Context ctx{make_s2(), Ideal::principal(2, PointSet{0b01}), true};
  for (std::uint64_t ra = 0; ra < 4; ++ra) {
    const PointSet a{ra};
    CHECK_NOTHROW(ctx.local_star(a));
    CHECK_NOTHROW(ctx.gamma(a));
    CHECK_NOTHROW(ctx.theta_closure(a));
    CHECK_NOTHROW(ctx.theta_omega_closure(a));
    CHECK_NOTHROW(ctx.omega_closure(a));
  }
}

TEST_CASE("memoized tables equal fresh recomputation") {
  for (const Space& s : all_spaces(3)) {
    for (const Ideal& ideal : all_principal_ideals(3)) {
      const Context ctx{s, ideal};
      for (int x = 0; x < 3; ++x) {
        CHECK(ctx.closure_of_nbhd(x) == s.closure(s.minimal_nbhd(x)));
        CHECK(ctx.theta_omega_closure(PointSet::single(x)) ==
              naive::theta_omega_closure(s, ideal, PointSet::single(x)));
      }
    }
  }
}

TEST_CASE("derived families validate as topologies under union-closed ideals") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      for (const Ideal& ideal : all_principal_ideals(n)) {
        const Context ctx{s, ideal};
        const DerivedFamilies fams = ctx.derive_families();
        for (const std::string& defect : fams.axiom_defects(n)) {
          CHECK(defect.empty());
        }
        const TopologyBundle bundle = ctx.derive_all();
        CHECK(bundle[Slot::tau] == s);
        for (Slot slot : kAllSlots) {
          CHECK(bundle[slot].opens() == fams[slot]);
        }
      }
    }
  }
}

TEST_CASE("two sigma definitions coincide") {
  for (const Space& s : all_spaces(3)) {
    for (const Ideal& ideal : all_principal_ideals(3)) {
      const Context ctx{s, ideal};
      const SetFamily via_psi = ctx.family(Slot::sigma);
      std::vector<PointSet> via_gamma;
      for (std::uint64_t ra = 0; ra < 8; ++ra) {
        const PointSet a{ra};
        const PointSet c = a.complement(3);
        if (ctx.gamma(c).subset_of(c)) via_gamma.emplace_back(ra);
      }
      CHECK(via_psi == SetFamily{via_gamma});
    }
  }
}

TEST_CASE("regular spaces collapse tau_theta to tau") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : all_spaces(n)) {
      if (!s.is_regular()) continue;
      const Context ctx{s, Ideal::principal(n, PointSet::empty_set())};
      CHECK(ctx.family(Slot::tau_theta) == s.opens());
    }
  }
}

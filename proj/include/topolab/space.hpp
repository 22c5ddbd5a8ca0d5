#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolab/errors.hpp"
#include "topolab/setfamily.hpp"

namespace topolab {

// "a", "b", ... for small n, "p26", "p27", ... beyond the alphabet.
std::vector<std::string> default_point_names(int n);

// Checks the finite topology axioms on a family: empty set, full set,
// closure under pairwise union and pairwise intersection. Returns a
// human-readable defect description, or nullopt when the family is a
// topology. Members outside the ground set are reported as defects too.
std::optional<std::string> topology_defect(int n, const SetFamily& family);

// A finite topological space: a validated open-set family over n named
// points plus the precomputed table of minimal open neighborhoods N(x).
// Every open set is a union of minimal neighborhoods, and N(x) is the
// intersection of all opens containing x; on a finite carrier that turns
// every "for all open neighborhoods of x" quantifier into one test at N(x).
//
// Immutable after construction; safe for any number of concurrent readers.
class Space {
 public:
  // Validates the family and precomputes the neighborhood table.
  // Throws CapacityExceeded for n outside [1, 64] and NotATopology with a
  // reason tag (missing empty/full set, a violating pair) otherwise.
  static Space build(int n, std::vector<std::string> names, SetFamily opens);

  // Smallest topology containing the subbasis: close under finite
  // intersections (the empty intersection is X), then under unions, then
  // add the empty set.
  static Space from_subbasis(int n, std::vector<std::string> names,
                             const SetFamily& subbasis);

  static Space discrete(int n);
  static Space indiscrete(int n);

  int points() const { return n_; }
  PointSet universe() const { return PointSet::full(n_); }
  const SetFamily& opens() const { return opens_; }
  const std::vector<std::string>& names() const { return names_; }

  // N(x); throws PointOutOfRange.
  PointSet minimal_nbhd(int x) const;

  // Cl(A) = {x : N(x) meets A}; Int(A) = X \ Cl(X \ A).
  PointSet closure(PointSet a) const;
  PointSet interior(PointSet a) const;

  SetFamily closed_sets() const;

  // Every point and every closed set missing it can be separated by
  // disjoint opens.
  bool is_regular() const;

  // Set printed with point names: "{a,b}", "{}" when empty.
  std::string set_label(PointSet s) const;
  std::string family_label(const SetFamily& f) const;

  // Names are cosmetic and excluded from equality.
  friend bool operator==(const Space& a, const Space& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  Space() = default;

  int n_ = 0;
  std::vector<std::string> names_;
  SetFamily opens_;
  std::vector<PointSet> nbhd_;
};

// Relabels points by the permutation that minimizes the open-family
// encoding; used to normalize mined witnesses, never required for law
// checking (all laws are label invariant). perm[i] = new index of point i
// when out_perm is supplied. Requires n <= 6.
Space canonical_relabel(const Space& s, std::vector<int>* out_perm = nullptr);

}  // namespace topolab

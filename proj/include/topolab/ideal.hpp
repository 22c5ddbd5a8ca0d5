#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topolab/setfamily.hpp"

namespace topolab {

// An ideal of "small" sets on the ground set: contains the empty set and
// is closed under subsets; a genuine ideal is also closed under finite
// unions. Two representations are supported:
//
//   principal P(M):  A is a member iff A is a subset of M. Satisfies all
//                    three axioms; on a finite carrier every genuine ideal
//                    is of this form.
//   downward(G):     A is a member iff A is empty or fits under some
//                    generator. Closed under subsets by construction, but
//                    union closure can fail; these semi-ideals exist to
//                    probe which laws need the union axiom.
//
// An empty generator family denotes the minimal ideal whose only member is
// the empty set (same as P(empty)). Immutable after construction.
class Ideal {
 public:
  enum class Kind { principal, downward };

  static Ideal principal(int n, PointSet m);
  // Generators are normalized to the maximal antichain (dominated and
  // duplicate generators dropped).
  static Ideal downward(int n, SetFamily generators);

  Kind kind() const { return kind_; }
  int ground() const { return n_; }

  PointSet principal_set() const;        // principal only
  const SetFamily& generators() const;   // downward only

  bool contains(PointSet a) const;

  // False exactly when X is a member.
  bool is_proper() const;

  bool is_union_closed() const { return !union_closure_violation().has_value(); }

  // A pair of members whose union is not a member, if one exists. Checking
  // generator pairs is enough: generators are members, and the union of two
  // covered sets is covered whenever the union of their generators is.
  std::optional<std::pair<PointSet, PointSet>> union_closure_violation() const;

  // P(M) view when the ideal is union closed: M itself, or the single
  // surviving generator (the empty set for no generators).
  std::optional<PointSet> as_principal() const;

  // Every member set, ascending. Throws CapacityExceeded when the member
  // count would exceed 2^16.
  SetFamily members() const;

  // "P({a,b})" or "dw({a},{b})" with the given point names.
  std::string label(const std::vector<std::string>& names) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  Ideal(Kind kind, int n, PointSet m, SetFamily gens)
      : kind_(kind), n_(n), m_(m), gens_(std::move(gens)) {}

  Kind kind_;
  int n_;
  PointSet m_;       // principal only
  SetFamily gens_;   // downward only
};

// P(M) for every subset M of the ground set, ascending by bit pattern;
// 2^n ideals, from P(empty) through the improper P(X).
std::vector<Ideal> all_principal_ideals(int n);

}  // namespace topolab

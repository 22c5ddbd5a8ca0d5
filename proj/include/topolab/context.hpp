#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topolab/ideal.hpp"
#include "topolab/space.hpp"

namespace topolab {

// The seven derived topologies tracked for one (space, ideal) pair.
// tau_star and tau_omega are computed along genuinely different routes and
// kept as separate slots; their equality is a theorem the law suite keeps
// re-testing, never an assumption.
enum class Slot {
  tau_theta = 0,
  tau,
  sigma,
  sigma0,
  tau_star,
  tau_omega,
  tau_theta_omega,
};

inline constexpr int kSlotCount = 7;
inline constexpr std::array<Slot, kSlotCount> kAllSlots = {
    Slot::tau_theta, Slot::tau,       Slot::sigma,          Slot::sigma0,
    Slot::tau_star,  Slot::tau_omega, Slot::tau_theta_omega};

const char* slot_name(Slot s);        // "tau_theta", ...
const char* slot_display(Slot s);     // "τ_θ", ...
Slot slot_from_name(const std::string& name);  // throws UnknownSlotName

// The seven derived open-set families. With a union-closed ideal each one
// is a topology; with a semi-ideal some can fail the axioms, which is a
// finding, not an error, so the families are always produced as plain
// set families and validation is reported per slot.
struct DerivedFamilies {
  std::array<SetFamily, kSlotCount> fams;

  const SetFamily& operator[](Slot s) const {
    return fams[static_cast<std::size_t>(s)];
  }
  SetFamily& operator[](Slot s) { return fams[static_cast<std::size_t>(s)]; }

  // One entry per slot: empty string when the family is a topology,
  // otherwise the axiom defect.
  std::array<std::string, kSlotCount> axiom_defects(int n) const;
};

// The validated form: every slot passed the topology axioms.
struct TopologyBundle {
  std::array<Space, kSlotCount> spaces;

  const Space& operator[](Slot s) const {
    return spaces[static_cast<std::size_t>(s)];
  }
};

// One (space, ideal) evaluation context. Construction eagerly memoizes the
// closure of every minimal neighborhood and the omega-closure table; both
// tables are write-once and equal to fresh recomputation, and every
// operator afterwards is a pure function. Contexts are independent and may
// be processed concurrently without coordination.
//
// With cross_check enabled every operator call is re-evaluated along the
// full-quantifier reference route and a mismatch throws
// InternalCheckFailure; this is the debug mode that validates the
// minimal-neighborhood reduction itself.
class Context {
 public:
  Context(Space space, Ideal ideal, bool cross_check = false);

  const Space& space() const { return space_; }
  const Ideal& ideal() const { return ideal_; }
  int points() const { return space_.points(); }
  PointSet universe() const { return space_.universe(); }

  // Cl(N(x)), memoized.
  PointSet closure_of_nbhd(int x) const {
    return cl_nbhd_[static_cast<std::size_t>(x)];
  }

  // A* = {x : N(x) meets A outside the ideal}.
  PointSet local_star(PointSet a) const;
  // Cl*(A) = A union A*.
  PointSet cl_star(PointSet a) const;

  // Int_theta(A) = {x : Cl(N(x)) inside A}; Cl_theta(A) = {x : Cl(N(x))
  // meets A}.
  PointSet theta_interior(PointSet a) const;
  PointSet theta_closure(PointSet a) const;

  // Gamma(A) = {x : Cl(N(x)) meets A outside the ideal}; psi is its dual.
  PointSet gamma(PointSet a) const;
  PointSet psi_gamma(PointSet a) const;

  // Closure of A in the omega-open family.
  PointSet omega_closure(PointSet a) const;
  // {x : omega-closure of N(x) meets A}.
  PointSet theta_omega_closure(PointSet a) const;

  // Individual derived families (each sweeps all 2^n subsets; capped at 16
  // points).
  SetFamily family(Slot s) const;
  DerivedFamilies derive_families() const;

  // Validated spaces for all seven slots; throws NotATopology when a slot
  // fails the axioms (possible only for semi-ideals).
  TopologyBundle derive_all() const;

  // Validated single slots, as spaces on the same named ground set.
  Space tau_star() const { return build_slot(Slot::tau_star); }
  Space tau_theta() const { return build_slot(Slot::tau_theta); }
  Space sigma() const { return build_slot(Slot::sigma); }
  Space sigma0() const { return build_slot(Slot::sigma0); }
  Space tau_omega_ideal() const { return build_slot(Slot::tau_omega); }
  Space tau_theta_omega_ideal() const {
    return build_slot(Slot::tau_theta_omega);
  }

 private:
  Space build_slot(Slot s) const;
  PointSet omega_closure_uncached(PointSet a) const;
  void check_point_op(const char* op, PointSet a, PointSet fast,
                      PointSet reference) const;

  Space space_;
  Ideal ideal_;
  bool cross_check_ = false;

  std::vector<PointSet> cl_nbhd_;  // Cl(N(x))

  // Omega-closure machinery. For union-closed ideals the omega-open family
  // is an Alexandrov topology whose minimal neighborhoods come from a
  // reachability closure, with no 2^n sweep; for semi-ideals there is no
  // minimal member and closures are evaluated against the materialized
  // family (capped at 16 points).
  std::optional<std::vector<PointSet>> omega_nbhd_;
  std::optional<SetFamily> omega_family_;
  std::vector<PointSet> omega_cl_nbhd_;  // omega-closure of N(x)
  bool omega_ready_ = false;
};

}  // namespace topolab

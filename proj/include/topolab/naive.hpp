#pragma once

#include <vector>

#include "topolab/ideal.hpp"
#include "topolab/space.hpp"

// Reference evaluators that follow the defining quantifiers literally:
// every "for all open neighborhoods of x" ranges over the whole open
// family, no minimal-neighborhood shortcut, no memoized tables. They are
// deliberately slow and deliberately independent of the production path in
// Context; the production operators are cross-checked against them in
// paranoid mode, in the self test, and throughout the test suite.
namespace topolab::naive {

PointSet closure(const Space& s, PointSet a);
PointSet interior(const Space& s, PointSet a);

// {x : U meets A outside the ideal for every open U around x}
PointSet local_star(const Space& s, const Ideal& ideal, PointSet a);

// {x : Cl(U) meets A outside the ideal for every open U around x}
PointSet gamma(const Space& s, const Ideal& ideal, PointSet a);

PointSet theta_closure(const Space& s, PointSet a);
PointSet theta_interior(const Space& s, PointSet a);

// {A : every point of A has an open U with U \ A in the ideal}
SetFamily tau_omega_family(const Space& s, const Ideal& ideal);

// Closure taken against an arbitrary family: {x : every member containing
// x meets A}. Coincides with topological closure when the family is a
// topology; also meaningful for the non-topologies a semi-ideal produces.
PointSet family_closure(const SetFamily& fam, int n, PointSet a);

PointSet theta_omega_closure(const Space& s, const Ideal& ideal, PointSet a);

SetFamily tau_star_family(const Space& s, const Ideal& ideal);
SetFamily tau_theta_family(const Space& s);
SetFamily sigma_family(const Space& s, const Ideal& ideal);
SetFamily sigma0_family(const Space& s, const Ideal& ideal);
SetFamily tau_theta_omega_family(const Space& s, const Ideal& ideal);

bool is_regular(const Space& s);

// Filters all 2^(2^n) subset families through the topology axioms;
// feasible for n <= 4 and the ground-truth oracle for the enumerator.
std::vector<SetFamily> all_topology_families(int n);

}  // namespace topolab::naive

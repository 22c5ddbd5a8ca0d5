#include "topolab/context.hpp"

#include <sstream>

#include "topolab/errors.hpp"
#include "topolab/naive.hpp"

namespace topolab {

namespace {

constexpr int kFamilySweepCap = 16;

void require_sweepable(int n, const char* what) {
  if (n > kFamilySweepCap) {
    throw CapacityExceeded(std::string(what) +
                           " sweeps all subsets and is capped at 16 points");
  }
}

}  // namespace

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::tau_theta: return "tau_theta";
    case Slot::tau: return "tau";
    case Slot::sigma: return "sigma";
    case Slot::sigma0: return "sigma0";
    case Slot::tau_star: return "tau_star";
    case Slot::tau_omega: return "tau_omega";
    case Slot::tau_theta_omega: return "tau_theta_omega";
  }
  return "?";
}

const char* slot_display(Slot s) {
  switch (s) {
    case Slot::tau_theta: return "τ_θ";
    case Slot::tau: return "τ";
    case Slot::sigma: return "σ";
    case Slot::sigma0: return "σ₀";
    case Slot::tau_star: return "τ*";
    case Slot::tau_omega: return "τ_ω";
    case Slot::tau_theta_omega: return "τ_θω";
  }
  return "?";
}

Slot slot_from_name(const std::string& name) {
  for (Slot s : kAllSlots) {
    if (name == slot_name(s)) return s;
  }
  throw UnknownSlotName("unknown topology slot '" + name +
                        "' (expected one of tau_theta, tau, sigma, sigma0, "
                        "tau_star, tau_omega, tau_theta_omega)");
}

std::array<std::string, kSlotCount> DerivedFamilies::axiom_defects(int n) const {
  std::array<std::string, kSlotCount> out;
  for (int i = 0; i < kSlotCount; ++i) {
    auto defect = topology_defect(n, fams[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i)] = defect.value_or("");
  }
  return out;
}

Context::Context(Space space, Ideal ideal, bool cross_check)
    : space_(std::move(space)), ideal_(std::move(ideal)),
      cross_check_(cross_check) {
  if (ideal_.ground() != space_.points()) {
    throw GroundSetMismatch(
        "ideal is over " + std::to_string(ideal_.ground()) +
        " points but the space has " + std::to_string(space_.points()));
  }
  const int n = space_.points();
  cl_nbhd_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    cl_nbhd_[static_cast<std::size_t>(x)] =
        space_.closure(space_.minimal_nbhd(x));
  }

  if (auto m = ideal_.as_principal()) {
    // Omega-open means every member point x keeps N(x) \ M inside the set,
    // i.e. the family is the up-closure of the relation x -> N(x) \ M. The
    // minimal omega-neighborhood of x is therefore the reachability closure
    // of {x} under that relation.
    std::vector<PointSet> nb(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      PointSet reach = PointSet::single(x);
      for (bool grew = true; grew;) {
        PointSet next = reach;
        reach.for_each([&](int y) {
          next |= space_.minimal_nbhd(y).minus(*m);
        });
        grew = (next != reach);
        reach = next;
      }
      nb[static_cast<std::size_t>(x)] = reach;
    }
    omega_nbhd_ = std::move(nb);
    omega_ready_ = true;
  } else if (n <= kFamilySweepCap) {
    // Semi-ideal: no minimal omega-open member exists in general, so keep
    // the whole family and evaluate closures against it.
    std::vector<PointSet> members;
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
      const PointSet a{raw};
      bool open = true;
      a.for_each([&](int x) {
        if (!ideal_.contains(space_.minimal_nbhd(x).minus(a))) open = false;
      });
      if (open) members.push_back(a);
    }
    omega_family_ = SetFamily{std::move(members)};
    omega_ready_ = true;
  }

  if (omega_ready_) {
    omega_cl_nbhd_.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      omega_cl_nbhd_[static_cast<std::size_t>(x)] =
          omega_closure_uncached(space_.minimal_nbhd(x));
    }
  }
}

void Context::check_point_op(const char* op, PointSet a, PointSet fast,
                             PointSet reference) const {
  if (fast != reference) {
    std::ostringstream msg;
    msg << "cross-check mismatch in " << op << " on A=" << space_.set_label(a)
        << ": minimal-neighborhood route gave " << space_.set_label(fast)
        << ", full-quantifier route gave " << space_.set_label(reference);
    throw InternalCheckFailure(msg.str());
  }
}

PointSet Context::local_star(PointSet a) const {
  PointSet out;
  for (int x = 0; x < points(); ++x) {
    if (!ideal_.contains(space_.minimal_nbhd(x) & a)) {
      out |= PointSet::single(x);
    }
  }
  if (cross_check_) {
    check_point_op("local_star", a, out, naive::local_star(space_, ideal_, a));
  }
  return out;
}

PointSet Context::cl_star(PointSet a) const { return a | local_star(a); }

PointSet Context::theta_interior(PointSet a) const {
  PointSet out;
  for (int x = 0; x < points(); ++x) {
    if (cl_nbhd_[static_cast<std::size_t>(x)].subset_of(a)) {
      out |= PointSet::single(x);
    }
  }
  if (cross_check_) {
    check_point_op("theta_interior", a, out, naive::theta_interior(space_, a));
  }
  return out;
}

PointSet Context::theta_closure(PointSet a) const {
  PointSet out;
  for (int x = 0; x < points(); ++x) {
    if (cl_nbhd_[static_cast<std::size_t>(x)].intersects(a)) {
      out |= PointSet::single(x);
    }
  }
  if (cross_check_) {
    check_point_op("theta_closure", a, out, naive::theta_closure(space_, a));
  }
  return out;
}

PointSet Context::gamma(PointSet a) const {
  PointSet out;
  for (int x = 0; x < points(); ++x) {
    if (!ideal_.contains(cl_nbhd_[static_cast<std::size_t>(x)] & a)) {
      out |= PointSet::single(x);
    }
  }
  if (cross_check_) {
    check_point_op("gamma", a, out, naive::gamma(space_, ideal_, a));
  }
  return out;
}

PointSet Context::psi_gamma(PointSet a) const {
  return gamma(a.complement(points())).complement(points());
}

PointSet Context::omega_closure_uncached(PointSet a) const {
  if (omega_nbhd_) {
    PointSet out;
    for (int x = 0; x < points(); ++x) {
      if ((*omega_nbhd_)[static_cast<std::size_t>(x)].intersects(a)) {
        out |= PointSet::single(x);
      }
    }
    return out;
  }
  if (omega_family_) {
    return naive::family_closure(*omega_family_, points(), a);
  }
  throw CapacityExceeded(
      "omega-closure with a semi-ideal needs the materialized omega family "
      "and is capped at 16 points");
}

PointSet Context::omega_closure(PointSet a) const {
  PointSet out = omega_closure_uncached(a);
  if (cross_check_) {
    check_point_op("omega_closure", a, out,
                   naive::family_closure(naive::tau_omega_family(space_, ideal_),
                                         points(), a));
  }
  return out;
}

PointSet Context::theta_omega_closure(PointSet a) const {
  if (!omega_ready_) omega_closure_uncached(a);  // raises the capacity error
  PointSet out;
  for (int x = 0; x < points(); ++x) {
    if (omega_cl_nbhd_[static_cast<std::size_t>(x)].intersects(a)) {
      out |= PointSet::single(x);
    }
  }
  if (cross_check_) {
    check_point_op("theta_omega_closure", a, out,
                   naive::theta_omega_closure(space_, ideal_, a));
  }
  return out;
}

SetFamily Context::family(Slot s) const {
  if (s == Slot::tau) return space_.opens();
  require_sweepable(points(), "deriving a topology");

  const int n = points();
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
    const PointSet a{raw};
    const PointSet c = a.complement(n);
    bool in = false;
    switch (s) {
      case Slot::tau_theta:
        in = (theta_interior(a) == a);
        break;
      case Slot::sigma:
        in = a.subset_of(psi_gamma(a));
        break;
      case Slot::sigma0:
        in = a.subset_of(space_.interior(space_.closure(psi_gamma(a))));
        break;
      case Slot::tau_star:
        in = local_star(c).subset_of(c);
        break;
      case Slot::tau_omega: {
        in = true;
        a.for_each([&](int x) {
          if (!ideal_.contains(space_.minimal_nbhd(x).minus(a))) in = false;
        });
        break;
      }
      case Slot::tau_theta_omega:
        in = (theta_omega_closure(c) == c);
        break;
      case Slot::tau:
        break;
    }
    if (in) members.push_back(a);
  }
  return SetFamily{std::move(members)};
}

DerivedFamilies Context::derive_families() const {
  DerivedFamilies out;
  for (Slot s : kAllSlots) out[s] = family(s);
  return out;
}

Space Context::build_slot(Slot s) const {
  return Space::build(points(), space_.names(), family(s));
}

TopologyBundle Context::derive_all() const {
  auto build = [&](Slot s) {
    try {
      return build_slot(s);
    } catch (const NotATopology& e) {
      throw NotATopology(e.reason(),
                         std::string("derived family ") + slot_name(s) +
                             " failed validation: " + e.what(),
                         e.pair_first(), e.pair_second());
    }
  };
  return TopologyBundle{{build(Slot::tau_theta), build(Slot::tau),
                         build(Slot::sigma), build(Slot::sigma0),
                         build(Slot::tau_star), build(Slot::tau_omega),
                         build(Slot::tau_theta_omega)}};
}

}  // namespace topolab

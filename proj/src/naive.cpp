#include "topolab/naive.hpp"

#include "topolab/errors.hpp"

namespace topolab::naive {

namespace {

// Applies pred to every open neighborhood of x; true iff pred holds for all.
template <typename Pred>
bool for_all_opens_at(const Space& s, int x, Pred&& pred) {
  for (const PointSet& u : s.opens()) {
    if (!u.contains(x)) continue;
    if (!pred(u)) return false;
  }
  return true;
}

std::uint64_t subset_count(const Space& s) {
  if (s.points() > 16) {
    throw CapacityExceeded("naive family sweeps capped at 16 points");
  }
  return std::uint64_t{1} << s.points();
}

}  // namespace

PointSet closure(const Space& s, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.points(); ++x) {
    if (for_all_opens_at(s, x, [&](PointSet u) { return u.intersects(a); })) {
      out |= PointSet::single(x);
    }
  }
  return out;
}

PointSet interior(const Space& s, PointSet a) {
  return closure(s, a.complement(s.points())).complement(s.points());
}

PointSet local_star(const Space& s, const Ideal& ideal, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.points(); ++x) {
    if (for_all_opens_at(
            s, x, [&](PointSet u) { return !ideal.contains(u & a); })) {
      out |= PointSet::single(x);
    }
  }
  return out;
}

PointSet gamma(const Space& s, const Ideal& ideal, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.points(); ++x) {
    if (for_all_opens_at(s, x, [&](PointSet u) {
          return !ideal.contains(closure(s, u) & a);
        })) {
      out |= PointSet::single(x);
    }
  }
  return out;
}

PointSet theta_closure(const Space& s, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.points(); ++x) {
    if (for_all_opens_at(s, x, [&](PointSet u) {
          return closure(s, u).intersects(a);
        })) {
      out |= PointSet::single(x);
    }
  }
  return out;
}

PointSet theta_interior(const Space& s, PointSet a) {
  PointSet out;
  for (int x = 0; x < s.points(); ++x) {
    bool found = false;
    for (const PointSet& u : s.opens()) {
      if (u.contains(x) && closure(s, u).subset_of(a)) {
        found = true;
        break;
      }
    }
    if (found) out |= PointSet::single(x);
  }
  return out;
}

SetFamily tau_omega_family(const Space& s, const Ideal& ideal) {
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < subset_count(s); ++raw) {
    const PointSet a{raw};
    bool open = true;
    a.for_each([&](int x) {
      bool found = false;
      for (const PointSet& u : s.opens()) {
        if (u.contains(x) && ideal.contains(u.minus(a))) {
          found = true;
          break;
        }
      }
      if (!found) open = false;
    });
    if (open) members.push_back(a);
  }
  return SetFamily{std::move(members)};
}

PointSet family_closure(const SetFamily& fam, int n, PointSet a) {
  PointSet out;
  for (int x = 0; x < n; ++x) {
    bool all_meet = true;
    for (const PointSet& v : fam) {
      if (v.contains(x) && !v.intersects(a)) {
        all_meet = false;
        break;
      }
    }
    if (all_meet) out |= PointSet::single(x);
  }
  return out;
}

PointSet theta_omega_closure(const Space& s, const Ideal& ideal, PointSet a) {
  const SetFamily omega = tau_omega_family(s, ideal);
  PointSet out;
  for (int x = 0; x < s.points(); ++x) {
    if (for_all_opens_at(s, x, [&](PointSet u) {
          return family_closure(omega, s.points(), u).intersects(a);
        })) {
      out |= PointSet::single(x);
    }
  }
  return out;
}

SetFamily tau_star_family(const Space& s, const Ideal& ideal) {
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < subset_count(s); ++raw) {
    const PointSet u{raw};
    const PointSet c = u.complement(s.points());
    if (local_star(s, ideal, c).subset_of(c)) members.push_back(u);
  }
  return SetFamily{std::move(members)};
}

SetFamily tau_theta_family(const Space& s) {
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < subset_count(s); ++raw) {
    const PointSet u{raw};
    if (theta_interior(s, u) == u) members.push_back(u);
  }
  return SetFamily{std::move(members)};
}

SetFamily sigma_family(const Space& s, const Ideal& ideal) {
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < subset_count(s); ++raw) {
    const PointSet a{raw};
    const PointSet psi =
        gamma(s, ideal, a.complement(s.points())).complement(s.points());
    if (a.subset_of(psi)) members.push_back(a);
  }
  return SetFamily{std::move(members)};
}

SetFamily sigma0_family(const Space& s, const Ideal& ideal) {
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < subset_count(s); ++raw) {
    const PointSet a{raw};
    const PointSet psi =
        gamma(s, ideal, a.complement(s.points())).complement(s.points());
    if (a.subset_of(interior(s, closure(s, psi)))) members.push_back(a);
  }
  return SetFamily{std::move(members)};
}

SetFamily tau_theta_omega_family(const Space& s, const Ideal& ideal) {
  const SetFamily omega = tau_omega_family(s, ideal);
  std::vector<PointSet> members;
  for (std::uint64_t raw = 0; raw < subset_count(s); ++raw) {
    const PointSet a{raw};
    const PointSet c = a.complement(s.points());
    PointSet cl;
    for (int x = 0; x < s.points(); ++x) {
      if (for_all_opens_at(s, x, [&](PointSet u) {
            return family_closure(omega, s.points(), u).intersects(c);
          })) {
        cl |= PointSet::single(x);
      }
    }
    if (cl == c) members.push_back(a);
  }
  return SetFamily{std::move(members)};
}

bool is_regular(const Space& s) {
  for (const PointSet& open_c : s.opens()) {
    const PointSet c = open_c.complement(s.points());
    for (int x = 0; x < s.points(); ++x) {
      if (c.contains(x)) continue;
      bool separated = false;
      for (const PointSet& u : s.opens()) {
        if (!u.contains(x)) continue;
        for (const PointSet& v : s.opens()) {
          if (c.subset_of(v) && !u.intersects(v)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

std::vector<SetFamily> all_topology_families(int n) {
  if (n < 1 || n > 4) {
    throw CapacityExceeded("the 2^(2^n) filter is feasible only for n <= 4");
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  const std::uint64_t empty_bit = 1;
  const std::uint64_t full_bit = std::uint64_t{1} << (subsets - 1);

  std::vector<SetFamily> out;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if ((fam & empty_bit) == 0 || (fam & full_bit) == 0) continue;
    bool ok = true;
    for (std::uint64_t i = 0; i < subsets && ok; ++i) {
      if (((fam >> i) & 1) == 0) continue;
      for (std::uint64_t j = i + 1; j < subsets && ok; ++j) {
        if (((fam >> j) & 1) == 0) continue;
        if (((fam >> (i | j)) & 1) == 0 || ((fam >> (i & j)) & 1) == 0) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<PointSet> members;
    for (std::uint64_t i = 0; i < subsets; ++i) {
      if ((fam >> i) & 1) members.emplace_back(i);
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

}  // namespace topolab::naive

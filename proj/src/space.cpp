#include "topolab/space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace topolab {

std::vector<std::string> default_point_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    if (i < 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("p" + std::to_string(i));
    }
  }
  return names;
}

std::optional<std::string> topology_defect(int n, const SetFamily& family) {
  const PointSet universe = PointSet::full(n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].subset_of(universe)) {
      return "member #" + std::to_string(i) + " lies outside the ground set";
    }
  }
  if (!family.contains(PointSet::empty_set())) {
    return std::string("missing the empty set");
  }
  if (!family.contains(universe)) {
    return std::string("missing the full set X");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family.contains(family[i] | family[j])) {
        return "union of members #" + std::to_string(i) + " and #" +
               std::to_string(j) + " is absent";
      }
      if (!family.contains(family[i] & family[j])) {
        return "intersection of members #" + std::to_string(i) + " and #" +
               std::to_string(j) + " is absent";
      }
    }
  }
  return std::nullopt;
}

Space Space::build(int n, std::vector<std::string> names, SetFamily opens) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityExceeded("ground set must have between 1 and 64 points, got " +
                           std::to_string(n));
  }
  if (names.empty()) names = default_point_names(n);
  if (static_cast<int>(names.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " point names, got " +
                     std::to_string(names.size()));
  }

  const PointSet universe = PointSet::full(n);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (!opens[i].subset_of(universe)) {
      throw NotATopology(NotATopology::Reason::out_of_ground,
                         "open #" + std::to_string(i) +
                             " lies outside the ground set",
                         opens[i].bits());
    }
  }
  if (!opens.contains(PointSet::empty_set())) {
    throw NotATopology(NotATopology::Reason::missing_empty,
                       "not a topology: missing the empty set");
  }
  if (!opens.contains(universe)) {
    throw NotATopology(NotATopology::Reason::missing_full,
                       "not a topology: missing the full set X");
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const PointSet u = opens[i] | opens[j];
      if (!opens.contains(u)) {
        throw NotATopology(NotATopology::Reason::union_absent,
                           "not a topology: union of two opens is absent",
                           opens[i].bits(), opens[j].bits());
      }
      const PointSet w = opens[i] & opens[j];
      if (!opens.contains(w)) {
        throw NotATopology(
            NotATopology::Reason::intersection_absent,
            "not a topology: intersection of two opens is absent",
            opens[i].bits(), opens[j].bits());
      }
    }
  }

  Space s;
  s.n_ = n;
  s.names_ = std::move(names);
  s.opens_ = std::move(opens);
  s.nbhd_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    PointSet nb = universe;
    for (const PointSet& u : s.opens_) {
      if (u.contains(x)) nb &= u;
    }
    // Pairwise intersection closure makes the intersection of all opens
    // containing x an open set itself.
    s.nbhd_[static_cast<std::size_t>(x)] = nb;
  }
  return s;
}

Space Space::from_subbasis(int n, std::vector<std::string> names,
                           const SetFamily& subbasis) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityExceeded("ground set must have between 1 and 64 points, got " +
                           std::to_string(n));
  }
  const PointSet universe = PointSet::full(n);
  for (std::size_t i = 0; i < subbasis.size(); ++i) {
    if (!subbasis[i].subset_of(universe)) {
      throw NotATopology(NotATopology::Reason::out_of_ground,
                         "subbasis member #" + std::to_string(i) +
                             " lies outside the ground set",
                         subbasis[i].bits());
    }
  }

  SetFamily fam;
  fam.insert(universe);  // the empty intersection
  for (const PointSet& s : subbasis) fam.insert(s);

  // Fixed-point closure under pairwise intersections, then pairwise unions.
  // Distributivity keeps the intersection closure intact during the union
  // pass, so two passes suffice on a finite carrier.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = fam.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = i + 1; j < sz; ++j) {
        const PointSet w = fam[i] & fam[j];
        if (!fam.contains(w)) {
          fam.insert(w);
          grew = true;
        }
      }
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = fam.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = i + 1; j < sz; ++j) {
        const PointSet u = fam[i] | fam[j];
        if (!fam.contains(u)) {
          fam.insert(u);
          grew = true;
        }
      }
    }
  }
  fam.insert(PointSet::empty_set());

  return build(n, std::move(names), std::move(fam));
}

Space Space::discrete(int n) {
  // The quadratic axiom check makes an explicit 2^n-member topology
  // impractical beyond this.
  if (n < 1 || n > 12) {
    throw CapacityExceeded("discrete space supported up to 12 points");
  }
  std::vector<PointSet> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    members.emplace_back(m);
  }
  return build(n, default_point_names(n), SetFamily{std::move(members)});
}

Space Space::indiscrete(int n) {
  return build(n, default_point_names(n),
               SetFamily::of({0, PointSet::full(n).bits()}));
}

PointSet Space::minimal_nbhd(int x) const {
  if (x < 0 || x >= n_) {
    throw PointOutOfRange("point index " + std::to_string(x) +
                          " outside ground set of size " + std::to_string(n_));
  }
  return nbhd_[static_cast<std::size_t>(x)];
}

PointSet Space::closure(PointSet a) const {
  PointSet out;
  for (int x = 0; x < n_; ++x) {
    if (nbhd_[static_cast<std::size_t>(x)].intersects(a)) {
      out |= PointSet::single(x);
    }
  }
  return out;
}

PointSet Space::interior(PointSet a) const {
  return closure(a.complement(n_)).complement(n_);
}

SetFamily Space::closed_sets() const {
  std::vector<PointSet> members;
  members.reserve(opens_.size());
  for (const PointSet& u : opens_) members.push_back(u.complement(n_));
  return SetFamily{std::move(members)};
}

bool Space::is_regular() const {
  // The pair (U, V) with U around x and V around the closed set C can be
  // taken minimal: U = N(x) and V = the union of N(y) over y in C, which is
  // the smallest open superset of C. Disjointness of that pair decides the
  // existential.
  for (const PointSet& u : opens_) {
    const PointSet c = u.complement(n_);
    PointSet around_c;
    c.for_each([&](int y) { around_c |= nbhd_[static_cast<std::size_t>(y)]; });
    for (int x = 0; x < n_; ++x) {
      if (c.contains(x)) continue;
      if (nbhd_[static_cast<std::size_t>(x)].intersects(around_c)) {
        return false;
      }
    }
  }
  return true;
}

std::string Space::set_label(PointSet s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out << ',';
    first = false;
    out << names_[static_cast<std::size_t>(p)];
  });
  out << '}';
  return out.str();
}

std::string Space::family_label(const SetFamily& f) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out << ' ';
    out << set_label(f[i]);
  }
  out << ']';
  return out.str();
}

namespace {

PointSet apply_perm(PointSet s, const std::vector<int>& perm) {
  PointSet out;
  s.for_each([&](int p) {
    out |= PointSet::single(perm[static_cast<std::size_t>(p)]);
  });
  return out;
}

}  // namespace

Space canonical_relabel(const Space& s, std::vector<int>* out_perm) {
  const int n = s.points();
  if (n > 6) {
    throw CapacityExceeded("canonical relabeling supported up to 6 points");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<int> best_perm = perm;
  std::uint64_t best_mask = s.opens().powerset_mask(n);
  do {
    std::vector<PointSet> relabeled;
    relabeled.reserve(s.opens().size());
    for (const PointSet& u : s.opens()) relabeled.push_back(apply_perm(u, perm));
    const std::uint64_t mask = SetFamily{std::move(relabeled)}.powerset_mask(n);
    if (mask < best_mask) {
      best_mask = mask;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<PointSet> members;
  members.reserve(s.opens().size());
  for (const PointSet& u : s.opens()) members.push_back(apply_perm(u, best_perm));
  if (out_perm != nullptr) *out_perm = best_perm;
  return Space::build(n, default_point_names(n), SetFamily{std::move(members)});
}

}  // namespace topolab

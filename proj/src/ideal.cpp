#include "topolab/ideal.hpp"

#include <cassert>

#include "topolab/errors.hpp"

namespace topolab {

Ideal Ideal::principal(int n, PointSet m) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityExceeded("ideal ground set must have between 1 and 64 points");
  }
  if (!m.subset_of(PointSet::full(n))) {
    throw GroundSetMismatch("principal ideal generator lies outside the ground set");
  }
  return Ideal{Kind::principal, n, m, SetFamily{}};
}

Ideal Ideal::downward(int n, SetFamily generators) {
  if (n < 1 || n > kMaxPoints) {
    throw CapacityExceeded("ideal ground set must have between 1 and 64 points");
  }
  std::vector<PointSet> antichain;
  for (const PointSet& g : generators) {
    if (!g.subset_of(PointSet::full(n))) {
      throw GroundSetMismatch("ideal generator lies outside the ground set");
    }
    bool dominated = false;
    for (const PointSet& h : generators) {
      if (h != g && g.subset_of(h)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) antichain.push_back(g);
  }
  return Ideal{Kind::downward, n, PointSet::empty_set(),
               SetFamily{std::move(antichain)}};
}

PointSet Ideal::principal_set() const {
  assert(kind_ == Kind::principal);
  return m_;
}

const SetFamily& Ideal::generators() const {
  assert(kind_ == Kind::downward);
  return gens_;
}

bool Ideal::contains(PointSet a) const {
  if (kind_ == Kind::principal) return a.subset_of(m_);
  if (a.empty()) return true;
  for (const PointSet& g : gens_) {
    if (a.subset_of(g)) return true;
  }
  return false;
}

bool Ideal::is_proper() const { return !contains(PointSet::full(n_)); }

std::optional<std::pair<PointSet, PointSet>> Ideal::union_closure_violation()
    const {
  if (kind_ == Kind::principal) return std::nullopt;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (!contains(gens_[i] | gens_[j])) {
        return std::make_pair(gens_[i], gens_[j]);
      }
    }
  }
  return std::nullopt;
}

std::optional<PointSet> Ideal::as_principal() const {
  if (kind_ == Kind::principal) return m_;
  if (gens_.empty()) return PointSet::empty_set();
  if (gens_.size() == 1) return gens_[0];
  // After antichain normalization, two or more generators always break
  // union closure.
  return std::nullopt;
}

SetFamily Ideal::members() const {
  // Subsets of a mask m enumerate as s = (s - 1) & m.
  auto push_subsets = [](PointSet m, std::vector<PointSet>& out) {
    if (m.size() > 16) {
      throw CapacityExceeded("ideal member enumeration capped at 2^16 sets");
    }
    std::uint64_t s = m.bits();
    while (true) {
      out.emplace_back(s);
      if (s == 0) break;
      s = (s - 1) & m.bits();
    }
  };

  std::vector<PointSet> out;
  if (kind_ == Kind::principal) {
    push_subsets(m_, out);
  } else {
    out.emplace_back(0);
    for (const PointSet& g : gens_) push_subsets(g, out);
  }
  return SetFamily{std::move(out)};
}

std::string Ideal::label(const std::vector<std::string>& names) const {
  auto set_text = [&](PointSet s) {
    std::string t = "{";
    bool first = true;
    s.for_each([&](int p) {
      if (!first) t += ',';
      first = false;
      t += names[static_cast<std::size_t>(p)];
    });
    t += '}';
    return t;
  };
  if (kind_ == Kind::principal) return "P(" + set_text(m_) + ")";
  std::string t = "dw(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) t += ',';
    t += set_text(gens_[i]);
  }
  t += ')';
  return t;
}

std::vector<Ideal> all_principal_ideals(int n) {
  if (n < 1 || n > 20) {
    throw CapacityExceeded("principal ideal enumeration capped at 20 points");
  }
  std::vector<Ideal> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    out.push_back(Ideal::principal(n, PointSet{m}));
  }
  return out;
}

}  // namespace topolab

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "topolab/errors.hpp"
#include "topolab/pointset.hpp"

namespace topolab {

// A finite family of point sets, deduplicated and kept in ascending
// bit-pattern order. This is the storage form of topologies, subbases,
// and explicit ideal generator families.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<PointSet> members)
      : members_(std::move(members)) {
    normalize();
  }

  static SetFamily of(std::initializer_list<std::uint64_t> masks) {
    std::vector<PointSet> v;
    v.reserve(masks.size());
    for (auto m : masks) v.emplace_back(m);
    return SetFamily{std::move(v)};
  }

  bool contains(PointSet s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  void insert(PointSet s) {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) members_.insert(it, s);
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const PointSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool subset_of(const SetFamily& o) const {
    return !first_not_in(o).has_value();
  }

  // Smallest member (by bit pattern) of *this that o lacks.
  std::optional<PointSet> first_not_in(const SetFamily& o) const {
    std::size_t j = 0;
    for (const PointSet& m : members_) {
      while (j < o.size() && o.members_[j] < m) ++j;
      if (j == o.size() || o.members_[j] != m) return m;
    }
    return std::nullopt;
  }

  // Encodes the family as one word: bit s is set iff the subset with bit
  // pattern s is a member. Needs 2^n bits, hence n <= 6.
  std::uint64_t powerset_mask(int n) const {
    if (n < 0 || n > 6) {
      throw CapacityExceeded(
          "powerset_mask: family encoding requires at most 6 points");
    }
    std::uint64_t mask = 0;
    for (const PointSet& m : members_) mask |= std::uint64_t{1} << m.bits();
    return mask;
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  std::vector<PointSet> members_;
};

}  // namespace topolab

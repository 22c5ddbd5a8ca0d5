#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace topolab {

// Hard capacity: a point set is one machine word.
inline constexpr int kMaxPoints = 64;

// A subset of a ground set of at most 64 points. Bit i is point i; all
// semantics are index based, point names are cosmetic labels kept by Space.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet empty_set() { return PointSet{0}; }
  static constexpr PointSet single(int p) {
    return PointSet{std::uint64_t{1} << p};
  }
  static constexpr PointSet full(int n) {
    return PointSet{n >= kMaxPoints ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr PointSet operator|(PointSet o) const {
    return PointSet{bits_ | o.bits_};
  }
  constexpr PointSet operator&(PointSet o) const {
    return PointSet{bits_ & o.bits_};
  }
  constexpr PointSet minus(PointSet o) const {
    return PointSet{bits_ & ~o.bits_};
  }
  constexpr PointSet complement(int n) const { return full(n).minus(*this); }
  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) {
    return a.bits_ <=> b.bits_;
  }

  // Calls f(i) for every member point in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(std::countr_zero(b));
    }
  }

  std::vector<int> points() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int p) { out.push_back(p); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace topolab

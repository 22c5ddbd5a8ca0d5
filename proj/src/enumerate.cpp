#include "topolab/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace topolab {

namespace {

// Finite topologies on a labeled ground set correspond one-to-one to
// neighborhood tables row[x] = N(x) with x in row[x] and the transitivity
// condition y in row[x] => row[y] subset of row[x]; the opens are exactly
// the sets closed upward under the table. Backtracking over rows with the
// pairwise condition checked as soon as both rows exist prunes the search
// far below the 2^(2^n) family filter.
class PreorderEnumerator {
 public:
  explicit PreorderEnumerator(int n) : n_(n), row_(static_cast<std::size_t>(n)) {}

  void run(const std::function<void(SetFamily)>& yield) {
    yield_ = &yield;
    assign(0);
  }

 private:
  void assign(int x) {
    if (x == n_) {
      emit();
      return;
    }
    const std::uint64_t count = std::uint64_t{1} << n_;
    for (std::uint64_t raw = 0; raw < count; ++raw) {
      const PointSet candidate{raw};
      if (!candidate.contains(x)) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        const PointSet prev = row_[static_cast<std::size_t>(y)];
        if (candidate.contains(y) && !prev.subset_of(candidate)) ok = false;
        if (prev.contains(x) && !candidate.subset_of(prev)) ok = false;
      }
      if (!ok) continue;
      row_[static_cast<std::size_t>(x)] = candidate;
      assign(x + 1);
    }
  }

  void emit() {
    std::vector<PointSet> opens;
    const std::uint64_t count = std::uint64_t{1} << n_;
    for (std::uint64_t raw = 0; raw < count; ++raw) {
      const PointSet a{raw};
      bool open = true;
      a.for_each([&](int x) {
        if (!row_[static_cast<std::size_t>(x)].subset_of(a)) open = false;
      });
      if (open) opens.push_back(a);
    }
    (*yield_)(SetFamily{std::move(opens)});
  }

  int n_;
  std::vector<PointSet> row_;
  const std::function<void(SetFamily)>* yield_ = nullptr;
};

}  // namespace

void enumerate_spaces(int n, const std::function<void(const Space&)>& yield) {
  if (n < 1 || n > 6) {
    throw CapacityExceeded(
        "topology enumeration supported for 1 to 6 points, got " +
        std::to_string(n));
  }

  std::vector<std::pair<std::uint64_t, SetFamily>> found;
  PreorderEnumerator enumerator{n};
  enumerator.run([&](SetFamily fam) {
    const std::uint64_t key = fam.powerset_mask(n);
    found.emplace_back(key, std::move(fam));
  });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const std::vector<std::string> names = default_point_names(n);
  for (auto& [key, fam] : found) {
    yield(Space::build(n, names, std::move(fam)));
  }
}

std::vector<Space> all_spaces(int n) {
  std::vector<Space> out;
  enumerate_spaces(n, [&](const Space& s) { out.push_back(s); });
  return out;
}

}  // namespace topolab

#include "topolab/corpus.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "topolab/enumerate.hpp"
#include "topolab/errors.hpp"

namespace topolab {

const char* ideal_mode_name(IdealMode m) {
  switch (m) {
    case IdealMode::principal: return "principal";
    case IdealMode::semi: return "semi";
    case IdealMode::both: return "both";
  }
  return "?";
}

IdealMode ideal_mode_from_name(const std::string& name) {
  if (name == "principal") return IdealMode::principal;
  if (name == "semi") return IdealMode::semi;
  if (name == "both") return IdealMode::both;
  throw ParseError("unknown ideal mode '" + name +
                   "' (expected principal, semi or both)");
}

namespace {

std::vector<Ideal> principal_scan_order(int n) {
  std::vector<Ideal> out = all_principal_ideals(n);
  // Member count of P(M) is 2^|M|, so ordering by |M| then by mask realizes
  // the "ideal size" tie-break of the witness minimality order.
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    const PointSet ma = a.principal_set();
    const PointSet mb = b.principal_set();
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma.bits() < mb.bits();
  });
  return out;
}

std::vector<Ideal> semi_scan_order(int n) {
  struct Row {
    std::size_t member_count;
    std::uint64_t g1, g2;
    Ideal ideal;
  };
  std::vector<Row> rows;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t g1 = 1; g1 < subsets; ++g1) {
    for (std::uint64_t g2 = g1 + 1; g2 < subsets; ++g2) {
      const PointSet a{g1}, b{g2};
      if (a.subset_of(b) || b.subset_of(a)) continue;
      Ideal ideal = Ideal::downward(
          n, SetFamily{std::vector<PointSet>{a, b}});
      rows.push_back(Row{ideal.members().size(), g1, g2, std::move(ideal)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.member_count != y.member_count) return x.member_count < y.member_count;
    if (x.g1 != y.g1) return x.g1 < y.g1;
    return x.g2 < y.g2;
  });
  std::vector<Ideal> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(r.ideal));
  return out;
}

// Deterministic sample of k distinct values from [0, total), ascending.
std::vector<std::uint64_t> sample_offsets(std::uint64_t total, std::size_t k,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  if (total <= (std::uint64_t{1} << 20)) {
    std::vector<std::uint64_t> pool(total);
    for (std::uint64_t i = 0; i < total; ++i) pool[i] = i;
    // Partial Fisher-Yates, hand-rolled so the stream is identical on every
    // standard library.
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t j =
          i + rng() % (static_cast<std::uint64_t>(pool.size()) - i);
      std::swap(pool[i], pool[j]);
    }
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (seen.size() < k) seen.insert(rng() % total);
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Ideal> corpus_ideals(int n, IdealMode mode) {
  std::vector<Ideal> out;
  if (mode == IdealMode::principal || mode == IdealMode::both) {
    auto p = principal_scan_order(n);
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  }
  if (mode == IdealMode::semi || mode == IdealMode::both) {
    auto s = semi_scan_order(n);
    out.insert(out.end(), std::make_move_iterator(s.begin()),
               std::make_move_iterator(s.end()));
  }
  return out;
}

Corpus::Corpus(const CorpusSpec& spec) : spec_(spec) {
  if (spec.max_points < 1 || spec.max_points > 6) {
    throw CapacityExceeded("corpus bounded to 1..6 points, got " +
                           std::to_string(spec.max_points));
  }
  std::size_t base = 0;
  for (int n = 1; n <= spec.max_points; ++n) {
    Stratum st;
    st.n = n;
    st.spaces = all_spaces(n);
    std::sort(st.spaces.begin(), st.spaces.end(),
              [n](const Space& a, const Space& b) {
                if (a.opens().size() != b.opens().size()) {
                  return a.opens().size() < b.opens().size();
                }
                return a.opens().powerset_mask(n) < b.opens().powerset_mask(n);
              });
    st.ideals = corpus_ideals(n, spec.mode);
    st.available = st.spaces.size() * st.ideals.size();
    if (!spec.exhaustive && n >= 5 && st.available > spec.sample_per_n) {
      st.sampled = true;
      st.selected = sample_offsets(st.available, spec.sample_per_n,
                                   spec.seed ^ static_cast<std::uint64_t>(n));
      st.count = st.selected.size();
    } else {
      st.count = st.available;
    }
    st.base = base;
    base += st.count;
    strata_.push_back(std::move(st));
  }
  total_ = base;
}

Corpus::Instance Corpus::instance(std::size_t i) const {
  for (const Stratum& st : strata_) {
    if (i < st.base || i >= st.base + st.count) continue;
    std::uint64_t flat = i - st.base;
    if (st.sampled) flat = st.selected[flat];
    const std::size_t si = flat / st.ideals.size();
    const std::size_t ii = flat % st.ideals.size();
    return Instance{st.spaces[si], st.ideals[ii]};
  }
  throw PointOutOfRange("corpus instance index out of range");
}

std::vector<Corpus::StratumStats> Corpus::stats() const {
  std::vector<StratumStats> out;
  for (const Stratum& st : strata_) {
    out.push_back(StratumStats{st.n, st.spaces.size(), st.ideals.size(),
                               st.count, st.available, st.sampled});
  }
  return out;
}

}  // namespace topolab

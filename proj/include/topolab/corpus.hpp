#pragma once

#include <cstdint>
#include <vector>

#include "topolab/ideal.hpp"
#include "topolab/space.hpp"

namespace topolab {

enum class IdealMode { principal, semi, both };

const char* ideal_mode_name(IdealMode m);
IdealMode ideal_mode_from_name(const std::string& name);  // throws ParseError

// Which (space, ideal) instances a sweep or witness search visits.
// Exhaustive corpora enumerate everything; otherwise strata with five or
// more points are down-sampled to sample_per_n instances with the seeded
// generator, so a fixed seed reproduces the run exactly.
struct CorpusSpec {
  int max_points = 3;
  IdealMode mode = IdealMode::principal;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t sample_per_n = 2048;
};

// Materialized corpus in witness-minimality order: point count ascending,
// then open-family size, then family encoding; within one space, ideals by
// member count with principal ideals before semi-ideals in "both" mode.
// The first witness found by a linear scan is therefore the minimal one.
//
// Semi-ideal corpora contain every two-generator antichain (two nonempty
// incomparable generators); one-generator families are principal and
// enumerate under the principal mode.
class Corpus {
 public:
  explicit Corpus(const CorpusSpec& spec);

  struct Instance {
    const Space& space;
    const Ideal& ideal;
  };

  struct StratumStats {
    int n = 0;
    std::size_t spaces = 0;
    std::size_t ideals = 0;
    std::size_t instances = 0;   // visited by this corpus
    std::size_t available = 0;   // full stratum size
    bool sampled = false;
  };

  const CorpusSpec& spec() const { return spec_; }
  std::size_t size() const { return total_; }
  Instance instance(std::size_t i) const;
  std::vector<StratumStats> stats() const;

 private:
  struct Stratum {
    int n = 0;
    std::vector<Space> spaces;
    std::vector<Ideal> ideals;
    std::vector<std::uint64_t> selected;  // flat offsets when sampled
    bool sampled = false;
    std::size_t available = 0;
    std::size_t count = 0;  // instances visited
    std::size_t base = 0;   // global index of first instance
  };

  CorpusSpec spec_;
  std::vector<Stratum> strata_;
  std::size_t total_ = 0;
};

// The ideal scan order the corpus uses for one stratum, exposed for tests.
std::vector<Ideal> corpus_ideals(int n, IdealMode mode);

}  // namespace topolab

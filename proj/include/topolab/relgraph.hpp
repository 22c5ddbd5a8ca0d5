#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topolab/context.hpp"
#include "topolab/corpus.hpp"

namespace topolab {

// Per-instance inclusion matrix: entry [i][j] says family i is a subset of
// family j on this instance. Diagonal entries are true.
std::array<std::array<bool, kSlotCount>, kSlotCount> relation_matrix(
    const DerivedFamilies& fams);

// One concrete certificate: on (space, ideal) the stored set belongs to the
// first slot's family and not to the second's.
struct SetWitness {
  Space space;
  Ideal ideal;
  PointSet set;
};

// Folded status of one ordered slot pair (T1, T2) over a corpus.
//   universal      — T1 ⊆ T2 held on every instance scanned so far; a
//                    witnessed non-inclusion never reverts.
//   noninclusion   — first instance with a set in T1 \ T2.
//   strictness     — first instance where T1 ⊊ T2 properly, with a set
//                    from T2 \ T1.
struct PairStatus {
  bool universal = true;
  std::optional<SetWitness> noninclusion;
  std::optional<SetWitness> strictness;
};

struct RelationReport {
  int max_points = 0;
  IdealMode mode = IdealMode::principal;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  long long instances = 0;
  std::vector<Corpus::StratumStats> strata;
  std::array<std::array<PairStatus, kSlotCount>, kSlotCount> pairs;

  const PairStatus& pair(Slot from, Slot to) const {
    return pairs[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  }
  PairStatus& pair(Slot from, Slot to) {
    return pairs[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  }
};

// Folds relation matrices over corpus indices [lo, hi). Pure; partials from
// adjacent ranges merge associatively, so any partitioning of [0, size)
// reproduces the single-pass report.
RelationReport aggregate_range(const Corpus& corpus, std::size_t lo,
                               std::size_t hi);

// Merges two partial reports; a must precede b in scan order.
RelationReport merge_reports(RelationReport a, const RelationReport& b);

// Whole-corpus fold; throws EmptyCorpus when the corpus has no instances.
RelationReport aggregate(const Corpus& corpus);

// A mined counterexample to "from ⊆ notin", replay-verified before return.
struct Witness {
  Slot from;
  Slot notin;
  Space space;
  Ideal ideal;
  PointSet set;
};

// Returned when the scan exhausted its bounds without finding a witness.
struct ScanRecord {
  CorpusSpec spec;
  std::size_t instances = 0;
  std::vector<Corpus::StratumStats> strata;
};

using WitnessOutcome = std::variant<Witness, ScanRecord>;

struct WitnessQuery {
  Slot from;
  Slot notin;
};

// Scans the corpus in minimality order (point count, topology size, ideal
// size, set bit pattern) and returns the first witness, or the scanned
// bounds when none exists. A witness that fails replay verification raises
// InternalCheckFailure: it would certify a bug, not a theorem.
WitnessOutcome find_witness(const WitnessQuery& query, const Corpus& corpus);

bool replay_witness(const Witness& w);

// Special search over sets rather than topologies: the two possible strict
// relations between Γ(Γ(A)) and Γ(A).
enum class GammaIterDirection {
  gg_escapes_g,  // Γ(Γ(A)) not inside Γ(A)
  g_escapes_gg,  // Γ(A) not inside Γ(Γ(A))
};

const char* gamma_iter_direction_name(GammaIterDirection d);

struct GammaIterWitness {
  GammaIterDirection direction;
  Space space;
  Ideal ideal;
  PointSet a;
  PointSet gamma_a;
  PointSet gamma_gamma_a;
};

using GammaIterOutcome = std::variant<GammaIterWitness, ScanRecord>;

GammaIterOutcome find_gamma_iteration_witness(GammaIterDirection direction,
                                              const Corpus& corpus);

bool replay_gamma_iteration_witness(const GammaIterWitness& w);

// The structure emit_dot renders, exposed so the Hasse reduction and the
// node merging stay testable. Slots that were equal on every instance fuse
// into one cluster; solid edges are transitively reduced universal strict
// inclusions; dashed pairs are witnessed incomparabilities; dotted edges
// are universal inclusions with no strictness witness (possible only in
// degenerate or hand-edited reports).
struct DotPlan {
  std::vector<std::vector<Slot>> clusters;
  std::vector<std::pair<int, int>> solid;   // cluster indices, from -> to
  std::vector<std::pair<int, int>> dashed;  // unordered, stored from < to
  std::vector<std::pair<int, int>> dotted;  // from -> to
};

DotPlan plan_dot(const RelationReport& report);

// Deterministic DOT text: byte-identical for equal reports.
std::string emit_dot(const RelationReport& report);

}  // namespace topolab

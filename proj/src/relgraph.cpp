#include "topolab/relgraph.hpp"

#include <algorithm>
#include <sstream>

#include "topolab/errors.hpp"

namespace topolab {

std::array<std::array<bool, kSlotCount>, kSlotCount> relation_matrix(
    const DerivedFamilies& fams) {
  std::array<std::array<bool, kSlotCount>, kSlotCount> out;
  for (int i = 0; i < kSlotCount; ++i) {
    for (int j = 0; j < kSlotCount; ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i == j) || fams.fams[static_cast<std::size_t>(i)].subset_of(
                          fams.fams[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

RelationReport aggregate_range(const Corpus& corpus, std::size_t lo,
                               std::size_t hi) {
  RelationReport report;
  report.max_points = corpus.spec().max_points;
  report.mode = corpus.spec().mode;
  report.exhaustive = corpus.spec().exhaustive;
  report.seed = corpus.spec().seed;

  for (std::size_t i = lo; i < hi; ++i) {
    const Corpus::Instance inst = corpus.instance(i);
    const Context ctx{inst.space, inst.ideal};
    const DerivedFamilies fams = ctx.derive_families();
    ++report.instances;

    for (int a = 0; a < kSlotCount; ++a) {
      for (int b = 0; b < kSlotCount; ++b) {
        if (a == b) continue;
        PairStatus& st = report.pairs[static_cast<std::size_t>(a)]
                                     [static_cast<std::size_t>(b)];
        const SetFamily& fa = fams.fams[static_cast<std::size_t>(a)];
        const SetFamily& fb = fams.fams[static_cast<std::size_t>(b)];
        if (auto escape = fa.first_not_in(fb)) {
          st.universal = false;
          if (!st.noninclusion) {
            st.noninclusion = SetWitness{inst.space, inst.ideal, *escape};
          }
        } else if (auto extra = fb.first_not_in(fa)) {
          // Inclusion held and was proper on this instance.
          if (!st.strictness) {
            st.strictness = SetWitness{inst.space, inst.ideal, *extra};
          }
        }
      }
    }
  }
  return report;
}

RelationReport merge_reports(RelationReport a, const RelationReport& b) {
  a.instances += b.instances;
  for (int i = 0; i < kSlotCount; ++i) {
    for (int j = 0; j < kSlotCount; ++j) {
      PairStatus& dst =
          a.pairs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const PairStatus& src =
          b.pairs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      dst.universal = dst.universal && src.universal;
      if (!dst.noninclusion) dst.noninclusion = src.noninclusion;
      if (!dst.strictness) dst.strictness = src.strictness;
    }
  }
  return a;
}

RelationReport aggregate(const Corpus& corpus) {
  if (corpus.size() == 0) {
    throw EmptyCorpus("relation aggregation needs a nonempty corpus");
  }
  RelationReport report = aggregate_range(corpus, 0, corpus.size());
  report.strata = corpus.stats();
  return report;
}

namespace {

ScanRecord scan_record(const Corpus& corpus) {
  return ScanRecord{corpus.spec(), corpus.size(), corpus.stats()};
}

}  // namespace

WitnessOutcome find_witness(const WitnessQuery& query, const Corpus& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Corpus::Instance inst = corpus.instance(i);
    const Context ctx{inst.space, inst.ideal};
    const SetFamily from = ctx.family(query.from);
    const SetFamily notin = ctx.family(query.notin);
    if (auto set = from.first_not_in(notin)) {
      Witness w{query.from, query.notin, inst.space, inst.ideal, *set};
      if (!replay_witness(w)) {
        throw InternalCheckFailure(
            std::string("mined witness for ") + slot_name(query.from) +
            " ⊄ " + slot_name(query.notin) + " failed replay verification");
      }
      return w;
    }
  }
  return scan_record(corpus);
}

bool replay_witness(const Witness& w) {
  try {
    const Context ctx{w.space, w.ideal};
    return ctx.family(w.from).contains(w.set) &&
           !ctx.family(w.notin).contains(w.set);
  } catch (const Error&) {
    return false;
  }
}

const char* gamma_iter_direction_name(GammaIterDirection d) {
  switch (d) {
    case GammaIterDirection::gg_escapes_g: return "gamma_gamma_notin_gamma";
    case GammaIterDirection::g_escapes_gg: return "gamma_notin_gamma_gamma";
  }
  return "?";
}

GammaIterOutcome find_gamma_iteration_witness(GammaIterDirection direction,
                                              const Corpus& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Corpus::Instance inst = corpus.instance(i);
    const Context ctx{inst.space, inst.ideal};
    const std::uint64_t subsets = std::uint64_t{1} << ctx.points();
    for (std::uint64_t raw = 0; raw < subsets; ++raw) {
      const PointSet a{raw};
      const PointSet g = ctx.gamma(a);
      const PointSet gg = ctx.gamma(g);
      const bool hit = direction == GammaIterDirection::gg_escapes_g
                           ? !gg.subset_of(g)
                           : !g.subset_of(gg);
      if (hit) {
        GammaIterWitness w{direction, inst.space, inst.ideal, a, g, gg};
        if (!replay_gamma_iteration_witness(w)) {
          throw InternalCheckFailure(
              "mined Γ∘Γ witness failed replay verification");
        }
        return w;
      }
    }
  }
  return scan_record(corpus);
}

bool replay_gamma_iteration_witness(const GammaIterWitness& w) {
  try {
    const Context ctx{w.space, w.ideal};
    const PointSet g = ctx.gamma(w.a);
    const PointSet gg = ctx.gamma(g);
    if (g != w.gamma_a || gg != w.gamma_gamma_a) return false;
    return w.direction == GammaIterDirection::gg_escapes_g
               ? !gg.subset_of(g)
               : !g.subset_of(gg);
  } catch (const Error&) {
    return false;
  }
}

namespace {

// DOT rendering order; chosen so a merged tau_omega/tau_star cluster reads
// "τ_ω = τ*".
constexpr std::array<Slot, kSlotCount> kDisplayOrder = {
    Slot::tau_theta, Slot::tau,   Slot::tau_omega,
    Slot::tau_star,  Slot::tau_theta_omega, Slot::sigma, Slot::sigma0};

int display_rank(Slot s) {
  for (int i = 0; i < kSlotCount; ++i) {
    if (kDisplayOrder[static_cast<std::size_t>(i)] == s) return i;
  }
  return kSlotCount;
}

}  // namespace

DotPlan plan_dot(const RelationReport& report) {
  DotPlan plan;

  // Slots equal on every instance (universal inclusion both ways) fuse.
  std::array<int, kSlotCount> cluster_of;
  cluster_of.fill(-1);
  std::vector<std::vector<Slot>> clusters;
  for (Slot s : kDisplayOrder) {
    const int i = static_cast<int>(s);
    if (cluster_of[static_cast<std::size_t>(i)] != -1) continue;
    std::vector<Slot> members{s};
    cluster_of[static_cast<std::size_t>(i)] = static_cast<int>(clusters.size());
    for (Slot t : kDisplayOrder) {
      const int j = static_cast<int>(t);
      if (j == i || cluster_of[static_cast<std::size_t>(j)] != -1) continue;
      if (report.pair(s, t).universal && report.pair(t, s).universal) {
        cluster_of[static_cast<std::size_t>(j)] =
            cluster_of[static_cast<std::size_t>(i)];
        members.push_back(t);
      }
    }
    std::sort(members.begin(), members.end(), [](Slot a, Slot b) {
      return display_rank(a) < display_rank(b);
    });
    clusters.push_back(std::move(members));
  }
  plan.clusters = clusters;
  const int k = static_cast<int>(clusters.size());

  // Cluster-level relation through representatives; all members of one
  // cluster carry identical families on every instance.
  std::vector<std::vector<bool>> universal(
      static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k)));
  std::vector<std::vector<bool>> strict_witnessed(
      static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const Slot ra = clusters[static_cast<std::size_t>(a)].front();
      const Slot rb = clusters[static_cast<std::size_t>(b)].front();
      universal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          report.pair(ra, rb).universal;
      strict_witnessed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          report.pair(ra, rb).strictness.has_value();
    }
  }

  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const bool uab = universal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      const bool uba = universal[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      if (uab && uba) continue;  // cannot happen across distinct clusters
      if (!uab && !uba) {
        plan.dashed.emplace_back(a, b);
        continue;
      }
      const int from = uab ? a : b;
      const int to = uab ? b : a;
      if (strict_witnessed[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)]) {
        plan.solid.emplace_back(from, to);
      } else {
        plan.dotted.emplace_back(from, to);
      }
    }
  }

  // Hasse reduction: drop solid edges implied through an intermediate
  // cluster. Universal inclusion is transitive, so reachability equals the
  // universal relation itself.
  std::vector<std::pair<int, int>> reduced;
  for (const auto& [from, to] : plan.solid) {
    bool implied = false;
    for (int mid = 0; mid < k && !implied; ++mid) {
      if (mid == from || mid == to) continue;
      if (universal[static_cast<std::size_t>(from)][static_cast<std::size_t>(mid)] &&
          universal[static_cast<std::size_t>(mid)][static_cast<std::size_t>(to)]) {
        implied = true;
      }
    }
    if (!implied) reduced.push_back({from, to});
  }
  plan.solid = std::move(reduced);

  std::sort(plan.solid.begin(), plan.solid.end());
  std::sort(plan.dashed.begin(), plan.dashed.end());
  std::sort(plan.dotted.begin(), plan.dotted.end());
  return plan;
}

std::string emit_dot(const RelationReport& report) {
  const DotPlan plan = plan_dot(report);
  bool sampled = !report.exhaustive;
  if (!report.strata.empty()) {
    sampled = false;
    for (const auto& st : report.strata) sampled = sampled || st.sampled;
  }
  std::ostringstream out;
  out << "digraph topologies {\n";
  out << "  // corpus: max_points=" << report.max_points
      << " mode=" << ideal_mode_name(report.mode)
      << (sampled ? " sampled" : " exhaustive")
      << " instances=" << report.instances << "\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, style=rounded, fontname=\"Helvetica\"];\n";

  for (std::size_t c = 0; c < plan.clusters.size(); ++c) {
    out << "  c" << c << " [label=\"";
    for (std::size_t m = 0; m < plan.clusters[c].size(); ++m) {
      if (m > 0) out << " = ";
      out << slot_display(plan.clusters[c][m]);
    }
    out << "\"];\n";
  }

  for (const auto& [from, to] : plan.solid) {
    out << "  c" << from << " -> c" << to << ";\n";
  }
  for (const auto& [a, b] : plan.dashed) {
    out << "  c" << a << " -> c" << b
        << " [dir=both, style=dashed, color=red, constraint=false];\n";
  }
  for (const auto& [from, to] : plan.dotted) {
    out << "  c" << from << " -> c" << to << " [style=dotted, color=blue];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace topolab

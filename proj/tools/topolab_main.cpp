// topolab — a laboratory for operator calculus on finite ideal topological
// spaces: derives the seven topologies of a (space, ideal) pair, sweeps
// exhaustive corpora for law violations, mines minimal counterexamples,
// and renders the aggregated relation graph as DOT.

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "topolab/enumerate.hpp"
#include "topolab/json_io.hpp"
#include "topolab/laws.hpp"
#include "topolab/naive.hpp"
#include "topolab/relgraph.hpp"

namespace {

using namespace topolab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // law violation or replay failure
constexpr int kExitInput = 2;      // parse/validation error

// Splits [0, total) into at most jobs contiguous ranges, evaluates them on
// worker threads, and returns the partial results in range order; output
// assembly stays single-threaded and deterministic.
template <typename R, typename Fn>
std::vector<R> run_partitioned(std::size_t total, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  const std::size_t ranges =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(total, 1));
  std::vector<R> results(ranges);
  std::vector<std::exception_ptr> errors(ranges);
  std::vector<std::thread> workers;
  for (std::size_t r = 0; r < ranges; ++r) {
    const std::size_t lo = total * r / ranges;
    const std::size_t hi = total * (r + 1) / ranges;
    workers.emplace_back([&, r, lo, hi] {
      try {
        results[r] = fn(lo, hi);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

std::string matrix_text(const DerivedFamilies& fams) {
  const auto matrix = relation_matrix(fams);
  std::ostringstream out;
  out << "relation matrix (row ⊆ column, columns in row order; + yes, - no):\n";
  for (Slot a : kAllSlots) {
    std::string name = slot_name(a);
    name.resize(17, ' ');
    out << name;
    for (Slot b : kAllSlots) {
      out << ' '
          << (matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                  ? '+'
                  : '-');
    }
    out << "\n";
  }
  return out.str();
}

int cmd_analyze(const std::string& space_path, const std::string& ideal_path,
                const std::string& format, bool paranoid) {
  const Space space = jsonio::space_from_json(jsonio::load_file(space_path));
  const Ideal ideal =
      jsonio::ideal_from_json(jsonio::load_file(ideal_path), space.points());
  const Context ctx{space, ideal, paranoid};
  const DerivedFamilies fams = ctx.derive_families();
  const auto defects = fams.axiom_defects(space.points());
  const LawReport laws = run_law_suite(ctx);

  if (format == "json") {
    jsonio::json out;
    out["space"] = jsonio::space_to_json(space);
    out["ideal"] = jsonio::ideal_to_json(ideal);
    out["ideal_proper"] = ideal.is_proper();
    out["ideal_union_closed"] = ideal.is_union_closed();
    jsonio::json topologies;
    for (Slot s : kAllSlots) {
      jsonio::json fam = jsonio::json::array();
      for (const PointSet& m : fams[s]) fam.push_back(jsonio::set_to_json(m));
      topologies[slot_name(s)] = std::move(fam);
    }
    out["topologies"] = std::move(topologies);
    jsonio::json defect_obj;
    for (Slot s : kAllSlots) {
      defect_obj[slot_name(s)] = defects[static_cast<std::size_t>(s)];
    }
    out["axiom_defects"] = std::move(defect_obj);
    const auto matrix = relation_matrix(fams);
    jsonio::json mat = jsonio::json::array();
    for (Slot a : kAllSlots) {
      jsonio::json row = jsonio::json::array();
      for (Slot b : kAllSlots) {
        row.push_back(
            matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      }
      mat.push_back(std::move(row));
    }
    out["inclusion_matrix"] = std::move(mat);
    out["laws_checked"] = laws.laws_checked;
    jsonio::json skipped = jsonio::json::array();
    for (LawId id : laws.skipped) skipped.push_back(law_name(id));
    out["laws_skipped"] = std::move(skipped);
    jsonio::json violations = jsonio::json::array();
    for (const Violation& v : laws.violations) {
      violations.push_back(jsonio::violation_to_json(v));
    }
    out["violations"] = std::move(violations);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "space: " << space.points() << " points, opens "
              << space.family_label(space.opens()) << "\n";
    std::cout << "ideal: " << ideal.label(space.names())
              << "  proper=" << (ideal.is_proper() ? "yes" : "no")
              << " union-closed=" << (ideal.is_union_closed() ? "yes" : "no")
              << "\n";
    std::cout << "regular space: " << (space.is_regular() ? "yes" : "no")
              << "\n";
    std::cout << "derived topologies:\n";
    for (Slot s : kAllSlots) {
      std::string name = slot_name(s);
      name.resize(17, ' ');
      std::cout << "  " << name << slot_display(s) << "\t"
                << space.family_label(fams[s]) << "\n";
    }
    bool all_valid = true;
    for (Slot s : kAllSlots) {
      const std::string& d = defects[static_cast<std::size_t>(s)];
      if (!d.empty()) {
        all_valid = false;
        std::cout << "  axiom failure in " << slot_name(s) << ": " << d << "\n";
      }
    }
    if (all_valid) std::cout << "all seven families satisfy the topology axioms\n";
    std::cout << matrix_text(fams);
    std::cout << "laws: checked " << laws.laws_checked << ", skipped "
              << laws.skipped.size() << ", violations "
              << laws.violations.size() << "\n";
    for (LawId id : laws.skipped) {
      std::cout << "  skipped " << law_name(id)
                << " (needs a union-closed ideal)\n";
    }
    for (const Violation& v : laws.violations) {
      std::cout << "  violation " << law_name(v.law) << ": " << v.detail;
      if (v.a) std::cout << "  A=" << space.set_label(*v.a);
      if (v.b) std::cout << " B=" << space.set_label(*v.b);
      if (v.member) std::cout << " I=" << space.set_label(*v.member);
      std::cout << "\n";
    }
  }

  const bool union_closed_violation =
      ideal.is_union_closed() && !laws.violations.empty();
  return union_closed_violation ? kExitViolation : kExitOk;
}

int cmd_sweep(const CorpusSpec& spec, int jobs, const std::string& out_path,
              const std::string& report_path) {
  const auto start = std::chrono::steady_clock::now();
  const Corpus corpus{spec};

  const auto partials = run_partitioned<std::vector<Violation>>(
      corpus.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        return sweep_laws_range(corpus, lo, hi);
      });
  std::vector<Violation> violations;
  for (const auto& part : partials) {
    violations.insert(violations.end(), part.begin(), part.end());
  }

  if (!report_path.empty()) {
    const auto report_partials = run_partitioned<RelationReport>(
        corpus.size(), jobs, [&](std::size_t lo, std::size_t hi) {
          return aggregate_range(corpus, lo, hi);
        });
    RelationReport report = report_partials.front();
    for (std::size_t i = 1; i < report_partials.size(); ++i) {
      report = merge_reports(std::move(report), report_partials[i]);
    }
    report.strata = corpus.stats();
    write_text_file(report_path, jsonio::report_to_json(report).dump(2) + "\n");
  }

  for (const auto& st : corpus.stats()) {
    std::cout << "n=" << st.n << ": " << st.instances << " instances ("
              << st.spaces << " spaces × " << st.ideals << " ideals"
              << (st.sampled ? ", sampled" : "") << ")\n";
  }
  std::cout << "total: " << corpus.size() << " instances, "
            << violations.size() << " violations\n";

  if (!out_path.empty()) {
    std::ostringstream lines;
    for (const Violation& v : violations) {
      lines << jsonio::violation_to_json(v).dump() << "\n";
    }
    write_text_file(out_path, lines.str());
    std::cout << "violations written to " << out_path << "\n";
  } else {
    std::size_t shown = 0;
    for (const Violation& v : violations) {
      if (shown++ >= 20) {
        std::cout << "... (" << violations.size() - 20
                  << " more; use --out to capture all)\n";
        break;
      }
      std::cout << jsonio::violation_to_json(v).dump() << "\n";
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // Timing goes to stderr so stdout stays byte-identical across runs.
  std::cerr << "sweep wall time: " << elapsed.count() << " ms\n";

  bool union_closed_violation = false;
  for (const Violation& v : violations) {
    if (v.ideal.is_union_closed()) union_closed_violation = true;
  }
  return union_closed_violation ? kExitViolation : kExitOk;
}

int cmd_witness(const std::string& from, const std::string& notin,
                const std::string& gamma_direction, const CorpusSpec& spec,
                const std::string& out_path, bool canonical) {
  const Corpus corpus{spec};
  jsonio::json record;

  if (!gamma_direction.empty()) {
    GammaIterDirection dir;
    if (gamma_direction ==
        gamma_iter_direction_name(GammaIterDirection::gg_escapes_g)) {
      dir = GammaIterDirection::gg_escapes_g;
    } else if (gamma_direction ==
               gamma_iter_direction_name(GammaIterDirection::g_escapes_gg)) {
      dir = GammaIterDirection::g_escapes_gg;
    } else {
      throw UnknownSlotName("unknown gamma iteration direction '" +
                            gamma_direction + "'");
    }
    const GammaIterOutcome outcome = find_gamma_iteration_witness(dir, corpus);
    record = jsonio::gamma_outcome_to_json(dir, spec, outcome);
  } else {
    WitnessQuery query{slot_from_name(from), slot_from_name(notin)};
    WitnessOutcome outcome = find_witness(query, corpus);
    if (canonical) {
      if (Witness* w = std::get_if<Witness>(&outcome)) {
        std::vector<int> perm;
        const Space relabeled = canonical_relabel(w->space, &perm);
        auto apply = [&](PointSet s) {
          PointSet out;
          s.for_each([&](int p) {
            out |= PointSet::single(perm[static_cast<std::size_t>(p)]);
          });
          return out;
        };
        Ideal ideal = w->ideal.kind() == Ideal::Kind::principal
                          ? Ideal::principal(relabeled.points(),
                                             apply(w->ideal.principal_set()))
                          : [&] {
                              std::vector<PointSet> gens;
                              for (const PointSet& g : w->ideal.generators()) {
                                gens.push_back(apply(g));
                              }
                              return Ideal::downward(relabeled.points(),
                                                     SetFamily{std::move(gens)});
                            }();
        Witness rewritten{w->from, w->notin, relabeled, std::move(ideal),
                          apply(w->set)};
        if (!replay_witness(rewritten)) {
          throw InternalCheckFailure("canonical relabeling broke the witness");
        }
        outcome = rewritten;
      }
    }
    record = jsonio::witness_outcome_to_json(query, spec, outcome);
  }

  const std::string text = record.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
  return kExitOk;
}

int cmd_dot(const std::string& report_path) {
  const RelationReport report =
      jsonio::report_from_json(jsonio::load_file(report_path));
  std::cout << emit_dot(report);
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  jsonio::json doc;
  bool whole_file_object = true;
  try {
    doc = jsonio::parse_text(text);
  } catch (const ParseError&) {
    whole_file_object = false;
  }

  std::size_t checked = 0;
  std::size_t failed = 0;
  auto verify_one = [&](const jsonio::json& j) {
    const std::string schema = j.value("schema", std::string{});
    ++checked;
    bool ok = false;
    if (schema == "topolab.witness.v1") {
      if (j.value("result", std::string{}) == "none") {
        std::cout << "record " << checked << ": none-record, nothing to replay\n";
        --checked;
        return;
      }
      ok = replay_witness(jsonio::witness_from_json(j));
    } else if (schema == "topolab.gamma_iteration.v1") {
      if (j.value("result", std::string{}) == "none") {
        std::cout << "record " << checked << ": none-record, nothing to replay\n";
        --checked;
        return;
      }
      ok = replay_gamma_iteration_witness(jsonio::gamma_witness_from_json(j));
    } else if (j.contains("law")) {
      ok = replay_violation(jsonio::violation_from_json(j));
    } else {
      throw ParseError("record " + std::to_string(checked) +
                       " is neither a witness nor a violation");
    }
    if (!ok) ++failed;
    std::cout << "record " << checked << ": " << (ok ? "replays" : "FAILS replay")
              << "\n";
  };

  if (whole_file_object && doc.is_object()) {
    verify_one(doc);
  } else {
    // JSON-lines violations file.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      verify_one(jsonio::parse_text(line));
    }
  }

  std::cout << checked << " record(s), " << failed << " replay failure(s)\n";
  return failed == 0 ? kExitOk : kExitViolation;
}

int cmd_selftest(const std::string& inject_fault) {
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok, const std::string& note) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!note.empty()) std::cout << " — " << note;
    std::cout << "\n";
    if (!ok) all_ok = false;
  };

  // Enumerator counts.
  {
    const int expected[] = {1, 4, 29, 355};
    bool ok = true;
    std::string note;
    for (int n = 1; n <= 4; ++n) {
      std::size_t count = all_spaces(n).size();
      if (inject_fault == "enumerator" && n == 3) {
        count -= 1;  // negative control: simulate a dropped topology
      }
      if (count != static_cast<std::size_t>(expected[n - 1])) {
        ok = false;
        note = "count mismatch at n=" + std::to_string(n) + ": got " +
               std::to_string(count) + ", expected " +
               std::to_string(expected[n - 1]);
        break;
      }
    }
    check("enumerator counts 1, 4, 29, 355", ok, note);
  }

  // Minimal-neighborhood route vs the full-quantifier route, n <= 3.
  {
    bool ok = true;
    std::string note;
    bool faulted = false;
    for (int n = 1; n <= 3 && ok; ++n) {
      for (const Space& s : all_spaces(n)) {
        for (const Ideal& ideal : all_principal_ideals(n)) {
          const Context ctx{s, ideal};
          for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
            const PointSet a{raw};
            PointSet fast = ctx.local_star(a);
            if (inject_fault == "oracle" && !faulted) {
              fast = PointSet{fast.bits() ^ 1};  // negative control
              faulted = true;
            }
            if (fast != naive::local_star(s, ideal, a) ||
                ctx.gamma(a) != naive::gamma(s, ideal, a) ||
                ctx.theta_closure(a) != naive::theta_closure(s, a) ||
                ctx.theta_omega_closure(a) !=
                    naive::theta_omega_closure(s, ideal, a)) {
              ok = false;
              note = "first mismatch at n=" + std::to_string(n) + ", opens " +
                     s.family_label(s.opens()) + ", ideal " +
                     ideal.label(s.names()) + ", A=" + s.set_label(a);
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    check("operator oracle equivalence on all spaces with n <= 3", ok, note);
  }

  // The two-point fixture with one open singleton and the ideal P({a}).
  {
    const Space s2 = Space::build(2, default_point_names(2),
                                  SetFamily::of({0b00, 0b01, 0b11}));
    const Context ctx{s2, Ideal::principal(2, PointSet{0b01})};
    const DerivedFamilies fams = ctx.derive_families();
    const bool ok = fams[Slot::tau_theta] == SetFamily::of({0b00, 0b11}) &&
                    fams[Slot::tau] == SetFamily::of({0b00, 0b01, 0b11}) &&
                    fams[Slot::tau_theta_omega] ==
                        SetFamily::of({0b00, 0b01, 0b11}) &&
                    fams[Slot::sigma] == SetFamily::of({0b00, 0b10, 0b11}) &&
                    fams[Slot::sigma0] == SetFamily::of({0b00, 0b10, 0b11}) &&
                    fams[Slot::tau_star] ==
                        SetFamily::of({0b00, 0b01, 0b10, 0b11}) &&
                    fams[Slot::tau_omega] ==
                        SetFamily::of({0b00, 0b01, 0b10, 0b11});
    check("two-point fixture bundle", ok, ok ? "" : "derived bundle differs");
  }

  // Law sweep over every space and principal ideal with n <= 3.
  {
    CorpusSpec spec;
    spec.max_points = 3;
    const Corpus corpus{spec};
    const std::vector<Violation> violations =
        sweep_laws_range(corpus, 0, corpus.size());
    check("law sweep over n <= 3 principal corpus",
          violations.empty(),
          violations.empty()
              ? std::to_string(corpus.size()) + " instances clean"
              : std::to_string(violations.size()) + " violations");
  }

  std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
  return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "topolab — operator calculus and relation mining on finite ideal "
      "topological spaces"};
  app.require_subcommand(1);

  // analyze
  std::string space_path, ideal_path, format = "text";
  bool paranoid = false;
  auto* analyze = app.add_subcommand(
      "analyze", "derive the seven topologies and run the law suite on one "
                 "(space, ideal) pair");
  analyze->add_option("--space", space_path, "space JSON file")->required();
  analyze->add_option("--ideal", ideal_path, "ideal JSON file")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--paranoid", paranoid,
                    "re-evaluate every operator along the full-quantifier "
                    "reference route");

  // shared corpus options
  int max_points = 3;
  std::string ideal_mode = "principal";
  bool exhaustive = false;
  bool allow_large = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_path, report_path;

  auto add_corpus_options = [&](CLI::App* cmd) {
    cmd->add_option("--max-points", max_points, "largest ground set to scan")
        ->check(CLI::Range(1, 6));
    cmd->add_option("--ideal-mode", ideal_mode, "principal, semi or both")
        ->check(CLI::IsMember({"principal", "semi", "both"}));
    cmd->add_flag("--exhaustive", exhaustive,
                  "disable sampling of the n >= 5 strata");
    cmd->add_flag("--allow-large", allow_large,
                  "permit --max-points above 5");
    cmd->add_option("--seed", seed, "seed for sampled strata");
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  };

  auto* sweep = app.add_subcommand(
      "sweep", "run the law suite over every (space, ideal) instance up to "
               "--max-points");
  add_corpus_options(sweep);
  sweep->add_option("--out", out_path, "violations file (JSON lines)");
  sweep->add_option("--report", report_path,
                    "write the aggregated relation report JSON here");

  std::string from_slot, notin_slot, gamma_direction;
  bool canonical = false;
  auto* witness = app.add_subcommand(
      "witness", "search the corpus for the smallest set certifying "
                 "'--from is not included in --notin'");
  add_corpus_options(witness);
  witness->add_option("--from", from_slot, "slot the witness set belongs to");
  witness->add_option("--notin", notin_slot, "slot the witness set escapes");
  witness->add_option("--gamma-gamma", gamma_direction,
                      "instead probe gamma iteration: "
                      "gamma_gamma_notin_gamma or gamma_notin_gamma_gamma");
  witness->add_option("--out", out_path, "also write the record here");
  witness->add_flag("--canonical", canonical,
                    "relabel the witness space canonically");

  std::string dot_report_path;
  auto* dot = app.add_subcommand(
      "dot", "render a relation report as deterministic DOT text");
  dot->add_option("report", dot_report_path, "relation report JSON file")
      ->required();

  std::string verify_path;
  auto* verify = app.add_subcommand(
      "verify", "replay a witness record or a violations file");
  verify->add_option("file", verify_path, "record file")->required();

  std::string inject_fault;
  auto* selftest = app.add_subcommand(
      "selftest", "run the built-in consistency checks");
  selftest->add_option("--inject-fault", inject_fault,
                       "testing aid: 'enumerator' or 'oracle' negative control")
      ->check(CLI::IsMember({"enumerator", "oracle"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      return cmd_analyze(space_path, ideal_path, format, paranoid);
    }
    if (sweep->parsed() || witness->parsed()) {
      if (max_points > 5 && !allow_large) {
        throw CapacityExceeded(
            "scans above 5 points require --allow-large (and patience)");
      }
      CorpusSpec spec;
      spec.max_points = max_points;
      spec.mode = ideal_mode_from_name(ideal_mode);
      spec.exhaustive = exhaustive;
      spec.seed = seed;
      if (sweep->parsed()) return cmd_sweep(spec, jobs, out_path, report_path);
      if (gamma_direction.empty() && (from_slot.empty() || notin_slot.empty())) {
        throw UnknownSlotName(
            "witness needs --from and --notin, or --gamma-gamma");
      }
      return cmd_witness(from_slot, notin_slot, gamma_direction, spec,
                         out_path, canonical);
    }
    if (dot->parsed()) return cmd_dot(dot_report_path);
    if (verify->parsed()) return cmd_verify(verify_path);
    if (selftest->parsed()) return cmd_selftest(inject_fault);
  } catch (const InternalCheckFailure& e) {
    std::cerr << "internal check failure: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

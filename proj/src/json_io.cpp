#include "topolab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace topolab::jsonio {

namespace {

const json& expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) {
    throw ParseError("at " + path + ": expected an array");
  }
  return j;
}

int expect_index(const json& j, int n, const std::string& path) {
  if (!j.is_number_integer()) {
    throw ParseError("at " + path + ": expected a point index");
  }
  const long long v = j.get<long long>();
  if (v < 0 || v >= n) {
    throw ParseError("at " + path + ": point index " + std::to_string(v) +
                     " outside ground set of size " + std::to_string(n));
  }
  return static_cast<int>(v);
}

SetFamily family_from_json(const json& j, int n, const std::string& path) {
  expect_array(j, path);
  std::vector<PointSet> members;
  members.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string mpath = path + "[" + std::to_string(i) + "]";
    members.push_back(set_from_json(j[i], n, mpath));
  }
  return SetFamily{std::move(members)};
}

json family_to_json(const SetFamily& f) {
  json out = json::array();
  for (const PointSet& s : f) out.push_back(set_to_json(s));
  return out;
}

json strata_to_json(const std::vector<Corpus::StratumStats>& strata) {
  json out = json::array();
  for (const auto& st : strata) {
    out.push_back(json{{"n", st.n},
                       {"spaces", st.spaces},
                       {"ideals", st.ideals},
                       {"instances", st.instances},
                       {"available", st.available},
                       {"sampled", st.sampled}});
  }
  return out;
}

std::vector<Corpus::StratumStats> strata_from_json(const json& j,
                                                   const std::string& path) {
  expect_array(j, path);
  std::vector<Corpus::StratumStats> out;
  for (const auto& row : j) {
    Corpus::StratumStats st;
    st.n = row.value("n", 0);
    st.spaces = row.value("spaces", std::size_t{0});
    st.ideals = row.value("ideals", std::size_t{0});
    st.instances = row.value("instances", std::size_t{0});
    st.available = row.value("available", std::size_t{0});
    st.sampled = row.value("sampled", false);
    out.push_back(st);
  }
  return out;
}

json corpus_spec_to_json(const CorpusSpec& spec) {
  return json{{"max_points", spec.max_points},
              {"ideal_mode", ideal_mode_name(spec.mode)},
              {"exhaustive", spec.exhaustive},
              {"seed", spec.seed}};
}

json set_witness_to_json(const SetWitness& w) {
  return json{{"space", space_to_json(w.space)},
              {"ideal", ideal_to_json(w.ideal)},
              {"set", set_to_json(w.set)}};
}

SetWitness set_witness_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError("at " + path + ": expected an object");
  Space space = space_from_json(j.at("space"));
  Ideal ideal = ideal_from_json(j.at("ideal"), space.points());
  PointSet set = set_from_json(j.at("set"), space.points(), path + ".set");
  return SetWitness{std::move(space), std::move(ideal), set};
}

}  // namespace

json set_to_json(PointSet s) {
  json out = json::array();
  s.for_each([&](int p) { out.push_back(p); });
  return out;
}

PointSet set_from_json(const json& j, int n, const std::string& path) {
  expect_array(j, path);
  PointSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out |= PointSet::single(
        expect_index(j[i], n, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json space_to_json(const Space& s) {
  json out;
  out["points"] = s.names();
  out["opens"] = family_to_json(s.opens());
  return out;
}

Space space_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("at $: expected an object");
  if (!j.contains("points")) throw ParseError("at $: missing \"points\"");
  const json& points = j.at("points");
  expect_array(points, "$.points");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_string()) {
      throw ParseError("at $.points[" + std::to_string(i) +
                       "]: expected a point name string");
    }
    names.push_back(points[i].get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  if (n < 1 || n > kMaxPoints) {
    throw CapacityExceeded("space must have between 1 and 64 points, got " +
                           std::to_string(n));
  }

  const bool has_opens = j.contains("opens");
  const bool has_subbasis = j.contains("subbasis");
  if (has_opens == has_subbasis) {
    throw ParseError(
        "at $: expected exactly one of \"opens\" or \"subbasis\"");
  }
  if (has_opens) {
    return Space::build(n, std::move(names),
                        family_from_json(j.at("opens"), n, "$.opens"));
  }
  return Space::from_subbasis(
      n, std::move(names), family_from_json(j.at("subbasis"), n, "$.subbasis"));
}

json ideal_to_json(const Ideal& ideal) {
  json out;
  if (ideal.kind() == Ideal::Kind::principal) {
    out["principal"] = set_to_json(ideal.principal_set());
  } else {
    out["generators"] = family_to_json(ideal.generators());
  }
  return out;
}

Ideal ideal_from_json(const json& j, int ground_n) {
  if (!j.is_object()) throw ParseError("at $: expected an ideal object");
  const bool has_principal = j.contains("principal");
  const bool has_generators = j.contains("generators");
  if (has_principal == has_generators) {
    throw ParseError(
        "at $: expected exactly one of \"principal\" or \"generators\"");
  }
  // Structural problems are parse errors; indices beyond the space's point
  // list are a ground-set mismatch.
  const PointSet ground = PointSet::full(ground_n);
  auto check_ground = [&](PointSet s, const std::string& path) {
    if (!s.subset_of(ground)) {
      throw GroundSetMismatch("at " + path +
                              ": ideal indices exceed the space's " +
                              std::to_string(ground_n) + " points");
    }
  };
  if (has_principal) {
    const PointSet m =
        set_from_json(j.at("principal"), kMaxPoints, "$.principal");
    check_ground(m, "$.principal");
    return Ideal::principal(ground_n, m);
  }
  const SetFamily gens =
      family_from_json(j.at("generators"), kMaxPoints, "$.generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_ground(gens[i], "$.generators[" + std::to_string(i) + "]");
  }
  return Ideal::downward(ground_n, gens);
}

json violation_to_json(const Violation& v) {
  auto opt_set = [](const std::optional<PointSet>& s) {
    return s ? set_to_json(*s) : json(nullptr);
  };
  json out;
  out["law"] = law_name(v.law);
  out["space"] = space_to_json(v.space);
  out["ideal"] = ideal_to_json(v.ideal);
  out["a"] = opt_set(v.a);
  out["b"] = opt_set(v.b);
  out["member"] = opt_set(v.member);
  out["lhs"] = opt_set(v.lhs);
  out["rhs"] = opt_set(v.rhs);
  out["detail"] = v.detail;
  return out;
}

Violation violation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("at $: expected a violation object");
  Space space = space_from_json(j.at("space"));
  const int n = space.points();
  Ideal ideal = ideal_from_json(j.at("ideal"), n);
  auto opt_set = [&](const char* key) -> std::optional<PointSet> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return set_from_json(j.at(key), n, std::string("$.") + key);
  };
  Violation v{law_from_name(j.at("law").get<std::string>()),
              std::move(space),
              std::move(ideal),
              opt_set("a"),
              opt_set("b"),
              opt_set("member"),
              opt_set("lhs"),
              opt_set("rhs"),
              j.value("detail", std::string{})};
  return v;
}

json witness_outcome_to_json(const WitnessQuery& query,
                             const CorpusSpec& spec,
                             const WitnessOutcome& outcome) {
  json out;
  out["schema"] = "topolab.witness.v1";
  out["query"] = json{{"from", slot_name(query.from)},
                      {"notin", slot_name(query.notin)}};
  out["corpus"] = corpus_spec_to_json(spec);
  if (const Witness* w = std::get_if<Witness>(&outcome)) {
    out["result"] = "witness";
    out["space"] = space_to_json(w->space);
    out["ideal"] = ideal_to_json(w->ideal);
    out["set"] = set_to_json(w->set);
  } else {
    const ScanRecord& rec = std::get<ScanRecord>(outcome);
    out["result"] = "none";
    out["scanned"] = json{{"instances", rec.instances},
                          {"strata", strata_to_json(rec.strata)}};
  }
  return out;
}

Witness witness_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", std::string{}) != "topolab.witness.v1") {
    throw ParseError("at $: expected a topolab.witness.v1 object");
  }
  if (j.value("result", std::string{}) != "witness") {
    throw ParseError("at $.result: record holds no witness to replay");
  }
  const json& q = j.at("query");
  Space space = space_from_json(j.at("space"));
  const int n = space.points();
  Ideal ideal = ideal_from_json(j.at("ideal"), n);
  return Witness{slot_from_name(q.at("from").get<std::string>()),
                 slot_from_name(q.at("notin").get<std::string>()),
                 std::move(space), std::move(ideal),
                 set_from_json(j.at("set"), n, "$.set")};
}

json gamma_outcome_to_json(GammaIterDirection direction,
                           const CorpusSpec& spec,
                           const GammaIterOutcome& outcome) {
  json out;
  out["schema"] = "topolab.gamma_iteration.v1";
  out["query"] = json{{"direction", gamma_iter_direction_name(direction)}};
  out["corpus"] = corpus_spec_to_json(spec);
  if (const GammaIterWitness* w = std::get_if<GammaIterWitness>(&outcome)) {
    out["result"] = "witness";
    out["space"] = space_to_json(w->space);
    out["ideal"] = ideal_to_json(w->ideal);
    out["a"] = set_to_json(w->a);
    out["gamma_a"] = set_to_json(w->gamma_a);
    out["gamma_gamma_a"] = set_to_json(w->gamma_gamma_a);
  } else {
    const ScanRecord& rec = std::get<ScanRecord>(outcome);
    out["result"] = "none";
    out["scanned"] = json{{"instances", rec.instances},
                          {"strata", strata_to_json(rec.strata)}};
  }
  return out;
}

GammaIterWitness gamma_witness_from_json(const json& j) {
  if (!j.is_object() ||
      j.value("schema", std::string{}) != "topolab.gamma_iteration.v1") {
    throw ParseError("at $: expected a topolab.gamma_iteration.v1 object");
  }
  if (j.value("result", std::string{}) != "witness") {
    throw ParseError("at $.result: record holds no witness to replay");
  }
  const std::string dir = j.at("query").at("direction").get<std::string>();
  GammaIterDirection direction;
  if (dir == gamma_iter_direction_name(GammaIterDirection::gg_escapes_g)) {
    direction = GammaIterDirection::gg_escapes_g;
  } else if (dir == gamma_iter_direction_name(GammaIterDirection::g_escapes_gg)) {
    direction = GammaIterDirection::g_escapes_gg;
  } else {
    throw ParseError("at $.query.direction: unknown direction '" + dir + "'");
  }
  Space space = space_from_json(j.at("space"));
  const int n = space.points();
  Ideal ideal = ideal_from_json(j.at("ideal"), n);
  return GammaIterWitness{direction,
                          std::move(space),
                          std::move(ideal),
                          set_from_json(j.at("a"), n, "$.a"),
                          set_from_json(j.at("gamma_a"), n, "$.gamma_a"),
                          set_from_json(j.at("gamma_gamma_a"), n,
                                        "$.gamma_gamma_a")};
}

json report_to_json(const RelationReport& report) {
  json out;
  out["schema"] = "topolab.relation_report.v1";
  out["corpus"] = json{{"max_points", report.max_points},
                       {"ideal_mode", ideal_mode_name(report.mode)},
                       {"exhaustive", report.exhaustive},
                       {"seed", report.seed},
                       {"instances", report.instances},
                       {"strata", strata_to_json(report.strata)}};
  json pairs = json::array();
  for (Slot from : kAllSlots) {
    for (Slot to : kAllSlots) {
      if (from == to) continue;
      const PairStatus& st = report.pair(from, to);
      json row;
      row["from"] = slot_name(from);
      row["to"] = slot_name(to);
      row["universal"] = st.universal;
      row["noninclusion"] =
          st.noninclusion ? set_witness_to_json(*st.noninclusion) : json(nullptr);
      row["strictness"] =
          st.strictness ? set_witness_to_json(*st.strictness) : json(nullptr);
      pairs.push_back(std::move(row));
    }
  }
  out["pairs"] = std::move(pairs);
  return out;
}

RelationReport report_from_json(const json& j) {
  if (!j.is_object() ||
      j.value("schema", std::string{}) != "topolab.relation_report.v1") {
    throw ParseError("at $: expected a topolab.relation_report.v1 object");
  }
  RelationReport report;
  const json& corpus = j.at("corpus");
  report.max_points = corpus.value("max_points", 0);
  report.mode = ideal_mode_from_name(
      corpus.value("ideal_mode", std::string{"principal"}));
  report.exhaustive = corpus.value("exhaustive", true);
  report.seed = corpus.value("seed", std::uint64_t{0});
  report.instances = corpus.value("instances", 0LL);
  if (corpus.contains("strata")) {
    report.strata = strata_from_json(corpus.at("strata"), "$.corpus.strata");
  }
  const json& pairs = j.at("pairs");
  expect_array(pairs, "$.pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const json& row = pairs[i];
    const std::string path = "$.pairs[" + std::to_string(i) + "]";
    const Slot from = slot_from_name(row.at("from").get<std::string>());
    const Slot to = slot_from_name(row.at("to").get<std::string>());
    PairStatus& st = report.pair(from, to);
    st.universal = row.value("universal", true);
    if (row.contains("noninclusion") && !row.at("noninclusion").is_null()) {
      st.noninclusion =
          set_witness_from_json(row.at("noninclusion"), path + ".noninclusion");
    }
    if (row.contains("strictness") && !row.at("strictness").is_null()) {
      st.strictness =
          set_witness_from_json(row.at("strictness"), path + ".strictness");
    }
  }
  return report;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

}  // namespace topolab::jsonio

#pragma once

#include <string>

#include <json.hpp>

#include "topolab/laws.hpp"
#include "topolab/relgraph.hpp"

// JSON wire formats. Ordered maps and fixed field order keep every
// serialization byte-reproducible.
//
//   space    {"points": ["a","b"], "opens": [[], [0], [0,1]]}
//            or {"points": [...], "subbasis": [[...], ...]}
//   ideal    {"principal": [0]} or {"generators": [[0], [1]]}
//
// Sets travel as ascending point-index arrays. Parse errors carry the JSON
// path of the offending member.
namespace topolab::jsonio {

using json = nlohmann::ordered_json;

json set_to_json(PointSet s);
PointSet set_from_json(const json& j, int n, const std::string& path);

json space_to_json(const Space& s);
Space space_from_json(const json& j);

json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j, int ground_n);

json violation_to_json(const Violation& v);
Violation violation_from_json(const json& j);

json witness_outcome_to_json(const WitnessQuery& query,
                             const CorpusSpec& spec,
                             const WitnessOutcome& outcome);
Witness witness_from_json(const json& j);

json gamma_outcome_to_json(GammaIterDirection direction,
                           const CorpusSpec& spec,
                           const GammaIterOutcome& outcome);
GammaIterWitness gamma_witness_from_json(const json& j);

json report_to_json(const RelationReport& report);
RelationReport report_from_json(const json& j);

json parse_text(const std::string& text);   // wraps exceptions in ParseError
json load_file(const std::string& path);    // reads and parses a file

}  // namespace topolab::jsonio

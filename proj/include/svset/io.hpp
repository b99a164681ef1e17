#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "svset/decision.hpp"
#include "svset/groups.hpp"
#include "svset/svset.hpp"
#include "svset/topology.hpp"

namespace svset::io {

/// Object keys come out sorted, so dumps are deterministic.
using Json = nlohmann::json;

/// Parses `text` as inline JSON when it starts with '{' or '[', otherwise
/// reads it as a file path. Throws Parse naming the source.
Json load_json(const std::string& text);
std::string read_file(const std::string& path);

/// Accepts "a/b" or decimal strings and JSON integers; rejects floats.
Rational rational_from_json(const Json& j, const std::string& where);
std::int64_t integer_from_json(const Json& j, const std::string& where);
/// {"fraction": "a/b", "decimal": "0.5" | null}.
Json rational_report(const Rational& q);

Scale scale_from_json(const Json& j);
Json scale_to_json(const Scale& scale);

/// Scale-directed: chain values are integers, unit values rational strings,
/// pairs/intervals/grid functions arrays, finite lattice values names.
Element element_from_json(const Json& j, const Scale& scale, const std::string& where = "value");
Json element_to_json(const Element& e, const Scale& scale);

/// {"universe":[...], "params":[...], "scale":{...}, "values":{"x|p": v}}.
/// Without "params" the set is unparameterized and keys may omit "|*".
SVSet svset_from_json(const Json& j);
Json svset_to_json(const SVSet& a);
/// {"x": v} table for an unparameterized set.
SVSet value_table_from_json(const Json& j, const Universe& universe, const Scale& scale);
Json value_table_to_json(const SVSet& a);

Universe universe_from_json(const Json& j, const std::string& name = "U");
ParamSet params_from_json(const Json& j);
Subset subset_from_json(const Json& j, const std::string& where);
Json subset_to_json(const Subset& s);
LabelMap labelmap_from_json(const Json& j, const std::string& where);

/// {"scale":{...}, "universe":[...], "opens":[{"x": v}, ...]}.
SVTopology topology_from_json(const Json& j);
Json topology_to_json(const SVTopology& t);
Json crisp_topology_to_json(const CrispTopology& t);

/// {"elements":[...], "table":[[...]], "identity":"e"} or {"builtin":"Z4"}.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);
/// {"source": group, "target": group, "map": {...}}.
GroupHom group_hom_from_json(const Json& j);
/// {"source": scale, "target": scale, "map": [[a, h(a)], ...]}.
ScaleHom scale_hom_from_json(const Json& j);

/// Model documents for crisp, soft, multiset, fuzzy, lfuzzy, ifs, rough,
/// type2, it2, lviss and lviss-formal.
SVSet encode_model(const std::string& kind, const Json& model);
Json decode_model(const std::string& kind, const SVSet& a);

/// Header row of criteria, first column alternatives, cells "mu;m".
DecisionTable decision_table_from_csv(const std::string& text, std::int64_t k);
/// {"k": 10, "alternatives": [...], "criteria": [...],
///  "grades": {"L1": {"performance": "0.90;8" | ["0.90", 8]}}}.
DecisionTable decision_table_from_json(const Json& j);
/// Dispatches on the file extension; CSV needs k.
DecisionTable load_decision_table(const std::string& path, std::optional<std::int64_t> k);
EvidenceGrade evidence_grade_from_text(const std::string& cell, std::int64_t k, const std::string& where);

}  // namespace svset::io

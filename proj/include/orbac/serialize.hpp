#pragma once

// JSON encodings of the report types. The decision report schema is fixed:
//   {"S":[...], "threshold":k, "eligible":bool,
//    "exceptional":"none|case1|...|case4", "verdict":"ac|singular"}

#include <json.hpp>

#include "orbac/oracle.hpp"
#include "orbac/wright.hpp"

namespace orbac {

using json = nlohmann::json;

inline json to_json(const DecisionReport& r) {
  return json{{"S", r.S_values},
              {"threshold", r.threshold},
              {"eligible", r.eligible},
              {"exceptional", to_string(r.exceptional)},
              {"verdict", to_string(r.verdict)}};
}

inline DecisionReport decision_from_json(const json& j) {
  DecisionReport r;
  r.S_values = j.at("S").get<std::vector<int>>();
  r.threshold = j.at("threshold").get<int>();
  r.eligible = j.at("eligible").get<bool>();
  const std::string exc = j.at("exceptional").get<std::string>();
  r.exceptional = exc == "none"    ? ExceptionalCase::none
                  : exc == "case1" ? ExceptionalCase::A_halfhalf
                  : exc == "case2" ? ExceptionalCase::D_SUn_pair
                  : exc == "case3" ? ExceptionalCase::D4_special
                  : exc == "case4" ? ExceptionalCase::D_SUn_triple
                                   : throw parse_error("bad exceptional tag: " + exc);
  r.verdict = j.at("verdict").get<std::string>() == "ac" ? Verdict::absolutely_continuous
                                                         : Verdict::singular;
  int sum = 0;
  for (int s : r.S_values) sum += s;
  r.margin = r.threshold - sum;
  return r;
}

inline bool same_decision(const DecisionReport& a, const DecisionReport& b) {
  return a.S_values == b.S_values && a.threshold == b.threshold && a.eligible == b.eligible &&
         a.exceptional == b.exceptional && a.verdict == b.verdict;
}

inline json to_json(const SurveyTable& t) {
  json rows = json::array();
  for (const SurveyRow& row : t.rows) {
    json types = json::array();
    for (const TypedElement& z : row.tuple) {
      json e{{"type", z.type_label_or_regular()}, {"expr", z.describe()}};
      if (z.su_class_parity() != Parity::not_applicable)
        e["parity"] = z.su_class_parity() == Parity::minus ? "minus" : "plus";
      types.push_back(e);
    }
    rows.push_back(json{{"tuple", types}, {"report", to_json(row.report)}});
  }
  return json{{"cartan", t.cartan.label()},
              {"L", t.L},
              {"rows", rows},
              {"singular_count", t.singular_count}};
}

inline json to_json(const WrightReport& r) {
  json rows = json::array();
  for (const WrightRow& row : r.rows)
    rows.push_back(json{
        {"psi", row.psi_label}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"holds", row.holds}});
  return json{{"rows", rows}, {"overall", r.overall}};
}

inline json to_json(const OracleDecision& d) {
  return json{{"verdict", to_string(d.verdict)},
              {"max_rank", d.max_rank},
              {"target", d.target},
              {"certifying_trial", d.certifying_trial}};
}

/// Roots as JSON integer coefficient arrays.
inline json to_json(const std::vector<Root>& roots) {
  json arr = json::array();
  for (const Root& r : roots) {
    json coeffs = json::array();
    for (int i = 0; i < r.size(); ++i) coeffs.push_back(r.coeff(i));
    arr.push_back(coeffs);
  }
  return arr;
}

}  // namespace orbac

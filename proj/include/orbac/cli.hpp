#pragma once

// The batch interface behind the orbac executable. Subcommands:
//   decide  - verdict for one explicit tuple
//   survey  - verdicts over all type tuples of a class
//   wright  - the per-subsystem sufficient-condition ledger
//   verify  - combinatorial vs numerical cross-validation sweep
//   info    - realization structure audit summary
// Exit codes: 0 ok, 1 cross-validation disagreement, 2 parse error,
// 3 capacity, 4 internal defect.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "orbac/serialize.hpp"

namespace orbac {
namespace cli {

struct Options {
  std::string cartan;
  std::vector<std::string> elements;
  std::string format = "pretty";
  int L = 2;
  int trials = 8;
  uint64_t seed = 7;
  bool exhaustive = false;
  std::string sv_csv;
};

inline std::vector<TypedElement> parse_elements(const CartanClass& cc,
                                                const std::vector<std::string>& exprs) {
  std::vector<TypedElement> out;
  for (const std::string& e : exprs) out.push_back(TypedElement::parse(cc.restricted(), e));
  return out;
}

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

inline int run_decide(const Options& opt, std::ostream& out) {
  const CartanClass cc = CartanClass::parse(opt.cartan);
  TupleQuery q(cc, parse_elements(cc, opt.elements));
  const DecisionReport rep = decide(q);
  if (opt.format == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "verdict,eligible,exceptional,threshold,margin\n"
        << to_string(rep.verdict) << "," << (rep.eligible ? "true" : "false") << ","
        << to_string(rep.exceptional) << "," << rep.threshold << "," << rep.margin << "\n";
  } else {
    out << cc.label() << " tuple " << rep.explanation << "\n";
    out << "verdict: " << (rep.verdict == Verdict::absolutely_continuous
                               ? "absolutely continuous"
                               : "singular")
        << "\n";
  }
  return 0;
}

inline int run_survey(const Options& opt, std::ostream& out) {
  const CartanClass cc = CartanClass::parse(opt.cartan);
  const SurveyTable table = survey(cc, opt.L);
  if (opt.format == "json") {
    out << to_json(table).dump(2) << "\n";
    return 0;
  }
  if (opt.format == "csv") {
    out << "tuple,verdict,exceptional,margin\n";
    for (const SurveyRow& row : table.rows) {
      std::string types;
      for (const TypedElement& z : row.tuple)
        types += (types.empty() ? "" : " | ") + z.type_label_or_regular() +
                 (z.su_class_parity() == Parity::minus ? "(-)" : "");
      out << '"' << types << "\"," << to_string(row.report.verdict) << ","
          << to_string(row.report.exceptional) << "," << row.report.margin << "\n";
    }
    return 0;
  }
  out << "survey " << cc.label() << " (" << cc.restricted().label() << "), L = " << table.L
      << ": " << table.rows.size() << " type tuples, " << table.singular_count
      << " singular\n";
  for (const SurveyRow& row : table.rows) {
    if (row.report.verdict != Verdict::singular) continue;
    std::string types;
    for (const TypedElement& z : row.tuple)
      types += (types.empty() ? "" : " | ") + z.type_label_or_regular() +
               (z.su_class_parity() == Parity::minus ? "(-)" : "");
    out << "  singular: " << types
        << (row.report.eligible ? "  [exceptional " + to_string(row.report.exceptional) + "]"
                                : "  [not eligible]")
        << "\n";
  }
  return 0;
}

inline int run_wright(const Options& opt, std::ostream& out) {
  const CartanClass cc = CartanClass::parse(opt.cartan);
  TupleQuery q(cc, parse_elements(cc, opt.elements));
  const WrightReport rep = wright_holds(q);
  if (opt.format == "json") {
    out << to_json(rep).dump(2) << "\n";
    return 0;
  }
  out << "wright ledger for " << cc.label() << ":\n";
  for (const WrightRow& row : rep.rows)
    out << "  psi " << row.psi_label << ": lhs " << row.lhs << " >= rhs " << row.rhs << " : "
        << (row.holds ? "holds" : "fails") << "\n";
  out << "overall: " << (rep.overall ? "holds (tuple is absolutely continuous)"
                                     : "inconclusive")
      << "\n";
  return 0;
}

inline int run_verify(const Options& opt, std::ostream& out) {
  const CartanClass cc = CartanClass::parse(opt.cartan);
  const Realization R = build_realization(cc);
  std::vector<std::vector<TypedElement>> tuples;
  if (opt.exhaustive) {
    const std::vector<TypedElement> types = enumerate_types(cc.restricted());
    std::vector<int> pick(size_t(opt.L), 0);
    const int T = int(types.size());
    while (true) {
      std::vector<TypedElement> tuple;
      for (int i : pick) tuple.push_back(types[size_t(i)]);
      tuples.push_back(std::move(tuple));
      int i = opt.L - 1;
      while (i >= 0 && pick[size_t(i)] == T - 1) --i;
      if (i < 0) break;
      const int next = pick[size_t(i)] + 1;
      for (int j = i; j < opt.L; ++j) pick[size_t(j)] = next;
    }
  } else {
    tuples.push_back(parse_elements(cc, opt.elements));
  }

  std::ofstream sv_out;
  if (!opt.sv_csv.empty()) {
    sv_out.open(opt.sv_csv);
    sv_out << "tuple,trial,index,singular_value\n";
  }

  json rows = json::array();
  long long disagreements = 0;
  for (const auto& tuple : tuples) {
    TupleQuery q(cc, tuple);
    const DecisionReport rep = decide(q);
    const OracleDecision od = oracle_decide(q, R, opt.trials, opt.seed);
    const bool oracle_full = od.verdict == OracleVerdict::ac;
    const bool agree =
        oracle_full == (rep.verdict == Verdict::absolutely_continuous);
    if (!agree) ++disagreements;
    std::string types;
    for (const TypedElement& z : tuple)
      types += (types.empty() ? "" : " | ") + z.describe();
    rows.push_back(json{{"tuple", types},
                        {"combinatorial", to_string(rep.verdict)},
                        {"oracle", to_string(od.verdict)},
                        {"max_rank", od.max_rank},
                        {"target", od.target},
                        {"agree", agree}});
    if (sv_out.is_open()) {
      for (size_t t = 0; t < od.probes.size(); ++t)
        for (size_t i = 0; i < od.probes[t].singular_values.size(); ++i)
          sv_out << '"' << types << "\"," << t << "," << i << ","
                 << format_double(od.probes[t].singular_values[i]) << "\n";
    }
  }

  json summary{{"cartan", cc.label()},
               {"L", opt.L},
               {"trials", opt.trials},
               {"seed", opt.seed},
               {"tuples", rows.size()},
               {"disagreements", disagreements},
               {"rows", rows}};
  if (opt.format == "json") {
    out << summary.dump(2) << "\n";
  } else {
    out << "verify " << cc.label() << ": " << rows.size() << " tuples, trials = "
        << opt.trials << ", seed = " << opt.seed << "\n";
    for (const auto& row : rows)
      out << "  " << row["tuple"].get<std::string>() << ": combinatorial "
          << row["combinatorial"].get<std::string>() << ", oracle "
          << row["oracle"].get<std::string>() << " (rank " << row["max_rank"] << "/"
          << row["target"] << ") " << (row["agree"].get<bool>() ? "ok" : "DISAGREE") << "\n";
    out << "agreement: " << (rows.size() - size_t(disagreements)) << "/" << rows.size()
        << "\n";
  }
  return disagreements == 0 ? 0 : 1;
}

inline int run_info(const Options& opt, std::ostream& out) {
  const CartanClass cc = CartanClass::parse(opt.cartan);
  const Realization R = build_realization(cc);
  const AuditReport audit = structure_audit(R);
  const RootSpaceAudit roots = root_space_audit(R);
  if (opt.format == "json") {
    out << json{{"cartan", cc.label()},
                {"restricted", cc.restricted().label()},
                {"matrix_size", R.matrix_size},
                {"dim_g", R.basis_g.size()},
                {"dim_k", R.basis_k.size()},
                {"dim_p", R.basis_p.size()},
                {"rank", R.basis_a.size()},
                {"structure_audit", audit.pass},
                {"root_space_audit", roots.pass}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << cc.label() << ": restricted system " << cc.restricted().label() << ", matrices "
      << R.matrix_size << "x" << R.matrix_size << "\n";
  out << "  dim g = " << R.basis_g.size() << ", dim k = " << R.basis_k.size()
      << ", dim p = " << R.basis_p.size() << ", rank = " << R.basis_a.size() << "\n";
  out << "  structure audit: " << (audit.pass ? "pass" : "FAIL") << " (theta "
      << format_double(audit.theta_involution) << ", brackets "
      << format_double(audit.bracket_residual) << ", abelian "
      << format_double(audit.abelian_residual) << ")\n";
  out << "  root space audit: " << (roots.pass ? "pass" : "FAIL") << " (worst ad residual "
      << format_double(roots.worst_adz_residual) << ")\n";
  for (auto& [root, mult] : roots.numeric_multiplicities)
    out << "    dim g_{" << root << "} = " << mult << "\n";
  return 0;
}

/// Parses argv (without the program name) and dispatches. All output goes to
/// the supplied streams so the interface is directly testable.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decision engine for absolute continuity of orbital measure convolutions"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool wants_elements) {
    sub->add_option("--cartan", opt.cartan, "Cartan class, e.g. AI:4, BDI:3,4, DI:4")
        ->required();
    sub->add_option("--format", opt.format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    if (wants_elements)
      sub->add_option("--z", opt.elements, "element, e.g. \"s=4\", \"J=1; s=2\", \"v=0,1,1\"");
  };

  CLI::App* cmd_decide = app.add_subcommand("decide", "decide one tuple");
  add_common(cmd_decide, true);
  CLI::App* cmd_survey = app.add_subcommand("survey", "verdict table over all types");
  add_common(cmd_survey, false);
  cmd_survey->add_option("--L", opt.L, "tuple length")->required();
  CLI::App* cmd_wright = app.add_subcommand("wright", "sufficient-condition ledger");
  add_common(cmd_wright, true);
  CLI::App* cmd_verify = app.add_subcommand("verify", "cross-validate against the oracle");
  add_common(cmd_verify, true);
  cmd_verify->add_option("--L", opt.L, "tuple length for --exhaustive");
  cmd_verify->add_flag("--exhaustive", opt.exhaustive, "all type tuples of length L");
  cmd_verify->add_option("--trials", opt.trials, "random trials per tuple");
  cmd_verify->add_option("--seed", opt.seed, "random seed");
  cmd_verify->add_option("--sv-csv", opt.sv_csv, "dump singular value spectra to CSV");
  CLI::App* cmd_info = app.add_subcommand("info", "realization audit summary");
  add_common(cmd_info, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_decide->parsed()) return run_decide(opt, out);
    if (cmd_survey->parsed()) return run_survey(opt, out);
    if (cmd_wright->parsed()) return run_wright(opt, out);
    if (cmd_verify->parsed()) return run_verify(opt, out);
    if (cmd_info->parsed()) return run_info(opt, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    err << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const defect_error& e) {
    err << "defect: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace orbac

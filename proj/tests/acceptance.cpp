// Acceptance suite: runs the eight project exit criteria and prints one
// PASS/FAIL line per criterion. Exits with the number of failed criteria.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <orbac/orbac.hpp>

using namespace orbac;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& what) { notes.push_back(what); }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

TypedElement mk(Kind k, int n, int J, std::vector<int> s, bool minus = false) {
  return TypedElement::make(RestrictedClass(k, n), J, std::move(s), minus);
}

std::vector<CartanClass> realization_sweep() {
  std::vector<CartanClass> out;
  for (int n = 2; n <= 5; ++n) out.push_back(CartanClass::AI(n));
  for (int n = 1; n <= 4; ++n) out.push_back(CartanClass::CI(n));
  for (int p = 1; p <= 4; ++p)
    for (int q = std::max(p, p == 1 ? 2 : p); p + q <= 8; ++q)
      out.push_back(CartanClass::BDI(p, q));
  return out;
}

template <class F>
void for_each_multiset(int count, int L, F&& f) {
  std::vector<int> pick(size_t(L), 0);
  while (true) {
    f(pick);
    int i = L - 1;
    while (i >= 0 && pick[size_t(i)] == count - 1) --i;
    if (i < 0) break;
    const int next = pick[size_t(i)] + 1;
    for (int j = i; j < L; ++j) pick[size_t(j)] = next;
  }
}

constexpr uint64_t kSeed = 7;
constexpr int kTrials = 8;

// --------------------------------------------------------------------------
// 1. Structure audit
// --------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  for (const CartanClass& cc : realization_sweep()) {
    try {
      const Realization R = build_realization(cc);
      const AuditReport a = structure_audit(R, 1e-9);
      if (!a.pass) {
        o.fail(cc.label() + ": audit failed (" + a.detail + ")");
        continue;
      }
      // Closed-form dim p identities.
      long long expect = 0;
      switch (cc.family()) {
        case Family::AI: expect = (long long)cc.p() * (cc.p() + 1) / 2 - 1; break;
        case Family::CI: expect = (long long)cc.p() * (cc.p() + 1); break;
        case Family::BDI: expect = (long long)cc.p() * cc.q(); break;
        default: break;
      }
      o.require(a.dim_p_actual == expect,
                cc.label() + ": dim p = " + std::to_string(a.dim_p_actual) +
                    ", closed form " + std::to_string(expect));
      o.require(a.dim_p_actual == a.dim_p_expected,
                cc.label() + ": dim p does not match rank + sum of multiplicities");
    } catch (const std::exception& e) {
      o.fail(cc.label() + ": build failed: " + e.what());
    }
  }
  o.note("CI(n) realizations have dim p = n(n+1) = rank + sum mult; the sp(n,R) block");
  o.note("description with a skew off-diagonal part undercounts this by n.");
  return o;
}

// --------------------------------------------------------------------------
// 2. Dimension cross-check
// --------------------------------------------------------------------------

Outcome criterion2() {
  Outcome o;
  long long checked = 0;
  for (const CartanClass& cc : realization_sweep()) {
    const Realization R = build_realization(cc);
    for (const TypedElement& z : enumerate_types(cc.restricted())) {
      try {
        const auto basis = tangent_basis(z, R);  // throws on any mismatch
        ++checked;
        (void)basis;
      } catch (const std::exception& e) {
        o.fail(cc.label() + " " + z.describe() + ": " + e.what());
      }
    }
  }
  for (int n : {3, 4}) {
    const CartanClass cc = CartanClass::BDI(n, n);
    const Realization R = build_realization(cc);
    const auto sun = tangent_basis(mk(Kind::D, n, 0, {n}), R);
    const auto sun1 = tangent_basis(mk(Kind::D, n, 0, {n - 1, 1}), R);
    o.require(int(sun.size()) == n * (n - 1) / 2,
              "dim N_{SU(" + std::to_string(n) + ")} != n(n-1)/2");
    o.require(int(sun1.size()) == (n - 1) * (n - 2) / 2 + 2 * (n - 1),
              "dim N_{SU(" + std::to_string(n - 1) + ")} != (n-1)(n-2)/2 + 2(n-1)");
  }
  o.note(std::to_string(checked) + " element types cross-checked");
  return o;
}

// --------------------------------------------------------------------------
// 3. Exhaustive decide vs oracle agreement (also feeds criterion 8)
// --------------------------------------------------------------------------

std::vector<CartanClass> oracle_sweep() {
  return {CartanClass::AI(2),     CartanClass::AI(3),     CartanClass::AI(4),
          CartanClass::AI(5),     CartanClass::BDI(2, 3), CartanClass::BDI(3, 4),
          CartanClass::BDI(3, 3), CartanClass::BDI(4, 4), CartanClass::CI(2),
          CartanClass::CI(3)};
}

std::string run_cross_validation(Outcome& o) {
  json classes = json::array();
  for (const CartanClass& cc : oracle_sweep()) {
    const Realization R = build_realization(cc);
    const auto types = enumerate_types(cc.restricted());
    json rows = json::array();
    for (int L : {2, 3}) {
      for_each_multiset(int(types.size()), L, [&](const std::vector<int>& pick) {
        std::vector<TypedElement> tuple;
        for (int i : pick) tuple.push_back(types[size_t(i)]);
        TupleQuery q(cc, tuple);
        const DecisionReport rep = decide(q);
        const OracleDecision od = oracle_decide(q, R, kTrials, kSeed);
        const bool combinatorial_ac = rep.verdict == Verdict::absolutely_continuous;
        const bool oracle_ac = od.verdict == OracleVerdict::ac;
        if (combinatorial_ac != oracle_ac) {
          std::string types_str;
          for (const TypedElement& z : tuple) types_str += z.describe() + " | ";
          o.fail(cc.label() + " (" + types_str + "): decide " + to_string(rep.verdict) +
                 " but oracle rank " + std::to_string(od.max_rank) + "/" +
                 std::to_string(od.target));
        }
        std::string key;
        for (const TypedElement& z : tuple) key += (key.empty() ? "" : " | ") + z.describe();
        std::vector<std::string> sv;
        if (!od.probes.empty())
          for (double s : od.probes.back().singular_values) {
            std::ostringstream ss;
            ss << std::setprecision(17) << s;
            sv.push_back(ss.str());
          }
        rows.push_back(json{{"tuple", key},
                            {"decide", to_string(rep.verdict)},
                            {"oracle", to_string(od.verdict)},
                            {"max_rank", od.max_rank},
                            {"target", od.target},
                            {"certifying_trial", od.certifying_trial},
                            {"last_probe_sv", sv}});
      });
    }
    classes.push_back(json{{"cartan", cc.label()}, {"rows", rows}});
  }
  return json{{"seed", kSeed}, {"trials", kTrials}, {"classes", classes}}.dump();
}

Outcome criterion3(std::string& serialized) {
  Outcome o;
  serialized = run_cross_validation(o);
  long long tuples = 0;
  for (const CartanClass& cc : oracle_sweep()) {
    const size_t t = enumerate_types(cc.restricted()).size();
    tuples += (long long)(t * (t + 1) / 2) + (long long)(t * (t + 1) * (t + 2) / 6);
  }
  o.note(std::to_string(tuples) + " tuples cross-validated, trials=" +
         std::to_string(kTrials) + ", seed=" + std::to_string(kSeed));
  return o;
}

// --------------------------------------------------------------------------
// 4. Survey tables (sharpness of the corollary)
// --------------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  // (a) Kind A: all (rank+1)-tuples are AC; the singular rank-tuples are
  // exactly the all-SU(rank) ones.
  for (int m = 2; m <= 5; ++m) {
    const CartanClass cc = CartanClass::AI(m);
    const int rank = m - 1;
    const SurveyTable full = survey(cc, rank + 1);
    o.require(full.singular_count == 0,
              cc.label() + ": some (rank+1)-tuple is singular");
    if (rank >= 2) {
      const SurveyTable sharp = survey(cc, rank);
      for (const SurveyRow& row : sharp.rows) {
        const bool all_topsu =
            std::all_of(row.tuple.begin(), row.tuple.end(), [&](const TypedElement& z) {
              return z.max_block() == rank;
            });
        if ((row.report.verdict == Verdict::singular) != all_topsu)
          o.fail(cc.label() + " L=" + std::to_string(rank) + ": sharpness set mismatch");
      }
      o.require(sharp.singular_count == 1,
                cc.label() + ": expected exactly one singular type tuple");
    }
  }

  // (b) B_3 and C_3: all triples AC; singular pairs are exactly the
  // non-eligible ones, i.e. both-(B_2/C_2) and (B_2/C_2, SU(3)).
  for (const CartanClass& cc : {CartanClass::BDI(3, 4), CartanClass::CI(3)}) {
    o.require(survey(cc, 3).singular_count == 0, cc.label() + ": a triple is singular");
    const SurveyTable pairs = survey(cc, 2);
    std::set<std::multiset<std::string>> singular, expected;
    const std::string rank2 = cc.restricted().kind == Kind::B ? "B_2" : "C_2";
    expected.insert({rank2, rank2});
    expected.insert({rank2, "SU(3)"});
    for (const SurveyRow& row : pairs.rows)
      if (row.report.verdict == Verdict::singular) {
        o.require(!row.report.eligible, cc.label() + ": an eligible pair is singular");
        std::multiset<std::string> labels;
        for (const TypedElement& z : row.tuple) labels.insert(z.type_label_or_regular());
        singular.insert(labels);
      }
    o.require(singular == expected, cc.label() + ": singular pair set mismatch");
  }

  // (c) D_4 triples: the singular ones are exactly the same-sign-class SU(4)
  // triples plus the non-eligible all-D_3 triple.
  {
    const SurveyTable t = survey(CartanClass::DI(4), 3);
    long long su4_same = 0, ineligible = 0, other = 0;
    for (const SurveyRow& row : t.rows) {
      if (row.report.verdict != Verdict::singular) continue;
      if (!row.report.eligible) {
        ++ineligible;
        for (const TypedElement& z : row.tuple)
          if (z.type_label() != "D_3") ++other;
        continue;
      }
      const Parity p0 = row.tuple.front().su_class_parity();
      bool same = p0 != Parity::not_applicable;
      for (const TypedElement& z : row.tuple)
        same = same && z.sizes() == std::vector<int>{4} && z.su_class_parity() == p0;
      if (same) ++su4_same;
      else ++other;
    }
    o.require(su4_same == 2 && ineligible == 1 && other == 0,
              "DI(4) L=3: expected the two same-class SU(4) triples plus the D_3 triple, got " +
                  std::to_string(su4_same) + "/" + std::to_string(ineligible) + "/" +
                  std::to_string(other));
  }
  return o;
}

// --------------------------------------------------------------------------
// 5. Exceptional tuple ledger
// --------------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  struct Case {
    CartanClass cc;
    std::vector<TypedElement> tuple;
    ExceptionalCase expect;
  };
  std::vector<Case> cases;

  // Case 1 in the realizable kind-A spaces.
  cases.push_back({CartanClass::AI(4),
                   {mk(Kind::A, 3, 0, {2, 2}), mk(Kind::A, 3, 0, {2, 2})},
                   ExceptionalCase::A_halfhalf});
  cases.push_back({CartanClass::AI(6),
                   {mk(Kind::A, 5, 0, {3, 3}), mk(Kind::A, 5, 0, {3, 3})},
                   ExceptionalCase::A_halfhalf});

  // Cases 2-4 in BDI(n,n), n = 3, 4.
  for (int n : {3, 4}) {
    const CartanClass cc = CartanClass::BDI(n, n);
    std::vector<TypedElement> sun{mk(Kind::D, n, 0, {n}), mk(Kind::D, n, 0, {n}, true)};
    std::vector<TypedElement> sun1{mk(Kind::D, n, 0, {n - 1, 1}),
                                   mk(Kind::D, n, 0, {n - 1, 1}, true),
                                   mk(Kind::D, n, 1, {n - 1})};
    for (const TypedElement& a : sun) {
      for (const TypedElement& b : sun)
        cases.push_back({cc, {a, b}, ExceptionalCase::D_SUn_pair});
      for (const TypedElement& b : sun1)
        cases.push_back({cc, {a, b}, ExceptionalCase::D_SUn_pair});
    }
    // Case 4: in D_3 every all-SU(3) triple; in D_4 the same-class ones.
    if (n == 3) {
      for (const TypedElement& a : sun)
        for (const TypedElement& b : sun)
          for (const TypedElement& c : sun)
            cases.push_back({cc, {a, b, c}, ExceptionalCase::D_SUn_triple});
    } else {
      for (const TypedElement& a : sun)
        cases.push_back({cc, {a, a, a}, ExceptionalCase::D_SUn_triple});
    }
  }
  // Case 3 in D_4.
  {
    const CartanClass cc = CartanClass::BDI(4, 4);
    cases.push_back({cc,
                     {mk(Kind::D, 4, 0, {4}), mk(Kind::D, 4, 0, {2, 2})},
                     ExceptionalCase::D4_special});
    cases.push_back({cc,
                     {mk(Kind::D, 4, 0, {4}, true), mk(Kind::D, 4, 0, {2, 2}, true)},
                     ExceptionalCase::D4_special});
    cases.push_back({cc,
                     {mk(Kind::D, 4, 0, {4}), mk(Kind::D, 4, 2, {2})},
                     ExceptionalCase::D4_special});
    cases.push_back({cc,
                     {mk(Kind::D, 4, 0, {4}, true), mk(Kind::D, 4, 2, {2})},
                     ExceptionalCase::D4_special});
  }

  std::map<std::string, Realization> models;
  for (const Case& c : cases) {
    if (!models.count(c.cc.label())) models.emplace(c.cc.label(), build_realization(c.cc));
    const Realization& R = models.at(c.cc.label());
    TupleQuery q(c.cc, c.tuple);
    const DecisionReport rep = decide(q);
    std::string key = c.cc.label() + " (";
    for (const TypedElement& z : c.tuple) key += z.describe() + "; ";
    key += ")";
    if (rep.verdict != Verdict::singular || rep.exceptional != c.expect) {
      o.fail(key + ": expected singular " + to_string(c.expect) + ", got " +
             to_string(rep.verdict) + "/" + to_string(rep.exceptional));
      continue;
    }
    const OracleDecision od = oracle_decide(q, R, kTrials, kSeed);
    o.require(od.verdict == OracleVerdict::singular_likely,
              key + ": oracle unexpectedly reached full rank");
  }

  // Dimension deficit certificates for the (SU(n), SU(n-1)) family.
  for (int n : {3, 4}) {
    const CartanClass cc = CartanClass::BDI(n, n);
    const long long nx = mk(Kind::D, n, 0, {n}).dim_orbit(cc);
    const long long ny = mk(Kind::D, n, 0, {n - 1, 1}).dim_orbit(cc);
    const long long dp = cc.dim_p();
    o.note("deficit certificate " + cc.label() + ": dim N_X + dim N_Y = " +
           std::to_string(nx) + " + " + std::to_string(ny) + " = " + std::to_string(nx + ny) +
           " < dim p = " + std::to_string(dp));
    o.require(nx + ny < dp, cc.label() + ": deficit certificate fails");
  }
  o.note(std::to_string(cases.size()) + " exceptional tuples verified");
  return o;
}

// --------------------------------------------------------------------------
// 6. Wright soundness sweep and the C_4 chart
// --------------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  std::vector<CartanClass> classes;
  for (int n = 2; n <= 5; ++n) classes.push_back(CartanClass::AI(n));
  for (int n = 2; n <= 5; ++n) classes.push_back(CartanClass::AII(n));
  for (int n = 1; n <= 4; ++n) classes.push_back(CartanClass::CI(n));
  for (int p = 1; p <= 4; ++p) {
    classes.push_back(CartanClass::AIII(p, p + 1));
    classes.push_back(CartanClass::AIII(p, p + 2));
    classes.push_back(CartanClass::CII(p, p + 1));
    classes.push_back(CartanClass::CII(p, p + 2));
    classes.push_back(CartanClass::BDI(p, p + 1));
    classes.push_back(CartanClass::BDI(p, p + 2));
  }
  for (int p : {3, 4}) classes.push_back(CartanClass::AIII(p, p));
  for (int p : {2, 3, 4}) classes.push_back(CartanClass::CII(p, p));
  for (int p : {2, 3, 4}) classes.push_back(CartanClass::BDI(p, p));
  for (int n : {3, 5, 7, 9, 6, 8}) classes.push_back(CartanClass::DIII(n));

  long long held = 0, queries = 0;
  for (const CartanClass& cc : classes) {
    const RestrictedClass rc = cc.restricted();
    const auto types = enumerate_types(rc);
    const auto psis = enumerate_corank_one(cc);
    const long long dim_phi = subsystem_dim(positive_roots(rc), cc);
    std::vector<long long> psi_dim;
    for (const auto& p : psis) psi_dim.push_back(subsystem_dim(p.positive, cc));
    std::vector<long long> ann_dim(types.size());
    std::vector<std::vector<long long>> min_table(types.size(),
                                                  std::vector<long long>(psis.size()));
    for (size_t t = 0; t < types.size(); ++t) {
      const auto ann = types[t].annihilator();
      ann_dim[t] = subsystem_dim(ann.positive, cc);
      for (size_t p = 0; p < psis.size(); ++p)
        min_table[t][p] = min_conjugate_intersection_dim(ann, psis[p], cc);
    }
    for (int L : {2, 3}) {
      for_each_multiset(int(types.size()), L, [&](const std::vector<int>& pick) {
        ++queries;
        bool overall = true;
        for (size_t p = 0; p < psis.size() && overall; ++p) {
          long long rhs = 0;
          for (int t : pick) rhs += ann_dim[size_t(t)] - min_table[size_t(t)][p];
          overall = (long long)(L - 1) * (dim_phi - psi_dim[p]) - 1 >= rhs;
        }
        if (!overall) return;
        ++held;
        std::vector<TypedElement> tuple;
        for (int i : pick) tuple.push_back(types[size_t(i)]);
        if (decide(TupleQuery(cc, tuple)).verdict != Verdict::absolutely_continuous) {
          std::string key;
          for (const TypedElement& z : tuple) key += z.describe() + " | ";
          o.fail(cc.label() + " (" + key + "): criterion holds but tuple is singular");
        }
      });
    }
  }
  o.note("soundness: " + std::to_string(held) + " of " + std::to_string(queries) +
         " tuples certified, zero contradictions");

  // The C_4 chart: published entries of the two minimized-intersection rows.
  struct Entry {
    const char* row;
    const char* col;
    long long published(long long mS, long long mL) const {
      const std::string r = row, c = col;
      if (r == "SU(4)") {
        if (c == "C_3") return 3 * mS;
        if (c == "C_2 × SU(2)") return mS;
        if (c == "C_1 × SU(3)") return mS;
        return 2 * mS;
      }
      if (c == "C_3") return mL + mS;
      if (c == "C_2 × SU(2)") return mS;
      if (c == "C_1 × SU(3)") return 0;
      return mS;
    }
  };
  const char* cols[4] = {"C_3", "C_2 × SU(2)", "C_1 × SU(3)", "SU(4)"};
  bool chart_ok = true;
  for (const CartanClass& cc : {CartanClass::CI(4), CartanClass::AIII(4, 4),
                                CartanClass::CII(4, 4)}) {
    const long long mS = cc.multiplicity(Root::Shape::diff);
    const long long mL = cc.multiplicity(Root::Shape::twice);
    const auto psis = enumerate_corank_one(cc);
    auto find = [&](const std::string& name) -> const CorankOneSubsystem& {
      for (const auto& p : psis)
        if (p.type_label == name) return p;
      throw defect_error("missing subsystem " + name);
    };
    for (const char* row : {"SU(4)", "C_2 × SU(2)"}) {
      for (const char* col : cols) {
        const long long got =
            min_conjugate_intersection_dim(find(row).positive, find(col).positive, cc);
        const long long want = Entry{row, col}.published(mS, mL);
        if (got != want) {
          chart_ok = false;
          o.note(cc.label() + " (m_S=" + std::to_string(mS) + ", m_L=" + std::to_string(mL) +
                 "): min dim(" + col + " meet " + row + ") = " + std::to_string(got) +
                 ", published " + std::to_string(want));
        }
      }
    }
  }
  if (!chart_ok)
    o.fail("two published C_4 chart entries are not reproducible: the minimized "
           "intersection with C_2 x SU(2) is min(m_L, 2m_S) against itself and "
           "min(m_S, m_L) against C_1 x SU(3) (a signed A_2 always meets C_2 in its "
           "cross pair, and a long root meets C_2 when it lands on its letters); the "
           "criterion outcomes are unaffected since the true minima are larger");
  return o;
}

// --------------------------------------------------------------------------
// 7. D_4 intersection facts
// --------------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  const CartanClass cc = CartanClass::DI(4);
  const RestrictedClass rc = cc.restricted();
  RootSystem rs(rc);
  const auto su4p = mk(Kind::D, 4, 0, {4}).annihilator().positive;
  const auto su4m = mk(Kind::D, 4, 0, {4}, true).annihilator().positive;
  const auto d2su2 = mk(Kind::D, 4, 2, {2}).annihilator().positive;
  const auto d3 = mk(Kind::D, 4, 3, {1}).annihilator().positive;

  auto min_positive = [&](const std::vector<Root>& a, const std::vector<Root>& b) {
    const uint64_t am = rs.mask(a), bm = rs.mask(b);
    int best = 1 << 20;
    for_each_weyl(rc, [&](const WeylElement& w) {
      best = std::min(best, std::popcount(am & rs.apply(w, bm)));
    });
    return best;
  };

  const int same = 2 * min_positive(su4p, su4p);      // both signs of each root
  const int opposite = 2 * min_positive(su4p, su4m);
  const int vs_d2su2 = 2 * min_positive(su4p, d2su2);
  const int vs_d3 = 2 * min_positive(su4p, d3);
  o.note("minimum full intersection cardinalities: same-class SU(4) " +
         std::to_string(same) + ", opposite " + std::to_string(opposite) +
         ", vs D_2 x SU(2) " + std::to_string(vs_d2su2) + ", vs D_3 " + std::to_string(vs_d3));
  o.note("positive-part minima: " + std::to_string(same / 2) + ", " +
         std::to_string(opposite / 2) + ", " + std::to_string(vs_d2su2 / 2) + ", " +
         std::to_string(vs_d3 / 2));
  o.require(same >= 4, "same-class SU(4) intersection below 4");
  o.require(opposite >= 6, "opposite-class SU(4) intersection below 6");
  o.require(vs_d2su2 / 2 >= 1, "SU(4) with D_2 x SU(2) intersection below 1");
  o.require(vs_d3 / 2 >= 3, "SU(4) with D_3 intersection below 3");
  o.require(same == 4 && opposite == 6, "exact minima changed");
  return o;
}

// --------------------------------------------------------------------------
// 8. Determinism
// --------------------------------------------------------------------------

Outcome criterion8(const std::string& first_run) {
  Outcome o;
  Outcome scratch;
  const std::string second_run = run_cross_validation(scratch);
  o.require(!first_run.empty(), "no serialized cross-validation output");
  o.require(first_run == second_run, "repeated runs differ byte-for-byte");
  o.note("serialized cross-validation output: " + std::to_string(first_run.size()) +
         " bytes, identical across runs");
  return o;
}

}  // namespace

int main() {
  struct Row {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> fn;
  };

  std::string criterion3_json;
  std::vector<Row> rows{
      {1, "structure audit (theta, brackets, abelian torus, dim p identities)", 30,
       criterion1},
      {2, "numerical orbit dimensions equal combinatorial ones", 60, criterion2},
      {3, "exhaustive decide vs oracle cross-validation", 600,
       [&] { return criterion3(criterion3_json); }},
      {4, "survey tables reproduce the sharpness corollary", 0, criterion4},
      {5, "exceptional tuples are singular and never reach full rank", 0, criterion5},
      {6, "sufficient-condition soundness sweep and C_4 chart", 0, criterion6},
      {7, "D_4 minimal intersection facts", 0, criterion7},
      {8, "byte-identical repetition of the cross-validation run", 0,
       [&] { return criterion8(criterion3_json); }},
  };

  int failures = 0;
  for (Row& row : rows) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = row.fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (row.limit_seconds > 0 && o.seconds > row.limit_seconds)
      o.fail("runtime " + std::to_string(o.seconds) + "s exceeds " +
             std::to_string(row.limit_seconds) + "s");
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << row.id << ": " << row.name
              << " (" << std::fixed << std::setprecision(1) << o.seconds << "s)\n";
    for (const std::string& note : o.notes) std::cout << "       - " << note << "\n";
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criterion(s) failed\n");
  return failures;
}

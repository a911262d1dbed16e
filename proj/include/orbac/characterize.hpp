#pragma once

// The main characterization: an L-tuple of nonzero elements is absolutely
// continuous exactly when it is eligible (the S-statistic inequality) and not
// one of the four exceptional configurations in types A_{2m-1}, D_3 and D_4.
// Also provides the survey tables that enumerate verdicts over all element
// types of a symmetric space.

#include "orbac/elements.hpp"

namespace orbac {

enum class ExceptionalCase { none, A_halfhalf, D_SUn_pair, D4_special, D_SUn_triple };

inline std::string to_string(ExceptionalCase c) {
  switch (c) {
    case ExceptionalCase::none: return "none";
    case ExceptionalCase::A_halfhalf: return "case1";
    case ExceptionalCase::D_SUn_pair: return "case2";
    case ExceptionalCase::D4_special: return "case3";
    case ExceptionalCase::D_SUn_triple: return "case4";
  }
  return "?";
}

enum class Verdict { absolutely_continuous, singular };

inline std::string to_string(Verdict v) {
  return v == Verdict::absolutely_continuous ? "ac" : "singular";
}

/// A decision request: L >= 2 nonzero elements sharing one restricted class,
/// in a given Cartan class.
struct TupleQuery {
  CartanClass cartan;
  std::vector<TypedElement> elements;

  TupleQuery(const CartanClass& cc, std::vector<TypedElement> zs)
      : cartan(cc), elements(std::move(zs)) {
    if (elements.size() < 2) throw parameter_error("a tuple needs L >= 2 elements");
    for (const TypedElement& z : elements)
      if (!(z.context() == cartan.restricted()))
        throw parameter_error("element context " + z.context().label() +
                              " does not match " + cartan.label());
  }

  int L() const { return int(elements.size()); }
  const RestrictedClass& restricted() const { return elements.front().context(); }
};

struct DecisionReport {
  std::vector<int> S_values;
  int threshold = 0;
  int margin = 0;  // threshold - sum S; eligibility is margin >= 0
  bool eligible = false;
  ExceptionalCase exceptional = ExceptionalCase::none;
  Verdict verdict = Verdict::singular;
  std::string explanation;
};

/// Eligibility inequality: sum S_{X_i} <= (L-1)(n+1) in kind A_n, and
/// <= (L-1)2n otherwise. Returns the verdict together with the slack.
inline std::pair<bool, int> eligible(const TupleQuery& q) {
  const RestrictedClass& rc = q.restricted();
  const int per = rc.kind == Kind::A ? rc.ambient() : 2 * rc.rank;
  const int threshold = (q.L() - 1) * per;
  int total = 0;
  for (const TypedElement& z : q.elements) total += z.s_value().S;
  return {total <= threshold, threshold - total};
}

/// Whether some Weyl image of `inner` lands inside `outer`, both taken as
/// full (+-) root sets.
inline bool conjugate_subset(const AnnihilatorSystem& inner, const AnnihilatorSystem& outer,
                             const RestrictedClass& rc, std::optional<int> cap = {}) {
  RootSystem rs(rc);
  const uint64_t in = rs.mask(inner.positive), out = rs.mask(outer.positive);
  bool found = false;
  for_each_weyl(rc, [&](const WeylElement& w) {
    if (!found && (rs.apply(w, in) & ~out) == 0) found = true;
  }, cap);
  return found;
}

namespace detail {

/// Whether Phi_Z is a single SU(k) factor and nothing else (k >= 2).
inline bool is_type_SU(const TypedElement& z, int k) {
  if (k < 2) return false;
  const Kind kind = z.context().kind;
  if (kind != Kind::A) {
    const int empty_zero_block = kind == Kind::D ? 1 : 0;
    if (z.J() > empty_zero_block) return false;
  }
  int big = 0;
  for (int s : z.sizes()) {
    if (s >= 2) {
      if (s != k) return false;
      ++big;
    }
  }
  return big == 1;
}

inline bool pairwise_conjugate_annihilators(const std::vector<TypedElement>& zs,
                                            const RestrictedClass& rc) {
  RootSystem rs(rc);
  const uint64_t first = rs.mask(zs.front().annihilator().positive);
  for (size_t i = 1; i < zs.size(); ++i)
    if (!weyl_conjugate(rs, first, rs.mask(zs[i].annihilator().positive))) return false;
  return true;
}

}  // namespace detail

/// Detects the four exceptional configurations (first match in case order):
///  1. A_{2m-1}, L=2, both of type SU(m) x SU(m), m >= 2;
///  2. D_n (n>=3), L=2, type SU(n) against type SU(n) or SU(n-1);
///  3. D_4, L=2, type SU(4) against SU(2) x SU(2) whose annihilator is Weyl
///     conjugate into the SU(4) annihilator, or against D_2 x SU(2);
///  4. D_3/D_4, L=3, all of type SU(n), with pairwise Weyl conjugate
///     annihilators required when n = 4.
inline ExceptionalCase exceptional(const TupleQuery& q) {
  const RestrictedClass& rc = q.restricted();
  const int n = rc.rank;
  const auto& zs = q.elements;

  if (rc.kind == Kind::A && q.L() == 2 && rc.ambient() % 2 == 0) {
    const int m = rc.ambient() / 2;
    auto half_half = [m](const TypedElement& z) {
      return z.sizes() == std::vector<int>{m, m};
    };
    if (m >= 2 && half_half(zs[0]) && half_half(zs[1]))
      return ExceptionalCase::A_halfhalf;
  }

  if (rc.kind != Kind::D) return ExceptionalCase::none;

  if (q.L() == 2 && n >= 3) {
    for (int a = 0; a < 2; ++a) {
      const TypedElement &x = zs[size_t(a)], &y = zs[size_t(1 - a)];
      if (!detail::is_type_SU(x, n)) continue;
      if (detail::is_type_SU(y, n) || detail::is_type_SU(y, n - 1))
        return ExceptionalCase::D_SUn_pair;
    }
  }

  if (q.L() == 2 && n == 4) {
    for (int a = 0; a < 2; ++a) {
      const TypedElement &x = zs[size_t(a)], &y = zs[size_t(1 - a)];
      if (!detail::is_type_SU(x, 4)) continue;
      const bool su2su2 = y.J() == 0 && y.sizes() == std::vector<int>{2, 2};
      const bool su2d2 = y.J() == 2 && y.sizes() == std::vector<int>{2};
      if (su2d2) return ExceptionalCase::D4_special;
      if (su2su2 && conjugate_subset(y.annihilator(), x.annihilator(), rc))
        return ExceptionalCase::D4_special;
    }
  }

  if (q.L() == 3 && (n == 3 || n == 4)) {
    bool all_sun = true;
    for (const TypedElement& z : zs) all_sun = all_sun && detail::is_type_SU(z, n);
    if (all_sun && (n == 3 || detail::pairwise_conjugate_annihilators(zs, rc)))
      return ExceptionalCase::D_SUn_triple;
  }

  return ExceptionalCase::none;
}

/// The main theorem: absolutely continuous iff eligible and not exceptional.
inline DecisionReport decide(const TupleQuery& q) {
  DecisionReport rep;
  for (const TypedElement& z : q.elements) rep.S_values.push_back(z.s_value().S);
  auto [ok, margin] = eligible(q);
  const RestrictedClass& rc = q.restricted();
  rep.threshold = (q.L() - 1) * (rc.kind == Kind::A ? rc.ambient() : 2 * rc.rank);
  rep.margin = margin;
  rep.eligible = ok;
  rep.exceptional = exceptional(q);
  rep.verdict = (rep.eligible && rep.exceptional == ExceptionalCase::none)
                    ? Verdict::absolutely_continuous
                    : Verdict::singular;
  std::string types;
  for (const TypedElement& z : q.elements) {
    if (!types.empty()) types += ", ";
    types += z.type_label_or_regular();
  }
  rep.explanation = "(" + types + "): sum S = " + std::to_string(rep.threshold - margin) +
                    ", threshold = " + std::to_string(rep.threshold);
  if (!rep.eligible) rep.explanation += "; not eligible";
  else if (rep.exceptional != ExceptionalCase::none)
    rep.explanation += "; exceptional " + to_string(rep.exceptional);
  return rep;
}

// ---------------------------------------------------------------------------
// Survey
// ---------------------------------------------------------------------------

struct SurveyRow {
  std::vector<TypedElement> tuple;  // non-decreasing in the type order
  DecisionReport report;
};

struct SurveyTable {
  CartanClass cartan;
  int L = 0;
  std::vector<SurveyRow> rows;
  long long singular_count = 0;
};

/// Verdicts over all unordered L-tuples of element types. Verdicts depend
/// only on the class data (J, [s_i], sign class), so enumerating types covers
/// all tuples up to Weyl conjugacy.
inline SurveyTable survey(const CartanClass& cc, int L) {
  if (L < 2 || L > 8) throw capacity_error("survey supports 2 <= L <= 8");
  const RestrictedClass rc = cc.restricted();
  if (rc.rank > weyl_cap()) throw capacity_error("survey capped at rank " +
                                                 std::to_string(weyl_cap()));
  SurveyTable table{cc, L, {}, 0};
  const std::vector<TypedElement> types = enumerate_types(rc);
  std::vector<int> pick(size_t(L), 0);
  const int T = int(types.size());
  while (true) {
    std::vector<TypedElement> tuple;
    tuple.reserve(size_t(L));
    for (int i : pick) tuple.push_back(types[size_t(i)]);
    SurveyRow row{tuple, decide(TupleQuery(cc, tuple))};
    if (row.report.verdict == Verdict::singular) ++table.singular_count;
    table.rows.push_back(std::move(row));
    int i = L - 1;
    while (i >= 0 && pick[size_t(i)] == T - 1) --i;
    if (i < 0) break;
    const int next = pick[size_t(i)] + 1;
    for (int j = i; j < L; ++j) pick[size_t(j)] = next;
  }
  return table;
}

}  // namespace orbac

#pragma once

// The Wright-style sufficient condition: over every full co-rank-one root
// subsystem Psi (sp(Psi) cap Phi = Psi), check
//
//   (m-1)(dim Phi - dim Psi) - 1 >=
//        sum_i ( dim Phi_{Z_i} - min_{w in W} dim(Phi_{Z_i} cap w(Psi)) )
//
// with dim the multiplicity-weighted count of positive roots. When every row
// holds the tuple is absolutely continuous; failure proves nothing.

#include "orbac/characterize.hpp"

namespace orbac {

/// One full co-rank-one subsystem, carried as the annihilator of a maximally
/// singular element type.
struct CorankOneSubsystem {
  std::vector<Root> positive;
  std::string type_label;
  TypedElement representative;
};

/// Representatives of the Weyl classes of full co-rank-one subsystems,
/// generated from the element-type taxonomy (annihilators of rank n-1) and
/// deduplicated by exhaustive conjugacy. Each emitted subsystem is verified
/// full: sp(Psi) cap Phi = Psi.
inline std::vector<CorankOneSubsystem> enumerate_corank_one(const CartanClass& cc) {
  const RestrictedClass rc = cc.restricted();
  RootSystem rs(rc);
  std::vector<CorankOneSubsystem> out;
  std::vector<uint64_t> masks;
  for (const TypedElement& z : enumerate_types(rc)) {
    AnnihilatorSystem ann = z.annihilator();
    if (ann.rank() != rc.rank - 1) continue;
    const uint64_t m = rs.mask(ann.positive);
    bool dup = false;
    for (uint64_t seen : masks)
      if (seen == m || weyl_conjugate(rs, seen, m)) {
        dup = true;
        break;
      }
    if (dup) continue;
    std::vector<Root> closure = rs.span_closure(ann.positive);
    if (closure != ann.positive)
      throw defect_error("annihilator of " + z.describe() + " is not full in " + rc.label());
    masks.push_back(m);
    std::string label = ann.type_label;
    if (z.su_class_parity() == Parity::minus) label += "-";
    else if (z.su_class_parity() == Parity::plus) label += "+";
    out.push_back(CorankOneSubsystem{ann.positive, label, z});
  }
  // A lone parity suffix means the other sign class merged with this one.
  for (auto& psi : out) {
    if (psi.type_label.empty() || psi.type_label.back() != '+') continue;
    std::string minus = psi.type_label.substr(0, psi.type_label.size() - 1) + "-";
    bool has_minus = std::any_of(out.begin(), out.end(), [&](const CorankOneSubsystem& o) {
      return o.type_label == minus;
    });
    if (!has_minus) psi.type_label.pop_back();
  }
  return out;
}

/// min over the Weyl group of the weighted dimension of Phi_Z cap w(Psi),
/// both treated as full (+-) root sets.
inline long long min_conjugate_intersection_dim(const std::vector<Root>& phi_z,
                                                const std::vector<Root>& psi,
                                                const CartanClass& cc) {
  const RestrictedClass rc = cc.restricted();
  RootSystem rs(rc);
  const uint64_t zmask = rs.mask(phi_z), pmask = rs.mask(psi);
  std::vector<int> mult(size_t(rs.size()));
  for (int i = 0; i < rs.size(); ++i)
    mult[size_t(i)] = cc.multiplicity(rs.positive()[size_t(i)]);
  long long best = -1;
  for_each_weyl(rc, [&](const WeylElement& w) {
    uint64_t inter = zmask & rs.apply(w, pmask);
    long long d = 0;
    while (inter) {
      const int i = std::countr_zero(inter);
      d += mult[size_t(i)];
      inter &= inter - 1;
    }
    if (best < 0 || d < best) best = d;
  });
  return best;
}

inline long long min_conjugate_intersection_dim(const AnnihilatorSystem& phi_z,
                                                const CorankOneSubsystem& psi,
                                                const CartanClass& cc) {
  return min_conjugate_intersection_dim(phi_z.positive, psi.positive, cc);
}

struct WrightRow {
  std::string psi_label;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

struct WrightReport {
  std::vector<WrightRow> rows;
  bool overall = false;
};

/// Evaluates the criterion for every co-rank-one class; overall true certifies
/// absolute continuity (sufficient only, never necessary).
inline WrightReport wright_holds(const TupleQuery& q) {
  const CartanClass& cc = q.cartan;
  const RestrictedClass rc = cc.restricted();
  if (rc.rank > weyl_cap())
    throw capacity_error("Wright check capped at rank " + std::to_string(weyl_cap()));
  const long long dim_phi = subsystem_dim(positive_roots(rc), cc);

  std::vector<AnnihilatorSystem> anns;
  std::vector<long long> ann_dims;
  for (const TypedElement& z : q.elements) {
    anns.push_back(z.annihilator());
    ann_dims.push_back(subsystem_dim(anns.back().positive, cc));
  }

  WrightReport rep;
  rep.overall = true;
  for (const CorankOneSubsystem& psi : enumerate_corank_one(cc)) {
    WrightRow row;
    row.psi_label = psi.type_label;
    row.lhs = (long long)(q.L() - 1) * (dim_phi - subsystem_dim(psi.positive, cc)) - 1;
    for (size_t i = 0; i < anns.size(); ++i)
      row.rhs += ann_dims[i] - min_conjugate_intersection_dim(anns[i], psi, cc);
    row.holds = row.lhs >= row.rhs;
    rep.overall = rep.overall && row.holds;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace orbac

#pragma once

// Numerical ground truth. Concrete matrix models of the Cartan classes AI
// (sl(n,R)/so(n)), CI (sp(n,R)/u(n)) and BDI (so(p,q)/so(p)+so(q)), built by
// splitting an explicit basis of g into the +-1 eigenspaces of the Cartan
// involution. On top of the models: tangent spaces N_Z = [Z, k], seeded random
// rotations in K, and the generic span-rank certificate
//     sp{ Ad(k_j) N_{Z_j} } = p
// which certifies absolute continuity when it reaches full rank.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "orbac/characterize.hpp"

namespace orbac {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic uniform draw on [-1,1], independent of libstdc++ internals.
inline double uniform_pm1(uint64_t& state) {
  state = splitmix64(state);
  return 2.0 * (double(state >> 11) * 0x1.0p-53) - 1.0;
}

inline Vector vectorize(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline double fro_inner(const Matrix& a, const Matrix& b) {
  return (a.array() * b.array()).sum();
}

inline Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Modified Gram-Schmidt over matrices; drops dependent candidates.
inline std::vector<Matrix> orthonormal_span(const std::vector<Matrix>& cand,
                                            double drop_tol = 1e-10) {
  std::vector<Matrix> basis;
  for (Matrix m : cand) {
    const double scale = std::max(1.0, m.norm());
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& b : basis) m -= fro_inner(b, m) * b;
    if (m.norm() > drop_tol * scale) basis.push_back(m / m.norm());
  }
  return basis;
}

/// Residual of m against the span of an orthonormal basis, relative to |m|.
inline double span_residual(const std::vector<Matrix>& basis, const Matrix& m) {
  Matrix r = m;
  for (const Matrix& b : basis) r -= fro_inner(b, r) * b;
  const double scale = m.norm();
  return scale > 0 ? r.norm() / scale : r.norm();
}

inline int svd_rank(const Matrix& rows, double rel_tol, std::vector<double>* sv = nullptr) {
  if (rows.rows() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(rows);
  const auto& s = svd.singularValues();
  if (sv) sv->assign(s.data(), s.data() + s.size());
  if (s.size() == 0 || s(0) <= 0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

}  // namespace detail

/// A concrete symmetric-space model: matrix bases of g, k, p and a, plus the
/// Cartan involution. Immutable after construction.
class Realization {
 public:
  CartanClass cartan;
  int matrix_size = 0;
  std::vector<Matrix> basis_g;
  std::vector<Matrix> basis_k;  // +1 eigenspace of theta (orthonormal)
  std::vector<Matrix> basis_p;  // -1 eigenspace of theta (orthonormal)
  std::vector<Matrix> basis_a;  // maximal abelian subspace of p

  explicit Realization(const CartanClass& cc) : cartan(cc) {}

  Matrix theta(const Matrix& x) const {
    if (cartan.family() == Family::BDI) return ipq_ * x * ipq_;
    return -x.transpose();
  }

  Vector p_coords(const Matrix& m) const {
    Vector v(long(basis_p.size()));
    for (size_t i = 0; i < basis_p.size(); ++i) v(long(i)) = detail::fro_inner(basis_p[i], m);
    return v;
  }

  /// Coordinate vector of an element of a under the model's torus
  /// identification (diagonal entries / H-block diagonal).
  std::vector<double> a_coordinates(const Matrix& m) const {
    std::vector<double> out(size_t(cartan.restricted().ambient()));
    switch (cartan.family()) {
      case Family::AI:
      case Family::CI:
        for (size_t i = 0; i < out.size(); ++i) out[i] = m(long(i), long(i));
        break;
      case Family::BDI:
        for (size_t i = 0; i < out.size(); ++i) out[i] = m(long(i), cartan.p() + long(i));
        break;
      default:
        throw domain_error("no realization for " + cartan.label());
    }
    return out;
  }

  void set_ipq(int p, int q) {
    ipq_ = Matrix::Identity(p + q, p + q);
    for (int i = p; i < p + q; ++i) ipq_(i, i) = -1.0;
  }

 private:
  Matrix ipq_;
};

/// Builds the model for AI(n) (2<=n<=6), CI(n) (1<=n<=5) or BDI(p,q)
/// (1<=p<=q, p+q<=10), then audits it; a failed audit is a construction
/// defect, not a user error.
inline Realization build_realization(const CartanClass& cc);

struct AuditReport {
  bool pass = true;
  double theta_involution = 0;
  double theta_eigensign = 0;
  double bracket_residual = 0;  // worst of [k,k]->k, [k,p]->p, [p,p]->k
  double abelian_residual = 0;
  double a_in_p_residual = 0;
  long long dim_p_expected = 0;
  int dim_p_actual = 0;
  int dim_k_actual = 0;
  std::string detail;
};

inline AuditReport structure_audit(const Realization& R, double tol = 1e-9) {
  AuditReport rep;
  auto track = [&](double& slot, double v) { slot = std::max(slot, v); };
  for (const Matrix& x : R.basis_g)
    track(rep.theta_involution, (R.theta(R.theta(x)) - x).norm() / std::max(1.0, x.norm()));
  for (const Matrix& k : R.basis_k)
    track(rep.theta_eigensign, (R.theta(k) - k).norm());
  for (const Matrix& p : R.basis_p)
    track(rep.theta_eigensign, (R.theta(p) + p).norm());

  auto contained = [&](const std::vector<Matrix>& xs, const std::vector<Matrix>& ys,
                       const std::vector<Matrix>& target) {
    for (const Matrix& x : xs)
      for (const Matrix& y : ys) {
        const Matrix b = detail::bracket(x, y);
        if (b.norm() < 1e-14) continue;
        track(rep.bracket_residual, detail::span_residual(target, b));
      }
  };
  contained(R.basis_k, R.basis_k, R.basis_k);
  contained(R.basis_k, R.basis_p, R.basis_p);
  contained(R.basis_p, R.basis_p, R.basis_k);

  for (size_t i = 0; i < R.basis_a.size(); ++i)
    for (size_t j = i + 1; j < R.basis_a.size(); ++j)
      track(rep.abelian_residual, detail::bracket(R.basis_a[i], R.basis_a[j]).norm());
  for (const Matrix& a : R.basis_a)
    track(rep.a_in_p_residual, detail::span_residual(R.basis_p, a));

  rep.dim_p_expected = R.cartan.dim_p();
  rep.dim_p_actual = int(R.basis_p.size());
  rep.dim_k_actual = int(R.basis_k.size());
  const bool dims_ok = rep.dim_p_actual == rep.dim_p_expected &&
                       rep.dim_k_actual + rep.dim_p_actual == int(R.basis_g.size()) &&
                       int(R.basis_a.size()) == R.cartan.restricted().rank;
  rep.pass = dims_ok && rep.theta_involution < tol && rep.theta_eigensign < tol &&
             rep.bracket_residual < tol && rep.abelian_residual < tol &&
             rep.a_in_p_residual < tol;
  if (!dims_ok)
    rep.detail = "dimension mismatch: dim p = " + std::to_string(rep.dim_p_actual) +
                 ", expected " + std::to_string(rep.dim_p_expected);
  return rep;
}

inline Realization build_realization(const CartanClass& cc) {
  Realization R(cc);
  const Family fam = cc.family();
  auto E = [&](int n, int i, int j) {
    Matrix m = Matrix::Zero(n, n);
    m(i, j) = 1.0;
    return m;
  };

  if (fam == Family::AI) {
    const int n = cc.p();
    if (n < 2 || n > 6) throw capacity_error("AI realization supports 2 <= n <= 6");
    R.matrix_size = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) R.basis_g.push_back(E(n, i, j));
    for (int i = 0; i + 1 < n; ++i) R.basis_g.push_back(E(n, i, i) - E(n, i + 1, i + 1));
    for (int i = 0; i + 1 < n; ++i) R.basis_a.push_back(E(n, i, i) - E(n, i + 1, i + 1));
  } else if (fam == Family::CI) {
    const int n = cc.p();
    if (n < 1 || n > 5) throw capacity_error("CI realization supports 1 <= n <= 5");
    const int N = 2 * n;
    R.matrix_size = N;
    // sp(n,R): [[A, B], [C, -A^T]] with B, C symmetric.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        R.basis_g.push_back(E(N, i, j) - E(N, n + j, n + i));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        R.basis_g.push_back(E(N, i, n + j) + (i == j ? Matrix::Zero(N, N) : E(N, j, n + i)));
        R.basis_g.push_back(E(N, n + i, j) + (i == j ? Matrix::Zero(N, N) : E(N, n + j, i)));
      }
    for (int i = 0; i < n; ++i) R.basis_a.push_back(E(N, i, i) - E(N, n + i, n + i));
  } else if (fam == Family::BDI) {
    const int p = cc.p(), q = cc.q(), N = cc.p() + cc.q();
    if (p < 1 || p > q || N > 10) throw capacity_error("BDI realization supports p+q <= 10");
    R.matrix_size = N;
    R.set_ipq(p, q);
    // so(p,q): [[A, B], [B^T, D]] with A, D skew and B arbitrary.
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) R.basis_g.push_back(E(N, i, j) - E(N, j, i));
    for (int i = p; i < N; ++i)
      for (int j = i + 1; j < N; ++j) R.basis_g.push_back(E(N, i, j) - E(N, j, i));
    for (int i = 0; i < p; ++i)
      for (int j = p; j < N; ++j) R.basis_g.push_back(E(N, i, j) + E(N, j, i));
    for (int i = 0; i < p; ++i) R.basis_a.push_back(E(N, i, p + i) + E(N, p + i, i));
  } else {
    throw capacity_error("no matrix realization for " + cc.label() +
                         "; its verdicts reduce to the realized classes");
  }

  // k and p as the +-1 eigenspaces of theta within g.
  std::vector<Matrix> plus, minus;
  for (const Matrix& x : R.basis_g) {
    plus.push_back(0.5 * (x + R.theta(x)));
    minus.push_back(0.5 * (x - R.theta(x)));
  }
  R.basis_k = detail::orthonormal_span(plus);
  R.basis_p = detail::orthonormal_span(minus);

  AuditReport audit = structure_audit(R);
  if (!audit.pass)
    throw defect_error("realization audit failed for " + cc.label() + ": " + audit.detail);
  return R;
}

/// The torus element of the model whose identifying coordinate vector is v.
inline Matrix embed_vector(const std::vector<double>& v, const Realization& R) {
  const int N = R.matrix_size;
  Matrix m = Matrix::Zero(N, N);
  switch (R.cartan.family()) {
    case Family::AI: {
      if (int(v.size()) != N) throw domain_error("AI embed needs a full diagonal");
      double sum = 0;
      for (double x : v) sum += x;
      if (std::abs(sum) > 1e-9) throw domain_error("AI coordinates must sum to zero");
      for (int i = 0; i < N; ++i) m(i, i) = v[size_t(i)];
      break;
    }
    case Family::CI: {
      const int n = R.cartan.p();
      if (int(v.size()) != n) throw domain_error("CI embed needs n coordinates");
      for (int i = 0; i < n; ++i) {
        m(i, i) = v[size_t(i)];
        m(n + i, n + i) = -v[size_t(i)];
      }
      break;
    }
    case Family::BDI: {
      const int p = R.cartan.p();
      if (int(v.size()) != p) throw domain_error("BDI embed needs p coordinates");
      for (int i = 0; i < p; ++i) {
        m(i, p + i) = v[size_t(i)];
        m(p + i, i) = v[size_t(i)];
      }
      break;
    }
    default:
      throw domain_error("no realization for " + R.cartan.label());
  }
  return m;
}

inline Matrix embed(const TypedElement& z, const Realization& R) {
  if (!(z.context() == R.cartan.restricted()))
    throw domain_error("element context " + z.context().label() + " does not match " +
                       R.cartan.label());
  std::vector<double> v;
  for (long long x : z.vector()) v.push_back(double(x));
  return embed_vector(v, R);
}

/// Orthonormal basis of N_Z = [Z, k]. Its size must reproduce the
/// combinatorial orbit dimension; a mismatch is a cross-check defect.
inline std::vector<Matrix> tangent_basis(const TypedElement& z, const Realization& R,
                                         double rel_tol = 1e-9) {
  const Matrix zm = embed(z, R);
  std::vector<Matrix> cand;
  for (const Matrix& k : R.basis_k) cand.push_back(detail::bracket(zm, k));
  double scale = 0;
  for (const Matrix& c : cand) scale = std::max(scale, c.norm());
  std::vector<Matrix> basis =
      detail::orthonormal_span(cand, rel_tol * std::max(1.0, scale));
  const long long expected = z.dim_orbit(R.cartan);
  if ((long long)basis.size() != expected)
    throw defect_error("dim N_Z = " + std::to_string(basis.size()) + " but dim O_Z = " +
                       std::to_string(expected) + " for " + z.describe() + " in " +
                       R.cartan.label());
  return basis;
}

/// Seeded random element of K: exp of a uniform [-1,1] combination of the
/// k basis, via scaling-and-squaring.
inline Matrix random_K(const Realization& R, uint64_t seed) {
  uint64_t state = seed;
  Matrix a = Matrix::Zero(R.matrix_size, R.matrix_size);
  for (const Matrix& e : R.basis_k) a += detail::uniform_pm1(state) * e;
  return a.exp();
}

/// Numerical rank of sp{ Ad(k_j) N_{Z_j} } inside p. ks[0] must be the
/// identity; singular values can be captured for diagnostics.
inline int span_rank(const std::vector<TypedElement>& zs, const std::vector<Matrix>& ks,
                     const Realization& R, double rel_tol = 1e-8,
                     std::vector<double>* sv = nullptr) {
  if (ks.size() != zs.size()) throw parameter_error("need one k per element");
  if (zs.empty()) throw parameter_error("need at least one element");
  if (!ks.front().isIdentity(1e-12)) throw parameter_error("k_1 must be the identity");
  std::vector<Vector> rows;
  for (size_t j = 0; j < zs.size(); ++j) {
    const Matrix& k = ks[j];
    for (const Matrix& t : tangent_basis(zs[j], R))
      rows.push_back(R.p_coords(k * t * k.transpose()));
  }
  Matrix stacked(long(rows.size()), long(R.basis_p.size()));
  for (size_t i = 0; i < rows.size(); ++i) stacked.row(long(i)) = rows[i];
  return detail::svd_rank(stacked, rel_tol, sv);
}

inline int span_rank(const TupleQuery& q, const std::vector<Matrix>& ks,
                     const Realization& R, double rel_tol = 1e-8,
                     std::vector<double>* sv = nullptr) {
  return span_rank(q.elements, ks, R, rel_tol, sv);
}

/// One numerical experiment: seed, achieved rank against dim p, spectrum.
struct RankProbe {
  uint64_t seed = 0;
  int achieved_rank = 0;
  int target = 0;
  std::vector<double> singular_values;
};

enum class OracleVerdict { ac, singular_likely };

inline std::string to_string(OracleVerdict v) {
  return v == OracleVerdict::ac ? "ac" : "singular_likely";
}

struct OracleDecision {
  OracleVerdict verdict = OracleVerdict::singular_likely;
  int max_rank = 0;
  int target = 0;
  int certifying_trial = -1;  // first full-rank trial, -1 if none
  std::vector<RankProbe> probes;
};

/// Runs `trials` independent seeded experiments. Any full-rank hit certifies
/// absolute continuity (up to floating point); a miss is evidence only.
inline OracleDecision oracle_decide(const TupleQuery& q, const Realization& R, int trials,
                                    uint64_t seed, double rel_tol = 1e-8) {
  if (trials < 1) throw parameter_error("trials must be >= 1");
  OracleDecision out;
  out.target = int(R.basis_p.size());
  for (int t = 0; t < trials; ++t) {
    std::vector<Matrix> ks;
    ks.push_back(Matrix::Identity(R.matrix_size, R.matrix_size));
    for (int j = 1; j < q.L(); ++j)
      ks.push_back(random_K(R, detail::splitmix64(seed ^ (uint64_t(t) << 20) ^ uint64_t(j))));
    RankProbe probe;
    probe.seed = seed;
    probe.target = out.target;
    probe.achieved_rank = span_rank(q, ks, R, rel_tol, &probe.singular_values);
    out.max_rank = std::max(out.max_rank, probe.achieved_rank);
    out.probes.push_back(std::move(probe));
    if (out.probes.back().achieved_rank == out.target) {
      out.certifying_trial = t;
      break;
    }
  }
  out.verdict = out.certifying_trial >= 0 ? OracleVerdict::ac : OracleVerdict::singular_likely;
  return out;
}

struct EigenMultReport {
  bool pass = false;
  std::vector<std::pair<double, int>> spectrum;  // eigenvalue -> multiplicity
  int largest = 0;
  int expected_largest = 0;
  std::string detail;
};

/// Checks the eigenvalue multiplicity pattern of the embedded matrix:
/// AI: values a_i with multiplicity s_i, largest eigenspace S_X;
/// CI: +-a_i with multiplicity s_i and 0 with multiplicity 2J;
/// BDI: +-a_i with multiplicity s_i and 0 with multiplicity 2J + q - p.
inline EigenMultReport eigen_multiplicity_check(const TypedElement& z, const Realization& R) {
  EigenMultReport rep;
  const Matrix m = embed(z, R);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Vector ev = es.eigenvalues();
  const double tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());

  for (int i = 0; i < ev.size(); ++i) {
    if (!rep.spectrum.empty() && std::abs(rep.spectrum.back().first - ev(i)) < tol)
      ++rep.spectrum.back().second;
    else
      rep.spectrum.emplace_back(ev(i), 1);
  }
  for (auto& [val, mult] : rep.spectrum) rep.largest = std::max(rep.largest, mult);

  std::map<long long, int> expected;  // value (exact integer) -> multiplicity
  const std::vector<long long> v = z.vector();
  const Family fam = R.cartan.family();
  if (fam == Family::AI) {
    for (long long x : v) ++expected[x];
  } else {
    for (long long x : v) {
      if (x == 0) expected[0] += 2;
      else {
        ++expected[x];
        ++expected[-x];
      }
    }
    if (fam == Family::BDI && R.cartan.q() > R.cartan.p())
      expected[0] += R.cartan.q() - R.cartan.p();
  }
  for (auto& [val, mult] : expected)
    rep.expected_largest = std::max(rep.expected_largest, mult);

  rep.pass = int(rep.spectrum.size()) == int(expected.size());
  if (rep.pass) {
    auto it = expected.begin();
    for (auto& [val, mult] : rep.spectrum) {
      if (std::abs(val - double(it->first)) > 1e-7 || mult != it->second) rep.pass = false;
      ++it;
    }
  }
  rep.pass = rep.pass && rep.largest == rep.expected_largest;
  if (!rep.pass) rep.detail = "eigenvalue multiplicities do not match the block data";
  return rep;
}

struct RootSpaceAudit {
  bool pass = true;
  double worst_adz_residual = 0;
  std::vector<std::pair<std::string, int>> numeric_multiplicities;
  std::string detail;
};

/// Independent check of the root space structure: simultaneously diagonalizes
/// ad(a) on g, compares each numerical root space dimension with the
/// multiplicity table, and verifies [Z, X_a^+] = a(Z) X_a^- on every root.
inline RootSpaceAudit root_space_audit(const Realization& R, double tol = 1e-7) {
  RootSpaceAudit rep;
  const RestrictedClass rc = R.cartan.restricted();
  const int r = rc.rank;

  std::vector<Matrix> gbasis = detail::orthonormal_span(R.basis_g);
  const int dim_g = int(gbasis.size());
  auto g_coords = [&](const Matrix& m) {
    Vector v(dim_g);
    for (int i = 0; i < dim_g; ++i) v(i) = detail::fro_inner(gbasis[size_t(i)], m);
    return v;
  };

  // Generic element of a: coordinates sqrt(prime) are rationally independent,
  // so distinct roots get distinct eigenvalues.
  static const double primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  std::vector<double> c(size_t(rc.ambient()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = std::sqrt(primes[i]);
  if (rc.kind == Kind::A) {
    double mean = 0;
    for (double x : c) mean += x / double(c.size());
    for (double& x : c) x -= mean;
  }
  std::vector<double> zc(c.size());
  for (size_t i = 0; i < c.size(); ++i) zc[i] = std::sqrt(primes[i] + 20.0);
  if (rc.kind == Kind::A) {
    double mean = 0;
    for (double x : zc) mean += x / double(zc.size());
    for (double& x : zc) x -= mean;
  }
  const Matrix H = embed_vector(c, R), Z = embed_vector(zc, R);

  Matrix adH(dim_g, dim_g);
  for (int j = 0; j < dim_g; ++j) adH.col(j) = g_coords(detail::bracket(H, gbasis[size_t(j)]));

  auto eval_at = [&](const Root& root, const std::vector<double>& coords) {
    double s = 0;
    for (int i = 0; i < root.size(); ++i) s += root.coeff(i) * coords[size_t(i)];
    return s;
  };

  for (const Root& alpha : positive_roots(rc)) {
    const double lambda = eval_at(alpha, c);
    Eigen::JacobiSVD<Matrix> svd(adH - lambda * Matrix::Identity(dim_g, dim_g),
                                 Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int null_dim = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) < 1e-8 * s(0)) ++null_dim;
    rep.numeric_multiplicities.emplace_back(alpha.str(), null_dim);
    if (null_dim != R.cartan.multiplicity(alpha)) {
      rep.pass = false;
      rep.detail = "dim g_" + alpha.str() + " = " + std::to_string(null_dim) +
                   ", table says " + std::to_string(R.cartan.multiplicity(alpha));
      continue;
    }
    for (int i = dim_g - null_dim; i < dim_g; ++i) {
      Matrix x = Matrix::Zero(R.matrix_size, R.matrix_size);
      for (int b = 0; b < dim_g; ++b) x += svd.matrixV()(b, i) * gbasis[size_t(b)];
      const Matrix xp = x + R.theta(x), xm = x - R.theta(x);
      const double resid =
          (detail::bracket(Z, xp) - eval_at(alpha, zc) * xm).norm() / std::max(1.0, xm.norm());
      rep.worst_adz_residual = std::max(rep.worst_adz_residual, resid);
    }
  }
  rep.pass = rep.pass && rep.worst_adz_residual < tol && r == int(R.basis_a.size());
  return rep;
}

}  // namespace orbac

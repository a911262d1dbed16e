#pragma once

// Restricted root systems of the classical types A_n, B_n, C_n, D_n, BC_n,
// their Weyl groups (signed/even-signed permutation groups), exact rank and
// multiplicity-weighted dimension computations, and the Cartan classes of the
// type III symmetric spaces with their root multiplicity tables.
//
// All combinatorics are carried out in exact integer arithmetic: roots are
// integer coefficient vectors and ranks are computed by fraction-free
// elimination. No floating point enters this layer.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbac {

struct parameter_error : std::invalid_argument {
  explicit parameter_error(const std::string& m) : std::invalid_argument(m) {}
};
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& m) : std::runtime_error(m) {}
};
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& m) : std::domain_error(m) {}
};
struct defect_error : std::logic_error {
  explicit defect_error(const std::string& m) : std::logic_error(m) {}
};
struct parse_error : parameter_error {
  explicit parse_error(const std::string& m) : parameter_error(m) {}
};

// ---------------------------------------------------------------------------
// Restricted class
// ---------------------------------------------------------------------------

enum class Kind { A, B, C, D, BC };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::BC: return "BC";
  }
  return "?";
}

/// A reduced-or-BC classical root system label: kind + rank.
/// Roots of A_n live in an (n+1)-dimensional ambient coordinate space
/// (coordinates e_1..e_{n+1}); all other kinds use n coordinates.
struct RestrictedClass {
  Kind kind;
  int rank;

  RestrictedClass(Kind k, int n) : kind(k), rank(n) { validate(); }

  int ambient() const { return kind == Kind::A ? rank + 1 : rank; }

  void validate() const {
    if (rank < 1) throw parameter_error("root system rank must be >= 1");
    if (kind == Kind::D && rank < 2)
      throw parameter_error("D_n requires n >= 2");
    if (rank > 16) throw parameter_error("root system rank out of range");
  }

  std::string label() const {
    return to_string(kind) + "_" + std::to_string(rank);
  }

  friend bool operator==(const RestrictedClass& a, const RestrictedClass& b) {
    return a.kind == b.kind && a.rank == b.rank;
  }
  friend bool operator!=(const RestrictedClass& a, const RestrictedClass& b) {
    return !(a == b);
  }
};

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

/// A root stored as an exact integer coefficient vector over e_1..e_N.
/// All classical roots have coefficients in {-2,-1,0,1,2}.
class Root {
 public:
  static constexpr int kMaxAmbient = 10;

  Root() = default;

  Root(int n, std::initializer_list<std::pair<int, int>> terms) : n_(int8_t(n)) {
    check_size(n);
    for (auto [i, ci] : terms) c_[size_t(i)] = int8_t(ci);
  }

  static Root diff(int n, int i, int j) { return Root(n, {{i, 1}, {j, -1}}); }
  static Root sum(int n, int i, int j) { return Root(n, {{i, 1}, {j, 1}}); }
  static Root single(int n, int i) { return Root(n, {{i, 1}}); }
  static Root twice(int n, int i) { return Root(n, {{i, 2}}); }

  int size() const { return n_; }
  int coeff(int i) const { return c_[size_t(i)]; }

  long long eval(const std::vector<long long>& v) const {
    long long s = 0;
    for (int i = 0; i < n_; ++i) s += (long long)c_[size_t(i)] * v[size_t(i)];
    return s;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + n_, [](int8_t x) { return x == 0; });
  }

  Root negated() const {
    Root r = *this;
    for (int i = 0; i < n_; ++i) r.c_[size_t(i)] = int8_t(-r.c_[size_t(i)]);
    return r;
  }

  /// Positivity convention used throughout: first nonzero coefficient > 0.
  bool positive() const {
    for (int i = 0; i < n_; ++i)
      if (c_[size_t(i)] != 0) return c_[size_t(i)] > 0;
    return false;
  }

  Root canonical() const { return positive() || is_zero() ? *this : negated(); }

  enum class Shape { diff, sum, single, twice };

  /// Shape of a canonical positive classical root.
  Shape shape() const {
    int nz = 0, first = -1;
    for (int i = 0; i < n_; ++i)
      if (c_[size_t(i)] != 0) {
        ++nz;
        if (first < 0) first = i;
      }
    if (nz == 1) return std::abs(c_[size_t(first)]) == 2 ? Shape::twice : Shape::single;
    if (nz != 2) throw domain_error("not a classical root: " + str());
    int second = -1;
    for (int i = first + 1; i < n_; ++i)
      if (c_[size_t(i)] != 0) second = i;
    return c_[size_t(first)] == c_[size_t(second)] ? Shape::sum : Shape::diff;
  }

  /// Support letters (0-based); second is -1 for single/twice shapes.
  std::pair<int, int> letters() const {
    int a = -1, b = -1;
    for (int i = 0; i < n_; ++i)
      if (c_[size_t(i)] != 0) {
        if (a < 0) a = i;
        else b = i;
      }
    return {a, b};
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      int ci = c_[size_t(i)];
      if (ci == 0) continue;
      if (!s.empty()) s += ci > 0 ? "+" : "-";
      else if (ci < 0) s += "-";
      if (std::abs(ci) == 2) s += "2";
      s += "e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const Root& a, const Root& b) {
    return a.n_ == b.n_ && std::equal(a.c_.begin(), a.c_.begin() + a.n_, b.c_.begin());
  }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.c_.begin(), a.c_.begin() + a.n_,
                                        b.c_.begin(), b.c_.begin() + b.n_);
  }

  int8_t* data() { return c_.data(); }
  const int8_t* data() const { return c_.data(); }

 private:
  static void check_size(int n) {
    if (n < 1 || n > kMaxAmbient) throw parameter_error("ambient dimension out of range");
  }
  std::array<int8_t, kMaxAmbient> c_{};
  int8_t n_ = 0;
};

/// The positive roots of the given restricted class, per the classical lists:
///   A_n : e_i - e_j (i<j<=n+1)           B_n : e_i, e_i +- e_j
///   C_n : 2e_i, e_i +- e_j               D_n : e_i +- e_j
///   BC_n: e_i, 2e_i, e_i +- e_j
inline std::vector<Root> positive_roots(const RestrictedClass& rc) {
  const int N = rc.ambient();
  std::vector<Root> out;
  auto add_diffs = [&] {
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) out.push_back(Root::diff(N, i, j));
  };
  auto add_sums = [&] {
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) out.push_back(Root::sum(N, i, j));
  };
  switch (rc.kind) {
    case Kind::A:
      add_diffs();
      break;
    case Kind::B:
      for (int i = 0; i < N; ++i) out.push_back(Root::single(N, i));
      add_diffs();
      add_sums();
      break;
    case Kind::C:
      for (int i = 0; i < N; ++i) out.push_back(Root::twice(N, i));
      add_diffs();
      add_sums();
      break;
    case Kind::D:
      add_diffs();
      add_sums();
      break;
    case Kind::BC:
      for (int i = 0; i < N; ++i) {
        out.push_back(Root::single(N, i));
        out.push_back(Root::twice(N, i));
      }
      add_diffs();
      add_sums();
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

/// One Weyl group element: a permutation of the ambient letters together with
/// sign flips (none for kind A, an even number for kind D).
/// Acts by e_i -> (-1)^{flip_i} e_{perm_i}.
struct WeylElement {
  std::array<uint8_t, Root::kMaxAmbient> perm{};
  uint16_t flips = 0;
  uint8_t n = 0;

  static WeylElement identity(int n) {
    WeylElement w;
    w.n = uint8_t(n);
    for (int i = 0; i < n; ++i) w.perm[size_t(i)] = uint8_t(i);
    return w;
  }

  Root apply(const Root& r) const {
    Root out;
    out = r;  // copy size
    for (int i = 0; i < n; ++i) out.data()[i] = 0;
    for (int i = 0; i < n; ++i) {
      int8_t c = r.data()[i];
      if (c == 0) continue;
      out.data()[perm[size_t(i)]] = int8_t((flips >> i) & 1 ? -c : c);
    }
    return out;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const {
    std::vector<long long> out(v.size(), 0);
    for (int i = 0; i < n; ++i)
      out[perm[size_t(i)]] = ((flips >> i) & 1) ? -v[size_t(i)] : v[size_t(i)];
    return out;
  }
};

inline uint64_t weyl_order(const RestrictedClass& rc) {
  auto fact = [](int k) {
    uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= uint64_t(i);
    return f;
  };
  switch (rc.kind) {
    case Kind::A: return fact(rc.rank + 1);
    case Kind::B:
    case Kind::C:
    case Kind::BC: return (uint64_t(1) << rc.rank) * fact(rc.rank);
    case Kind::D: return (uint64_t(1) << (rc.rank - 1)) * fact(rc.rank);
  }
  return 0;
}

/// Enumeration cap on the rank (full Weyl group walks are exponential).
/// Overridable through the ORBAC_WEYL_CAP environment variable.
inline int weyl_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("ORBAC_WEYL_CAP")) {
      int v = std::atoi(s);
      if (v >= 1 && v <= 12) return v;
    }
    return 7;
  }();
  return cap;
}

/// Visits every Weyl element exactly once.
template <class F>
void for_each_weyl(const RestrictedClass& rc, F&& f, std::optional<int> cap = {}) {
  const int limit = cap.value_or(weyl_cap());
  if (rc.rank > limit)
    throw capacity_error("Weyl enumeration capped at rank " + std::to_string(limit) +
                         " (got " + rc.label() + ")");
  const int N = rc.ambient();
  std::vector<uint8_t> p(size_t(N), 0);
  std::iota(p.begin(), p.end(), uint8_t(0));
  do {
    WeylElement w;
    w.n = uint8_t(N);
    std::copy(p.begin(), p.end(), w.perm.begin());
    if (rc.kind == Kind::A) {
      f(w);
      continue;
    }
    const uint16_t top = uint16_t(1u << N);
    for (uint16_t s = 0; s < top; ++s) {
      if (rc.kind == Kind::D && (std::popcount(unsigned(s)) & 1)) continue;
      w.flips = s;
      f(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<WeylElement> weyl_group(const RestrictedClass& rc,
                                           std::optional<int> cap = {}) {
  std::vector<WeylElement> out;
  out.reserve(weyl_order(rc));
  for_each_weyl(rc, [&](const WeylElement& w) { out.push_back(w); }, cap);
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank / span computations
// ---------------------------------------------------------------------------

namespace detail {

/// Fraction-free (Bareiss) rank of an integer matrix. Entries stay tiny for
/// root coefficient input, so int64 never overflows at these sizes.
inline int integer_rank(std::vector<std::array<long long, Root::kMaxAmbient>> m, int cols) {
  int rank = 0;
  long long prev = 1;
  const int rows = int(m.size());
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[size_t(r)][size_t(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[size_t(pivot)], m[size_t(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[size_t(r)][size_t(c)] = (m[size_t(rank)][size_t(col)] * m[size_t(r)][size_t(c)] -
                                   m[size_t(r)][size_t(col)] * m[size_t(rank)][size_t(c)]) /
                                  prev;
      m[size_t(r)][size_t(col)] = 0;
    }
    prev = m[size_t(rank)][size_t(col)];
    ++rank;
  }
  return rank;
}

inline std::vector<std::array<long long, Root::kMaxAmbient>> root_matrix(
    const std::vector<Root>& roots) {
  std::vector<std::array<long long, Root::kMaxAmbient>> m(roots.size());
  for (size_t r = 0; r < roots.size(); ++r) {
    m[r].fill(0);
    for (int c = 0; c < roots[r].size(); ++c) m[r][size_t(c)] = roots[r].coeff(c);
  }
  return m;
}

}  // namespace detail

/// Rank of the rational span of the given roots (exact arithmetic).
inline int subsystem_rank(const std::vector<Root>& roots) {
  if (roots.empty()) return 0;
  return detail::integer_rank(detail::root_matrix(roots), roots.front().size());
}

/// Whether r lies in the rational span of the given roots.
inline bool in_span(const std::vector<Root>& roots, const Root& r) {
  if (r.is_zero()) return true;
  if (roots.empty()) return false;
  auto m = detail::root_matrix(roots);
  int base = detail::integer_rank(m, roots.front().size());
  auto m2 = detail::root_matrix(roots);
  m2.push_back(detail::root_matrix({r}).front());
  return detail::integer_rank(m2, roots.front().size()) == base;
}

// ---------------------------------------------------------------------------
// Cartan classes and multiplicities
// ---------------------------------------------------------------------------

enum class Family { AI, AII, AIII, CI, CII, DIII, BDI };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::AI: return "AI";
    case Family::AII: return "AII";
    case Family::AIII: return "AIII";
    case Family::CI: return "CI";
    case Family::CII: return "CII";
    case Family::DIII: return "DIII";
    case Family::BDI: return "BDI";
  }
  return "?";
}

/// A classical Cartan class of type III together with its restricted root
/// system and root-space dimension table.
///
/// Multiplicity table, keyed by root shape (e_i +- e_j | e_i | 2e_i):
///   AI         1   -    -      (A_{n-1})
///   AII        4   -    -      (A_{n-1})
///   AIII(p,q)  2  2(q-p) 1     (BC_p if q>p, C_p if q=p)
///   CI         1   -    1      (C_n)
///   CII(p,q)   4  4(q-p) 3     (BC_p if q>p, C_p if q=p)
///   DIII       4   4    1      (BC_{(n-1)/2}, n odd)
///   DIII       4   -    1      (C_{n/2}, n even)
///   BDI(p,q)   1  q-p   -      (B_p if q>p, D_p if q=p)
class CartanClass {
 public:
  static CartanClass AI(int n) { return CartanClass(Family::AI, n, 0); }
  static CartanClass AII(int n) { return CartanClass(Family::AII, n, 0); }
  static CartanClass AIII(int p, int q) { return CartanClass(Family::AIII, p, q); }
  static CartanClass CI(int n) { return CartanClass(Family::CI, n, 0); }
  static CartanClass CII(int p, int q) { return CartanClass(Family::CII, p, q); }
  static CartanClass DIII(int n) { return CartanClass(Family::DIII, n, 0); }
  static CartanClass BDI(int p, int q) { return CartanClass(Family::BDI, p, q); }
  static CartanClass DI(int p) { return CartanClass(Family::BDI, p, p); }

  Family family() const { return fam_; }
  int p() const { return p_; }
  int q() const { return q_; }

  RestrictedClass restricted() const {
    switch (fam_) {
      case Family::AI:
      case Family::AII: return RestrictedClass(Kind::A, p_ - 1);
      case Family::AIII:
      case Family::CII:
        return RestrictedClass(q_ > p_ ? Kind::BC : Kind::C, p_);
      case Family::CI: return RestrictedClass(Kind::C, p_);
      case Family::DIII:
        return p_ % 2 == 0 ? RestrictedClass(Kind::C, p_ / 2)
                           : RestrictedClass(Kind::BC, (p_ - 1) / 2);
      case Family::BDI:
        return RestrictedClass(q_ > p_ ? Kind::B : Kind::D, p_);
    }
    throw parameter_error("bad family");
  }

  /// dim g_alpha for a root of the given shape; 0 when the shape is absent
  /// from the restricted system.
  int multiplicity(Root::Shape s) const {
    const bool pm = (s == Root::Shape::diff || s == Root::Shape::sum);
    switch (fam_) {
      case Family::AI: return pm ? 1 : 0;
      case Family::AII: return pm ? 4 : 0;
      case Family::AIII:
        if (pm) return 2;
        return s == Root::Shape::single ? 2 * (q_ - p_) : 1;
      case Family::CI:
        if (pm) return 1;
        return s == Root::Shape::twice ? 1 : 0;
      case Family::CII:
        if (pm) return 4;
        return s == Root::Shape::single ? 4 * (q_ - p_) : 3;
      case Family::DIII:
        if (pm) return 4;
        if (s == Root::Shape::twice) return 1;
        return p_ % 2 == 0 ? 0 : 4;
      case Family::BDI:
        if (pm) return 1;
        return s == Root::Shape::single ? q_ - p_ : 0;
    }
    return 0;
  }

  int multiplicity(const Root& r) const {
    const RestrictedClass rc = restricted();
    const Root::Shape s = r.canonical().shape();
    bool member = r.size() == rc.ambient();
    switch (rc.kind) {
      case Kind::A: member = member && s == Root::Shape::diff; break;
      case Kind::B: member = member && s != Root::Shape::twice; break;
      case Kind::C: member = member && s != Root::Shape::single; break;
      case Kind::D:
        member = member && (s == Root::Shape::diff || s == Root::Shape::sum);
        break;
      case Kind::BC: break;
    }
    const int m = member ? multiplicity(s) : 0;
    if (m <= 0) throw domain_error("root " + r.str() + " is not a root of " + label());
    return m;
  }

  /// dim p = rank + sum of the multiplicities over the positive roots.
  long long dim_p() const {
    const RestrictedClass rc = restricted();
    long long d = rc.rank;
    for (const Root& r : positive_roots(rc)) d += multiplicity(r.shape());
    return d;
  }

  std::string label() const {
    std::string s = to_string(fam_) + "(" + std::to_string(p_);
    if (fam_ == Family::AIII || fam_ == Family::CII || fam_ == Family::BDI)
      s += "," + std::to_string(q_);
    return s + ")";
  }

  /// Parses "AI:4", "BDI:3,4", "DI:4", "CII:4,4", ...
  static CartanClass parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw parse_error("bad cartan class: " + text);
    std::string name = text.substr(0, colon), args = text.substr(colon + 1);
    int a = 0, b = -1;
    auto comma = args.find(',');
    try {
      if (comma == std::string::npos) {
        a = std::stoi(args);
      } else {
        a = std::stoi(args.substr(0, comma));
        b = std::stoi(args.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw parse_error("bad cartan parameters: " + text);
    }
    if (name == "AI" && b < 0) return AI(a);
    if (name == "AII" && b < 0) return AII(a);
    if (name == "AIII" && b >= 0) return AIII(a, b);
    if (name == "CI" && b < 0) return CI(a);
    if (name == "CII" && b >= 0) return CII(a, b);
    if (name == "DIII" && b < 0) return DIII(a);
    if (name == "BDI" && b >= 0) return BDI(a, b);
    if (name == "DI" && b < 0) return DI(a);
    throw parse_error("bad cartan class: " + text);
  }

  friend bool operator==(const CartanClass& a, const CartanClass& b) {
    return a.fam_ == b.fam_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  CartanClass(Family f, int p, int q) : fam_(f), p_(p), q_(q) { validate(); }

  void validate() const {
    switch (fam_) {
      case Family::AI:
      case Family::AII:
        if (p_ < 2) throw parameter_error(label() + ": requires n >= 2");
        break;
      case Family::AIII:
        if (!(q_ > p_ && p_ >= 1) && !(p_ == q_ && p_ >= 3))
          throw parameter_error(label() + ": requires q>p>=1 or p=q>=3");
        break;
      case Family::CI:
        if (p_ < 1) throw parameter_error(label() + ": requires n >= 1");
        break;
      case Family::CII:
        if (!(q_ > p_ && p_ >= 1) && !(p_ == q_ && p_ >= 2))
          throw parameter_error(label() + ": requires q>p>=1 or p=q>=2");
        break;
      case Family::DIII:
        if (p_ % 2 == 0 ? p_ < 6 : p_ < 3)
          throw parameter_error(label() + ": requires n >= 6 even or n >= 3 odd");
        break;
      case Family::BDI:
        if (!(q_ > p_ && p_ >= 1) && !(p_ == q_ && p_ >= 2))
          throw parameter_error(label() + ": requires q>p>=1 or p=q>=2");
        break;
    }
  }

  Family fam_;
  int p_, q_;
};

/// Multiplicity-weighted dimension of a set of positive roots; this is the
/// "dim" of a root subsystem used throughout the Wright criterion.
inline long long subsystem_dim(const std::vector<Root>& roots, const CartanClass& cc) {
  long long d = 0;
  for (const Root& r : roots) d += cc.multiplicity(r);
  return d;
}

// ---------------------------------------------------------------------------
// Cached positive system with bitmask set operations
// ---------------------------------------------------------------------------

/// One restricted root system with its positive roots indexed so subsystems
/// become 64-bit masks. Masks always denote canonical positive representatives
/// of full (+-) root sets, so mask intersection is root-system intersection.
class RootSystem {
 public:
  explicit RootSystem(const RestrictedClass& rc) : rc_(rc), pos_(positive_roots(rc)) {
    if (pos_.size() > 64) throw capacity_error(rc.label() + ": too many roots for mask ops");
    for (size_t i = 0; i < pos_.size(); ++i) index_[pos_[i]] = int(i);
  }

  const RestrictedClass& cls() const { return rc_; }
  const std::vector<Root>& positive() const { return pos_; }
  int size() const { return int(pos_.size()); }

  int index(const Root& r) const {
    auto it = index_.find(r.canonical());
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const Root& r) const { return index(r) >= 0; }

  uint64_t mask(const std::vector<Root>& roots) const {
    uint64_t m = 0;
    for (const Root& r : roots) {
      int i = index(r);
      if (i < 0) throw domain_error("root " + r.str() + " not in " + rc_.label());
      m |= uint64_t(1) << i;
    }
    return m;
  }

  std::vector<Root> unmask(uint64_t m) const {
    std::vector<Root> out;
    for (int i = 0; i < size(); ++i)
      if (m >> i & 1) out.push_back(pos_[size_t(i)]);
    return out;
  }

  /// Image of a (+-) root set under a Weyl element, as a positive mask.
  uint64_t apply(const WeylElement& w, uint64_t m) const {
    uint64_t out = 0;
    for (int i = 0; i < size(); ++i)
      if (m >> i & 1) out |= uint64_t(1) << index_.at(w.apply(pos_[size_t(i)]).canonical());
    return out;
  }

  long long dim(uint64_t m, const CartanClass& cc) const {
    long long d = 0;
    for (int i = 0; i < size(); ++i)
      if (m >> i & 1) d += cc.multiplicity(pos_[size_t(i)]);
    return d;
  }

  /// sp(gens) intersected with the full root system, returned as the positive
  /// part. Used for the fullness test sp(Psi) cap Phi = Psi.
  std::vector<Root> span_closure(const std::vector<Root>& gens) const {
    std::vector<Root> out;
    for (const Root& r : pos_)
      if (in_span(gens, r)) out.push_back(r);
    return out;
  }

 private:
  RestrictedClass rc_;
  std::vector<Root> pos_;
  std::map<Root, int> index_;
};

/// Weyl conjugacy of two (+-) root sets, by exhaustive enumeration.
inline bool weyl_conjugate(const RootSystem& rs, uint64_t a, uint64_t b,
                           std::optional<int> cap = {}) {
  if (std::popcount(a) != std::popcount(b)) return false;
  bool found = false;
  for_each_weyl(rs.cls(), [&](const WeylElement& w) {
    if (!found && rs.apply(w, a) == b) found = true;
  }, cap);
  return found;
}

}  // namespace orbac

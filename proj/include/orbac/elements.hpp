#pragma once

// Typed elements of the flat torus a: zero block J, repeated-value blocks s_i
// and the sign class needed in type D_n. Provides annihilating root systems,
// the S statistic with its dominant type, orbit dimensions, and the rank
// reduction Z -> Z' used by the induction machinery.

#include <sstream>

#include "orbac/rootsys.hpp"

namespace orbac {

enum class Parity { plus, minus, not_applicable };
enum class Dominant { SU, BCD0 };

struct SValue {
  int S;
  Dominant dominant;
};

/// The annihilating root system Phi_Z of a typed element: positive part,
/// human-readable type label, and the block data (J, [s_i]) it came from.
struct AnnihilatorSystem {
  std::vector<Root> positive;
  std::string type_label;
  int J = 0;
  std::vector<int> sizes;

  bool empty() const { return positive.empty(); }
  int rank() const { return subsystem_rank(positive); }
};

/// An element of a up to Weyl conjugacy, in the normal form
///   Z = (0,...,0 | a_1...a_1 | ... | a_m...(+-)a_m),
/// kept with blocks sorted by decreasing size. For kind A there is no zero
/// block and the concrete values are balanced to sum to zero. The minus flag
/// (kind D with J = 0 only) records the odd-sign-flip class; the sign sits on
/// the final coordinate.
class TypedElement {
 public:
  static TypedElement make(const RestrictedClass& rc, int J, std::vector<int> sizes,
                           bool minus = false) {
    return TypedElement(rc, J, std::move(sizes), minus);
  }

  /// Normalizes an explicit coordinate vector into its Weyl class.
  static TypedElement from_vector(const RestrictedClass& rc, std::vector<long long> v) {
    if (int(v.size()) != rc.ambient())
      throw parameter_error("vector length must be " + std::to_string(rc.ambient()) +
                            " for " + rc.label());
    bool odd_signs = false;
    if (rc.kind != Kind::A) {
      int negs = 0;
      for (auto& x : v)
        if (x < 0) {
          ++negs;
          x = -x;
        }
      odd_signs = negs % 2 == 1;
    }
    std::map<long long, int> groups;
    for (long long x : v) ++groups[x];
    int J = 0;
    std::vector<int> sizes;
    if (rc.kind != Kind::A) {
      auto z = groups.find(0);
      if (z != groups.end()) {
        J = z->second;
        groups.erase(z);
      }
    }
    for (auto& [val, cnt] : groups) sizes.push_back(cnt);
    std::sort(sizes.rbegin(), sizes.rend());
    bool minus = rc.kind == Kind::D && J == 0 && odd_signs;
    return TypedElement(rc, J, std::move(sizes), minus);
  }

  /// Parses the CLI element grammar: either "v=0,0,1,1,2" (raw coordinates)
  /// or "J=2; s=3,1; minus" / "s=4". Unlisted coordinates are filled with
  /// singleton blocks, so "s=3" in rank 4 means blocks [3,1].
  static TypedElement parse(const RestrictedClass& rc, const std::string& text) {
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(trim(item));

    int J = 0;
    bool minus = false;
    std::vector<int> sizes;
    std::vector<long long> raw;
    bool have_raw = false, have_sizes = false;
    for (const std::string& part : parts) {
      if (part.empty()) continue;
      if (part == "minus") {
        minus = true;
        continue;
      }
      if (part == "plus") continue;
      auto eq = part.find('=');
      if (eq == std::string::npos) throw parse_error("bad element term: '" + part + "'");
      std::string key = trim(part.substr(0, eq)), val = trim(part.substr(eq + 1));
      try {
        if (key == "J") {
          J = std::stoi(val);
        } else if (key == "s" || key == "v") {
          std::stringstream vs(val);
          std::string tok;
          while (std::getline(vs, tok, ','))
            if (key == "s") sizes.push_back(std::stoi(trim(tok)));
            else raw.push_back(std::stoll(trim(tok)));
          (key == "s" ? have_sizes : have_raw) = true;
        } else {
          throw parse_error("unknown element key: '" + key + "'");
        }
      } catch (const parse_error&) {
        throw;
      } catch (const std::exception&) {
        throw parse_error("bad element term: '" + part + "'");
      }
    }
    if (have_raw) {
      if (have_sizes || J != 0 || minus)
        throw parse_error("raw vector cannot be combined with J/s/minus");
      return from_vector(rc, raw);
    }
    if (!have_sizes && J == 0) throw parse_error("element needs s=... or v=...");
    long long listed = J;
    for (int s : sizes) listed += s;
    long long pad = rc.ambient() - listed;
    if (pad < 0)
      throw parse_error("blocks exceed rank: J + sum(s) = " + std::to_string(listed));
    for (long long i = 0; i < pad; ++i) sizes.push_back(1);
    if (rc.kind != Kind::D || J > 0) minus = false;  // sign class absorbed by a Weyl flip
    if (rc.kind == Kind::A && minus) throw parse_error("minus has no meaning in kind A");
    return TypedElement(rc, J, std::move(sizes), minus);
  }

  const RestrictedClass& context() const { return rc_; }
  int J() const { return J_; }
  const std::vector<int>& sizes() const { return sizes_; }
  bool d_minus() const { return minus_; }
  int block_count() const { return int(sizes_.size()); }
  int max_block() const { return sizes_.empty() ? 0 : sizes_.front(); }

  /// Concrete coordinates with the canonical tag values a_i = i (kind A:
  /// distinct integers balanced to exact zero sum).
  std::vector<long long> vector() const {
    std::vector<long long> tags(sizes_.size());
    std::iota(tags.begin(), tags.end(), 1);
    return vector_with_tags(tags);
  }

  /// Same with caller-chosen distinct positive tag values (used to confirm
  /// that verdicts are value-independent).
  std::vector<long long> vector_with_tags(const std::vector<long long>& tags) const {
    if (tags.size() != sizes_.size()) throw parameter_error("one tag per block required");
    const int N = rc_.ambient();
    std::vector<long long> v;
    v.reserve(size_t(N));
    if (rc_.kind == Kind::A) {
      long long weighted = 0;
      for (size_t i = 0; i < sizes_.size(); ++i) weighted += sizes_[i] * tags[i];
      for (size_t i = 0; i < sizes_.size(); ++i)
        v.insert(v.end(), size_t(sizes_[i]), N * tags[i] - weighted);
    } else {
      v.insert(v.end(), size_t(J_), 0);
      for (size_t i = 0; i < sizes_.size(); ++i)
        v.insert(v.end(), size_t(sizes_[i]), tags[i]);
      if (minus_) v.back() = -v.back();
    }
    return v;
  }

  AnnihilatorSystem annihilator() const {
    AnnihilatorSystem ann;
    ann.J = J_;
    ann.sizes = sizes_;
    ann.type_label = type_label();
    const std::vector<long long> v = vector();
    for (const Root& r : positive_roots(rc_))
      if (r.eval(v) == 0) ann.positive.push_back(r);
    return ann;
  }

  bool is_regular() const { return annihilator().empty(); }

  /// The size statistic S_X: 2J when the zero block dominates (2J >= max s_j),
  /// max s_j otherwise; kind A always uses max s_j.
  SValue s_value() const {
    if (rc_.kind == Kind::A) return {max_block(), Dominant::SU};
    if (2 * J_ >= max_block()) return {2 * J_, Dominant::BCD0};
    return {max_block(), Dominant::SU};
  }

  /// The rank reduction Z -> Z': remove one zero coordinate when 2J >= s_1,
  /// otherwise shrink the largest block.
  TypedElement reduce() const {
    const int min_rank = rc_.kind == Kind::D ? 2 : 1;
    if (rc_.rank - 1 < min_rank)
      throw capacity_error("cannot reduce " + rc_.label() + " to rank " +
                           std::to_string(rc_.rank - 1));
    const RestrictedClass down(rc_.kind, rc_.rank - 1);
    int J = J_;
    std::vector<int> sizes = sizes_;
    if (rc_.kind != Kind::A && 2 * J_ >= sizes.front()) {
      --J;
    } else {
      if (--sizes.front() == 0) sizes.erase(sizes.begin());
      std::sort(sizes.rbegin(), sizes.rend());
    }
    bool minus = minus_ && J == 0;
    if (rc_.kind == Kind::A && sizes.size() < 2)
      throw capacity_error("reduction of " + describe() + " leaves a zero element");
    return TypedElement(down, J, std::move(sizes), minus);
  }

  /// dim O_Z: multiplicity-weighted count of the positive roots not
  /// annihilated by Z.
  long long dim_orbit(const CartanClass& cc) const {
    if (!(cc.restricted() == rc_))
      throw domain_error(cc.label() + " does not have restricted class " + rc_.label());
    const std::vector<long long> v = vector();
    long long d = 0;
    for (const Root& r : positive_roots(rc_))
      if (r.eval(v) != 0) d += cc.multiplicity(r);
    return d;
  }

  /// Sign class of a full SU(n) block in D_n; not_applicable otherwise.
  Parity su_class_parity() const {
    if (rc_.kind != Kind::D || J_ != 0 || sizes_.size() != 1 || sizes_.front() != rc_.rank)
      return Parity::not_applicable;
    return minus_ ? Parity::minus : Parity::plus;
  }

  /// Lie type of Phi_Z, e.g. "D_2 × SU(2)"; empty factors are omitted and a
  /// regular element yields the empty string.
  std::string type_label() const {
    std::vector<std::string> factors;
    if (rc_.kind != Kind::A && J_ > 0) {
      bool nonempty = rc_.kind == Kind::D ? J_ >= 2 : true;
      if (nonempty) factors.push_back(to_string(rc_.kind) + "_" + std::to_string(J_));
    }
    for (int s : sizes_)
      if (s >= 2) factors.push_back("SU(" + std::to_string(s) + ")");
    std::string out;
    for (const std::string& f : factors) {
      if (!out.empty()) out += " × ";
      out += f;
    }
    return out;
  }

  std::string type_label_or_regular() const {
    std::string t = type_label();
    return t.empty() ? "regular" : t;
  }

  /// Round-trippable element expression, e.g. "J=1; s=3,2" or "s=4; minus".
  std::string describe() const {
    std::string s;
    if (rc_.kind != Kind::A) s += "J=" + std::to_string(J_) + "; ";
    s += "s=";
    for (size_t i = 0; i < sizes_.size(); ++i)
      s += (i ? "," : "") + std::to_string(sizes_[i]);
    if (minus_) s += "; minus";
    return s;
  }

  friend bool operator==(const TypedElement& a, const TypedElement& b) {
    return a.rc_ == b.rc_ && a.J_ == b.J_ && a.sizes_ == b.sizes_ && a.minus_ == b.minus_;
  }
  friend bool operator<(const TypedElement& a, const TypedElement& b) {
    auto key = [](const TypedElement& z) {
      return std::make_tuple(int(z.rc_.kind), z.rc_.rank, z.J_, z.sizes_, z.minus_);
    };
    return key(a) < key(b);
  }

 private:
  TypedElement(const RestrictedClass& rc, int J, std::vector<int> sizes, bool minus)
      : rc_(rc), J_(J), sizes_(std::move(sizes)), minus_(minus) {
    std::sort(sizes_.rbegin(), sizes_.rend());
    validate();
  }

  void validate() const {
    if (J_ < 0) throw parameter_error("J must be nonnegative");
    for (int s : sizes_)
      if (s < 1) throw parameter_error("block sizes must be positive");
    long long total = J_ + std::accumulate(sizes_.begin(), sizes_.end(), 0LL);
    if (rc_.kind == Kind::A) {
      if (J_ != 0) throw parameter_error("kind A has no zero block");
      if (total != rc_.ambient())
        throw parameter_error("blocks must sum to " + std::to_string(rc_.ambient()));
      if (sizes_.size() < 2)
        throw parameter_error("kind A needs at least two distinct values (Z != 0)");
    } else {
      if (total != rc_.rank)
        throw parameter_error("J + sum(s) must equal the rank " + std::to_string(rc_.rank));
      if (sizes_.empty()) throw parameter_error("Z must be nonzero");
    }
    if (minus_ && (rc_.kind != Kind::D || J_ != 0))
      throw parameter_error("minus class exists only in kind D with J = 0");
  }

  RestrictedClass rc_;
  int J_;
  std::vector<int> sizes_;
  bool minus_;
};

namespace detail {

inline void partitions_desc(int total, int cap, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
  if (total == 0) {
    emit(cur);
    return;
  }
  for (int next = std::min(total, cap); next >= 1; --next) {
    cur.push_back(next);
    partitions_desc(total - next, next, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

/// All Weyl conjugacy classes of nonzero elements of a: every (J, [s_i]) with
/// J + sum(s) = n, together with both sign classes when kind D and J = 0.
inline std::vector<TypedElement> enumerate_types(const RestrictedClass& rc) {
  std::vector<TypedElement> out;
  auto emit_partitions = [&](int J) {
    std::vector<int> cur;
    int total = (rc.kind == Kind::A ? rc.ambient() : rc.rank) - J;
    detail::partitions_desc(total, total, cur, [&](const std::vector<int>& sizes) {
      if (rc.kind == Kind::A && sizes.size() < 2) return;
      out.push_back(TypedElement::make(rc, J, sizes, false));
      if (rc.kind == Kind::D && J == 0)
        out.push_back(TypedElement::make(rc, J, sizes, true));
    });
  };
  if (rc.kind == Kind::A) {
    emit_partitions(0);
  } else {
    for (int J = 0; J < rc.rank; ++J) emit_partitions(J);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbac

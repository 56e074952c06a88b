#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grcat/arith.hpp"

namespace grcat {

/// The abelian group Z_m x Z_n with fixed generators g1, g2.
struct GroupSpec {
  long long m = 1, n = 1;

  GroupSpec() = default;
  GroupSpec(long long m_, long long n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw std::invalid_argument("GroupSpec: cyclic orders must be >= 1");
  }

  long long order() const { return m * n; }
  long long gcd_factors() const { return std::gcd(m, n); }
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// g1^i g2^j with exponents kept reduced mod (m, n). Elements remember their
/// group; mixing elements of different groups is a hard error.
class GroupElement {
 public:
  GroupElement(GroupSpec spec, long long i, long long j)
      : spec_(spec), i_(mod_euclid(i, spec.m)), j_(mod_euclid(j, spec.n)) {}

  static GroupElement identity(GroupSpec spec) { return {spec, 0, 0}; }

  const GroupSpec& spec() const { return spec_; }
  long long i() const { return i_; }
  long long j() const { return j_; }
  bool is_identity() const { return i_ == 0 && j_ == 0; }

  GroupElement inverse() const { return {spec_, -i_, -j_}; }

  /// Rank in the lexicographic enumeration of G.
  long long index() const { return i_ * spec_.n + j_; }
  static GroupElement from_index(GroupSpec spec, long long idx) {
    return {spec, idx / spec.n, idx % spec.n};
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    require_same_spec(a, b);
    return {a.spec_, a.i_ + b.i_, a.j_ + b.j_};
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    require_same_spec(a, b);
    return a.i_ == b.i_ && a.j_ == b.j_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    require_same_spec(a, b);
    return a.index() < b.index();
  }

  std::string str() const {
    return "g1^" + std::to_string(i_) + " g2^" + std::to_string(j_);
  }

 private:
  static void require_same_spec(const GroupElement& a, const GroupElement& b) {
    if (!(a.spec_ == b.spec_))
      throw std::invalid_argument("GroupElement: operands belong to different groups");
  }

  GroupSpec spec_;
  long long i_, j_;
};

inline constexpr long long kDefaultTupleLimit = 1LL << 17;

inline long long tuple_count(GroupSpec spec, int arity, long long limit = kDefaultTupleLimit) {
  if (arity < 1) throw std::invalid_argument("tuple enumeration: arity must be >= 1");
  long long count = 1;
  for (int k = 0; k < arity; ++k) {
    count *= spec.order();
    if (count > limit)
      throw size_limit_error("tuple enumeration: |G|^" + std::to_string(arity) + " exceeds limit " +
                             std::to_string(limit));
  }
  return count;
}

/// Visits all |G|^arity tuples exactly once, lexicographically (leftmost
/// position most significant, elements ordered by (i, j)).
template <class F>
void for_each_tuple(GroupSpec spec, int arity, F&& f, long long limit = kDefaultTupleLimit) {
  const long long total = tuple_count(spec, arity, limit);
  const long long ord = spec.order();
  std::vector<long long> idx(arity, 0);
  const std::vector<GroupElement> init(arity, GroupElement::identity(spec));
  std::vector<GroupElement> tuple = init;
  for (long long t = 0; t < total; ++t) {
    f(std::as_const(tuple));
    for (int p = arity - 1; p >= 0; --p) {
      if (++idx[p] < ord) {
        tuple[p] = GroupElement::from_index(spec, idx[p]);
        break;
      }
      idx[p] = 0;
      tuple[p] = GroupElement::from_index(spec, 0);
    }
  }
}

inline std::vector<std::vector<GroupElement>> all_tuples(GroupSpec spec, int arity,
                                                         long long limit = kDefaultTupleLimit) {
  std::vector<std::vector<GroupElement>> out;
  out.reserve(static_cast<std::size_t>(tuple_count(spec, arity, limit)));
  for_each_tuple(spec, arity, [&](const std::vector<GroupElement>& t) { out.push_back(t); }, limit);
  return out;
}

}  // namespace grcat

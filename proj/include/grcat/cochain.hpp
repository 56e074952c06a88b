#pragma once

#include <vector>

#include "grcat/group.hpp"
#include "grcat/unity_root.hpp"

namespace grcat {

inline constexpr int kMaxCochainArity = 4;

/// Size caps for the brute-force routines: |G| for dense degree-3 sweeps and
/// |G| for the arity-3 coboundary equation solver.
struct Limits {
  long long max_order = 16;
  long long max_oracle_order = 9;
};

/// Dense cochain on the bar resolution: a table G^arity -> Q/Z with trivial
/// action on coefficients. Normalized means the value is trivial whenever an
/// argument is the identity; the representative families are normalized by
/// construction, arbitrary tables can be queried.
class BarCochain {
 public:
  BarCochain(GroupSpec spec, int arity) : spec_(spec), arity_(check_arity(arity)) {
    table_.resize(static_cast<std::size_t>(tuple_count(spec, arity)));
  }

  template <class F>
  static BarCochain tabulate(GroupSpec spec, int arity, F&& fn) {
    BarCochain c(spec, arity);
    std::size_t flat = 0;
    for_each_tuple(spec, arity,
                   [&](const std::vector<GroupElement>& t) { c.table_[flat++] = fn(t); });
    return c;
  }

  const GroupSpec& spec() const { return spec_; }
  int arity() const { return arity_; }
  long long table_size() const { return static_cast<long long>(table_.size()); }

  long long flat_index(const std::vector<GroupElement>& args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw std::invalid_argument("BarCochain: wrong number of arguments");
    long long flat = 0;
    for (const GroupElement& g : args) {
      if (!(g.spec() == spec_))
        throw std::invalid_argument("BarCochain: argument from a different group");
      flat = flat * spec_.order() + g.index();
    }
    return flat;
  }
  std::vector<GroupElement> args_at(long long flat) const {
    std::vector<GroupElement> args;
    args.reserve(arity_);
    long long rest = flat;
    for (int k = arity_ - 1; k >= 0; --k) {
      long long scale = 1;
      for (int t = 0; t < k; ++t) scale *= spec_.order();
      args.push_back(GroupElement::from_index(spec_, rest / scale));
      rest %= scale;
    }
    return args;
  }

  const UnityRoot& value(const std::vector<GroupElement>& args) const {
    return table_[flat_index(args)];
  }
  const UnityRoot& value(const GroupElement& x) const { return value(std::vector{x}); }
  const UnityRoot& value(const GroupElement& x, const GroupElement& y) const {
    return value(std::vector{x, y});
  }
  const UnityRoot& value(const GroupElement& x, const GroupElement& y,
                         const GroupElement& z) const {
    return value(std::vector{x, y, z});
  }
  const UnityRoot& value_at(long long flat) const { return table_.at(flat); }

  void set(const std::vector<GroupElement>& args, const UnityRoot& v) {
    table_[flat_index(args)] = v;
  }

  bool is_trivial() const {
    for (const UnityRoot& v : table_)
      if (!v.is_trivial()) return false;
    return true;
  }

  bool is_normalized() const {
    bool ok = true;
    std::size_t flat = 0;
    for_each_tuple(spec_, arity_, [&](const std::vector<GroupElement>& t) {
      if (ok) {
        for (const GroupElement& g : t)
          if (g.is_identity() && !table_[flat].is_trivial()) {
            ok = false;
            break;
          }
      }
      ++flat;
    });
    return ok;
  }

  BarCochain operator-(const BarCochain& o) const {
    require_compatible(o);
    BarCochain r(spec_, arity_);
    for (std::size_t k = 0; k < table_.size(); ++k) r.table_[k] = table_[k] - o.table_[k];
    return r;
  }
  BarCochain operator+(const BarCochain& o) const {
    require_compatible(o);
    BarCochain r(spec_, arity_);
    for (std::size_t k = 0; k < table_.size(); ++k) r.table_[k] = table_[k] + o.table_[k];
    return r;
  }
  friend bool operator==(const BarCochain& a, const BarCochain& b) {
    return a.spec_ == b.spec_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

  /// Least common denominator of all table entries.
  BigInt common_denominator() const {
    BigInt d(1);
    for (const UnityRoot& v : table_) d = boost::multiprecision::lcm(d, v.den());
    return d;
  }

 private:
  static int check_arity(int arity) {
    if (arity < 1 || arity > kMaxCochainArity)
      throw std::invalid_argument("BarCochain: arity must be in [1, 4]");
    return arity;
  }
  void require_compatible(const BarCochain& o) const {
    if (!(spec_ == o.spec_) || arity_ != o.arity_)
      throw std::invalid_argument("BarCochain: incompatible operands");
  }

  GroupSpec spec_;
  int arity_;
  std::vector<UnityRoot> table_;
};

/// Coboundary with trivial action: the first argument acts trivially, so
/// (delta f)(x1,...,x_{l+1}) = f(x2,...) + sum_i (-1)^i f(..., x_i x_{i+1}, ...)
/// + (-1)^{l+1} f(x1,...,x_l), written additively in Q/Z.
inline BarCochain coboundary(const BarCochain& f, long long limit = kDefaultTupleLimit) {
  const int l = f.arity();
  if (l + 1 > kMaxCochainArity)
    throw std::invalid_argument("coboundary: result arity above table ceiling");
  const GroupSpec spec = f.spec();
  return BarCochain::tabulate(spec, l + 1, [&](const std::vector<GroupElement>& t) {
    UnityRoot acc = f.value(std::vector<GroupElement>(t.begin() + 1, t.end()));
    int sign = -1;
    for (int i = 1; i <= l; ++i) {
      std::vector<GroupElement> args;
      args.reserve(l);
      for (int k = 0; k <= l; ++k) {
        if (k == i - 1) continue;
        args.push_back(k == i ? t[i - 1] * t[i] : t[k]);
      }
      const UnityRoot& v = f.value(args);
      acc = sign > 0 ? acc + v : acc - v;
      sign = -sign;
    }
    const UnityRoot& last = f.value(std::vector<GroupElement>(t.begin(), t.end() - 1));
    return sign > 0 ? acc + last : acc - last;
  });
}

namespace detail {

inline std::vector<long long> multiplication_table(GroupSpec spec) {
  const long long ord = spec.order();
  std::vector<long long> mul(ord * ord);
  for (long long a = 0; a < ord; ++a)
    for (long long b = 0; b < ord; ++b)
      mul[a * ord + b] =
          (GroupElement::from_index(spec, a) * GroupElement::from_index(spec, b)).index();
  return mul;
}

/// Integer-scaled sweep of the coboundary with early exit; equivalent to
/// coboundary(f).is_trivial() but without materializing the table.
inline bool coboundary_vanishes(const BarCochain& f) {
  const GroupSpec spec = f.spec();
  const long long ord = spec.order();
  BigInt denom = f.common_denominator();
  if (denom > (BigInt(1) << 31))
    throw size_limit_error("coboundary check: table denominator too large for scaled sweep");
  const long long d = denom.convert_to<long long>();
  std::vector<long long> v(f.table_size());
  for (long long k = 0; k < f.table_size(); ++k)
    v[k] = (f.value_at(k).num() * (d / f.value_at(k).den())).convert_to<long long>();
  const auto mul = multiplication_table(spec);

  if (f.arity() == 2) {
    for (long long x = 0; x < ord; ++x)
      for (long long y = 0; y < ord; ++y)
        for (long long z = 0; z < ord; ++z) {
          long long s = v[y * ord + z] - v[mul[x * ord + y] * ord + z] +
                        v[x * ord + mul[y * ord + z]] - v[x * ord + y];
          if (s % d != 0) return false;
        }
    return true;
  }
  if (f.arity() == 3) {
    const long long o2 = ord * ord;
    for (long long x = 0; x < ord; ++x)
      for (long long y = 0; y < ord; ++y) {
        const long long xy = mul[x * ord + y];
        for (long long z = 0; z < ord; ++z) {
          const long long yz = mul[y * ord + z];
          for (long long w = 0; w < ord; ++w) {
            long long s = v[y * o2 + z * ord + w] - v[xy * o2 + z * ord + w] +
                          v[x * o2 + yz * ord + w] - v[x * o2 + y * ord + mul[z * ord + w]] +
                          v[x * o2 + y * ord + z];
            if (s % d != 0) return false;
          }
        }
      }
    return true;
  }
  throw std::invalid_argument("coboundary check: arity must be 2 or 3");
}

}  // namespace detail

/// Brute-force cocycle test: true iff the coboundary of f is the trivial cochain.
inline bool is_cocycle_bar(const BarCochain& f, const Limits& lim = {}) {
  if (f.arity() != 2 && f.arity() != 3)
    throw std::invalid_argument("is_cocycle_bar: arity must be 2 or 3");
  if (f.spec().order() > lim.max_order)
    throw size_limit_error("is_cocycle_bar: group order exceeds configured limit");
  return detail::coboundary_vanishes(f);
}

}  // namespace grcat

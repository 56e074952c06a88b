#pragma once

#include <optional>

#include "grcat/cocycle.hpp"

namespace grcat {

/// Decides whether an arity-2 or arity-3 table is a coboundary by solving the
/// linear system delta(g) = f over Q/Z. The system matrix depends only on the
/// group and the arity, so one Smith decomposition serves any number of
/// right-hand sides.
class CoboundarySolver {
 public:
  CoboundarySolver(GroupSpec spec, int arity, const Limits& lim = {})
      : spec_(spec), arity_(arity), solver_(build_matrix(spec, arity, lim)) {}

  const GroupSpec& spec() const { return spec_; }
  int arity() const { return arity_; }

  bool is_coboundary(const BarCochain& f) const { return solver_.solvable(rhs(f)); }

  std::optional<BarCochain> witness(const BarCochain& f) const {
    auto x = solver_.solve(rhs(f));
    if (!x) return std::nullopt;
    BarCochain g(spec_, arity_ - 1);
    long long flat = 0;
    for_each_tuple(spec_, arity_ - 1,
                   [&](const std::vector<GroupElement>& t) { g.set(t, (*x)[flat++]); });
    return g;
  }

 private:
  static IntMatrix build_matrix(GroupSpec spec, int arity, const Limits& lim) {
    if (arity != 2 && arity != 3)
      throw std::invalid_argument("CoboundarySolver: arity must be 2 or 3");
    const long long cap = arity == 3 ? lim.max_oracle_order : lim.max_order;
    if (spec.order() > cap)
      throw size_limit_error("CoboundarySolver: group order exceeds configured limit");
    const long long rows = tuple_count(spec, arity);
    const long long cols = tuple_count(spec, arity - 1);
    IntMatrix a(rows, cols);
    const long long ord = spec.order();
    long long row = 0;
    for_each_tuple(spec, arity, [&](const std::vector<GroupElement>& t) {
      const int l = arity;
      auto col_of = [&](const std::vector<GroupElement>& args) {
        long long flat = 0;
        for (const GroupElement& g : args) flat = flat * ord + g.index();
        return flat;
      };
      a(row, col_of(std::vector<GroupElement>(t.begin() + 1, t.end()))) += 1;
      int sign = -1;
      for (int i = 1; i <= l - 1; ++i) {
        std::vector<GroupElement> args;
        for (int k = 0; k < l; ++k) {
          if (k == i - 1) continue;
          args.push_back(k == i ? t[i - 1] * t[i] : t[k]);
        }
        a(row, col_of(args)) += sign;
        sign = -sign;
      }
      a(row, col_of(std::vector<GroupElement>(t.begin(), t.end() - 1))) += sign;
      ++row;
    });
    return a;
  }

  std::vector<UnityRoot> rhs(const BarCochain& f) const {
    if (!(f.spec() == spec_) || f.arity() != arity_)
      throw std::invalid_argument("CoboundarySolver: cochain does not match solver");
    std::vector<UnityRoot> b(static_cast<std::size_t>(f.table_size()));
    for (long long k = 0; k < f.table_size(); ++k) b[k] = f.value_at(k);
    return b;
  }

  GroupSpec spec_;
  int arity_;
  Mod1Solver solver_;
};

/// One-shot coboundary oracle: a witness g with delta(g) = f, or nothing.
inline std::optional<BarCochain> coboundary_witness(const BarCochain& f, const Limits& lim = {}) {
  return CoboundarySolver(f.spec(), f.arity(), lim).witness(f);
}

struct CohomologyDescription {
  std::vector<long long> cyclic_factors;
  long long order = 1;

  std::string str() const {
    std::string out;
    for (long long f : cyclic_factors) {
      if (!out.empty()) out += " x ";
      out += "Z_" + std::to_string(f);
    }
    return out + " (order " + std::to_string(order) + ")";
  }
};

/// Closed-form cohomology of Z_m x Z_n with coefficients in the multiplicative
/// group of an algebraically closed field of characteristic zero.
inline CohomologyDescription cohomology_group(GroupSpec spec, int degree) {
  CohomologyDescription d;
  if (degree == 2) {
    d.cyclic_factors = {spec.gcd_factors()};
  } else if (degree == 3) {
    d.cyclic_factors = {spec.m, spec.gcd_factors(), spec.n};
  } else {
    throw std::invalid_argument("cohomology_group: closed form available for degrees 2 and 3");
  }
  for (long long f : d.cyclic_factors) d.order *= f;
  return d;
}

struct ClassCountReport {
  long long expected = 0;
  long long count = 0;
  bool all_distinct = true;
  std::string detail;
  bool ok() const { return all_distinct && count == expected; }
};

/// Counts cohomology classes among the representative family by testing every
/// pair of representatives for cohomologousness with the coboundary solver.
inline ClassCountReport count_classes_oracle(GroupSpec spec, int degree, const Limits& lim = {}) {
  ClassCountReport report;
  report.expected = cohomology_group(spec, degree).order;
  std::vector<BarCochain> reps;
  std::vector<std::string> labels;
  if (degree == 2) {
    for (long long b = 0; b < spec.gcd_factors(); ++b) {
      reps.push_back(two_cocycle_rep(spec, b));
      labels.push_back("b=" + std::to_string(b));
    }
  } else if (degree == 3) {
    for (long long a = 0; a < spec.m; ++a)
      for (long long b = 0; b < spec.gcd_factors(); ++b)
        for (long long d = 0; d < spec.n; ++d) {
          reps.push_back(three_cocycle_rep(spec, {a, b, d}));
          labels.push_back(CocycleParams{a, b, d}.str());
        }
  } else {
    throw std::invalid_argument("count_classes_oracle: degree must be 2 or 3");
  }
  CoboundarySolver solver(spec, degree, lim);
  for (std::size_t p = 0; p < reps.size() && report.all_distinct; ++p)
    for (std::size_t q = p + 1; q < reps.size(); ++q)
      if (solver.is_coboundary(reps[p] - reps[q])) {
        report.all_distinct = false;
        report.detail = "representatives " + labels[p] + " and " + labels[q] + " are cohomologous";
        break;
      }
  report.count = static_cast<long long>(reps.size());
  return report;
}

}  // namespace grcat

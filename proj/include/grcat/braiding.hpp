#pragma once

#include "grcat/cocycle.hpp"

namespace grcat {

/// A braiding candidate on the category twisted by the (a, b, d) associator,
/// determined by its four values on generator pairs: r11 = R(g1,g1),
/// r12 = R(g1,g2), r21 = R(g2,g1), r22 = R(g2,g2). The full table is the
/// bilinear extension R(g1^i g2^j, g1^s g2^t) = r11^(is) r12^(it) r21^(js) r22^(jt).
struct QuasiBicharacter {
  GroupSpec spec;
  CocycleParams params;
  UnityRoot r11, r12, r21, r22;
};

inline UnityRoot braiding_value(const QuasiBicharacter& r, const GroupElement& x,
                                const GroupElement& y) {
  return r.r11.times(x.i() * y.i()) + r.r12.times(x.i() * y.j()) + r.r21.times(x.j() * y.i()) +
         r.r22.times(x.j() * y.j());
}

/// Power constraints tying the four generator values to (a, b, d):
/// r11^m = zeta_m^a = zeta_m^-a, r22^n = zeta_n^d = zeta_n^-d,
/// r12^n = 1 with r12^m = zeta_n^-b, r21^n = 1 with r21^m = zeta_n^b.
inline bool satisfies_power_constraints(const QuasiBicharacter& r) {
  const GroupSpec spec = r.spec;
  const CocycleParams p = r.params;
  return r.r11.times(spec.m) == UnityRoot(p.a, spec.m) &&
         UnityRoot(p.a, spec.m) == UnityRoot(-p.a, spec.m) &&
         r.r22.times(spec.n) == UnityRoot(p.d, spec.n) &&
         UnityRoot(p.d, spec.n) == UnityRoot(-p.d, spec.n) && r.r12.times(spec.n).is_trivial() &&
         r.r12.times(spec.m) == UnityRoot(-p.b, spec.n) && r.r21.times(spec.n).is_trivial() &&
         r.r21.times(spec.m) == UnityRoot(p.b, spec.n);
}

namespace detail {

inline long long mod_inverse(long long a, long long q) {
  long long old_r = mod_euclid(a, q), r = q;
  long long old_t = 1, t = 0;
  while (r != 0) {
    long long quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_t -= quot * t;
    std::swap(old_t, t);
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return mod_euclid(old_t, q);
}

/// Ascending solutions u in [0, q) of  c * u = target (mod q).
inline std::vector<long long> congruence_solutions(long long c, long long target, long long q) {
  if (q == 1) return {0};
  const long long g = std::gcd(mod_euclid(c, q) == 0 ? q : mod_euclid(c, q), q);
  target = mod_euclid(target, q);
  if (target % g != 0) return {};
  const long long q0 = q / g;
  const long long u0 =
      q0 == 1 ? 0 : mod_euclid((target / g) % q0 * mod_inverse((c / g) % q0, q0), q0);
  std::vector<long long> out;
  out.reserve(g);
  for (long long k = 0; k < g; ++k) out.push_back(u0 + k * q0);
  return out;
}

}  // namespace detail

/// All solutions of the power constraints for the given parameters, in
/// ascending lexicographic order of (r11, r12, r21, r22) as rationals. The set
/// is empty unless 2a = 0 (mod m) and 2d = 0 (mod n) and the two mixed
/// congruences admit solutions inside the n-torsion.
inline std::vector<QuasiBicharacter> solve_quasi_bicharacters(GroupSpec spec, CocycleParams p) {
  validate_params(spec, p);
  std::vector<QuasiBicharacter> out;
  if (mod_euclid(2 * p.a, spec.m) != 0 || mod_euclid(2 * p.d, spec.n) != 0) return out;

  // r11 = (a + t*m)/m^2, r22 = (d + t*n)/n^2 exhaust the m-th / n-th roots.
  std::vector<UnityRoot> opts11, opts22, opts12, opts21;
  for (long long t = 0; t < spec.m; ++t) opts11.emplace_back(p.a + t * spec.m, spec.m * spec.m);
  for (long long t = 0; t < spec.n; ++t) opts22.emplace_back(p.d + t * spec.n, spec.n * spec.n);
  for (long long u : detail::congruence_solutions(spec.m, -p.b, spec.n))
    opts12.emplace_back(u, spec.n);
  for (long long u : detail::congruence_solutions(spec.m, p.b, spec.n))
    opts21.emplace_back(u, spec.n);
  if (opts12.empty() || opts21.empty()) return out;

  for (const UnityRoot& r11 : opts11)
    for (const UnityRoot& r12 : opts12)
      for (const UnityRoot& r21 : opts21)
        for (const UnityRoot& r22 : opts22) out.push_back({spec, p, r11, r12, r21, r22});
  return out;
}

struct HexagonReport {
  bool ok = true;
  std::string counterexample;
};

/// Brute-force hexagon check of the full bilinear table against the (a, b, d)
/// associator: both product identities over all of G^3, plus the
/// slot-symmetry of the associator in its last two arguments that the
/// simplified forms rely on.
inline HexagonReport verify_hexagon(const QuasiBicharacter& r, const Limits& lim = {}) {
  const GroupSpec spec = r.spec;
  if (spec.order() > lim.max_order)
    throw size_limit_error("verify_hexagon: group order exceeds configured limit");
  HexagonReport report;
  auto phi = [&](const GroupElement& x, const GroupElement& y, const GroupElement& z) {
    return three_cocycle_value(spec, r.params, x, y, z);
  };
  for_each_tuple(spec, 3, [&](const std::vector<GroupElement>& t) {
    if (!report.ok) return;
    const GroupElement &x = t[0], &y = t[1], &z = t[2];
    if (phi(x, y, z) != phi(x, z, y)) {
      report.ok = false;
      report.counterexample = "associator slot symmetry fails at (" + x.str() + ", " + y.str() +
                              ", " + z.str() + ")";
      return;
    }
    UnityRoot lhs1 = braiding_value(r, x * y, z);
    UnityRoot rhs1 = braiding_value(r, x, z) + braiding_value(r, y, z) + phi(z, x, y) +
                     phi(x, y, z) - phi(x, z, y);
    if (lhs1 != rhs1) {
      report.ok = false;
      report.counterexample =
          "product identity in the first slot fails at (" + x.str() + ", " + y.str() + ", " +
          z.str() + ")";
      return;
    }
    UnityRoot lhs2 = braiding_value(r, x, y * z);
    UnityRoot rhs2 = braiding_value(r, x, y) + braiding_value(r, x, z) + phi(y, x, z) -
                     phi(y, z, x) - phi(x, y, z);
    if (lhs2 != rhs2) {
      report.ok = false;
      report.counterexample =
          "product identity in the second slot fails at (" + x.str() + ", " + y.str() + ", " +
          z.str() + ")";
    }
  });
  return report;
}

/// Pentagon identity for the associator on simple objects, as the five-term
/// comparison of the two reassociation routes of a fourfold product.
inline bool pentagon_holds(const BarCochain& assoc, const Limits& lim = {}) {
  if (assoc.arity() != 3) throw std::invalid_argument("pentagon_holds: arity-3 table expected");
  if (assoc.spec().order() > lim.max_order)
    throw size_limit_error("pentagon_holds: group order exceeds configured limit");
  bool ok = true;
  for_each_tuple(assoc.spec(), 4, [&](const std::vector<GroupElement>& t) {
    if (!ok) return;
    const GroupElement &x = t[0], &y = t[1], &z = t[2], &w = t[3];
    UnityRoot route_a = assoc.value(y, z, w) + assoc.value(x, y * z, w) + assoc.value(x, y, z);
    UnityRoot route_b = assoc.value(x * y, z, w) + assoc.value(x, y, z * w);
    if (route_a != route_b) ok = false;
  });
  return ok;
}

inline bool verify_pentagon(GroupSpec spec, CocycleParams p, const Limits& lim = {}) {
  return pentagon_holds(three_cocycle_rep(spec, p), lim);
}

/// Skew symmetry R(x,y) R(y,x) = 1, decided both by the closed-form criterion
/// (r11^2 = r22^2 = 1, r12 = r21^-1) and by sweeping the full table; the two
/// answers must coincide.
inline bool is_skew_symmetric(const QuasiBicharacter& r) {
  const bool closed = r.r11.times(2).is_trivial() && r.r22.times(2).is_trivial() &&
                      (r.r12 + r.r21).is_trivial();
  bool table = true;
  for_each_tuple(r.spec, 2, [&](const std::vector<GroupElement>& t) {
    if (table && !(braiding_value(r, t[0], t[1]) + braiding_value(r, t[1], t[0])).is_trivial())
      table = false;
  });
  if (closed != table)
    throw std::logic_error("is_skew_symmetric: criteria disagree on an unrealizable quadruple");
  return closed;
}

}  // namespace grcat

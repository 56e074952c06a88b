#pragma once

#include "grcat/cochain.hpp"
#include "grcat/resolution.hpp"
#include "grcat/solve_mod1.hpp"

namespace grcat {

/// Parameters (a, b, d) of the degree-3 representative family, with
/// 0 <= a < m, 0 <= b < gcd(m, n), 0 <= d < n.
struct CocycleParams {
  long long a = 0, b = 0, d = 0;
  friend auto operator<=>(const CocycleParams&, const CocycleParams&) = default;
  std::string str() const {
    return "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ", d=" + std::to_string(d) + ")";
  }
};

inline void validate_params(GroupSpec spec, CocycleParams p) {
  if (p.a < 0 || p.a >= spec.m || p.b < 0 || p.b >= spec.gcd_factors() || p.d < 0 || p.d >= spec.n)
    throw std::invalid_argument("cocycle parameters out of range for this group");
}

/// Values of a degree-2 cochain on the resolution generators (2,0), (1,1), (0,2).
struct ResolutionCochain2 {
  UnityRoot v20, v11, v02;
};

/// Values of a degree-3 cochain on the resolution generators (3,0), (2,1), (1,2), (0,3).
struct ResolutionCochain3 {
  UnityRoot v30, v21, v12, v03;
};

/// Representative l-cocycle of the cyclic group Z_m (n = 1), odd l <= 5:
/// value zeta_m^(a * i1 * carry(i2,i3) * ... * carry(i_{l-1}, i_l)).
inline UnityRoot cyclic_cocycle_value(GroupSpec spec, long long a,
                                      const std::vector<GroupElement>& args) {
  if (spec.n != 1) throw std::invalid_argument("cyclic cocycle: group must be cyclic (n = 1)");
  if (a < 0 || a >= spec.m) throw std::invalid_argument("cyclic cocycle: exponent out of range");
  const int l = static_cast<int>(args.size());
  if (l % 2 == 0) throw std::invalid_argument("cyclic cocycle: no nontrivial even-degree classes");
  if (l > kMaxBarDegree) throw std::invalid_argument("cyclic cocycle: degree above ceiling");
  long long e = a * args[0].i();
  for (int t = 1; t + 1 < l && e != 0; t += 2)
    e *= floor_div(args[t].i() + args[t + 1].i(), spec.m);
  return UnityRoot(e, spec.m);
}

/// Dense table of the cyclic representative, arity 1 or 3.
inline BarCochain cyclic_cocycle_rep(GroupSpec spec, long long a, int arity) {
  if (arity != 1 && arity != 3)
    throw std::invalid_argument("cyclic cocycle: dense tables only for arity 1 or 3");
  return BarCochain::tabulate(spec, arity, [&](const std::vector<GroupElement>& t) {
    return cyclic_cocycle_value(spec, a, t);
  });
}

/// Representative 2-cocycle: (x, y) -> zeta_gcd(m,n)^(b * j * s) for
/// x = g1^i g2^j, y = g1^s g2^t.
inline BarCochain two_cocycle_rep(GroupSpec spec, long long b) {
  if (b < 0 || b >= spec.gcd_factors())
    throw std::invalid_argument("two_cocycle_rep: parameter out of range");
  return BarCochain::tabulate(spec, 2, [&](const std::vector<GroupElement>& t) {
    return UnityRoot(b * t[0].j() * t[1].i(), spec.gcd_factors());
  });
}

inline UnityRoot three_cocycle_value(GroupSpec spec, CocycleParams p, const GroupElement& x,
                                     const GroupElement& y, const GroupElement& z) {
  const long long carry1 = floor_div(z.i() + y.i(), spec.m);
  const long long carry2 = floor_div(y.j() + z.j(), spec.n);
  UnityRoot v(p.a * carry1 * x.i(), spec.m);
  v += UnityRoot(p.b * carry1 * x.j() + p.d * carry2 * x.j(), spec.n);
  return v;
}

/// Representative 3-cocycle with parameters (a, b, d): on (x, y, z) with
/// exponents (i,j), (s,t), (k,l) the value is
/// zeta_m^(a*[(k+s)/m]*i) * zeta_n^(b*[(k+s)/m]*j) * zeta_n^(d*[(t+l)/n]*j).
inline BarCochain three_cocycle_rep(GroupSpec spec, CocycleParams p) {
  validate_params(spec, p);
  return BarCochain::tabulate(spec, 3, [&](const std::vector<GroupElement>& t) {
    return three_cocycle_value(spec, p, t[0], t[1], t[2]);
  });
}

/// Bar cochain carried over from a degree-2 resolution cochain:
/// (x, y) -> v20^[(i+s)/m] * v11^(-j*s) * v02^[(j+t)/n].
inline BarCochain bar_cochain(GroupSpec spec, const ResolutionCochain2& rc) {
  return BarCochain::tabulate(spec, 2, [&](const std::vector<GroupElement>& t) {
    const long long i = t[0].i(), j = t[0].j(), s = t[1].i(), tt = t[1].j();
    return rc.v20.times(floor_div(i + s, spec.m)) + rc.v11.times(-j * s) +
           rc.v02.times(floor_div(j + tt, spec.n));
  });
}

/// Bar cochain carried over from a degree-3 resolution cochain:
/// (x, y, z) -> v30^([(k+s)/m]*i) * v21^([(k+s)/m]*j) * v12^([(j+t)/n]*k) * v03^([(t+l)/n]*j).
inline BarCochain bar_cochain(GroupSpec spec, const ResolutionCochain3& rc) {
  return BarCochain::tabulate(spec, 3, [&](const std::vector<GroupElement>& t) {
    const long long i = t[0].i(), j = t[0].j();
    const long long s = t[1].i(), tt = t[1].j();
    const long long k = t[2].i(), l = t[2].j();
    const long long carry1 = floor_div(k + s, spec.m);
    const long long carry2 = floor_div(j + tt, spec.n);
    const long long carry3 = floor_div(tt + l, spec.n);
    return rc.v30.times(carry1 * i) + rc.v21.times(carry1 * j) + rc.v12.times(carry2 * k) +
           rc.v03.times(carry3 * j);
  });
}

/// Closed-form cocycle criterion on the resolution side: the middle value must
/// be killed by both m and n.
inline bool is_cocycle_resolution(GroupSpec spec, const ResolutionCochain2& rc) {
  return rc.v11.times(spec.m).is_trivial() && rc.v11.times(spec.n).is_trivial();
}

/// Degree 3: v30^m = 1, v21^n * v12^m = 1, v03^n = 1.
inline bool is_cocycle_resolution(GroupSpec spec, const ResolutionCochain3& rc) {
  return rc.v30.times(spec.m).is_trivial() &&
         (rc.v21.times(spec.n) + rc.v12.times(spec.m)).is_trivial() &&
         rc.v03.times(spec.n).is_trivial();
}

inline bool is_coboundary_resolution(GroupSpec /*spec*/, const ResolutionCochain2& rc) {
  return rc.v11.is_trivial();
}

/// Degree 3: the outer values must be trivial and (v21, v12) = (E^m, E^-n)
/// must be solvable for a single E, decided over Q/Z.
inline bool is_coboundary_resolution(GroupSpec spec, const ResolutionCochain3& rc) {
  if (!rc.v30.is_trivial() || !rc.v03.is_trivial()) return false;
  IntMatrix a(2, 1);
  a(0, 0) = spec.m;
  a(1, 0) = -spec.n;
  return solve_mod1(a, {rc.v21, rc.v12}).has_value();
}

}  // namespace grcat

#pragma once

#include "grcat/resolution.hpp"

namespace grcat {

/// Chain map from the bar resolution of a cyclic group (n = 1) to its minimal
/// 2-periodic resolution, in every degree up to kMaxBarDegree. In odd degree
/// the image is the partial geometric sum in the first exponent times a
/// product of carry factors over the remaining adjacent pairs; in even degree
/// it is the integer product of carry factors over all adjacent pairs.
inline FreeModuleElem<TensorGenerator> cyclic_chain_map(const BarGenerator& x) {
  const GroupSpec spec = x.spec();
  if (spec.n != 1) throw std::invalid_argument("cyclic_chain_map: group must be cyclic (n = 1)");
  const int l = x.degree();
  if (l < 1) throw std::invalid_argument("cyclic_chain_map: degree must be >= 1");
  const long long m = spec.m;
  FreeModuleElem<TensorGenerator> out(spec);

  if (l % 2 == 1) {
    long long factor = 1;
    for (int t = 1; t + 1 < l; t += 2)
      factor *= floor_div(x.entry(t).i() + x.entry(t + 1).i(), m);
    if (factor == 0) return out;
    GroupRingElem coeff(spec);
    for (long long alpha = 0; alpha < x.entry(0).i(); ++alpha)
      coeff.add_term(GroupElement(spec, alpha, 0), factor);
    out.add({l, 0}, coeff);
  } else {
    long long factor = 1;
    for (int t = 0; t + 1 < l; t += 2)
      factor *= floor_div(x.entry(t).i() + x.entry(t + 1).i(), m);
    if (factor == 0) return out;
    out.add({l, 0}, GroupRingElem::of(GroupElement::identity(spec), factor));
  }
  return out;
}

/// Chain map from the bar resolution of Z_m x Z_n to the tensor-product
/// resolution, written out in degrees 1..3.
inline FreeModuleElem<TensorGenerator> product_chain_map(const BarGenerator& x) {
  const GroupSpec spec = x.spec();
  const long long m = spec.m, n = spec.n;
  FreeModuleElem<TensorGenerator> out(spec);
  switch (x.degree()) {
    case 1: {
      const long long i = x.entry(0).i(), j = x.entry(0).j();
      GroupRingElem c10(spec);
      for (long long a = 0; a < i; ++a) c10.add_term(GroupElement(spec, a, 0), 1);
      out.add({1, 0}, c10);
      GroupRingElem c01(spec);
      for (long long b = 0; b < j; ++b) c01.add_term(GroupElement(spec, i, b), 1);
      out.add({0, 1}, c01);
      return out;
    }
    case 2: {
      const long long i = x.entry(0).i(), j = x.entry(0).j();
      const long long s = x.entry(1).i(), t = x.entry(1).j();
      out.add({2, 0}, GroupRingElem::of(GroupElement::identity(spec), floor_div(i + s, m)));
      GroupRingElem c11(spec);
      for (long long a = 0; a < s; ++a)
        for (long long b = 0; b < j; ++b) c11.add_term(GroupElement(spec, a + i, b), -1);
      out.add({1, 1}, c11);
      out.add({0, 2}, GroupRingElem::of(GroupElement(spec, i + s, 0), floor_div(j + t, n)));
      return out;
    }
    case 3: {
      const long long i = x.entry(0).i(), j = x.entry(0).j();
      const long long s = x.entry(1).i(), t = x.entry(1).j();
      const long long k = x.entry(2).i(), l = x.entry(2).j();
      GroupRingElem c30(spec);
      for (long long a = 0; a < i; ++a) c30.add_term(GroupElement(spec, a, 0), floor_div(k + s, m));
      out.add({3, 0}, c30);
      GroupRingElem c21(spec);
      for (long long b = 0; b < j; ++b) c21.add_term(GroupElement(spec, i, b), floor_div(k + s, m));
      out.add({2, 1}, c21);
      GroupRingElem c12(spec);
      for (long long a = 0; a < k; ++a)
        c12.add_term(GroupElement(spec, i + s + a, 0), floor_div(j + t, n));
      out.add({1, 2}, c12);
      GroupRingElem c03(spec);
      for (long long b = 0; b < j; ++b)
        c03.add_term(GroupElement(spec, i + s + k, b), floor_div(t + l, n));
      out.add({0, 3}, c03);
      return out;
    }
    default:
      throw std::invalid_argument("product_chain_map: only degrees 1..3 are written out");
  }
}

/// Z[G]-linear extension; the empty generator goes to the degree-0 generator.
inline FreeModuleElem<TensorGenerator> chain_map_image(const FreeModuleElem<BarGenerator>& x,
                                                       bool cyclic) {
  FreeModuleElem<TensorGenerator> out(x.spec());
  for (const auto& [gen, c] : x.terms()) {
    if (gen.degree() == 0)
      out.add({0, 0}, c);
    else
      out += c * (cyclic ? cyclic_chain_map(gen) : product_chain_map(gen));
  }
  return out;
}

struct ChainMapReport {
  bool ok = true;
  int max_degree = 0;
  long long generators_checked = 0;
  std::string counterexample;
};

/// Commutation d(F_k(x)) = F_{k-1}(bar_differential(x)) for every bar
/// generator of degree k <= max_degree. Cyclic groups (n = 1) use the
/// all-degree map (max_degree <= 5); genuine products use the degree-1..3 map.
inline ChainMapReport verify_chain_map(GroupSpec spec, int max_degree,
                                       long long limit = kDefaultTupleLimit) {
  const bool cyclic = spec.n == 1;
  if (max_degree < 1 || max_degree > (cyclic ? kMaxBarDegree : 3))
    throw std::invalid_argument("verify_chain_map: unsupported degree for this group");
  ChainMapReport report;
  report.max_degree = max_degree;
  for (int deg = 1; deg <= max_degree && report.ok; ++deg) {
    for_each_tuple(
        spec, deg,
        [&](const std::vector<GroupElement>& tuple) {
          if (!report.ok) return;
          BarGenerator x(spec, tuple);
          auto lhs = tensor_differential(cyclic ? cyclic_chain_map(x) : product_chain_map(x));
          auto rhs = chain_map_image(bar_differential(x), cyclic);
          ++report.generators_checked;
          if (lhs != rhs) {
            report.ok = false;
            report.counterexample = x.str() + ": d(F(x)) = " + lhs.str() +
                                    " but F(d(x)) = " + rhs.str();
          }
        },
        limit);
  }
  return report;
}

}  // namespace grcat

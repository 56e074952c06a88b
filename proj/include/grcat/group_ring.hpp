#pragma once

#include <map>

#include "grcat/group.hpp"

namespace grcat {

/// Element of the integral group ring Z[Z_m x Z_n]: a finite formal sum of
/// group elements with integer coefficients. Zero coefficients are never
/// stored, so equality is support-wise.
class GroupRingElem {
 public:
  explicit GroupRingElem(GroupSpec spec) : spec_(spec) {}

  static GroupRingElem zero(GroupSpec spec) { return GroupRingElem(spec); }
  static GroupRingElem unit(GroupSpec spec) { return of(GroupElement::identity(spec)); }
  static GroupRingElem of(const GroupElement& g, BigInt c = 1) {
    GroupRingElem e(g.spec());
    e.add_term(g, c);
    return e;
  }

  const GroupSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  BigInt coeff(const GroupElement& g) const {
    require_spec(g.spec());
    auto it = coeffs_.find(g.index());
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add_term(const GroupElement& g, const BigInt& c) {
    require_spec(g.spec());
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(g.index(), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  /// Coefficients keyed by the lexicographic element index.
  const std::map<long long, BigInt>& terms() const { return coeffs_; }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    require_spec(o.spec_);
    for (const auto& [idx, c] : o.coeffs_) add_term(GroupElement::from_index(spec_, idx), c);
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    require_spec(o.spec_);
    for (const auto& [idx, c] : o.coeffs_) add_term(GroupElement::from_index(spec_, idx), -c);
    return *this;
  }
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator-(const GroupRingElem& a) {
    GroupRingElem r(a.spec_);
    for (const auto& [idx, c] : a.coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
  }

  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    a.require_spec(b.spec_);
    GroupRingElem r(a.spec_);
    for (const auto& [ia, ca] : a.coeffs_)
      for (const auto& [ib, cb] : b.coeffs_)
        r.add_term(GroupElement::from_index(a.spec_, ia) * GroupElement::from_index(a.spec_, ib),
                   ca * cb);
    return r;
  }
  friend GroupRingElem operator*(const BigInt& c, const GroupRingElem& a) {
    GroupRingElem r(a.spec_);
    if (c != 0)
      for (const auto& [idx, v] : a.coeffs_) r.coeffs_.emplace(idx, c * v);
    return r;
  }

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    a.require_spec(b.spec_);
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

  /// Augmentation: the sum of all coefficients (image under G -> 1).
  BigInt augmentation() const {
    BigInt s(0);
    for (const auto& [idx, c] : coeffs_) s += c;
    return s;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += c.str() + "*(" + GroupElement::from_index(spec_, idx).str() + ")";
    }
    return out;
  }

 private:
  void require_spec(const GroupSpec& s) const {
    if (!(s == spec_))
      throw std::invalid_argument("GroupRingElem: operands belong to different groups");
  }

  GroupSpec spec_;
  std::map<long long, BigInt> coeffs_;
};

/// N_m = sum of powers of g1 (factor 1) or N_n = sum of powers of g2 (factor 2).
inline GroupRingElem norm_element(GroupSpec spec, int factor) {
  if (factor != 1 && factor != 2) throw std::invalid_argument("norm_element: factor must be 1 or 2");
  GroupRingElem e(spec);
  long long count = factor == 1 ? spec.m : spec.n;
  for (long long k = 0; k < count; ++k)
    e.add_term(factor == 1 ? GroupElement(spec, k, 0) : GroupElement(spec, 0, k), 1);
  return e;
}

/// T_m = g1 - 1 (factor 1) or T_n = g2 - 1 (factor 2).
inline GroupRingElem translation_element(GroupSpec spec, int factor) {
  if (factor != 1 && factor != 2)
    throw std::invalid_argument("translation_element: factor must be 1 or 2");
  GroupRingElem e(spec);
  e.add_term(factor == 1 ? GroupElement(spec, 1, 0) : GroupElement(spec, 0, 1), 1);
  e.add_term(GroupElement::identity(spec), -1);
  return e;
}

}  // namespace grcat

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "grcat/group_ring.hpp"
#include "grcat/smith.hpp"

namespace grcat {

/// Symbolic bar-resolution generators are supported one degree past the dense
/// cochain tables: degree-5 generators are needed to drive the cyclic chain
/// map through degree 5.
inline constexpr int kMaxBarDegree = 5;

/// Free generator [x1, ..., xl] of the bar resolution, 0 <= l <= kMaxBarDegree.
class BarGenerator {
 public:
  BarGenerator(GroupSpec spec, std::vector<GroupElement> entries)
      : spec_(spec), entries_(std::move(entries)) {
    if (entries_.size() > kMaxBarDegree)
      throw std::invalid_argument("BarGenerator: degree above supported ceiling");
    for (const GroupElement& g : entries_)
      if (!(g.spec() == spec_))
        throw std::invalid_argument("BarGenerator: entry from a different group");
  }

  static BarGenerator empty(GroupSpec spec) { return BarGenerator(spec, {}); }

  const GroupSpec& spec() const { return spec_; }
  int degree() const { return static_cast<int>(entries_.size()); }
  const GroupElement& entry(int k) const { return entries_.at(k); }
  const std::vector<GroupElement>& entries() const { return entries_; }

  friend bool operator==(const BarGenerator& a, const BarGenerator& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const BarGenerator& a, const BarGenerator& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = 0; k < a.degree(); ++k) {
      if (a.entries_[k] < b.entries_[k]) return true;
      if (b.entries_[k] < a.entries_[k]) return false;
    }
    return false;
  }

  std::string str() const {
    std::string out = "[";
    for (int k = 0; k < degree(); ++k) {
      if (k) out += ", ";
      out += entries_[k].str();
    }
    return out + "]";
  }

 private:
  GroupSpec spec_;
  std::vector<GroupElement> entries_;
};

/// Free generator of the tensor-product resolution in bidegree (p, q); its
/// total degree is p + q. With n = 1 the generators (p, 0) are the generators
/// of the 2-periodic minimal resolution of the cyclic group.
struct TensorGenerator {
  int p = 0, q = 0;
  int degree() const { return p + q; }
  friend auto operator<=>(const TensorGenerator&, const TensorGenerator&) = default;

  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

/// Element of a free Z[G]-module: a formal sum of generators with group-ring
/// coefficients, all in one degree. Zero coefficients are dropped.
template <class Gen>
class FreeModuleElem {
 public:
  explicit FreeModuleElem(GroupSpec spec) : spec_(spec) {}

  const GroupSpec& spec() const { return spec_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Gen, GroupRingElem>& terms() const { return terms_; }

  void add(const Gen& gen, const GroupRingElem& coeff) {
    if (coeff.is_zero()) return;
    if (!terms_.empty() && terms_.begin()->first.degree() != gen.degree())
      throw std::invalid_argument("FreeModuleElem: mixed degrees");
    auto [it, inserted] = terms_.emplace(gen, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FreeModuleElem& operator+=(const FreeModuleElem& o) {
    for (const auto& [gen, c] : o.terms_) add(gen, c);
    return *this;
  }
  FreeModuleElem& operator-=(const FreeModuleElem& o) {
    for (const auto& [gen, c] : o.terms_) add(gen, -c);
    return *this;
  }
  friend FreeModuleElem operator+(FreeModuleElem a, const FreeModuleElem& b) { return a += b; }
  friend FreeModuleElem operator-(FreeModuleElem a, const FreeModuleElem& b) { return a -= b; }

  /// Left multiplication by a group-ring element.
  friend FreeModuleElem operator*(const GroupRingElem& c, const FreeModuleElem& x) {
    FreeModuleElem r(x.spec_);
    for (const auto& [gen, v] : x.terms_) r.add(gen, c * v);
    return r;
  }

  friend bool operator==(const FreeModuleElem& a, const FreeModuleElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeModuleElem& a, const FreeModuleElem& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [gen, c] : terms_) {
      if (!out.empty()) out += "  +  ";
      out += "(" + c.str() + ")*" + gen.str();
    }
    return out;
  }

 private:
  GroupSpec spec_;
  std::map<Gen, GroupRingElem> terms_;
};

/// Bar differential: the alternating sum sending [x1,...,xl] to
/// x1*[x2,...,xl] + sum_j (-1)^j [..., x_j x_{j+1}, ...] + (-1)^l [x1,...,x_{l-1}].
inline FreeModuleElem<BarGenerator> bar_differential(const BarGenerator& x) {
  const int l = x.degree();
  if (l < 1) throw std::invalid_argument("bar_differential: degree must be >= 1");
  const GroupSpec spec = x.spec();
  FreeModuleElem<BarGenerator> out(spec);

  std::vector<GroupElement> head(x.entries().begin() + 1, x.entries().end());
  out.add(BarGenerator(spec, std::move(head)), GroupRingElem::of(x.entry(0)));

  for (int j = 1; j <= l - 1; ++j) {
    std::vector<GroupElement> entries;
    entries.reserve(l - 1);
    for (int k = 0; k < l; ++k) {
      if (k == j - 1) continue;
      entries.push_back(k == j ? x.entry(j - 1) * x.entry(j) : x.entry(k));
    }
    out.add(BarGenerator(spec, std::move(entries)),
            GroupRingElem::of(GroupElement::identity(spec), (j % 2 == 0) ? 1 : -1));
  }

  std::vector<GroupElement> tail(x.entries().begin(), x.entries().end() - 1);
  out.add(BarGenerator(spec, std::move(tail)),
          GroupRingElem::of(GroupElement::identity(spec), (l % 2 == 0) ? 1 : -1));
  return out;
}

inline FreeModuleElem<BarGenerator> bar_differential(const FreeModuleElem<BarGenerator>& x) {
  FreeModuleElem<BarGenerator> out(x.spec());
  for (const auto& [gen, c] : x.terms()) out += c * bar_differential(gen);
  return out;
}

/// Differential of the tensor-product resolution on c * (p, q): the first
/// component alternates T_m / N_m in p, the second alternates T_n / N_n in q
/// with the sign (-1)^p, degree-0 pieces contribute nothing.
inline FreeModuleElem<TensorGenerator> tensor_differential(const GroupRingElem& c,
                                                           TensorGenerator gen) {
  if (gen.degree() < 1)
    throw std::invalid_argument("tensor_differential: generator degree must be >= 1");
  const GroupSpec spec = c.spec();
  FreeModuleElem<TensorGenerator> out(spec);
  if (gen.p > 0) {
    GroupRingElem d1 = gen.p % 2 == 1 ? translation_element(spec, 1) : norm_element(spec, 1);
    out.add({gen.p - 1, gen.q}, c * d1);
  }
  if (gen.q > 0) {
    GroupRingElem d2 = gen.q % 2 == 1 ? translation_element(spec, 2) : norm_element(spec, 2);
    if (gen.p % 2 == 1) d2 = -d2;
    out.add({gen.p, gen.q - 1}, c * d2);
  }
  return out;
}

inline FreeModuleElem<TensorGenerator> tensor_differential(
    const FreeModuleElem<TensorGenerator>& x) {
  FreeModuleElem<TensorGenerator> out(x.spec());
  for (const auto& [gen, c] : x.terms()) out += tensor_differential(c, gen);
  return out;
}

struct ComplexReport {
  bool dd_zero = true;
  bool exact = true;
  long long generators_checked = 0;
  std::string detail;
  bool ok() const { return dd_zero && exact; }
};

namespace detail {

inline std::vector<TensorGenerator> tensor_generators_of_degree(int degree) {
  std::vector<TensorGenerator> gens;
  for (int p = degree; p >= 0; --p) gens.push_back({p, degree - p});
  return gens;
}

/// Integer matrix of the tensor differential from degree deg to deg-1 over the
/// Z-basis {g * generator}, columns indexed by (generator, group element).
inline IntMatrix tensor_differential_matrix(GroupSpec spec, int deg) {
  const auto src = tensor_generators_of_degree(deg);
  const auto dst = tensor_generators_of_degree(deg - 1);
  const long long ord = spec.order();
  IntMatrix mat(dst.size() * ord, src.size() * ord);
  for (std::size_t gi = 0; gi < src.size(); ++gi) {
    for (long long e = 0; e < ord; ++e) {
      auto img = tensor_differential(GroupRingElem::of(GroupElement::from_index(spec, e)), src[gi]);
      const std::size_t col = gi * ord + e;
      for (const auto& [gen, coeff] : img.terms()) {
        std::size_t di = 0;
        while (di < dst.size() && !(dst[di] == gen)) ++di;
        for (const auto& [idx, c] : coeff.terms()) mat(di * ord + idx, col) = c;
      }
    }
  }
  return mat;
}

/// True when ker(a) = im(b) as subgroups of Z^k, given a*b = 0. The last
/// cols(a) - rank(a) columns of `right` are a basis of ker(a), so v * b
/// expresses the image in kernel coordinates; the quotient is trivial exactly
/// when that coordinate matrix has full rank with unit invariant factors.
inline bool homology_trivial(const IntMatrix& a, const IntMatrix& b) {
  SnfDecomposition sa = smith_normal_form(a, /*with_uv=*/true);
  const std::size_t kdim = a.cols() - sa.rank;
  IntMatrix coords = sa.v * b;
  for (std::size_t i = 0; i < sa.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (coords(i, j) != 0)
        throw std::logic_error("homology_trivial: image not contained in kernel");
  if (kdim == 0) return true;
  IntMatrix reduced(kdim, b.cols());
  for (std::size_t i = 0; i < kdim; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) reduced(i, j) = coords(sa.rank + i, j);
  SnfDecomposition sq = smith_normal_form(reduced, /*with_uv=*/false);
  if (sq.rank < kdim) return false;
  for (std::size_t i = 0; i < kdim; ++i)
    if (sq.s(i, i) != 1) return false;
  return true;
}

}  // namespace detail

/// Checks d(d(gen)) = 0 symbolically for every generator of degree <= max_degree
/// and, as abelian groups, exactness of the resolution in degrees
/// 1 .. max_degree - 1 via Smith normal form.
inline ComplexReport verify_complex(GroupSpec spec, int max_degree,
                                    long long limit = kDefaultTupleLimit) {
  if (max_degree < 2 || max_degree > 4)
    throw std::invalid_argument("verify_complex: max_degree must be in [2, 4]");
  ComplexReport report;
  for (int deg = 2; deg <= max_degree; ++deg) {
    for (TensorGenerator gen : detail::tensor_generators_of_degree(deg)) {
      auto dd = tensor_differential(tensor_differential(GroupRingElem::unit(spec), gen));
      ++report.generators_checked;
      if (!dd.is_zero()) {
        report.dd_zero = false;
        report.detail = "d(d(" + gen.str() + ")) != 0";
        return report;
      }
    }
  }
  const long long ord = spec.order();
  if (ord * (max_degree + 1) > limit)
    throw size_limit_error("verify_complex: module rank exceeds limit");
  for (int deg = 1; deg + 1 <= max_degree; ++deg) {
    IntMatrix a = detail::tensor_differential_matrix(spec, deg);
    IntMatrix b = detail::tensor_differential_matrix(spec, deg + 1);
    if (!detail::homology_trivial(a, b)) {
      report.exact = false;
      report.detail = "homology nonzero in degree " + std::to_string(deg);
      return report;
    }
  }
  return report;
}

}  // namespace grcat

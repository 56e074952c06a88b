#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grcat/smith.hpp"
#include "grcat/unity_root.hpp"

namespace grcat {

/// Solves A*x = b over Q/Z for a fixed integer matrix A and many right-hand
/// sides, reusing one Smith decomposition. With left*A*right = S the system
/// becomes S*y = left*b, x = right*y; rows of S beyond the rank obstruct
/// solvability, every nonzero diagonal entry is harmless because Q/Z is
/// divisible.
class Mod1Solver {
 public:
  explicit Mod1Solver(IntMatrix a)
      : a_(std::move(a)), snf_(smith_normal_form(a_, /*with_uv=*/false)) {}

  const IntMatrix& matrix() const { return a_; }
  const SnfDecomposition& decomposition() const { return snf_; }

  bool solvable(const std::vector<UnityRoot>& b) const {
    check_dims(b);
    const std::size_t rows = a_.rows();
    BigInt den(1);
    for (const UnityRoot& v : b) den = boost::multiprecision::lcm(den, v.den());
    if (den <= kFastDenLimit) {
      const long long dd = den.convert_to<long long>();
      const auto& lmod = left_mod(dd);
      std::vector<long long> nums(rows);
      for (std::size_t k = 0; k < rows; ++k)
        nums[k] = (b[k].num() * (den / b[k].den())).convert_to<long long>();
      for (std::size_t i = snf_.rank; i < rows; ++i) {
        unsigned long long acc = 0;
        const auto& lrow = lmod[i - snf_.rank];
        for (std::size_t k = 0; k < rows; ++k) {
          if (nums[k] == 0 || lrow[k] == 0) continue;
          acc = (acc + static_cast<unsigned long long>(lrow[k]) *
                           static_cast<unsigned long long>(nums[k])) %
                static_cast<unsigned long long>(dd);
        }
        if (acc != 0) return false;
      }
      return true;
    }
    for (std::size_t i = snf_.rank; i < rows; ++i)
      if (!transformed_entry(b, i).is_trivial()) return false;
    return true;
  }

  std::optional<std::vector<UnityRoot>> solve(const std::vector<UnityRoot>& b) const {
    check_dims(b);
    const std::size_t rows = a_.rows(), cols = a_.cols();
    for (std::size_t i = snf_.rank; i < rows; ++i)
      if (!transformed_entry(b, i).is_trivial()) return std::nullopt;
    std::vector<UnityRoot> y(cols);
    for (std::size_t i = 0; i < snf_.rank; ++i) {
      UnityRoot c = transformed_entry(b, i);
      y[i] = UnityRoot(c.num(), c.den() * snf_.s(i, i));
    }
    std::vector<UnityRoot> x(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      UnityRoot acc;
      for (std::size_t i = 0; i < cols; ++i)
        if (!y[i].is_trivial() && snf_.right(j, i) != 0) acc += y[i].times(snf_.right(j, i));
      x[j] = acc;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      UnityRoot acc;
      for (std::size_t j = 0; j < cols; ++j)
        if (!x[j].is_trivial() && a_(i, j) != 0) acc += x[j].times(a_(i, j));
      if (acc != b[i]) throw std::logic_error("Mod1Solver: witness failed verification");
    }
    return x;
  }

 private:
  static constexpr long long kFastDenLimit = 1LL << 30;

  void check_dims(const std::vector<UnityRoot>& b) const {
    if (b.size() != a_.rows())
      throw std::invalid_argument("Mod1Solver: right-hand side has wrong length");
  }

  // (left * b)_i reduced mod 1, exact.
  UnityRoot transformed_entry(const std::vector<UnityRoot>& b, std::size_t i) const {
    BigInt den(1);
    for (const UnityRoot& v : b) den = boost::multiprecision::lcm(den, v.den());
    BigInt num(0);
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k].num() == 0) continue;
      const BigInt& l = snf_.left(i, k);
      if (l == 0) continue;
      num += l * b[k].num() * (den / b[k].den());
    }
    return UnityRoot(num, den);
  }

  // rows [rank, rows) of left reduced mod d, cached per denominator
  const std::vector<std::vector<long long>>& left_mod(long long d) const {
    auto it = left_mod_cache_.find(d);
    if (it != left_mod_cache_.end()) return it->second;
    const std::size_t rows = a_.rows();
    std::vector<std::vector<long long>> rowsv;
    rowsv.reserve(rows - snf_.rank);
    for (std::size_t i = snf_.rank; i < rows; ++i) {
      std::vector<long long> r(rows);
      for (std::size_t k = 0; k < rows; ++k) {
        BigInt v = snf_.left(i, k) % d;
        if (v < 0) v += d;
        r[k] = v.convert_to<long long>();
      }
      rowsv.push_back(std::move(r));
    }
    return left_mod_cache_.emplace(d, std::move(rowsv)).first->second;
  }

  IntMatrix a_;
  SnfDecomposition snf_;
  mutable std::map<long long, std::vector<std::vector<long long>>> left_mod_cache_;
};

/// One witness for A*x = b (mod 1), or nothing when the system is obstructed.
inline std::optional<std::vector<UnityRoot>> solve_mod1(const IntMatrix& a,
                                                        const std::vector<UnityRoot>& b) {
  return Mod1Solver(a).solve(b);
}

}  // namespace grcat

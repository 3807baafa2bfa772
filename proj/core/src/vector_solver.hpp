#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "lendens/element.hpp"
#include "length_row.hpp"

namespace lendens::detail {

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

template <typename T>
using VectorMap = std::unordered_map<IntVector, T, VectorHash>;

/// Nonnegative integer solutions of sum f_i * atom_i = target for atoms with
/// nonnegative coordinates. Every factorization of x uses an atom whose first
/// nonzero coordinate is the first nonzero coordinate of x; both the
/// enumeration and the length recursion branch only on those atoms.
class VectorSolver {
 public:
  explicit VectorSolver(std::vector<IntVector> atoms);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return atoms_.size(); }

  bool enumerate(const IntVector& target, std::uint64_t budget,
                 const std::function<void(const IntVector&)>& emit) const;

  /// Length rows for `elements`, which must be sorted by coordinate sum and
  /// contain every element x - a of the monoid reachable from a listed x.
  std::vector<LengthRow> lengths_bulk(const std::vector<IntVector>& elements) const;

  /// Length row of a single target; empty when the target is not in the
  /// monoid. Throws BudgetExceeded when the sub-target closure grows past
  /// `budget` vectors.
  LengthRow lengths(const IntVector& target, std::uint64_t budget) const;

  /// All monoid elements y <= bound componentwise.
  std::vector<IntVector> elements_below(const IntVector& bound, std::uint64_t budget) const;

 private:
  std::int64_t max_length(const IntVector& v) const;

  std::size_t dimension_ = 0;
  std::vector<IntVector> atoms_;
  std::vector<std::vector<std::size_t>> by_first_;  // atom indices grouped by first support coordinate
  std::int64_t min_atom_sum_ = 1;
};

std::int64_t coordinate_sum(const IntVector& v);
int first_support(const IntVector& v);

}  // namespace lendens::detail

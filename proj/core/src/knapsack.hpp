#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lendens/element.hpp"
#include "length_row.hpp"

namespace lendens::detail {

/// Atom of a one-equation problem: contributes `weight` to the degree and
/// `step` to the length per unit of exponent.
struct WeightedAtom {
  std::int64_t weight;
  std::int64_t step;
};

/// Nonnegative solutions of sum f_i * weight_i = target, their lengths
/// sum f_i * step_i, and membership. Weights are reduced by their gcd.
class SingleConstraintSolver {
 public:
  /// Cap on the total number of 64-bit words a length table may allocate.
  static constexpr std::uint64_t kMaxTableWords = std::uint64_t{1} << 26;

  explicit SingleConstraintSolver(std::vector<WeightedAtom> atoms);

  std::size_t size() const { return atoms_.size(); }

  bool representable(std::int64_t target) const;

  /// Calls `emit` with every solution (original atom order). Returns false if
  /// the node budget ran out first.
  bool enumerate(std::int64_t target, std::uint64_t budget,
                 const std::function<void(const IntVector&)>& emit) const;

  /// Achievable lengths for one target; empty row when not representable.
  LengthRow lengths(std::int64_t target) const;

  /// Rows for every target in [0, max_target].
  std::vector<LengthRow> length_table(std::int64_t max_target) const;

 private:
  bool reduce(std::int64_t target, std::int64_t& reduced) const;
  /// Rows for reduced targets 0..t (weights already divided by the gcd).
  std::vector<LengthRow> reduced_table(std::int64_t t) const;

  std::vector<WeightedAtom> atoms_;     // reduced weights, original order
  std::vector<std::size_t> order_;      // indices by descending weight
  std::int64_t gcd_ = 1;
  std::int64_t min_weight_ = 0;
  std::vector<std::int64_t> apery_;     // smallest representable value per residue mod min weight
};

}  // namespace lendens::detail

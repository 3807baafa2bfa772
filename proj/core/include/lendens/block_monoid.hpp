#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lendens/affine.hpp"

namespace lendens {

struct GroupElement {
  IntVector residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.residues <=> b.residues;
  }
};

/// Z_{n_1} + ... + Z_{n_k} with n_1 | n_2 | ... | n_k, each n_i >= 2.
class FiniteAbelianGroup {
 public:
  /// Any list of cyclic orders (>= 1); normalized to invariant factors.
  explicit FiniteAbelianGroup(const std::vector<std::int64_t>& cyclic_orders = {});
  /// "Z4", "Z2xZ2xZ3", "Z1" (trivial).
  static FiniteAbelianGroup parse(const std::string& text);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }

  GroupElement zero() const { return {IntVector(factors_.size(), 0)}; }
  /// Reduces each residue into [0, n_i).
  GroupElement element(IntVector residues) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;

  /// Mixed-radix position, last coordinate fastest; zero has index 0.
  std::int64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::int64_t index) const;
  /// All elements in index order.
  std::vector<GroupElement> elements() const;

  /// "(1)" or "(0,1)".
  std::string format(const GroupElement& g) const;
  /// Semicolon separated elements, "(1);(4)"; a bare integer is accepted for
  /// rank-one groups.
  std::vector<GroupElement> parse_subset(const std::string& text) const;
  GroupElement parse_element(const std::string& text) const;
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

/// Multiplicity vector over a support list of group elements.
struct ZeroSumSequence {
  std::vector<GroupElement> support;
  IntVector multiplicities;

  std::int64_t length() const;
};

/// Minimal zero-sum sequences over S of length <= max_len, ordered by
/// length and then by multiplicity vector. S is deduplicated and sorted by
/// group index. Throws BudgetExceeded after `budget` search nodes.
std::vector<ZeroSumSequence> zero_sum_atoms(const FiniteAbelianGroup& g,
                                            std::vector<GroupElement> subset,
                                            std::int64_t max_len,
                                            std::uint64_t budget = kDefaultBudget);

/// 1 + the longest zero-sum free sequence over G.
std::int64_t davenport(const FiniteAbelianGroup& g, std::uint64_t budget = kDefaultBudget);

/// B(G, S) as an affine monoid: coordinates are multiplicities over S and
/// the generators are the minimal zero-sum sequences.
class BlockMonoid final : public AffineSemigroup {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& support() const { return support_; }
  const std::vector<ZeroSumSequence>& atom_sequences() const { return atoms_; }
  std::int64_t davenport_constant() const { return davenport_; }

  MonoidKind kind() const override { return MonoidKind::kBlock; }
  bool contains(const Element& x) const override;
  std::string atom_name(std::size_t index) const override { return format(atom(index)); }
  /// "(1)^5(4)^5"; the empty sequence is "[]".
  std::string format(const Element& x) const override;
  std::string describe() const override;

  /// Parses a sequence "1^5(4)^5" or "(0,1)^2(1,1)" into a multiplicity
  /// vector over the support.
  Element parse_sequence(const std::string& text) const;
  Element from_multiset(const std::vector<GroupElement>& items) const;
  GroupElement sum(const IntVector& multiplicities) const;

 protected:
  std::vector<IntVector> scan_vectors(std::int64_t bound) const override;

 private:
  friend BlockMonoid block_presentation(const FiniteAbelianGroup&, std::vector<GroupElement>,
                                        std::uint64_t);
  BlockMonoid(FiniteAbelianGroup group, std::vector<GroupElement> support,
              std::vector<ZeroSumSequence> atoms, std::int64_t davenport_constant);

  FiniteAbelianGroup group_;
  std::vector<GroupElement> support_;
  std::vector<ZeroSumSequence> atoms_;
  std::int64_t davenport_;
};

/// An empty subset means all of G.
BlockMonoid block_presentation(const FiniteAbelianGroup& g, std::vector<GroupElement> subset = {},
                               std::uint64_t budget = kDefaultBudget);

}  // namespace lendens

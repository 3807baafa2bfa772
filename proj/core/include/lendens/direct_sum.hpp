#pragma once

#include <vector>

#include "lendens/monoid.hpp"

namespace lendens {

/// Finite coproduct. Elements are tuples of component elements; the atoms are
/// the component atoms placed in their own coordinate, in component order.
class DirectSum final : public Monoid {
 public:
  explicit DirectSum(std::vector<MonoidPtr> components);

  const std::vector<MonoidPtr>& components() const { return components_; }
  /// Index of the first atom of component k in the combined atom list.
  std::size_t atom_offset(std::size_t k) const { return offsets_.at(k); }

  MonoidKind kind() const override { return MonoidKind::kDirectSum; }
  Element::Tag element_tag() const override { return Element::Tag::kTuple; }
  std::size_t atom_count() const override { return offsets_.back(); }
  Element atom(std::size_t index) const override;
  std::string atom_name(std::size_t index) const override;
  Element identity() const override;
  Element combine(const Element& x, const Element& y) const override;
  bool contains(const Element& x) const override;
  Element evaluate(const IntVector& exponents) const override;
  Element canonical(const Element& x) const override;
  FactorizationSet factorizations(const Element& x, std::uint64_t budget) const override;
  /// Sum of the component length sets.
  LengthSet length_set(const Element& x) const override;
  /// Tuples of component scan elements at the same bound, lexicographic in
  /// the component scan positions.
  std::vector<Element> scan(std::int64_t bound) const override;
  std::vector<ScanEntry> scan_length_sets(std::int64_t bound) const override;
  std::vector<Element> divisors(const Element& x, std::uint64_t budget) const override;
  std::string format(const Element& x) const override;
  std::string describe() const override;

 private:
  const std::vector<Element>& split(const Element& x) const;
  std::pair<std::size_t, std::size_t> locate(std::size_t atom_index) const;

  std::vector<MonoidPtr> components_;
  std::vector<std::size_t> offsets_;  // size components + 1
};

/// A single summand is returned unchanged. Throws EmptyGenerators for an
/// empty list.
MonoidPtr direct_sum(std::vector<MonoidPtr> components);

}  // namespace lendens

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lendens/monoid.hpp"

namespace lendens {

namespace detail {
class SingleConstraintSolver;
}

/// Cofinite submonoid of the naturals, stored by its minimal generating set.
class NumericalSemigroup final : public Monoid {
 public:
  const std::vector<std::int64_t>& generators() const { return generators_; }

  MonoidKind kind() const override { return MonoidKind::kNumerical; }
  Element::Tag element_tag() const override { return Element::Tag::kNatural; }
  std::size_t atom_count() const override { return generators_.size(); }
  Element atom(std::size_t index) const override;
  Element identity() const override { return Element::natural(0); }
  Element combine(const Element& x, const Element& y) const override;
  bool contains(const Element& x) const override;
  Element evaluate(const IntVector& exponents) const override;
  FactorizationSet factorizations(const Element& x, std::uint64_t budget) const override;
  LengthSet length_set(const Element& x) const override;
  std::vector<Element> scan(std::int64_t bound) const override;
  std::vector<ScanEntry> scan_length_sets(std::int64_t bound) const override;
  std::vector<Element> divisors(const Element& x, std::uint64_t budget) const override;
  std::string describe() const override;

  bool contains(std::int64_t x) const;
  /// L(x) for every x in [0, max_value]; empty sets for non-members.
  std::vector<LengthSet> length_table(std::int64_t max_value) const;

 private:
  friend NumericalSemigroup make_numerical(std::vector<std::int64_t> gens);
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  std::vector<std::int64_t> generators_;
  std::shared_ptr<const detail::SingleConstraintSolver> solver_;
};

/// Validates, sorts and minimizes a generating set. Throws EmptyGenerators,
/// InvalidArgument (a generator < 1) or NonCoprime.
NumericalSemigroup make_numerical(std::vector<std::int64_t> gens);

}  // namespace lendens

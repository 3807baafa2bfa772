#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lendens/monoid.hpp"

namespace lendens {

namespace detail {
class VectorSolver;
}

/// Submonoid of N^d generated by nonzero vectors.
class AffineSemigroup : public Monoid {
 public:
  std::size_t dimension() const { return dimension_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  MonoidKind kind() const override { return MonoidKind::kAffine; }
  Element::Tag element_tag() const override { return Element::Tag::kVector; }
  std::size_t atom_count() const override { return generators_.size(); }
  Element atom(std::size_t index) const override;
  Element identity() const override { return Element::vector(IntVector(dimension_, 0)); }
  Element combine(const Element& x, const Element& y) const override;
  bool contains(const Element& x) const override;
  Element evaluate(const IntVector& exponents) const override;
  FactorizationSet factorizations(const Element& x, std::uint64_t budget) const override;
  LengthSet length_set(const Element& x) const override;
  std::vector<Element> scan(std::int64_t bound) const override;
  std::vector<ScanEntry> scan_length_sets(std::int64_t bound) const override;
  std::vector<Element> divisors(const Element& x, std::uint64_t budget) const override;
  std::string describe() const override;

 protected:
  AffineSemigroup(std::size_t dimension, std::vector<IntVector> generators);

  void check_vector(const Element& x) const;
  /// Elements with coordinate sum <= bound, sorted by (sum, lex).
  virtual std::vector<IntVector> scan_vectors(std::int64_t bound) const;
  LengthSet length_set_unchecked(const IntVector& x) const;

 private:
  friend AffineSemigroup make_affine(std::vector<IntVector> vectors);

  std::size_t dimension_;
  std::vector<IntVector> generators_;
  std::shared_ptr<const detail::VectorSolver> solver_;
};

/// Throws EmptyGenerators, DimensionMismatch, ZeroVector (or InvalidArgument
/// for negative entries). Duplicates and generators representable by the
/// others are dropped; the remaining keep their input order.
AffineSemigroup make_affine(std::vector<IntVector> vectors);

}  // namespace lendens

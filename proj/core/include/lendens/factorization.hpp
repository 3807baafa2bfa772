#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lendens/element.hpp"

namespace lendens {

/// Exponent vector over the atoms of a monoid: one point of Z(x).
struct Factorization {
  IntVector exponents;

  Factorization() = default;
  explicit Factorization(IntVector e) : exponents(std::move(e)) {}
  Factorization(std::initializer_list<std::int64_t> e) : exponents(e) {}

  std::int64_t length() const;
  std::size_t size() const { return exponents.size(); }
  bool divides(const Factorization& other) const;  // componentwise <=

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization& a, const Factorization& b) {
    return a.exponents <=> b.exponents;
  }
};

/// Z(x) for one element, lexicographically sorted. `complete` is false when
/// enumeration stopped on the node budget.
struct FactorizationSet {
  Element element;
  std::vector<Factorization> factorizations;
  bool complete = true;

  std::size_t size() const { return factorizations.size(); }
};

/// Strictly increasing set of factorization lengths.
class LengthSet {
 public:
  LengthSet() = default;
  /// Sorts and removes duplicates.
  static LengthSet from_values(std::vector<std::int64_t> values);
  LengthSet(std::initializer_list<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  std::int64_t min() const { return values_.front(); }
  std::int64_t max() const { return values_.back(); }
  bool contains(std::int64_t v) const;
  bool is_interval() const;
  /// Consecutive gaps, sorted and deduplicated.
  std::vector<std::int64_t> deltas() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// {a + b : a in A, b in B}.
LengthSet sumset(const LengthSet& a, const LengthSet& b);

std::string format_length_set(const LengthSet& ls);

/// Connected components of the factorization graph, as index blocks into a
/// FactorizationSet. Blocks are sorted by their smallest index.
struct GraphPartition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t component_count() const { return blocks.size(); }
};

}  // namespace lendens

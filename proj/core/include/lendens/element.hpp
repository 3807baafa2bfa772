#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lendens/rational.hpp"

namespace lendens {

using IntVector = std::vector<std::int64_t>;

/// A monoid element. The tag must match the presentation kind it is used
/// with: naturals for numerical semigroups, vectors for affine, block and
/// finitely presented monoids (the latter as a representative word),
/// rationals for Puiseux monoids, and tuples for direct sums.
class Element {
 public:
  enum class Tag { kNatural, kVector, kRational, kTuple };

  Element() = default;

  static Element natural(std::int64_t value);
  static Element vector(IntVector value);
  static Element rational(Rational value);
  static Element tuple(std::vector<Element> parts);

  Tag tag() const { return static_cast<Tag>(value_.index()); }

  std::int64_t as_natural() const;
  const IntVector& as_vector() const;
  const Rational& as_rational() const;
  const std::vector<Element>& parts() const;

  /// Debug rendering; presentations provide kind-aware formatting.
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::int64_t, IntVector, Rational, std::vector<Element>> value_{std::int64_t{0}};
};

std::string tag_name(Element::Tag tag);

std::string format_vector(const IntVector& v);

}  // namespace lendens

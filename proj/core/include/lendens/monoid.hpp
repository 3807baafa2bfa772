#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lendens/element.hpp"
#include "lendens/factorization.hpp"

namespace lendens {

/// Node-expansion cap used when the caller does not pass one.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

enum class MonoidKind { kNumerical, kAffine, kPresentation, kPuiseux, kBlock, kDirectSum };

std::string kind_name(MonoidKind kind);

struct ScanEntry {
  Element element;
  LengthSet lengths;
};

/// Common interface of every finitely generated presentation: atoms, the
/// degree map from exponent vectors to elements, and a factorization oracle.
/// Implementations are immutable after construction.
class Monoid {
 public:
  virtual ~Monoid() = default;

  virtual MonoidKind kind() const = 0;
  virtual Element::Tag element_tag() const = 0;
  virtual std::size_t atom_count() const = 0;
  virtual Element atom(std::size_t index) const = 0;
  virtual std::string atom_name(std::size_t index) const { return format(atom(index)); }
  virtual Element identity() const = 0;
  virtual Element combine(const Element& x, const Element& y) const = 0;
  virtual bool contains(const Element& x) const = 0;

  /// Maps an exponent vector over the atoms to its element.
  virtual Element evaluate(const IntVector& exponents) const;

  /// Representative used for equality and deduplication. Identity except for
  /// finitely presented monoids, where elements are words.
  virtual Element canonical(const Element& x) const { return x; }

  /// Z(x). Throws NotInMonoid; on budget exhaustion returns a partial set
  /// with complete == false.
  virtual FactorizationSet factorizations(const Element& x, std::uint64_t budget) const = 0;

  /// L(x). Kinds with a lengths-only dynamic program override this; the
  /// default goes through factorizations().
  virtual LengthSet length_set(const Element& x) const;

  /// Elements up to `bound` in the kind's scan order.
  virtual std::vector<Element> scan(std::int64_t bound) const = 0;

  /// Scan together with length sets. Default computes each set separately.
  virtual std::vector<ScanEntry> scan_length_sets(std::int64_t bound) const;

  /// Elements y with y | x. Default: images of all sub-factorizations.
  virtual std::vector<Element> divisors(const Element& x, std::uint64_t budget) const;

  virtual std::string format(const Element& x) const { return x.to_string(); }
  virtual std::string describe() const = 0;

  Element power(const Element& x, std::int64_t n) const;
  void check_tag(const Element& x) const;
  bool equal(const Element& x, const Element& y) const { return canonical(x) == canonical(y); }
};

using MonoidPtr = std::shared_ptr<const Monoid>;

}  // namespace lendens

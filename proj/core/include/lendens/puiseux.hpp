#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lendens/monoid.hpp"
#include "lendens/rational.hpp"

namespace lendens {

namespace detail {
class SingleConstraintSolver;
}

/// Finitely generated submonoid of the nonnegative rationals.
///
/// Elements are handled after clearing denominators by their lcm L. An atom
/// a/p whose denominator is coprime to every other denominator has its
/// exponent fixed modulo p by the target (its term is the only one not
/// divisible by p), so it is substituted as r + p*f and the search runs over
/// f with weight a*L and length step p.
class PuiseuxMonoid final : public Monoid {
 public:
  const std::vector<Rational>& atoms() const { return atoms_; }
  /// lcm of the atom denominators.
  std::int64_t clearing_denominator() const { return lcm_; }
  /// For each atom: the residue class its exponent is forced into for target
  /// x, as (residue, modulus); nullopt when the atom is not constrained.
  /// Empty when x is not in the monoid's cleared lattice.
  std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> forced_residues(
      const Rational& x) const;

  MonoidKind kind() const override { return MonoidKind::kPuiseux; }
  Element::Tag element_tag() const override { return Element::Tag::kRational; }
  std::size_t atom_count() const override { return atoms_.size(); }
  Element atom(std::size_t index) const override { return Element::rational(atoms_.at(index)); }
  Element identity() const override { return Element::rational(Rational(0)); }
  Element combine(const Element& x, const Element& y) const override;
  bool contains(const Element& x) const override;
  Element evaluate(const IntVector& exponents) const override;
  FactorizationSet factorizations(const Element& x, std::uint64_t budget) const override;
  LengthSet length_set(const Element& x) const override;
  /// Elements whose cleared degree x*L is at most `bound`.
  std::vector<Element> scan(std::int64_t bound) const override;
  std::vector<ScanEntry> scan_length_sets(std::int64_t bound) const override;
  std::vector<Element> divisors(const Element& x, std::uint64_t budget) const override;
  std::string describe() const override;

 private:
  friend PuiseuxMonoid make_puiseux(std::vector<Rational> atoms);
  explicit PuiseuxMonoid(std::vector<Rational> atoms);

  struct Reduction {
    std::int64_t target = 0;       // reduced degree
    std::int64_t length_offset = 0;
    IntVector residues;            // r_i (0 for unconstrained atoms)
  };
  std::optional<std::int64_t> cleared(const Rational& x) const;
  std::optional<Reduction> reduce(const Rational& x) const;

  std::vector<Rational> atoms_;
  std::int64_t lcm_ = 1;
  IntVector cleared_weights_;   // a_i * L / p_i
  IntVector moduli_;            // p_i for constrained atoms, 1 otherwise
  std::shared_ptr<const detail::SingleConstraintSolver> reduced_;
  std::shared_ptr<const detail::SingleConstraintSolver> cleared_;
};

/// Throws EmptyGenerators, InvalidArgument (non-positive or repeated atom),
/// NotAtomic (an atom is a sum of the others) or Overflow.
PuiseuxMonoid make_puiseux(std::vector<Rational> atoms);

}  // namespace lendens

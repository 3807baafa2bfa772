#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lendens/monoid.hpp"

namespace lendens {

struct Relation {
  IntVector left;
  IntVector right;
};

/// Commutative monoid given by generators and relations between words. A
/// word is an exponent vector over the generators; elements are addressed by
/// any word and compared through their rewriting classes. Lengths count
/// generators, so a relation with a one-letter side (q = r^2) is allowed and
/// simply makes that generator contribute to several lengths.
class FinitePresentation final : public Monoid {
 public:
  const std::vector<Relation>& relations() const { return relations_; }
  /// Positive integer weight per atom, constant on every relation.
  const IntVector& grading() const { return grading_; }
  std::int64_t degree(const IntVector& word) const;

  MonoidKind kind() const override { return MonoidKind::kPresentation; }
  Element::Tag element_tag() const override { return Element::Tag::kVector; }
  std::size_t atom_count() const override { return names_.size(); }
  Element atom(std::size_t index) const override;
  std::string atom_name(std::size_t index) const override { return names_.at(index); }
  Element identity() const override { return Element::vector(IntVector(names_.size(), 0)); }
  Element combine(const Element& x, const Element& y) const override;
  bool contains(const Element& x) const override;
  Element evaluate(const IntVector& exponents) const override;
  /// Lexicographically smallest word of the class.
  Element canonical(const Element& x) const override;
  FactorizationSet factorizations(const Element& x, std::uint64_t budget) const override;
  /// Classes having a word with at most `bound` atoms, ordered by
  /// (degree, canonical word).
  std::vector<Element> scan(std::int64_t bound) const override;
  std::string format(const Element& x) const override;
  std::string describe() const override;

  /// Parses "a1^3*a2" (atom names, optional powers, '*' separated), "1" for
  /// the identity, or an exponent vector "(3,1,0)".
  Element parse_word(const std::string& text) const;

  /// Searches words with at most `max_length` atoms for x*u ~ y*u with x, y
  /// in different classes; returns such a pair (x, y).
  std::optional<std::pair<IntVector, IntVector>> find_cancellativity_violation(
      std::int64_t max_length, std::uint64_t budget = kDefaultBudget) const;

 private:
  friend FinitePresentation make_presentation(std::size_t, std::vector<Relation>,
                                              std::vector<std::string>);
  FinitePresentation(std::vector<std::string> names, std::vector<Relation> relations,
                     IntVector grading);

  std::vector<std::string> names_;
  std::vector<Relation> relations_;
  IntVector grading_;
};

/// Names default to a1..an. Throws EmptyGenerators, DimensionMismatch,
/// MalformedRelation (a zero side, equal sides or negative entries) and
/// NoPositiveGrading.
FinitePresentation make_presentation(std::size_t atom_count, std::vector<Relation> relations,
                                     std::vector<std::string> names = {});

}  // namespace lendens

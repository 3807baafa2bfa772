#include "lendens/monoid.hpp"

#include <map>

#include "lendens/error.hpp"

namespace lendens {

std::string kind_name(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::kNumerical: return "numerical";
    case MonoidKind::kAffine: return "affine";
    case MonoidKind::kPresentation: return "presentation";
    case MonoidKind::kPuiseux: return "puiseux";
    case MonoidKind::kBlock: return "block";
    case MonoidKind::kDirectSum: return "direct_sum";
  }
  return "unknown";
}

void Monoid::check_tag(const Element& x) const {
  if (x.tag() != element_tag()) {
    throw Error(ErrorCode::kTagMismatch, kind_name(kind()) + " monoid expects a " +
                                             tag_name(element_tag()) + " element, got " +
                                             tag_name(x.tag()));
  }
}

Element Monoid::evaluate(const IntVector& exponents) const {
  if (exponents.size() != atom_count()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "exponent vector has " +
                                                    std::to_string(exponents.size()) +
                                                    " entries, monoid has " +
                                                    std::to_string(atom_count()) + " atoms");
  }
  Element acc = identity();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative exponent");
    }
    if (exponents[i] > 0) acc = combine(acc, power(atom(i), exponents[i]));
  }
  return acc;
}

Element Monoid::power(const Element& x, std::int64_t n) const {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative power");
  Element result = identity();
  Element base = x;
  while (n > 0) {
    if (n & 1) result = combine(result, base);
    n >>= 1;
    if (n > 0) base = combine(base, base);
  }
  return result;
}

LengthSet Monoid::length_set(const Element& x) const {
  FactorizationSet fs = factorizations(x, kDefaultBudget);
  if (!fs.complete) {
    throw Error(ErrorCode::kBudgetExceeded, "factorizations of " + format(x) + " exceed budget");
  }
  std::vector<std::int64_t> lengths;
  lengths.reserve(fs.size());
  for (const auto& z : fs.factorizations) lengths.push_back(z.length());
  return LengthSet::from_values(std::move(lengths));
}

std::vector<ScanEntry> Monoid::scan_length_sets(std::int64_t bound) const {
  std::vector<ScanEntry> out;
  for (auto& x : scan(bound)) {
    LengthSet ls = length_set(x);
    out.push_back({std::move(x), std::move(ls)});
  }
  return out;
}

std::vector<Element> Monoid::divisors(const Element& x, std::uint64_t budget) const {
  FactorizationSet fs = factorizations(x, budget);
  if (!fs.complete) {
    throw Error(ErrorCode::kBudgetExceeded, "factorizations of " + format(x) + " exceed budget");
  }
  std::map<std::string, Element> seen;
  std::uint64_t visited = 0;
  for (const auto& z : fs.factorizations) {
    IntVector sub(z.size(), 0);
    // odometer over all sub-vectors of z
    while (true) {
      if (++visited > budget) {
        throw Error(ErrorCode::kBudgetExceeded, "divisor enumeration exceeds budget");
      }
      Element y = canonical(evaluate(sub));
      seen.emplace(format(y), std::move(y));
      std::size_t i = 0;
      while (i < sub.size() && sub[i] == z.exponents[i]) sub[i++] = 0;
      if (i == sub.size()) break;
      ++sub[i];
    }
  }
  std::vector<Element> out;
  for (auto& [key, y] : seen) out.push_back(std::move(y));
  return out;
}

}  // namespace lendens

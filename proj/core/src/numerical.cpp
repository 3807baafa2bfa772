#include "lendens/numerical.hpp"

#include <algorithm>
#include <numeric>

#include "knapsack.hpp"
#include "lendens/error.hpp"

namespace lendens {

namespace {

std::vector<detail::WeightedAtom> unit_steps(const std::vector<std::int64_t>& gens) {
  std::vector<detail::WeightedAtom> atoms;
  for (auto g : gens) atoms.push_back({g, 1});
  return atoms;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "element sum overflows");
  return out;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)),
      solver_(std::make_shared<detail::SingleConstraintSolver>(unit_steps(generators_))) {}

NumericalSemigroup make_numerical(std::vector<std::int64_t> gens) {
  if (gens.empty()) throw Error(ErrorCode::kEmptyGenerators, "no generators given");
  for (auto g : gens) {
    if (g < 1) throw Error(ErrorCode::kInvalidArgument, "generators must be positive");
  }
  std::int64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) {
    throw Error(ErrorCode::kNonCoprime,
                "generators have gcd " + std::to_string(g) + "; rescale by 1/" + std::to_string(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Keep a generator only if the smaller kept ones cannot represent it.
  std::int64_t top = gens.back();
  std::vector<char> reach(static_cast<std::size_t>(top + 1), 0);
  reach[0] = 1;
  std::vector<std::int64_t> minimal;
  for (auto x : gens) {
    if (reach[static_cast<std::size_t>(x)]) continue;
    minimal.push_back(x);
    for (std::int64_t v = x; v <= top; ++v) {
      if (reach[static_cast<std::size_t>(v - x)]) reach[static_cast<std::size_t>(v)] = 1;
    }
  }
  return NumericalSemigroup(std::move(minimal));
}

Element NumericalSemigroup::atom(std::size_t index) const {
  return Element::natural(generators_.at(index));
}

Element NumericalSemigroup::combine(const Element& x, const Element& y) const {
  check_tag(x);
  check_tag(y);
  return Element::natural(checked_add(x.as_natural(), y.as_natural()));
}

bool NumericalSemigroup::contains(std::int64_t x) const { return solver_->representable(x); }

bool NumericalSemigroup::contains(const Element& x) const {
  check_tag(x);
  return contains(x.as_natural());
}

Element NumericalSemigroup::evaluate(const IntVector& exponents) const {
  if (exponents.size() != generators_.size()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "exponent vector length differs from atom count");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(exponents[i], generators_[i], &term)) {
      throw Error(ErrorCode::kOverflow, "degree overflows");
    }
    total = checked_add(total, term);
  }
  return Element::natural(total);
}

FactorizationSet NumericalSemigroup::factorizations(const Element& x, std::uint64_t budget) const {
  check_tag(x);
  if (!contains(x.as_natural())) {
    throw Error(ErrorCode::kNotInMonoid, std::to_string(x.as_natural()) + " is not in " + describe());
  }
  FactorizationSet fs;
  fs.element = x;
  fs.complete = solver_->enumerate(x.as_natural(), budget, [&](const IntVector& e) {
    fs.factorizations.emplace_back(e);
  });
  std::sort(fs.factorizations.begin(), fs.factorizations.end());
  return fs;
}

LengthSet NumericalSemigroup::length_set(const Element& x) const {
  check_tag(x);
  if (!contains(x.as_natural())) {
    throw Error(ErrorCode::kNotInMonoid, std::to_string(x.as_natural()) + " is not in " + describe());
  }
  return solver_->lengths(x.as_natural()).to_length_set();
}

std::vector<LengthSet> NumericalSemigroup::length_table(std::int64_t max_value) const {
  auto rows = solver_->length_table(max_value);
  std::vector<LengthSet> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.empty() ? LengthSet() : row.to_length_set());
  return out;
}

std::vector<Element> NumericalSemigroup::scan(std::int64_t bound) const {
  std::vector<Element> out;
  for (std::int64_t v = 0; v <= bound; ++v) {
    if (contains(v)) out.push_back(Element::natural(v));
  }
  return out;
}

std::vector<ScanEntry> NumericalSemigroup::scan_length_sets(std::int64_t bound) const {
  std::vector<ScanEntry> out;
  if (bound < 0) return out;
  auto table = length_table(bound);
  for (std::int64_t v = 0; v <= bound; ++v) {
    auto& ls = table[static_cast<std::size_t>(v)];
    if (!ls.empty()) out.push_back({Element::natural(v), std::move(ls)});
  }
  return out;
}

std::vector<Element> NumericalSemigroup::divisors(const Element& x, std::uint64_t) const {
  check_tag(x);
  std::int64_t n = x.as_natural();
  if (!contains(n)) throw Error(ErrorCode::kNotInMonoid, std::to_string(n) + " is not in " + describe());
  std::vector<Element> out;
  for (std::int64_t y = 0; y <= n; ++y) {
    if (contains(y) && contains(n - y)) out.push_back(Element::natural(y));
  }
  return out;
}

std::string NumericalSemigroup::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(generators_[i]);
  }
  return out + ">";
}

}  // namespace lendens

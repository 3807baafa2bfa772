#include "lendens/affine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "lendens/error.hpp"
#include "vector_solver.hpp"

namespace lendens {

AffineSemigroup::AffineSemigroup(std::size_t dimension, std::vector<IntVector> generators)
    : dimension_(dimension),
      generators_(std::move(generators)),
      solver_(std::make_shared<detail::VectorSolver>(generators_)) {}

AffineSemigroup make_affine(std::vector<IntVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::kEmptyGenerators, "no generators given");
  std::size_t dim = vectors.front().size();
  if (dim == 0) throw Error(ErrorCode::kDimensionMismatch, "dimension must be positive");
  std::vector<IntVector> unique;
  for (auto& v : vectors) {
    if (v.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "generator " + format_vector(v) +
                                                     " has dimension " + std::to_string(v.size()) +
                                                     ", expected " + std::to_string(dim));
    }
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) {
      throw Error(ErrorCode::kInvalidArgument, "negative entry in " + format_vector(v));
    }
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
      throw Error(ErrorCode::kZeroVector, "zero generator");
    }
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(std::move(v));
  }
  // A generator can only be a sum of generators with strictly smaller
  // coordinate sum.
  std::vector<IntVector> kept;
  for (const auto& v : unique) {
    std::vector<IntVector> smaller;
    for (const auto& w : unique) {
      if (detail::coordinate_sum(w) < detail::coordinate_sum(v)) smaller.push_back(w);
    }
    if (!smaller.empty() && !detail::VectorSolver(smaller).lengths(v, kDefaultBudget).empty()) {
      continue;
    }
    kept.push_back(v);
  }
  return AffineSemigroup(dim, std::move(kept));
}

void AffineSemigroup::check_vector(const Element& x) const {
  check_tag(x);
  if (x.as_vector().size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch, "element " + format(x) + " has dimension " +
                                                   std::to_string(x.as_vector().size()) +
                                                   ", expected " + std::to_string(dimension_));
  }
}

Element AffineSemigroup::atom(std::size_t index) const {
  return Element::vector(generators_.at(index));
}

Element AffineSemigroup::combine(const Element& x, const Element& y) const {
  check_vector(x);
  check_vector(y);
  IntVector out = x.as_vector();
  for (std::size_t i = 0; i < dimension_; ++i) out[i] += y.as_vector()[i];
  return Element::vector(std::move(out));
}

Element AffineSemigroup::evaluate(const IntVector& exponents) const {
  if (exponents.size() != generators_.size()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "exponent vector length differs from atom count");
  }
  IntVector out(dimension_, 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (std::size_t c = 0; c < dimension_; ++c) out[c] += exponents[i] * generators_[i][c];
  }
  return Element::vector(std::move(out));
}

bool AffineSemigroup::contains(const Element& x) const {
  check_vector(x);
  return !solver_->lengths(x.as_vector(), kDefaultBudget).empty();
}

FactorizationSet AffineSemigroup::factorizations(const Element& x, std::uint64_t budget) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  FactorizationSet fs;
  fs.element = x;
  fs.complete = solver_->enumerate(x.as_vector(), budget, [&](const IntVector& e) {
    fs.factorizations.emplace_back(e);
  });
  std::sort(fs.factorizations.begin(), fs.factorizations.end());
  return fs;
}

LengthSet AffineSemigroup::length_set_unchecked(const IntVector& x) const {
  return solver_->lengths(x, kDefaultBudget).to_length_set();
}

LengthSet AffineSemigroup::length_set(const Element& x) const {
  check_vector(x);
  auto row = solver_->lengths(x.as_vector(), kDefaultBudget);
  if (row.empty()) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  return row.to_length_set();
}

std::vector<IntVector> AffineSemigroup::scan_vectors(std::int64_t bound) const {
  std::vector<IntVector> out;
  if (bound < 0) return out;
  detail::VectorMap<char> seen;
  std::deque<IntVector> queue{IntVector(dimension_, 0)};
  seen.emplace(queue.front(), 1);
  while (!queue.empty()) {
    IntVector x = std::move(queue.front());
    queue.pop_front();
    std::int64_t sum = detail::coordinate_sum(x);
    for (const auto& g : generators_) {
      if (sum + detail::coordinate_sum(g) > bound) continue;
      IntVector y = x;
      for (std::size_t c = 0; c < dimension_; ++c) y[c] += g[c];
      if (seen.emplace(y, 1).second) {
        if (seen.size() > kDefaultBudget) {
          throw Error(ErrorCode::kBudgetExceeded, "scan exceeds element budget");
        }
        queue.push_back(std::move(y));
      }
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    auto sa = detail::coordinate_sum(a), sb = detail::coordinate_sum(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

std::vector<Element> AffineSemigroup::scan(std::int64_t bound) const {
  std::vector<Element> out;
  for (auto& v : scan_vectors(bound)) out.push_back(Element::vector(std::move(v)));
  return out;
}

std::vector<ScanEntry> AffineSemigroup::scan_length_sets(std::int64_t bound) const {
  auto vectors = scan_vectors(bound);
  auto rows = solver_->lengths_bulk(vectors);
  std::vector<ScanEntry> out;
  out.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out.push_back({Element::vector(std::move(vectors[i])), rows[i].to_length_set()});
  }
  return out;
}

std::vector<Element> AffineSemigroup::divisors(const Element& x, std::uint64_t budget) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  const IntVector& target = x.as_vector();
  auto below = solver_->elements_below(target, budget);
  std::unordered_set<IntVector, detail::VectorHash> members(below.begin(), below.end());
  std::vector<Element> out;
  IntVector rest(dimension_);
  for (const auto& y : below) {
    for (std::size_t c = 0; c < dimension_; ++c) rest[c] = target[c] - y[c];
    if (members.count(rest)) out.push_back(Element::vector(y));
  }
  return out;
}

std::string AffineSemigroup::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += format_vector(generators_[i]);
  }
  return out + ">";
}

}  // namespace lendens

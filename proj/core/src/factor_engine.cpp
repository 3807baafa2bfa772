#include "lendens/factor_engine.hpp"

#include <numeric>

#include "lendens/error.hpp"

namespace lendens {

namespace {

void check_same_space(const Factorization& z, const Factorization& y) {
  if (z.size() != y.size()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "factorizations over " + std::to_string(z.size()) +
                                                    " and " + std::to_string(y.size()) + " atoms");
  }
}

}  // namespace

FactorizationSet factorizations(const Monoid& m, const Element& x, std::uint64_t budget) {
  m.check_tag(x);
  if (!m.contains(x)) throw Error(ErrorCode::kNotInMonoid, m.format(x) + " is not in " + m.describe());
  return m.factorizations(x, budget);
}

LengthSet length_set(const Monoid& m, const Element& x) {
  m.check_tag(x);
  if (!m.contains(x)) throw Error(ErrorCode::kNotInMonoid, m.format(x) + " is not in " + m.describe());
  return m.length_set(x);
}

LengthSet length_set_by_enumeration(const Monoid& m, const Element& x, std::uint64_t budget) {
  FactorizationSet fs = factorizations(m, x, budget);
  if (!fs.complete) {
    throw Error(ErrorCode::kBudgetExceeded, "factorizations of " + m.format(x) + " exceed budget");
  }
  std::vector<std::int64_t> lengths;
  for (const auto& z : fs.factorizations) lengths.push_back(z.length());
  return LengthSet::from_values(std::move(lengths));
}

Factorization factorization_gcd(const Factorization& z, const Factorization& y) {
  check_same_space(z, y);
  IntVector g(z.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(z.exponents[i], y.exponents[i]);
  return Factorization(std::move(g));
}

std::int64_t distance(const Factorization& z, const Factorization& y) {
  check_same_space(z, y);
  std::int64_t left = 0;
  std::int64_t right = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::int64_t g = std::min(z.exponents[i], y.exponents[i]);
    left += z.exponents[i] - g;
    right += y.exponents[i] - g;
  }
  return std::max(left, right);
}

GraphPartition graph_components(const FactorizationSet& fs) {
  if (!fs.complete) {
    throw Error(ErrorCode::kIncompleteSet, "factorization set of " + fs.element.to_string() +
                                               " is incomplete");
  }
  const std::size_t n = fs.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Two factorizations share an edge iff they share an atom, so joining
  // every factorization to the first holder of each of its atoms suffices.
  if (n > 0) {
    std::vector<std::size_t> holder(fs.factorizations.front().size(), n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = fs.factorizations[k].exponents;
      for (std::size_t a = 0; a < e.size(); ++a) {
        if (e[a] == 0) continue;
        if (holder[a] == n) {
          holder[a] = k;
        } else {
          std::size_t ra = find(holder[a]), rk = find(k);
          if (ra != rk) parent[std::max(ra, rk)] = std::min(ra, rk);
        }
      }
    }
  }
  GraphPartition out;
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = find(k);
    if (block_of[r] == n) {
      block_of[r] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.blocks[block_of[r]].push_back(k);
  }
  return out;
}

}  // namespace lendens

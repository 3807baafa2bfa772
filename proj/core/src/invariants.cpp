#include "lendens/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lendens/error.hpp"
#include "lendens/factor_engine.hpp"
#include "parallel.hpp"

namespace lendens {

std::optional<Rational> length_density(const LengthSet& ls) {
  if (ls.size() < 2) return std::nullopt;
  return Rational(static_cast<std::int64_t>(ls.size()) - 1, ls.max() - ls.min());
}

LengthStats length_stats(const LengthSet& ls) {
  if (ls.empty()) throw Error(ErrorCode::kInvalidArgument, "empty length set");
  LengthStats s;
  s.max_len = ls.max();
  s.min_len = ls.min();
  s.elasticity = s.min_len == 0 ? Rational(1) : Rational(s.max_len, s.min_len);
  s.delta = ls.deltas();
  s.ld = length_density(ls);
  s.size = ls.size();
  return s;
}

std::vector<ScanEntry> scan_entries(const Monoid& m, std::int64_t bound, const ScanOptions& opts) {
  if (m.kind() != MonoidKind::kPresentation) return m.scan_length_sets(bound);
  auto elements = m.scan(bound);
  std::vector<ScanEntry> out(elements.size());
  detail::parallel_for(elements.size(), opts.threads, [&](std::size_t i) {
    out[i] = {elements[i], length_set_by_enumeration(m, elements[i], opts.budget)};
  });
  return out;
}

std::vector<std::int64_t> delta_scan(const Monoid& m, std::int64_t bound, const ScanOptions& opts) {
  std::set<std::int64_t> all;
  for (const auto& e : scan_entries(m, bound, opts)) {
    for (auto d : e.lengths.deltas()) all.insert(d);
  }
  return {all.begin(), all.end()};
}

LdSearchReport ld_search(const Monoid& m, std::int64_t bound, const ScanOptions& opts) {
  auto entries = scan_entries(m, bound, opts);
  LdSearchReport r;
  r.bound = bound;
  r.elements_scanned = entries.size();
  bool found = false;
  for (auto& e : entries) {
    auto ld = length_density(e.lengths);
    if (!ld) continue;
    ++r.ld_elements;
    auto deltas = e.lengths.deltas();
    r.max_delta_seen = std::max(r.max_delta_seen, deltas.back());
    if (!found || *ld < r.minimum_ld) {
      found = true;
      r.minimum_ld = *ld;
      r.witness = e.element;
      r.witness_lengths = e.lengths;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kNoLdElements, "no scanned element of " + m.describe() +
                                              " up to " + std::to_string(bound) +
                                              " has two lengths");
  }
  r.lower_bound_certificate = Rational(1, r.max_delta_seen);
  r.accepted_within_scan = r.minimum_ld == r.lower_bound_certificate;
  return r;
}

std::vector<Element> betti_scan(const Monoid& m, std::int64_t bound, const ScanOptions& opts) {
  auto elements = m.scan(bound);
  std::vector<char> is_betti(elements.size(), 0);
  detail::parallel_for(elements.size(), opts.threads, [&](std::size_t i) {
    auto fs = m.factorizations(elements[i], opts.budget);
    if (!fs.complete) {
      throw Error(ErrorCode::kIncompleteSet, "factorizations of " + m.format(elements[i]) +
                                                 " exceed the budget");
    }
    is_betti[i] = graph_components(fs).component_count() > 1;
  });
  std::vector<Element> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (is_betti[i]) out.push_back(elements[i]);
  }
  return out;
}

BettiLdReport betti_ld_test(const Monoid& m, std::int64_t bound, const ScanOptions& opts) {
  BettiLdReport r;
  r.search = ld_search(m, bound, opts);
  for (auto& b : betti_scan(m, bound, opts)) {
    LengthSet ls = m.length_set(b);
    auto ld = length_density(ls);
    if (ld && *ld == r.search.minimum_ld && !r.attained_at_betti) {
      r.attained_at_betti = true;
      r.betti_witness = b;
    }
    r.betti.push_back({std::move(b), std::move(ls), ld});
  }
  r.equals_inverse_max_delta = r.search.minimum_ld == r.search.lower_bound_certificate;
  return r;
}

std::int64_t catenary_degree(const FactorizationSet& fs) {
  if (!fs.complete) {
    throw Error(ErrorCode::kIncompleteSet, "factorization set of " + fs.element.to_string() +
                                               " is incomplete");
  }
  const std::size_t n = fs.size();
  if (n <= 1) return 0;
  struct Edge {
    std::int64_t d;
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      edges.push_back({distance(fs.factorizations[a], fs.factorizations[b]), a, b});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.d < y.d; });
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (const auto& e : edges) {
    std::size_t ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    if (--components == 1) return e.d;
  }
  return 0;
}

std::int64_t catenary_degree(const Monoid& m, const Element& x, std::uint64_t budget) {
  return catenary_degree(factorizations(m, x, budget));
}

TameDegree tame_degree(const FactorizationSet& za, const Factorization& x) {
  if (!za.complete) {
    throw Error(ErrorCode::kIncompleteSet, "factorization set of " + za.element.to_string() +
                                               " is incomplete");
  }
  std::vector<const Factorization*> targets;
  for (const auto& z : za.factorizations) {
    if (z.size() != x.size()) {
      throw Error(ErrorCode::kIndexSpaceMismatch, "factorization has " + std::to_string(x.size()) +
                                                      " entries, expected " +
                                                      std::to_string(z.size()));
    }
    if (x.divides(z)) targets.push_back(&z);
  }
  TameDegree t;
  if (targets.empty()) return t;
  for (const auto& z : za.factorizations) {
    std::int64_t best = -1;
    for (const auto* w : targets) {
      std::int64_t d = distance(z, *w);
      if (best < 0 || d < best) best = d;
    }
    t.degree = std::max(t.degree, best);
  }
  if (t.degree == 1) {
    t.degree = 2;
    t.adjusted = true;
  }
  return t;
}

TameDegree tame_degree(const Monoid& m, const Element& a, const Factorization& x,
                       std::uint64_t budget) {
  if (x.size() != m.atom_count()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "factorization has " + std::to_string(x.size()) +
                                                    " entries, monoid has " +
                                                    std::to_string(m.atom_count()) + " atoms");
  }
  return tame_degree(factorizations(m, a, budget), x);
}

AsymptoticReport asymptotic_ld(const Monoid& m, const Element& x, std::int64_t max_n,
                               const Rational& tol, const ScanOptions& opts) {
  if (max_n < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one power");
  if (!m.contains(x)) throw Error(ErrorCode::kNotInMonoid, m.format(x) + " is not in " + m.describe());
  if (m.equal(x, m.identity())) throw Error(ErrorCode::kInvalidArgument, "base element is the identity");
  AsymptoticReport r;
  r.base = x;
  r.tolerance = tol;
  r.terms.resize(static_cast<std::size_t>(max_n));
  detail::parallel_for(r.terms.size(), opts.threads, [&](std::size_t i) {
    auto n = static_cast<std::int64_t>(i) + 1;
    LengthSet ls = m.length_set(m.power(x, n));
    r.terms[i] = {n, ls, length_density(ls)};
  });
  std::set<std::int64_t> deltas;
  for (const auto& t : r.terms) {
    for (auto d : t.lengths.deltas()) deltas.insert(d);
  }
  try {
    auto divs = m.divisors(m.power(x, max_n), opts.budget);
    std::vector<std::vector<std::int64_t>> found(divs.size());
    detail::parallel_for(divs.size(), opts.threads, [&](std::size_t i) {
      found[i] = m.length_set(divs[i]).deltas();
    });
    for (const auto& f : found) deltas.insert(f.begin(), f.end());
    r.divisors_examined = divs.size();
    r.divisors_complete = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
  }
  r.delta_union.assign(deltas.begin(), deltas.end());
  if (!deltas.empty()) {
    r.min_delta = *deltas.begin();
    r.predicted_limit = Rational(1, *r.min_delta);
    std::int64_t tail = (max_n + 3) / 4;
    r.converged = true;
    for (std::int64_t n = max_n - tail + 1; n <= max_n; ++n) {
      const auto& t = r.terms[static_cast<std::size_t>(n - 1)];
      Rational gap = t.ld ? *t.ld - *r.predicted_limit : Rational(1);
      if (!t.ld || (gap.sign() < 0 ? -gap : gap) > tol) r.converged = false;
    }
  }
  return r;
}

SandwichBounds sandwich_bounds(std::int64_t n, std::int64_t d, const Rational& t) {
  if (n < 1 || d < 1) throw Error(ErrorCode::kInvalidArgument, "n and d must be positive");
  Rational upper(1, d);
  Rational lower = upper - Rational(2) * t / Rational(n * d * d);
  return {lower, upper};
}

bool sandwich_check(const Monoid& m, const Element& x, std::int64_t n, std::int64_t d,
                    const Rational& t) {
  auto bounds = sandwich_bounds(n, d, t);
  auto ld = length_density(m.length_set(m.power(x, n)));
  if (!ld) {
    throw Error(ErrorCode::kNoLdElements, "x^" + std::to_string(n) + " has a single length");
  }
  return bounds.lower <= *ld && *ld <= bounds.upper;
}

std::optional<std::int64_t> default_psi(const Monoid& m, const Element& x, std::int64_t d,
                                        std::int64_t max_n) {
  for (std::int64_t n = 1; n <= max_n; ++n) {
    auto deltas = m.length_set(m.power(x, n)).deltas();
    if (std::binary_search(deltas.begin(), deltas.end(), d)) return n;
  }
  return std::nullopt;
}

std::int64_t measured_tame_constant(const Monoid& m, const Element& x, std::int64_t psi,
                                    std::int64_t max_n, const ScanOptions& opts) {
  if (psi < 1) throw Error(ErrorCode::kInvalidArgument, "psi must be positive");
  auto base = factorizations(m, m.power(x, psi), opts.budget);
  if (!base.complete) {
    throw Error(ErrorCode::kIncompleteSet, "factorizations of x^psi exceed the budget");
  }
  std::int64_t count = std::max<std::int64_t>(max_n - psi + 1, 0);
  std::vector<std::int64_t> best(static_cast<std::size_t>(count), 0);
  detail::parallel_for(best.size(), opts.threads, [&](std::size_t i) {
    auto za = factorizations(m, m.power(x, psi + static_cast<std::int64_t>(i)), opts.budget);
    for (const auto& z : base.factorizations) {
      best[i] = std::max(best[i], tame_degree(za, z).degree);
    }
  });
  return best.empty() ? 0 : *std::max_element(best.begin(), best.end());
}

}  // namespace lendens

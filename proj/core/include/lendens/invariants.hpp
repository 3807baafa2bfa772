#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lendens/factorization.hpp"
#include "lendens/monoid.hpp"
#include "lendens/rational.hpp"

namespace lendens {

struct LengthStats {
  std::int64_t max_len = 0;
  std::int64_t min_len = 0;
  Rational elasticity;
  std::vector<std::int64_t> delta;
  std::optional<Rational> ld;  // absent for a single length
  std::size_t size = 0;
};

/// Throws InvalidArgument for an empty set.
LengthStats length_stats(const LengthSet& ls);

/// ld(x) = (|L| - 1) / (max L - min L), or nullopt when |L| = 1.
std::optional<Rational> length_density(const LengthSet& ls);

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

/// Scan elements with their length sets; elements of kinds without a bulk
/// length pass are handled in parallel.
std::vector<ScanEntry> scan_entries(const Monoid& m, std::int64_t bound,
                                    const ScanOptions& opts = {});

/// Union of Delta(x) over the scan; an under-approximation of Delta(M).
std::vector<std::int64_t> delta_scan(const Monoid& m, std::int64_t bound,
                                     const ScanOptions& opts = {});

struct LdSearchReport {
  std::int64_t bound = 0;
  Rational minimum_ld;
  Element witness;
  LengthSet witness_lengths;
  std::int64_t max_delta_seen = 0;
  Rational lower_bound_certificate;
  bool accepted_within_scan = false;
  std::size_t elements_scanned = 0;
  std::size_t ld_elements = 0;
};

/// Minimum ld over scanned elements with |L| >= 2, earliest witness in scan
/// order. Throws NoLdElements.
LdSearchReport ld_search(const Monoid& m, std::int64_t bound, const ScanOptions& opts = {});

/// Scanned elements whose factorization graph is disconnected, in scan
/// order. Throws IncompleteSet when an enumeration hits the budget.
std::vector<Element> betti_scan(const Monoid& m, std::int64_t bound, const ScanOptions& opts = {});

struct BettiLd {
  Element element;
  LengthSet lengths;
  std::optional<Rational> ld;
};

struct BettiLdReport {
  LdSearchReport search;
  std::vector<BettiLd> betti;
  bool equals_inverse_max_delta = false;  // min ld == 1 / max delta seen
  bool attained_at_betti = false;         // some Betti element has the minimum ld
  std::optional<Element> betti_witness;
};

BettiLdReport betti_ld_test(const Monoid& m, std::int64_t bound, const ScanOptions& opts = {});

/// Least N making the distance <= N graph on Z(x) connected; 0 for a single
/// factorization. Throws IncompleteSet.
std::int64_t catenary_degree(const FactorizationSet& fs);
std::int64_t catenary_degree(const Monoid& m, const Element& x,
                             std::uint64_t budget = kDefaultBudget);

struct TameDegree {
  std::int64_t degree = 0;
  bool adjusted = false;  // the least bound was 1, reported as 2
};

/// t(a, x) for a factorization x (any exponent vector over the atoms).
TameDegree tame_degree(const FactorizationSet& za, const Factorization& x);
TameDegree tame_degree(const Monoid& m, const Element& a, const Factorization& x,
                       std::uint64_t budget = kDefaultBudget);

struct AsymptoticTerm {
  std::int64_t n = 0;
  LengthSet lengths;
  std::optional<Rational> ld;
};

struct AsymptoticReport {
  Element base;
  std::vector<AsymptoticTerm> terms;
  std::vector<std::int64_t> delta_union;  // over powers and the divisors examined
  std::optional<std::int64_t> min_delta;
  std::optional<Rational> predicted_limit;
  Rational tolerance;
  bool converged = false;
  bool under_approximation = true;
  bool divisors_complete = false;
  std::size_t divisors_examined = 0;
};

/// ld(x^n) for n = 1..max_n with limit prediction 1/d. Converged when the
/// last ceil(max_n / 4) terms are present and within `tol` of the limit.
AsymptoticReport asymptotic_ld(const Monoid& m, const Element& x, std::int64_t max_n,
                               const Rational& tol, const ScanOptions& opts = {});

struct SandwichBounds {
  Rational lower;
  Rational upper;
};

/// [1/d - 2T/(n d^2), 1/d].
SandwichBounds sandwich_bounds(std::int64_t n, std::int64_t d, const Rational& t);

/// Whether ld(x^n) lies in sandwich_bounds(n, d, T). Throws NoLdElements
/// when |L(x^n)| = 1.
bool sandwich_check(const Monoid& m, const Element& x, std::int64_t n, std::int64_t d,
                    const Rational& t);

/// Least n <= max_n with d in Delta(x^n).
std::optional<std::int64_t> default_psi(const Monoid& m, const Element& x, std::int64_t d,
                                        std::int64_t max_n);

/// max t(x^n, z) over z in Z(x^psi) and psi <= n <= max_n: the part of
/// t(H, Z(x^psi)) visible from the powers of x.
std::int64_t measured_tame_constant(const Monoid& m, const Element& x, std::int64_t psi,
                                    std::int64_t max_n, const ScanOptions& opts = {});

}  // namespace lendens

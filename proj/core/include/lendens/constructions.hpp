#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lendens/invariants.hpp"
#include "lendens/numerical.hpp"
#include "lendens/presentation.hpp"
#include "lendens/puiseux.hpp"
#include "lendens/rational.hpp"

namespace lendens {

/// M(a, b, c) cut at i <= truncation. Chain i has atoms q_{i,j} for
/// j in {ia, ..., ia + k(i), ib} with k(i) = ceil(i c (b - a)), related by
/// q_{i,j}^j = q_{i,j'}^{j'} for consecutive j, j'.
struct MabcSpec {
  std::int64_t a = 1;
  std::int64_t b = 2;
  Rational c;
  std::int64_t truncation = 1;
};

/// Throws InvalidSpec unless 1 <= a < b, 0 <= c <= 1 and truncation >= 1.
void validate(const MabcSpec& spec);
std::int64_t mabc_k(const MabcSpec& spec, std::int64_t i);
/// Second indices j of the atoms of chain i, increasing.
std::vector<std::int64_t> mabc_chain_indices(const MabcSpec& spec, std::int64_t i);

FinitePresentation mabc_presentation(const MabcSpec& spec);
/// Position of q_{i,j} among the atoms of mabc_presentation(spec).
std::size_t mabc_atom_index(const MabcSpec& spec, std::int64_t i, std::int64_t j);
/// q_{i,ia}^{t ia} as a word of mabc_presentation(spec).
Element mabc_chain_power(const MabcSpec& spec, std::int64_t i, std::int64_t t);

/// L(q_{i,ia}^{t ia}): the closed form for t = 1, the rewriting engine
/// otherwise. Throws InvalidIndex for i outside [1, truncation] or t < 1.
LengthSet mabc_power_lengthset(const MabcSpec& spec, std::int64_t i, std::int64_t t,
                               std::uint64_t budget = kDefaultBudget);

/// a_1^3 = a_2^4 = a_3^6 = ... = a_i^{2i}. Throws InvalidIndex for i < 3.
FinitePresentation chain_monoid(std::int64_t i);
/// Exponent of a_j in the chain: 3 for j = 1, 2j otherwise.
std::int64_t chain_exponent(std::int64_t j);

/// <2i, 3i, 6i + 1>. Throws InvalidIndex for i < 2.
NumericalSemigroup infinite_delta_member(std::int64_t i);

/// Atoms 4/3, 8/5, 800/1201 at level 0, plus 23208/72073 at level 1.
struct NoasymSpec {
  int level = 0;
};

/// Throws InvalidLevel.
std::vector<Rational> noasym_atoms(const NoasymSpec& spec);
PuiseuxMonoid noasym_monoid(const NoasymSpec& spec);

struct NoasymPoint {
  std::int64_t n = 0;
  std::optional<Rational> ld;
  std::int64_t min_len = 0;
  std::int64_t max_len = 0;
  std::size_t size = 0;
};

/// ld(8n) for each requested n, sorted by n with duplicates removed.
std::vector<NoasymPoint> noasym_series(const NoasymSpec& spec, std::vector<std::int64_t> ns,
                                       const ScanOptions& opts = {});

}  // namespace lendens

#include "lendens/constructions.hpp"

#include <algorithm>

#include "lendens/error.hpp"
#include "parallel.hpp"

namespace lendens {

void validate(const MabcSpec& spec) {
  if (spec.a < 1 || spec.b <= spec.a) {
    throw Error(ErrorCode::kInvalidSpec, "need 1 <= a < b");
  }
  if (spec.c.sign() < 0 || spec.c > Rational(1)) {
    throw Error(ErrorCode::kInvalidSpec, "need 0 <= c <= 1");
  }
  if (spec.truncation < 1) throw Error(ErrorCode::kInvalidSpec, "truncation must be positive");
}

std::int64_t mabc_k(const MabcSpec& spec, std::int64_t i) {
  Rational v = Rational(i) * spec.c * Rational(spec.b - spec.a);
  return v.ceil().convert_to<std::int64_t>();
}

std::vector<std::int64_t> mabc_chain_indices(const MabcSpec& spec, std::int64_t i) {
  std::vector<std::int64_t> js;
  std::int64_t lo = i * spec.a;
  for (std::int64_t j = lo; j <= lo + mabc_k(spec, i); ++j) js.push_back(j);
  if (js.back() != i * spec.b) js.push_back(i * spec.b);
  return js;
}

namespace {

void check_chain(const MabcSpec& spec, std::int64_t i) {
  validate(spec);
  if (i < 1 || i > spec.truncation) {
    throw Error(ErrorCode::kInvalidIndex, "chain index " + std::to_string(i) + " outside [1," +
                                              std::to_string(spec.truncation) + "]");
  }
}

std::size_t chain_offset(const MabcSpec& spec, std::int64_t i) {
  std::size_t offset = 0;
  for (std::int64_t r = 1; r < i; ++r) offset += mabc_chain_indices(spec, r).size();
  return offset;
}

}  // namespace

std::size_t mabc_atom_index(const MabcSpec& spec, std::int64_t i, std::int64_t j) {
  check_chain(spec, i);
  auto js = mabc_chain_indices(spec, i);
  auto it = std::find(js.begin(), js.end(), j);
  if (it == js.end()) {
    throw Error(ErrorCode::kInvalidIndex, "q_{" + std::to_string(i) + "," + std::to_string(j) +
                                              "} is not an atom of the truncation");
  }
  return chain_offset(spec, i) + static_cast<std::size_t>(it - js.begin());
}

FinitePresentation mabc_presentation(const MabcSpec& spec) {
  validate(spec);
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> chains;
  for (std::int64_t i = 1; i <= spec.truncation; ++i) {
    chains.push_back(mabc_chain_indices(spec, i));
    for (auto j : chains.back()) {
      names.push_back("q_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  }
  std::vector<Relation> relations;
  std::size_t offset = 0;
  for (const auto& js : chains) {
    for (std::size_t k = 0; k + 1 < js.size(); ++k) {
      Relation rel{IntVector(names.size(), 0), IntVector(names.size(), 0)};
      rel.left[offset + k] = js[k];
      rel.right[offset + k + 1] = js[k + 1];
      relations.push_back(std::move(rel));
    }
    offset += js.size();
  }
  std::size_t count = names.size();
  return make_presentation(count, std::move(relations), std::move(names));
}

Element mabc_chain_power(const MabcSpec& spec, std::int64_t i, std::int64_t t) {
  std::size_t idx = mabc_atom_index(spec, i, i * spec.a);
  std::size_t total = chain_offset(spec, spec.truncation + 1);
  IntVector w(total, 0);
  w[idx] = t * i * spec.a;
  return Element::vector(std::move(w));
}

LengthSet mabc_power_lengthset(const MabcSpec& spec, std::int64_t i, std::int64_t t,
                               std::uint64_t budget) {
  check_chain(spec, i);
  if (t < 1) throw Error(ErrorCode::kInvalidIndex, "power must be positive");
  if (t == 1) return LengthSet::from_values(mabc_chain_indices(spec, i));
  // Only chain i is involved, so a presentation with that single chain has
  // the same rewriting class.
  auto js = mabc_chain_indices(spec, i);
  std::vector<Relation> relations;
  for (std::size_t k = 0; k + 1 < js.size(); ++k) {
    Relation rel{IntVector(js.size(), 0), IntVector(js.size(), 0)};
    rel.left[k] = js[k];
    rel.right[k + 1] = js[k + 1];
    relations.push_back(std::move(rel));
  }
  auto p = make_presentation(js.size(), std::move(relations));
  IntVector w(js.size(), 0);
  w[0] = t * js[0];
  auto fs = p.factorizations(Element::vector(std::move(w)), budget);
  if (!fs.complete) throw Error(ErrorCode::kBudgetExceeded, "chain power closure exceeds budget");
  std::vector<std::int64_t> lengths;
  for (const auto& z : fs.factorizations) lengths.push_back(z.length());
  return LengthSet::from_values(std::move(lengths));
}

std::int64_t chain_exponent(std::int64_t j) { return j == 1 ? 3 : 2 * j; }

FinitePresentation chain_monoid(std::int64_t i) {
  if (i < 3) throw Error(ErrorCode::kInvalidIndex, "chain monoid needs i >= 3");
  auto n = static_cast<std::size_t>(i);
  std::vector<Relation> relations;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Relation rel{IntVector(n, 0), IntVector(n, 0)};
    rel.left[k] = chain_exponent(static_cast<std::int64_t>(k) + 1);
    rel.right[k + 1] = chain_exponent(static_cast<std::int64_t>(k) + 2);
    relations.push_back(std::move(rel));
  }
  return make_presentation(n, std::move(relations));
}

NumericalSemigroup infinite_delta_member(std::int64_t i) {
  if (i < 2) throw Error(ErrorCode::kInvalidIndex, "family index must be at least 2");
  return make_numerical({2 * i, 3 * i, 6 * i + 1});
}

std::vector<Rational> noasym_atoms(const NoasymSpec& spec) {
  if (spec.level < 0 || spec.level > 1) {
    throw Error(ErrorCode::kInvalidLevel, "level " + std::to_string(spec.level) +
                                              " not available (0 or 1)");
  }
  std::vector<Rational> atoms{Rational(4, 3), Rational(8, 5), Rational(800, 1201)};
  if (spec.level >= 1) atoms.emplace_back(2901 * 8, 72073);
  return atoms;
}

PuiseuxMonoid noasym_monoid(const NoasymSpec& spec) { return make_puiseux(noasym_atoms(spec)); }

std::vector<NoasymPoint> noasym_series(const NoasymSpec& spec, std::vector<std::int64_t> ns,
                                       const ScanOptions& opts) {
  auto m = noasym_monoid(spec);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (auto n : ns) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "power must be positive");
  }
  std::vector<NoasymPoint> out(ns.size());
  detail::parallel_for(ns.size(), opts.threads, [&](std::size_t k) {
    LengthSet ls = m.length_set(Element::rational(Rational(8 * ns[k])));
    out[k] = {ns[k], length_density(ls), ls.min(), ls.max(), ls.size()};
  });
  return out;
}

}  // namespace lendens

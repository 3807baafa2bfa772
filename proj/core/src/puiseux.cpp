#include "lendens/puiseux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "knapsack.hpp"
#include "lendens/error.hpp"

namespace lendens {

namespace {

constexpr std::int64_t kMaxDivisorScan = 50'000'000;
constexpr std::int64_t kMaxDenseScan = 50'000'000;

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      v < BigInt(std::numeric_limits<std::int64_t>::min())) {
    throw Error(ErrorCode::kOverflow, "value " + v.str() + " exceeds 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "product exceeds 64 bits");
  return out;
}

/// Inverse of a modulo m (gcd(a, m) == 1, m > 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  __int128 old_r = ((a % m) + m) % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return static_cast<std::int64_t>(((old_s % m) + m) % m);
}

}  // namespace

PuiseuxMonoid::PuiseuxMonoid(std::vector<Rational> atoms) : atoms_(std::move(atoms)) {
  lcm_ = 1;
  for (const auto& a : atoms_) lcm_ = std::lcm(lcm_, to_int64(a.denominator()));
  std::vector<detail::WeightedAtom> cleared;
  std::vector<detail::WeightedAtom> reduced;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    std::int64_t p = to_int64(atoms_[i].denominator());
    std::int64_t a = to_int64(atoms_[i].numerator());
    std::int64_t w = checked_mul(a, lcm_ / p);
    cleared_weights_.push_back(w);
    cleared.push_back({w, 1});
    bool isolated = p > 1;
    for (std::size_t j = 0; j < atoms_.size() && isolated; ++j) {
      if (j != i && std::gcd(p, to_int64(atoms_[j].denominator())) != 1) isolated = false;
    }
    std::int64_t modulus = isolated ? p : 1;
    moduli_.push_back(modulus);
    reduced.push_back({checked_mul(w, modulus), modulus});
  }
  cleared_ = std::make_shared<detail::SingleConstraintSolver>(std::move(cleared));
  reduced_ = std::make_shared<detail::SingleConstraintSolver>(std::move(reduced));
}

PuiseuxMonoid make_puiseux(std::vector<Rational> atoms) {
  if (atoms.empty()) throw Error(ErrorCode::kEmptyGenerators, "no atoms given");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].sign() <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "atom " + atoms[i].to_string() + " is not positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (atoms[i] == atoms[j]) {
        throw Error(ErrorCode::kInvalidArgument, "atom " + atoms[i].to_string() + " repeated");
      }
    }
  }
  if (atoms.size() > 1) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      std::vector<Rational> others;
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (j != i) others.push_back(atoms[j]);
      }
      if (PuiseuxMonoid(others).contains(Element::rational(atoms[i]))) {
        throw Error(ErrorCode::kNotAtomic, atoms[i].to_string() + " is a sum of the other atoms");
      }
    }
  }
  return PuiseuxMonoid(std::move(atoms));
}

std::optional<std::int64_t> PuiseuxMonoid::cleared(const Rational& x) const {
  if (x.sign() < 0) return std::nullopt;
  Rational scaled = x * Rational(lcm_);
  if (!scaled.is_integer()) return std::nullopt;
  return to_int64(scaled.numerator());
}

std::optional<PuiseuxMonoid::Reduction> PuiseuxMonoid::reduce(const Rational& x) const {
  auto t = cleared(x);
  if (!t) return std::nullopt;
  Reduction red;
  red.residues.assign(atoms_.size(), 0);
  __int128 rest = *t;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    std::int64_t p = moduli_[i];
    if (p == 1) continue;
    std::int64_t w_mod = cleared_weights_[i] % p;
    std::int64_t r = static_cast<std::int64_t>(
        (static_cast<__int128>(*t % p) * mod_inverse(w_mod, p)) % p);
    red.residues[i] = r;
    red.length_offset += r;
    rest -= static_cast<__int128>(r) * cleared_weights_[i];
  }
  if (rest < 0) return std::nullopt;
  red.target = static_cast<std::int64_t>(rest);
  return red;
}

std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> PuiseuxMonoid::forced_residues(
    const Rational& x) const {
  std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> out;
  auto t = cleared(x);
  if (!t) return out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    std::int64_t p = moduli_[i];
    if (p == 1) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::int64_t r = static_cast<std::int64_t>(
        (static_cast<__int128>(*t % p) * mod_inverse(cleared_weights_[i] % p, p)) % p);
    out.emplace_back(std::make_pair(r, p));
  }
  return out;
}

Element PuiseuxMonoid::combine(const Element& x, const Element& y) const {
  check_tag(x);
  check_tag(y);
  return Element::rational(x.as_rational() + y.as_rational());
}

Element PuiseuxMonoid::evaluate(const IntVector& exponents) const {
  if (exponents.size() != atoms_.size()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "exponent vector length differs from atom count");
  }
  Rational total(0);
  for (std::size_t i = 0; i < exponents.size(); ++i) total += Rational(exponents[i]) * atoms_[i];
  return Element::rational(total);
}

bool PuiseuxMonoid::contains(const Element& x) const {
  check_tag(x);
  auto red = reduce(x.as_rational());
  return red && reduced_->representable(red->target);
}

FactorizationSet PuiseuxMonoid::factorizations(const Element& x, std::uint64_t budget) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  auto red = *reduce(x.as_rational());
  FactorizationSet fs;
  fs.element = x;
  fs.complete = reduced_->enumerate(red.target, budget, [&](const IntVector& f) {
    IntVector e(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = red.residues[i] + moduli_[i] * f[i];
    fs.factorizations.emplace_back(std::move(e));
  });
  std::sort(fs.factorizations.begin(), fs.factorizations.end());
  return fs;
}

LengthSet PuiseuxMonoid::length_set(const Element& x) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  auto red = *reduce(x.as_rational());
  auto row = reduced_->lengths(red.target);
  row.lo += red.length_offset;
  row.hi += red.length_offset;
  return row.to_length_set();
}

std::vector<Element> PuiseuxMonoid::scan(std::int64_t bound) const {
  std::vector<Element> out;
  for (auto& entry : scan_length_sets(bound)) out.push_back(std::move(entry.element));
  return out;
}

std::vector<ScanEntry> PuiseuxMonoid::scan_length_sets(std::int64_t bound) const {
  std::vector<ScanEntry> out;
  if (bound < 0) return out;
  if (bound > kMaxDenseScan) {
    // Sparse: walk exponent vectors of cleared degree <= bound directly.
    std::map<std::int64_t, std::set<std::int64_t>> found;
    std::uint64_t nodes = 0;
    std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
        [&](std::size_t i, std::int64_t degree, std::int64_t length) {
          if (i == cleared_weights_.size()) {
            found[degree].insert(length);
            if (++nodes > kDefaultBudget) {
              throw Error(ErrorCode::kBudgetExceeded, "sparse scan exceeds budget");
            }
            return;
          }
          std::int64_t w = cleared_weights_[i];
          for (std::int64_t e = 0; e <= (bound - degree) / w; ++e) {
            walk(i + 1, degree + e * w, length + e);
          }
        };
    walk(0, 0, 0);
    for (const auto& [t, lengths] : found) {
      out.push_back({Element::rational(Rational(t, lcm_)),
                     LengthSet::from_values({lengths.begin(), lengths.end()})});
    }
    return out;
  }
  auto table = cleared_->length_table(bound);
  for (std::int64_t t = 0; t <= bound; ++t) {
    const auto& row = table[static_cast<std::size_t>(t)];
    if (row.empty()) continue;
    out.push_back({Element::rational(Rational(t, lcm_)), row.to_length_set()});
  }
  return out;
}

std::vector<Element> PuiseuxMonoid::divisors(const Element& x, std::uint64_t budget) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  std::int64_t t = *cleared(x.as_rational());
  if (t > kMaxDivisorScan || static_cast<std::uint64_t>(t) > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "divisor scan of " + format(x) + " exceeds budget");
  }
  auto table = cleared_->length_table(t);
  std::vector<Element> out;
  for (std::int64_t y = 0; y <= t; ++y) {
    if (!table[static_cast<std::size_t>(y)].empty() && !table[static_cast<std::size_t>(t - y)].empty()) {
      out.push_back(Element::rational(Rational(y, lcm_)));
    }
  }
  return out;
}

std::string PuiseuxMonoid::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ",";
    out += atoms_[i].to_string();
  }
  return out + ">";
}

}  // namespace lendens

#include "lendens/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "lendens/error.hpp"
#include "lendens/rational.hpp"
#include "simplex.hpp"
#include "vector_solver.hpp"

namespace lendens {

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool covers(const IntVector& w, const IntVector& side) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < side[i]) return false;
  }
  return true;
}

/// Rewriting class of `start`; stops (complete = false) after `budget` words.
std::vector<IntVector> rewrite_class(const IntVector& start, const std::vector<Relation>& rels,
                                     std::uint64_t budget, bool& complete) {
  detail::VectorMap<char> seen;
  std::vector<IntVector> out;
  std::deque<IntVector> queue{start};
  seen.emplace(start, 1);
  complete = true;
  while (!queue.empty()) {
    IntVector w = std::move(queue.front());
    queue.pop_front();
    for (const auto& rel : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const IntVector& from = dir == 0 ? rel.left : rel.right;
        const IntVector& to = dir == 0 ? rel.right : rel.left;
        if (!covers(w, from)) continue;
        IntVector next = w;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += to[i] - from[i];
        if (seen.count(next)) continue;
        if (seen.size() >= budget) {
          complete = false;
          continue;
        }
        seen.emplace(next, 1);
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Integer grading: one exact kernel point per connected block of atoms,
/// scaled to coprime integers.
IntVector compute_grading(std::size_t n, const std::vector<Relation>& rels) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& rel : rels) {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (rel.left[i] == 0 && rel.right[i] == 0) continue;
      if (first == n) {
        first = i;
      } else {
        parent[find(i)] = find(first);
      }
    }
  }
  IntVector grading(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (find(root) != root) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (find(i) == root) members.push_back(i);
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& rel : rels) {
      std::vector<Rational> row(members.size(), Rational(0));
      bool touches = false;
      for (std::size_t k = 0; k < members.size(); ++k) {
        std::int64_t c = rel.left[members[k]] - rel.right[members[k]];
        row[k] = Rational(c);
        touches = touches || rel.left[members[k]] != 0 || rel.right[members[k]] != 0;
      }
      if (touches) rows.push_back(std::move(row));
    }
    auto w = detail::positive_kernel_point(rows, members.size());
    if (!w) {
      throw Error(ErrorCode::kNoPositiveGrading, "relations admit no positive grading");
    }
    BigInt den = 1;
    for (const auto& v : *w) den = boost::multiprecision::lcm(den, v.denominator());
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& v : *w) {
      ints.push_back(v.numerator() * (den / v.denominator()));
      g = boost::multiprecision::gcd(g, ints.back());
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      BigInt value = ints[k] / g;
      if (value > BigInt(std::int64_t{1} << 40)) {
        throw Error(ErrorCode::kOverflow, "grading weights too large");
      }
      grading[members[k]] = value.convert_to<std::int64_t>();
    }
  }
  return grading;
}

}  // namespace

FinitePresentation::FinitePresentation(std::vector<std::string> names,
                                       std::vector<Relation> relations, IntVector grading)
    : names_(std::move(names)), relations_(std::move(relations)), grading_(std::move(grading)) {}

FinitePresentation make_presentation(std::size_t atom_count, std::vector<Relation> relations,
                                     std::vector<std::string> names) {
  if (atom_count == 0) throw Error(ErrorCode::kEmptyGenerators, "presentation needs atoms");
  if (names.empty()) {
    for (std::size_t i = 0; i < atom_count; ++i) names.push_back("a" + std::to_string(i + 1));
  }
  if (names.size() != atom_count) {
    throw Error(ErrorCode::kDimensionMismatch, "atom name count differs from atom count");
  }
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    std::string where = "relation " + std::to_string(r + 1);
    if (rel.left.size() != atom_count || rel.right.size() != atom_count) {
      throw Error(ErrorCode::kDimensionMismatch, where + " has the wrong number of exponents");
    }
    for (std::size_t i = 0; i < atom_count; ++i) {
      if (rel.left[i] < 0 || rel.right[i] < 0) {
        throw Error(ErrorCode::kMalformedRelation, where + " has a negative exponent");
      }
    }
    if (is_zero(rel.left) || is_zero(rel.right)) {
      throw Error(ErrorCode::kMalformedRelation, where + " has an empty side");
    }
    if (rel.left == rel.right) {
      throw Error(ErrorCode::kMalformedRelation, where + " has equal sides");
    }
  }
  IntVector grading = compute_grading(atom_count, relations);
  return FinitePresentation(std::move(names), std::move(relations), std::move(grading));
}

std::int64_t FinitePresentation::degree(const IntVector& word) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < word.size(); ++i) d += word[i] * grading_[i];
  return d;
}

Element FinitePresentation::atom(std::size_t index) const {
  IntVector v(names_.size(), 0);
  v.at(index) = 1;
  return Element::vector(std::move(v));
}

bool FinitePresentation::contains(const Element& x) const {
  check_tag(x);
  const auto& v = x.as_vector();
  if (v.size() != names_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "word length differs from atom count");
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e >= 0; });
}

Element FinitePresentation::combine(const Element& x, const Element& y) const {
  contains(x);
  contains(y);
  IntVector v = x.as_vector();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.as_vector()[i];
  return Element::vector(std::move(v));
}

Element FinitePresentation::evaluate(const IntVector& exponents) const {
  if (exponents.size() != names_.size()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "exponent vector length differs from atom count");
  }
  return Element::vector(exponents);
}

Element FinitePresentation::canonical(const Element& x) const {
  auto fs = factorizations(x, kDefaultBudget);
  if (!fs.complete) {
    throw Error(ErrorCode::kBudgetExceeded, "rewriting class of " + format(x) + " exceeds budget");
  }
  return Element::vector(fs.factorizations.front().exponents);
}

FactorizationSet FinitePresentation::factorizations(const Element& x, std::uint64_t budget) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, "negative exponent in word");
  FactorizationSet fs;
  fs.element = x;
  for (auto& w : rewrite_class(x.as_vector(), relations_, budget, fs.complete)) {
    fs.factorizations.emplace_back(std::move(w));
  }
  return fs;
}

std::vector<Element> FinitePresentation::scan(std::int64_t bound) const {
  const std::size_t n = names_.size();
  detail::VectorMap<char> covered;
  std::vector<IntVector> reps;
  IntVector w(n, 0);
  // All words with at most `bound` atoms, via an odometer on the total.
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      if (covered.count(w)) return;
      bool complete = true;
      auto cls = rewrite_class(w, relations_, kDefaultBudget, complete);
      if (!complete) {
        throw Error(ErrorCode::kBudgetExceeded, "rewriting class of " + format(Element::vector(w)) +
                                                    " exceeds budget");
      }
      for (auto& v : cls) covered.emplace(v, 1);
      reps.push_back(cls.front());
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      w[i] = e;
      walk(i + 1, left - e);
    }
    w[i] = 0;
  };
  if (bound >= 0) walk(0, bound);
  std::sort(reps.begin(), reps.end(), [&](const IntVector& a, const IntVector& b) {
    auto da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<Element> out;
  for (auto& r : reps) out.push_back(Element::vector(std::move(r)));
  return out;
}

std::string FinitePresentation::format(const Element& x) const {
  if (x.tag() != Element::Tag::kVector || x.as_vector().size() != names_.size()) {
    return x.to_string();
  }
  std::string out;
  const auto& v = x.as_vector();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[i];
    if (v[i] != 1) out += "^" + std::to_string(v[i]);
  }
  return out.empty() ? "1" : out;
}

std::string FinitePresentation::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += names_[i];
  }
  if (!relations_.empty()) {
    out += " | ";
    for (std::size_t r = 0; r < relations_.size(); ++r) {
      if (r) out += ", ";
      out += format(Element::vector(relations_[r].left)) + "=" +
             format(Element::vector(relations_[r].right));
    }
  }
  return out + ">";
}

Element FinitePresentation::parse_word(const std::string& text) const {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  const std::size_t n = names_.size();
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty word");
  if (s == "1") return identity();
  if (s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::kParseError, "unterminated vector '" + text + "'");
    IntVector v;
    std::size_t pos = 1;
    while (pos < s.size() - 1) {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos || end > s.size() - 1) end = s.size() - 1;
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(s.substr(pos, end - pos), &used));
        if (used != end - pos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad exponent in '" + text + "'");
      }
      pos = end + 1;
    }
    if (v.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "word has " + std::to_string(v.size()) +
                                                     " exponents, presentation has " +
                                                     std::to_string(n) + " atoms");
    }
    Element x = Element::vector(std::move(v));
    if (!contains(x)) throw Error(ErrorCode::kParseError, "negative exponent in '" + text + "'");
    return x;
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(names_[i], i);
  IntVector v(n, 0);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    std::string factor = s.substr(pos, end - pos);
    std::string name = factor;
    std::int64_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      try {
        std::size_t used = 0;
        std::string p = factor.substr(caret + 1);
        power = std::stoll(p, &used);
        if (used != p.size() || power < 0) throw std::invalid_argument("bad power");
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad power in '" + factor + "'");
      }
    }
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorCode::kParseError, "unknown atom '" + name + "'");
    v[it->second] += power;
    pos = end + 1;
  }
  return Element::vector(std::move(v));
}

std::optional<std::pair<IntVector, IntVector>> FinitePresentation::find_cancellativity_violation(
    std::int64_t max_length, std::uint64_t budget) const {
  // x*u ~ y*u with x !~ y reduces to a single atom u: inside each class,
  // removing one atom from every word that contains it must land in a
  // single class.
  const std::size_t n = names_.size();
  for (const auto& rep : scan(max_length)) {
    bool complete = true;
    auto cls = rewrite_class(rep.as_vector(), relations_, budget, complete);
    if (!complete) throw Error(ErrorCode::kBudgetExceeded, "rewriting class exceeds budget");
    for (std::size_t a = 0; a < n; ++a) {
      std::optional<std::vector<IntVector>> target;
      for (const auto& w : cls) {
        if (w[a] == 0) continue;
        IntVector rest = w;
        --rest[a];
        if (!target) {
          target = rewrite_class(rest, relations_, budget, complete);
          if (!complete) throw Error(ErrorCode::kBudgetExceeded, "rewriting class exceeds budget");
          continue;
        }
        if (!std::binary_search(target->begin(), target->end(), rest)) {
          return std::make_pair(target->front(), rest);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lendens

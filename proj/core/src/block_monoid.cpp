#include "lendens/block_monoid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "lendens/error.hpp"

namespace lendens {

namespace {

constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 20;

std::int64_t parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "expected an integer in '" + context + "'");
  }
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<std::int64_t>& cyclic_orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> prime_powers;
  for (std::int64_t n : cyclic_orders) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic order must be positive");
    if (order_ > kMaxGroupOrder / n) {
      throw Error(ErrorCode::kInvalidArgument, "group order exceeds " + std::to_string(kMaxGroupOrder));
    }
    order_ *= n;
    for (std::int64_t p = 2; n > 1; ++p) {
      if (p * p > n) p = n;
      std::int64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) prime_powers[p].push_back(q);
    }
  }
  std::size_t r = 0;
  for (auto& [p, qs] : prime_powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    r = std::max(r, qs.size());
  }
  factors_.assign(r, 1);
  for (const auto& [p, qs] : prime_powers) {
    for (std::size_t j = 0; j < qs.size(); ++j) factors_[r - 1 - j] *= qs[j];
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty group");
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find_first_of("xX+", pos);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(pos, end - pos);
    if (part.empty() || (part[0] != 'Z' && part[0] != 'z')) {
      throw Error(ErrorCode::kParseError, "expected Zn in group '" + text + "'");
    }
    part = part.substr(1);
    if (!part.empty() && part[0] == '_') part = part.substr(1);
    std::int64_t n = parse_int(part, text);
    if (n < 1) throw Error(ErrorCode::kParseError, "cyclic order must be positive in '" + text + "'");
    orders.push_back(n);
    pos = end + 1;
  }
  return FiniteAbelianGroup(orders);
}

GroupElement FiniteAbelianGroup::element(IntVector residues) const {
  if (residues.size() != factors_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "group element has " +
                                                   std::to_string(residues.size()) +
                                                   " residues, group rank is " +
                                                   std::to_string(factors_.size()));
  }
  for (std::size_t i = 0; i < residues.size(); ++i) {
    residues[i] = ((residues[i] % factors_[i]) + factors_[i]) % factors_[i];
  }
  return {std::move(residues)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  IntVector r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.residues[i] + b.residues[i]) % factors_[i];
  return {std::move(r)};
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  IntVector r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (factors_[i] - a.residues[i]) % factors_[i];
  return {std::move(r)};
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g.residues[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
  IntVector r(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    r[i] = index % factors_[i];
    index /= factors_[i];
  }
  return {std::move(r)};
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string FiniteAbelianGroup::format(const GroupElement& g) const {
  std::string out = "(";
  for (std::size_t i = 0; i < g.residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.residues[i]);
  }
  return out + ")";
}

GroupElement FiniteAbelianGroup::parse_element(const std::string& text) const {
  std::string s = strip(text);
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty group element");
  IntVector r;
  if (s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::kParseError, "unterminated element '" + text + "'");
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (!body.empty() && pos <= body.size()) {
      std::size_t end = body.find(',', pos);
      if (end == std::string::npos) end = body.size();
      r.push_back(parse_int(body.substr(pos, end - pos), text));
      pos = end + 1;
    }
  } else {
    r.push_back(parse_int(s, text));
  }
  if (r.size() == 1 && factors_.empty() && r[0] == 0) r.clear();
  return element(std::move(r));
}

std::vector<GroupElement> FiniteAbelianGroup::parse_subset(const std::string& text) const {
  std::string s = strip(text);
  std::vector<GroupElement> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    out.push_back(parse_element(s.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(factors_[i]);
  }
  return out;
}

std::int64_t ZeroSumSequence::length() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

namespace {

/// Depth-first walk over zero-sum free sequences in nondecreasing support
/// order. Every minimal zero-sum sequence is V*g with g its largest element
/// and V zero-sum free, and such a V*g is minimal exactly when sum(V) = -g:
/// a smaller zero-sum part containing g would leave a zero-sum rest of V.
class ZeroSumWalker {
 public:
  ZeroSumWalker(const FiniteAbelianGroup& g, const std::vector<GroupElement>& subset,
                std::uint64_t budget)
      : order_(static_cast<std::size_t>(g.order())), budget_(budget) {
    for (const auto& s : subset) {
      std::vector<std::int64_t> row(order_);
      for (std::size_t i = 0; i < order_; ++i) {
        row[i] = g.index_of(g.add(g.element_at(static_cast<std::int64_t>(i)), s));
      }
      shift_.push_back(std::move(row));
      negated_.push_back(g.index_of(g.negate(s)));
      self_.push_back(g.index_of(s));
    }
  }

  /// on_atom(multiplicities) for each minimal zero-sum sequence of length
  /// <= max_len; returns the longest zero-sum free length seen.
  std::int64_t run(std::int64_t max_len, const std::function<void(const IntVector&)>& on_atom) {
    IntVector mult(shift_.size(), 0);
    std::vector<char> sums(order_, 0);
    longest_ = 0;
    walk(0, 0, 0, max_len, mult, sums, on_atom);
    return longest_;
  }

 private:
  void walk(std::size_t first, std::int64_t depth, std::int64_t total, std::int64_t max_len,
            IntVector& mult, const std::vector<char>& sums,
            const std::function<void(const IntVector&)>& on_atom) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded, "zero-sum search exceeds budget");
    }
    longest_ = std::max(longest_, depth);
    if (depth >= max_len) return;
    for (std::size_t k = first; k < shift_.size(); ++k) {
      if (total == negated_[k]) {
        ++mult[k];
        if (on_atom) on_atom(mult);
        --mult[k];
        continue;
      }
      if (self_[k] == 0 || sums[static_cast<std::size_t>(negated_[k])]) continue;
      if (depth + 1 >= max_len && !on_atom) {
        longest_ = std::max(longest_, depth + 1);
        continue;
      }
      std::vector<char> next = sums;
      next[static_cast<std::size_t>(self_[k])] = 1;
      for (std::size_t i = 0; i < order_; ++i) {
        if (sums[i]) next[static_cast<std::size_t>(shift_[k][i])] = 1;
      }
      ++mult[k];
      walk(k, depth + 1, shift_[k][static_cast<std::size_t>(total)], max_len, mult, next, on_atom);
      --mult[k];
    }
  }

  std::size_t order_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::int64_t longest_ = 0;
  std::vector<std::vector<std::int64_t>> shift_;  // index of x + s_k for each index x
  std::vector<std::int64_t> negated_;
  std::vector<std::int64_t> self_;
};

std::vector<GroupElement> normalize_subset(const FiniteAbelianGroup& g,
                                           std::vector<GroupElement> subset) {
  for (auto& s : subset) s = g.element(s.residues);
  std::sort(subset.begin(), subset.end(), [&](const GroupElement& a, const GroupElement& b) {
    return g.index_of(a) < g.index_of(b);
  });
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

}  // namespace

std::vector<ZeroSumSequence> zero_sum_atoms(const FiniteAbelianGroup& g,
                                            std::vector<GroupElement> subset,
                                            std::int64_t max_len, std::uint64_t budget) {
  subset = normalize_subset(g, std::move(subset));
  if (subset.empty()) throw Error(ErrorCode::kEmptyGenerators, "empty subset of the group");
  std::vector<IntVector> found;
  ZeroSumWalker walker(g, subset, budget);
  walker.run(max_len, [&](const IntVector& m) { found.push_back(m); });
  auto length = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(found.begin(), found.end(), [&](const IntVector& a, const IntVector& b) {
    auto la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  std::vector<ZeroSumSequence> out;
  for (auto& m : found) out.push_back({subset, std::move(m)});
  return out;
}

std::int64_t davenport(const FiniteAbelianGroup& g, std::uint64_t budget) {
  auto all = g.elements();
  ZeroSumWalker walker(g, all, budget);
  return walker.run(g.order(), nullptr) + 1;
}

BlockMonoid::BlockMonoid(FiniteAbelianGroup group, std::vector<GroupElement> support,
                         std::vector<ZeroSumSequence> atoms, std::int64_t davenport_constant)
    : AffineSemigroup(support.size(),
                      [&] {
                        std::vector<IntVector> gens;
                        for (const auto& a : atoms) gens.push_back(a.multiplicities);
                        return gens;
                      }()),
      group_(std::move(group)),
      support_(std::move(support)),
      atoms_(std::move(atoms)),
      davenport_(davenport_constant) {}

BlockMonoid block_presentation(const FiniteAbelianGroup& g, std::vector<GroupElement> subset,
                               std::uint64_t budget) {
  if (subset.empty()) subset = g.elements();
  subset = normalize_subset(g, std::move(subset));
  std::int64_t d = davenport(g, budget);
  auto atoms = zero_sum_atoms(g, subset, d, budget);
  return BlockMonoid(g, std::move(subset), std::move(atoms), d);
}

GroupElement BlockMonoid::sum(const IntVector& multiplicities) const {
  GroupElement acc = group_.zero();
  for (std::size_t i = 0; i < support_.size(); ++i) {
    for (std::int64_t k = 0; k < multiplicities[i] % std::max<std::int64_t>(group_.order(), 1); ++k) {
      acc = group_.add(acc, support_[i]);
    }
  }
  return acc;
}

bool BlockMonoid::contains(const Element& x) const {
  check_vector(x);
  const auto& v = x.as_vector();
  if (std::any_of(v.begin(), v.end(), [](std::int64_t e) { return e < 0; })) return false;
  return sum(v) == group_.zero();
}

std::string BlockMonoid::format(const Element& x) const {
  if (x.tag() != Element::Tag::kVector || x.as_vector().size() != support_.size()) {
    return x.to_string();
  }
  std::string out;
  const auto& v = x.as_vector();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out += group_.format(support_[i]);
    if (v[i] != 1) out += "^" + std::to_string(v[i]);
  }
  return out.empty() ? "[]" : out;
}

std::string BlockMonoid::describe() const {
  std::string out = "B(" + group_.to_string();
  if (static_cast<std::int64_t>(support_.size()) != group_.order()) {
    out += ",{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (i) out += ",";
      out += group_.format(support_[i]);
    }
    out += "}";
  }
  return out + ")";
}

Element BlockMonoid::from_multiset(const std::vector<GroupElement>& items) const {
  IntVector v(support_.size(), 0);
  for (const auto& raw : items) {
    GroupElement g = group_.element(raw.residues);
    auto it = std::find(support_.begin(), support_.end(), g);
    if (it == support_.end()) {
      throw Error(ErrorCode::kNotInMonoid, group_.format(g) + " is not in the support");
    }
    ++v[static_cast<std::size_t>(it - support_.begin())];
  }
  return Element::vector(std::move(v));
}

Element BlockMonoid::parse_sequence(const std::string& text) const {
  std::string s = strip(text);
  if (s == "[]" || s.empty()) return identity();
  std::vector<GroupElement> items;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*' || s[pos] == '.') {
      ++pos;
      continue;
    }
    std::string token;
    if (s[pos] == '(') {
      std::size_t end = s.find(')', pos);
      if (end == std::string::npos) throw Error(ErrorCode::kParseError, "unterminated '(' in '" + text + "'");
      token = s.substr(pos, end - pos + 1);
      pos = end + 1;
    } else {
      std::size_t end = pos;
      if (end < s.size() && s[end] == '-') ++end;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      if (end == pos) throw Error(ErrorCode::kParseError, "unexpected '" + std::string(1, s[pos]) + "' in '" + text + "'");
      token = s.substr(pos, end - pos);
      pos = end;
    }
    std::int64_t power = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = ++pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      power = parse_int(s.substr(pos, end - pos), text);
      pos = end;
    }
    GroupElement g = group_.parse_element(token);
    for (std::int64_t k = 0; k < power; ++k) items.push_back(g);
  }
  return from_multiset(items);
}

std::vector<IntVector> BlockMonoid::scan_vectors(std::int64_t bound) const {
  std::vector<IntVector> out;
  if (bound < 0) return out;
  const std::size_t n = support_.size();
  std::vector<std::vector<std::int64_t>> shift(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::int64_t i = 0; i < group_.order(); ++i) {
      shift[k].push_back(group_.index_of(group_.add(group_.element_at(i), support_[k])));
    }
  }
  IntVector v(n, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
      [&](std::size_t k, std::int64_t left, std::int64_t total) {
        if (k == n) {
          if (total == 0) out.push_back(v);
          return;
        }
        std::int64_t t = total;
        for (std::int64_t e = 0; e <= left; ++e) {
          v[k] = e;
          walk(k + 1, left - e, t);
          t = shift[k][static_cast<std::size_t>(t)];
        }
        v[k] = 0;
      };
  walk(0, bound, 0);
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    auto sa = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto sb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

}  // namespace lendens

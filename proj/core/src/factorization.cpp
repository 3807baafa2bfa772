#include "lendens/factorization.hpp"

#include <algorithm>
#include <numeric>

namespace lendens {

std::int64_t Factorization::length() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::int64_t{0});
}

bool Factorization::divides(const Factorization& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

LengthSet LengthSet::from_values(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  LengthSet ls;
  ls.values_ = std::move(values);
  return ls;
}

LengthSet::LengthSet(std::initializer_list<std::int64_t> values)
    : LengthSet(from_values(std::vector<std::int64_t>(values))) {}

bool LengthSet::contains(std::int64_t v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

bool LengthSet::is_interval() const {
  return !values_.empty() && max() - min() + 1 == static_cast<std::int64_t>(size());
}

std::vector<std::int64_t> LengthSet::deltas() const {
  std::vector<std::int64_t> gaps;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    gaps.push_back(values_[i] - values_[i - 1]);
  }
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return gaps;
}

LengthSet sumset(const LengthSet& a, const LengthSet& b) {
  if (a.empty() || b.empty()) return {};
  std::int64_t lo = a.min() + b.min();
  std::vector<char> hit(static_cast<std::size_t>(a.max() + b.max() - lo + 1), 0);
  for (auto x : a) {
    for (auto y : b) hit[static_cast<std::size_t>(x + y - lo)] = 1;
  }
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(lo + static_cast<std::int64_t>(i));
  }
  return LengthSet::from_values(std::move(out));
}

std::string format_length_set(const LengthSet& ls) {
  std::string out = "{";
  bool first = true;
  for (auto v : ls) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace lendens

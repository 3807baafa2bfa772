#include "lendens/direct_sum.hpp"

#include <functional>

#include "lendens/error.hpp"

namespace lendens {

namespace {

/// Calls fn on every index tuple of the given extents, last index fastest.
void for_each_index(const std::vector<std::size_t>& extents,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  for (auto e : extents) {
    if (e == 0) return;
  }
  std::vector<std::size_t> idx(extents.size(), 0);
  while (true) {
    fn(idx);
    std::size_t k = extents.size();
    while (k > 0) {
      --k;
      if (++idx[k] < extents[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (extents.empty()) return;
  }
}

}  // namespace

DirectSum::DirectSum(std::vector<MonoidPtr> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::kEmptyGenerators, "direct sum of no monoids");
  offsets_.push_back(0);
  for (const auto& c : components_) {
    if (!c) throw Error(ErrorCode::kInvalidArgument, "null summand");
    offsets_.push_back(offsets_.back() + c->atom_count());
  }
}

MonoidPtr direct_sum(std::vector<MonoidPtr> components) {
  if (components.size() == 1) return components.front();
  return std::make_shared<DirectSum>(std::move(components));
}

const std::vector<Element>& DirectSum::split(const Element& x) const {
  check_tag(x);
  const auto& parts = x.parts();
  if (parts.size() != components_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "tuple has " + std::to_string(parts.size()) +
                                                   " parts, direct sum has " +
                                                   std::to_string(components_.size()));
  }
  return parts;
}

std::pair<std::size_t, std::size_t> DirectSum::locate(std::size_t atom_index) const {
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (atom_index < offsets_[k + 1]) return {k, atom_index - offsets_[k]};
  }
  throw Error(ErrorCode::kInvalidIndex, "atom index out of range");
}

Element DirectSum::atom(std::size_t index) const {
  auto [k, local] = locate(index);
  std::vector<Element> parts;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    parts.push_back(j == k ? components_[j]->atom(local) : components_[j]->identity());
  }
  return Element::tuple(std::move(parts));
}

std::string DirectSum::atom_name(std::size_t index) const {
  auto [k, local] = locate(index);
  return std::to_string(k + 1) + ":" + components_[k]->atom_name(local);
}

Element DirectSum::identity() const {
  std::vector<Element> parts;
  for (const auto& c : components_) parts.push_back(c->identity());
  return Element::tuple(std::move(parts));
}

Element DirectSum::combine(const Element& x, const Element& y) const {
  const auto& a = split(x);
  const auto& b = split(y);
  std::vector<Element> parts;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    parts.push_back(components_[k]->combine(a[k], b[k]));
  }
  return Element::tuple(std::move(parts));
}

bool DirectSum::contains(const Element& x) const {
  const auto& a = split(x);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (!components_[k]->contains(a[k])) return false;
  }
  return true;
}

Element DirectSum::evaluate(const IntVector& exponents) const {
  if (exponents.size() != atom_count()) {
    throw Error(ErrorCode::kIndexSpaceMismatch, "exponent vector length differs from atom count");
  }
  std::vector<Element> parts;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    IntVector local(exponents.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
                    exponents.begin() + static_cast<std::ptrdiff_t>(offsets_[k + 1]));
    parts.push_back(components_[k]->evaluate(local));
  }
  return Element::tuple(std::move(parts));
}

Element DirectSum::canonical(const Element& x) const {
  const auto& a = split(x);
  std::vector<Element> parts;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    parts.push_back(components_[k]->canonical(a[k]));
  }
  return Element::tuple(std::move(parts));
}

FactorizationSet DirectSum::factorizations(const Element& x, std::uint64_t budget) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  const auto& a = split(x);
  std::vector<FactorizationSet> sets;
  std::vector<std::size_t> extents;
  FactorizationSet fs;
  fs.element = x;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    sets.push_back(components_[k]->factorizations(a[k], budget));
    fs.complete = fs.complete && sets.back().complete;
    extents.push_back(sets.back().size());
  }
  std::uint64_t produced = 0;
  for_each_index(extents, [&](const std::vector<std::size_t>& idx) {
    if (produced >= budget) {
      fs.complete = false;
      return;
    }
    ++produced;
    IntVector e;
    e.reserve(atom_count());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& part = sets[k].factorizations[idx[k]].exponents;
      e.insert(e.end(), part.begin(), part.end());
    }
    fs.factorizations.emplace_back(std::move(e));
  });
  // Concatenation of sorted component lists in odometer order is already
  // lexicographic.
  return fs;
}

LengthSet DirectSum::length_set(const Element& x) const {
  if (!contains(x)) throw Error(ErrorCode::kNotInMonoid, format(x) + " is not in " + describe());
  const auto& a = split(x);
  LengthSet acc{0};
  for (std::size_t k = 0; k < components_.size(); ++k) {
    acc = sumset(acc, components_[k]->length_set(a[k]));
  }
  return acc;
}

std::vector<Element> DirectSum::scan(std::int64_t bound) const {
  std::vector<Element> out;
  for (auto& e : scan_length_sets(bound)) out.push_back(std::move(e.element));
  return out;
}

std::vector<ScanEntry> DirectSum::scan_length_sets(std::int64_t bound) const {
  std::vector<std::vector<ScanEntry>> scans;
  std::vector<std::size_t> extents;
  for (const auto& c : components_) {
    scans.push_back(c->scan_length_sets(bound));
    extents.push_back(scans.back().size());
  }
  std::vector<ScanEntry> out;
  for_each_index(extents, [&](const std::vector<std::size_t>& idx) {
    std::vector<Element> parts;
    LengthSet ls{0};
    for (std::size_t k = 0; k < idx.size(); ++k) {
      parts.push_back(scans[k][idx[k]].element);
      ls = sumset(ls, scans[k][idx[k]].lengths);
    }
    out.push_back({Element::tuple(std::move(parts)), std::move(ls)});
  });
  return out;
}

std::vector<Element> DirectSum::divisors(const Element& x, std::uint64_t budget) const {
  const auto& a = split(x);
  std::vector<std::vector<Element>> divs;
  std::vector<std::size_t> extents;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    divs.push_back(components_[k]->divisors(a[k], budget));
    extents.push_back(divs.back().size());
  }
  std::vector<Element> out;
  for_each_index(extents, [&](const std::vector<std::size_t>& idx) {
    if (out.size() >= budget) {
      throw Error(ErrorCode::kBudgetExceeded, "divisor enumeration exceeds budget");
    }
    std::vector<Element> parts;
    for (std::size_t k = 0; k < idx.size(); ++k) parts.push_back(divs[k][idx[k]]);
    out.push_back(Element::tuple(std::move(parts)));
  });
  return out;
}

std::string DirectSum::format(const Element& x) const {
  if (x.tag() != Element::Tag::kTuple || x.parts().size() != components_.size()) {
    return x.to_string();
  }
  std::string out = "[";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out += ", ";
    out += components_[k]->format(x.parts()[k]);
  }
  return out + "]";
}

std::string DirectSum::describe() const {
  std::string out;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out += " (+) ";
    out += components_[k]->describe();
  }
  return out;
}

}  // namespace lendens

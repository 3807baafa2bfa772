#include "vector_solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "lendens/error.hpp"

namespace lendens::detail {

std::int64_t coordinate_sum(const IntVector& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

int first_support(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

VectorSolver::VectorSolver(std::vector<IntVector> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw Error(ErrorCode::kEmptyGenerators, "vector problem needs atoms");
  }
  dimension_ = atoms_.front().size();
  by_first_.resize(dimension_);
  min_atom_sum_ = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].size() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch, "atoms of differing dimension");
    }
    int j = first_support(atoms_[i]);
    if (j < 0) throw Error(ErrorCode::kZeroVector, "zero atom");
    by_first_[static_cast<std::size_t>(j)].push_back(i);
    min_atom_sum_ = std::min(min_atom_sum_, coordinate_sum(atoms_[i]));
  }
  // Larger atoms first inside a group keeps the search shallow.
  for (auto& group : by_first_) {
    std::stable_sort(group.begin(), group.end(), [&](std::size_t a, std::size_t b) {
      return coordinate_sum(atoms_[a]) > coordinate_sum(atoms_[b]);
    });
  }
}

std::int64_t VectorSolver::max_length(const IntVector& v) const {
  return coordinate_sum(v) / min_atom_sum_;
}

bool VectorSolver::enumerate(const IntVector& target, std::uint64_t budget,
                             const std::function<void(const IntVector&)>& emit) const {
  if (target.size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch, "target dimension differs from atoms");
  }
  for (auto x : target) {
    if (x < 0) return true;
  }
  IntVector rem = target;
  IntVector current(atoms_.size(), 0);
  std::uint64_t nodes = 0;
  bool exhausted = false;

  std::function<void()> next_coordinate;
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t j, std::size_t gi) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (rem[j] == 0) {
      next_coordinate();
      return;
    }
    const auto& group = by_first_[j];
    if (gi == group.size()) return;
    std::size_t idx = group[gi];
    const IntVector& a = atoms_[idx];
    std::int64_t max_count = std::numeric_limits<std::int64_t>::max();
    for (std::size_t c = j; c < dimension_; ++c) {
      if (a[c] > 0) max_count = std::min(max_count, rem[c] / a[c]);
    }
    for (std::size_t c = j; c < dimension_; ++c) rem[c] -= max_count * a[c];
    for (std::int64_t count = max_count; count >= 0; --count) {
      current[idx] = count;
      choose(j, gi + 1);
      if (exhausted) break;
      if (count > 0) {
        for (std::size_t c = j; c < dimension_; ++c) rem[c] += a[c];
      }
    }
    if (exhausted) {
      // restore rem exactly: undo whatever is still subtracted
      for (std::size_t c = j; c < dimension_; ++c) rem[c] += current[idx] * a[c];
    }
    current[idx] = 0;
  };
  next_coordinate = [&]() {
    int j = first_support(rem);
    if (j < 0) {
      emit(current);
      return;
    }
    choose(static_cast<std::size_t>(j), 0);
  };
  next_coordinate();
  return !exhausted;
}

std::vector<LengthRow> VectorSolver::lengths_bulk(const std::vector<IntVector>& elements) const {
  VectorMap<std::size_t> index;
  index.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  std::vector<LengthRow> rows(elements.size());
  IntVector y(dimension_);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const IntVector& x = elements[i];
    int j = first_support(x);
    rows[i] = LengthRow(0, max_length(x));
    if (j < 0) {
      rows[i].set(0);
      continue;
    }
    bool any = false;
    for (std::size_t idx : by_first_[static_cast<std::size_t>(j)]) {
      const IntVector& a = atoms_[idx];
      bool fits = true;
      for (std::size_t c = 0; c < dimension_; ++c) {
        y[c] = x[c] - a[c];
        if (y[c] < 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      auto it = index.find(y);
      if (it == index.end() || it->second >= i) continue;
      const LengthRow& src = rows[it->second];
      if (src.empty()) continue;
      rows[i].or_shifted(src, 1);
      any = true;
    }
    if (!any) rows[i] = LengthRow();
  }
  return rows;
}

LengthRow VectorSolver::lengths(const IntVector& target, std::uint64_t budget) const {
  if (target.size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch, "target dimension differs from atoms");
  }
  for (auto x : target) {
    if (x < 0) return {};
  }
  // Closure of the target under removing a first-support atom.
  VectorMap<char> seen;
  std::vector<IntVector> closure;
  std::deque<IntVector> queue{target};
  seen.emplace(target, 1);
  while (!queue.empty()) {
    IntVector x = std::move(queue.front());
    queue.pop_front();
    int j = first_support(x);
    if (j >= 0) {
      for (std::size_t idx : by_first_[static_cast<std::size_t>(j)]) {
        IntVector y = x;
        bool fits = true;
        for (std::size_t c = 0; c < dimension_; ++c) {
          y[c] -= atoms_[idx][c];
          if (y[c] < 0) {
            fits = false;
            break;
          }
        }
        if (fits && seen.emplace(y, 1).second) {
          if (seen.size() > budget) {
            throw Error(ErrorCode::kBudgetExceeded, "sub-element closure exceeds budget");
          }
          queue.push_back(y);
        }
      }
    }
    closure.push_back(std::move(x));
  }
  std::stable_sort(closure.begin(), closure.end(), [](const IntVector& a, const IntVector& b) {
    return coordinate_sum(a) < coordinate_sum(b);
  });
  auto rows = lengths_bulk(closure);
  return std::move(rows.back());
}

std::vector<IntVector> VectorSolver::elements_below(const IntVector& bound,
                                                    std::uint64_t budget) const {
  VectorMap<char> seen;
  std::vector<IntVector> out;
  std::deque<IntVector> queue{IntVector(dimension_, 0)};
  seen.emplace(queue.front(), 1);
  while (!queue.empty()) {
    IntVector x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : atoms_) {
      IntVector y = x;
      bool fits = true;
      for (std::size_t c = 0; c < dimension_; ++c) {
        y[c] += a[c];
        if (y[c] > bound[c]) {
          fits = false;
          break;
        }
      }
      if (fits && seen.emplace(y, 1).second) {
        if (seen.size() > budget) {
          throw Error(ErrorCode::kBudgetExceeded, "element enumeration exceeds budget");
        }
        queue.push_back(y);
      }
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    auto sa = coordinate_sum(a), sb = coordinate_sum(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

}  // namespace lendens::detail

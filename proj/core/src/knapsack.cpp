#include "knapsack.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "lendens/error.hpp"
#include "lendens/monoid.hpp"

namespace lendens::detail {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMaxAperyModulus = 4'000'000;
constexpr std::int64_t kMaxPruneTarget = 64'000'000;

/// Bitset over [0, n].
class Bits {
 public:
  explicit Bits(std::int64_t n) : data_(static_cast<std::size_t>(n / 64 + 1), 0) {}
  bool test(std::int64_t i) const { return (data_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
  void set(std::int64_t i) { data_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> data_;
};

}  // namespace

SingleConstraintSolver::SingleConstraintSolver(std::vector<WeightedAtom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw Error(ErrorCode::kEmptyGenerators, "one-equation problem needs atoms");
  }
  gcd_ = 0;
  for (const auto& a : atoms_) {
    if (a.weight <= 0 || a.step <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "atom weights and steps must be positive");
    }
    gcd_ = std::gcd(gcd_, a.weight);
  }
  for (auto& a : atoms_) a.weight /= gcd_;
  order_.resize(atoms_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
    return atoms_[x].weight > atoms_[y].weight;
  });
  min_weight_ = atoms_[order_.back()].weight;

  if (min_weight_ <= kMaxAperyModulus) {
    // Dijkstra over residues mod the smallest weight.
    apery_.assign(static_cast<std::size_t>(min_weight_), kUnreachable);
    using Item = std::pair<std::int64_t, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    apery_[0] = 0;
    queue.push({0, 0});
    while (!queue.empty()) {
      auto [dist, r] = queue.top();
      queue.pop();
      if (dist != apery_[static_cast<std::size_t>(r)]) continue;
      for (const auto& a : atoms_) {
        std::int64_t nd = dist + a.weight;
        std::int64_t nr = nd % min_weight_;
        if (nd < apery_[static_cast<std::size_t>(nr)]) {
          apery_[static_cast<std::size_t>(nr)] = nd;
          queue.push({nd, nr});
        }
      }
    }
  }
}

bool SingleConstraintSolver::reduce(std::int64_t target, std::int64_t& reduced) const {
  if (target < 0 || target % gcd_ != 0) return false;
  reduced = target / gcd_;
  return true;
}

bool SingleConstraintSolver::representable(std::int64_t target) const {
  std::int64_t t = 0;
  if (!reduce(target, t)) return false;
  if (!apery_.empty()) {
    return t >= apery_[static_cast<std::size_t>(t % min_weight_)];
  }
  bool found = false;
  enumerate(target, kDefaultBudget, [&](const IntVector&) { found = true; });
  return found;
}

bool SingleConstraintSolver::enumerate(std::int64_t target, std::uint64_t budget,
                                       const std::function<void(const IntVector&)>& emit) const {
  std::int64_t t = 0;
  if (!reduce(target, t)) return true;
  const std::size_t n = order_.size();

  // reach[k] marks values representable by the atoms order_[k..n-1].
  std::vector<Bits> reach;
  bool prune = t <= kMaxPruneTarget;
  if (prune) {
    reach.assign(n + 1, Bits(t));
    reach[n].set(0);
    for (std::size_t k = n; k-- > 0;) {
      std::int64_t w = atoms_[order_[k]].weight;
      for (std::int64_t v = 0; v <= t; ++v) {
        if (reach[k + 1].test(v) || (v >= w && reach[k].test(v - w))) reach[k].set(v);
      }
    }
    if (!reach[0].test(t)) return true;
  }

  IntVector current(n, 0);
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t k, std::int64_t rem) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    std::size_t idx = order_[k];
    std::int64_t w = atoms_[idx].weight;
    if (k + 1 == n) {
      if (rem % w == 0) {
        current[idx] = rem / w;
        emit(current);
        current[idx] = 0;
      }
      return;
    }
    for (std::int64_t c = rem / w; c >= 0; --c) {
      std::int64_t next = rem - c * w;
      if (prune && !reach[k + 1].test(next)) continue;
      current[idx] = c;
      dfs(k + 1, next);
      if (exhausted) break;
    }
    current[idx] = 0;
  };
  dfs(0, t);
  return !exhausted;
}

std::vector<LengthRow> SingleConstraintSolver::reduced_table(std::int64_t t) const {
  std::size_t size = static_cast<std::size_t>(t + 1);
  std::vector<std::int64_t> lo(size, kUnreachable);
  std::vector<std::int64_t> hi(size, -1);
  lo[0] = 0;
  hi[0] = 0;
  for (std::int64_t v = 1; v <= t; ++v) {
    for (const auto& a : atoms_) {
      if (a.weight > v || lo[static_cast<std::size_t>(v - a.weight)] == kUnreachable) continue;
      auto prev = static_cast<std::size_t>(v - a.weight);
      lo[static_cast<std::size_t>(v)] = std::min(lo[static_cast<std::size_t>(v)], lo[prev] + a.step);
      hi[static_cast<std::size_t>(v)] = std::max(hi[static_cast<std::size_t>(v)], hi[prev] + a.step);
    }
  }
  std::uint64_t words = 0;
  for (std::size_t v = 0; v < size; ++v) {
    if (lo[v] != kUnreachable) words += static_cast<std::uint64_t>((hi[v] - lo[v]) / 64 + 1);
  }
  if (words > kMaxTableWords) {
    throw Error(ErrorCode::kBudgetExceeded,
                "length table needs " + std::to_string(words) + " words");
  }

  std::vector<LengthRow> reduced(size);
  for (std::int64_t v = 0; v <= t; ++v) {
    auto uv = static_cast<std::size_t>(v);
    if (lo[uv] == kUnreachable) continue;
    reduced[uv] = LengthRow(lo[uv], hi[uv]);
    if (v == 0) {
      reduced[uv].set(0);
      continue;
    }
    for (const auto& a : atoms_) {
      if (a.weight > v) continue;
      const LengthRow& src = reduced[static_cast<std::size_t>(v - a.weight)];
      if (src.empty()) continue;
      reduced[uv].or_shifted(src, a.step);
    }
  }
  return reduced;
}

std::vector<LengthRow> SingleConstraintSolver::length_table(std::int64_t max_target) const {
  std::int64_t t = max_target / gcd_;
  auto reduced = reduced_table(t);
  if (gcd_ == 1) return reduced;

  std::vector<LengthRow> table(static_cast<std::size_t>(max_target + 1));
  for (std::int64_t v = 0; v <= t; ++v) {
    table[static_cast<std::size_t>(v * gcd_)] = std::move(reduced[static_cast<std::size_t>(v)]);
  }
  return table;
}

LengthRow SingleConstraintSolver::lengths(std::int64_t target) const {
  std::int64_t t = 0;
  if (!reduce(target, t)) return {};
  if (!representable(target)) return {};
  auto table = reduced_table(t);
  return std::move(table[static_cast<std::size_t>(t)]);
}

}  // namespace lendens::detail

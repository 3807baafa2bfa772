#pragma once

// Brute-force reference implementations. They share no code with the
// library: plain nested enumeration over std containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// All e >= 0 with sum e_i * gens_i == x.
inline std::vector<Vec> numerical_factorizations(const Vec& gens, std::int64_t x) {
  std::vector<Vec> out;
  Vec e(gens.size(), 0);
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == gens.size()) {
      if (rest % gens[i] == 0) {
        e[i] = rest / gens[i];
        out.push_back(e);
      }
      return;
    }
    for (std::int64_t k = 0; k * gens[i] <= rest; ++k) {
      e[i] = k;
      go(i + 1, rest - k * gens[i]);
    }
    e[i] = 0;
  };
  if (x >= 0) go(0, x);
  std::sort(out.begin(), out.end());
  return out;
}

/// All e >= 0 with sum e_i * atoms_i == target (vectors).
inline std::vector<Vec> vector_factorizations(const std::vector<Vec>& atoms, const Vec& target) {
  std::vector<Vec> out;
  Vec e(atoms.size(), 0);
  Vec rest = target;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == atoms.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](std::int64_t v) { return v == 0; })) {
        out.push_back(e);
      }
      return;
    }
    for (std::int64_t k = 0;; ++k) {
      e[i] = k;
      go(i + 1);
      bool fits = true;
      for (std::size_t c = 0; c < rest.size(); ++c) {
        rest[c] -= atoms[i][c];
        if (rest[c] < 0) fits = false;
      }
      if (!fits) {
        for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += (k + 1) * atoms[i][c];
        break;
      }
    }
    e[i] = 0;
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

struct Frac {
  std::int64_t num;
  std::int64_t den;
};

/// All e >= 0 with sum e_i * atoms_i == x over the rationals; the last atom's
/// exponent is solved for instead of enumerated.
inline std::vector<Vec> rational_factorizations(const std::vector<Frac>& atoms, Frac x) {
  std::vector<Vec> out;
  Vec e(atoms.size(), 0);
  // rest = rn / rd
  std::function<void(std::size_t, __int128, __int128)> go = [&](std::size_t i, __int128 rn,
                                                                __int128 rd) {
    const auto& a = atoms[i];
    if (i + 1 == atoms.size()) {
      // rest / a = rn * a.den / (rd * a.num) must be a nonnegative integer
      __int128 p = rn * a.den, q = rd * a.num;
      if (p >= 0 && p % q == 0) {
        e[i] = static_cast<std::int64_t>(p / q);
        out.push_back(e);
      }
      return;
    }
    for (std::int64_t k = 0;; ++k) {
      // rest - k * a
      __int128 n2 = rn * a.den - static_cast<__int128>(k) * a.num * rd;
      if (n2 < 0) break;
      __int128 d2 = rd * a.den;
      e[i] = k;
      __int128 a1 = n2 < 0 ? -n2 : n2, b1 = d2;
      while (b1 != 0) {
        __int128 t = a1 % b1;
        a1 = b1;
        b1 = t;
      }
      if (a1 > 1) {
        n2 /= a1;
        d2 /= a1;
      }
      go(i + 1, n2, d2);
    }
    e[i] = 0;
  };
  go(0, x.num, x.den);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t length(const Vec& z) { return std::accumulate(z.begin(), z.end(), std::int64_t{0}); }

inline std::set<std::int64_t> lengths(const std::vector<Vec>& zs) {
  std::set<std::int64_t> out;
  for (const auto& z : zs) out.insert(length(z));
  return out;
}

inline std::set<std::int64_t> sumset(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a) {
    for (auto y : b) out.insert(x + y);
  }
  return out;
}

inline std::int64_t distance(const Vec& z, const Vec& y) {
  std::int64_t l = 0, r = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::int64_t g = std::min(z[i], y[i]);
    l += z[i] - g;
    r += y[i] - g;
  }
  return std::max(l, r);
}

/// Least N for which the dis <= N graph is connected, by trying N = 0, 1, ...
inline std::int64_t catenary_threshold(const std::vector<Vec>& zs) {
  if (zs.size() <= 1) return 0;
  for (std::int64_t n = 0;; ++n) {
    std::vector<char> seen(zs.size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (std::size_t w = 0; w < zs.size(); ++w) {
        if (!seen[w] && distance(zs[v], zs[w]) <= n) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    if (count == zs.size()) return n;
  }
}

/// t(a, x) straight from the definition, N ranging over 0, 2, 3, ...
inline std::int64_t tame(const std::vector<Vec>& za, const Vec& x) {
  std::vector<const Vec*> with_x;
  for (const auto& z : za) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size(); ++i) ok = ok && z[i] >= x[i];
    if (ok) with_x.push_back(&z);
  }
  if (with_x.empty()) return 0;
  for (std::int64_t n = 0;; n = (n == 0 ? 2 : n + 1)) {
    bool all = true;
    for (const auto& z : za) {
      bool near = false;
      for (const auto* w : with_x) near = near || distance(z, *w) <= n;
      all = all && near;
    }
    if (all) return n;
  }
}

/// Elements of Z_{n_1} + ... + Z_{n_k} as residue vectors, and addition.
struct Group {
  Vec orders;

  std::vector<Vec> elements() const {
    std::vector<Vec> out{Vec(orders.size(), 0)};
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::vector<Vec> next;
      for (const auto& v : out) {
        for (std::int64_t r = 0; r < orders[i]; ++r) {
          Vec w = v;
          w[i] = r;
          next.push_back(w);
        }
      }
      out = next;
    }
    return out;
  }
  bool zero_sum(const std::vector<Vec>& support, const Vec& mult) const {
    for (std::size_t c = 0; c < orders.size(); ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < support.size(); ++k) s += mult[k] * support[k][c];
      if (s % orders[c] != 0) return false;
    }
    return true;
  }
  /// Number of g with m * g == 0.
  std::int64_t killed_by(std::int64_t m) const {
    std::int64_t count = 1;
    for (auto n : orders) count *= std::gcd(m, n);
    return count;
  }
};

/// Minimal zero-sum multiplicity vectors over `support` of length <= max_len:
/// every vector is tested for zero sum and every proper nonzero sub-vector
/// for a zero sum.
inline std::set<Vec> zero_sum_atoms(const Group& g, const std::vector<Vec>& support,
                                    std::int64_t max_len) {
  std::set<Vec> out;
  Vec m(support.size(), 0);
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) {
    if (i == support.size()) {
      if (length(m) == 0 || !g.zero_sum(support, m)) return;
      Vec sub(m.size(), 0);
      while (true) {
        std::size_t k = 0;
        while (k < sub.size() && sub[k] == m[k]) sub[k++] = 0;
        if (k == sub.size()) break;
        ++sub[k];
        if (sub != m && g.zero_sum(support, sub)) return;
      }
      out.insert(m);
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      m[i] = e;
      go(i + 1, left - e);
    }
    m[i] = 0;
  };
  go(0, max_len);
  return out;
}

/// 1 + longest zero-sum free sequence, from the atom list over all of G.
inline std::int64_t davenport(const Group& g) {
  auto all = g.elements();
  std::int64_t best = 0;
  for (const auto& a : zero_sum_atoms(g, all, static_cast<std::int64_t>(all.size()))) {
    best = std::max(best, length(a));
  }
  return best;
}

/// Rewriting class of a word under relations used in both directions.
inline std::set<Vec> rewrite_class(const Vec& start, const std::vector<std::pair<Vec, Vec>>& rels) {
  std::set<Vec> seen{start};
  std::vector<Vec> stack{start};
  while (!stack.empty()) {
    Vec w = stack.back();
    stack.pop_back();
    for (const auto& [l, r] : rels) {
      for (int d = 0; d < 2; ++d) {
        const Vec& from = d ? r : l;
        const Vec& to = d ? l : r;
        bool ok = true;
        for (std::size_t i = 0; i < w.size(); ++i) ok = ok && w[i] >= from[i];
        if (!ok) continue;
        Vec v = w;
        for (std::size_t i = 0; i < w.size(); ++i) v[i] += to[i] - from[i];
        if (seen.insert(v).second) stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace oracle

#include "simplex.hpp"

namespace lendens::detail {

std::optional<std::vector<Rational>> positive_kernel_point(
    const std::vector<std::vector<Rational>>& rows, std::size_t columns) {
  // Substitute w = 1 + u: rows * u = -rows * 1, u >= 0.
  const std::size_t m = rows.size();
  const std::size_t n = columns;
  if (m == 0) return std::vector<Rational>(n, Rational(1));

  // Tableau columns: u (n), artificials (m), rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    Rational rhs(0);
    for (std::size_t c = 0; c < n; ++c) rhs -= rows[r][c];
    bool flip = rhs.sign() < 0;
    for (std::size_t c = 0; c < n; ++c) t[r][c] = flip ? -rows[r][c] : rows[r][c];
    t[r][width - 1] = flip ? -rhs : rhs;
    t[r][n + r] = Rational(1);
    basis[r] = n + r;
  }
  // Objective: minimize the sum of artificials, kept as reduced costs.
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c < n || c == width - 1) cost[c] -= t[r][c];
    }
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (cost[c].sign() < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best(0);
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      Rational ratio = t[r][width - 1] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase 1
    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v = v / pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter].sign() == 0) continue;
      Rational f = t[r][enter];
      for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
    }
    Rational f = cost[enter];
    for (std::size_t c = 0; c < width; ++c) cost[c] -= f * t[leave][c];
    basis[leave] = enter;
  }
  if (cost[width - 1].sign() != 0) return std::nullopt;  // -(sum of artificials) at optimum
  std::vector<Rational> w(n, Rational(1));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) w[basis[r]] += t[r][width - 1];
  }
  return w;
}

}  // namespace lendens::detail

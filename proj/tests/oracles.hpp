#pragma once

// Reference computations that share no code with the library: fraction-free
// elimination, root closure under simple reflections, and closed formulas for
// centralizer dimensions in the classical algebras.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// Rank by Bareiss elimination over the integers after clearing denominators.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpz_class(m[i][j] * l);
  }
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Positive roots (simple-root coordinates) as the orbit of the simple roots
/// under simple reflections, keeping the positive ones.
inline std::set<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t l = cartan.size();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> r(l, 0);
    r[i] = 1;
    all.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier)
      for (std::size_t i = 0; i < l; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < l; ++j) pairing += r[j] * cartan[j][i];
        std::vector<int> s = r;
        s[i] -= pairing;
        if (all.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::set<std::vector<int>> pos;
  for (const auto& r : all)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.insert(r);
  return pos;
}

/// Bourbaki Cartan matrices, A_{ij} = <alpha_i, alpha_j^vee>.
inline std::vector<std::vector<int>> cartan_matrix(char family, int l) {
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      if (l > 1) a[l - 2][l - 1] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      if (l > 1) a[l - 1][l - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;  // alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

/// dim g^e for the nilpotent orbit with partition p in sl_n, so_n or sp_n.
inline std::size_t classical_centralizer_dim(char family, const std::vector<int>& p) {
  std::vector<int> dual;
  for (int k = 1; k <= (p.empty() ? 0 : p.front()); ++k)
    dual.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [k](int x) { return x >= k; })));
  long s = 0;
  for (int d : dual) s += static_cast<long>(d) * d;
  const long odd = std::count_if(p.begin(), p.end(), [](int x) { return x % 2 != 0; });
  if (family == 'A') return static_cast<std::size_t>(s - 1);
  if (family == 'C') return static_cast<std::size_t>((s + odd) / 2);
  return static_cast<std::size_t>((s - odd) / 2);
}

}  // namespace oracle

#include <map>
#include <string>

#include "lieidx/errors.hpp"
#include "lieidx/lie_algebra.hpp"

namespace lieidx {

RatMatrix MatrixRealization::matrix_of(std::span<const Rational> coords) const {
  if (coords.size() != basis.size()) throw InputError("matrix_of: coordinate length mismatch");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (const auto& e : basis[i]) m(e.row, e.col) += coords[i] * e.value;
  }
  return m;
}

RatVector MatrixRealization::coordinates_of(const RatMatrix& m) const {
  if (m.rows() != n || m.cols() != n) throw InputError("coordinates_of: matrix of the wrong size");
  RatVector c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& e : coordinate_rules[i]) c[i] += m(e.row, e.col) * e.value;
  if (!(matrix_of(c) == m)) throw InputError("coordinates_of: matrix does not lie in the algebra");
  return c;
}

namespace {

using Entry = MatrixRealization::Entry;

// Weight of the standard basis vector k of k^n, in epsilon coordinates.
std::vector<int> standard_weight(char family, std::size_t n, std::size_t k) {
  if (family == 'A') {
    std::vector<int> w(n, 0);
    w[k] = 1;
    return w;
  }
  const std::size_t l = n / 2;
  std::vector<int> w(l, 0);
  if (k < l)
    w[k] = 1;
  else if (k >= n - l)
    w[n - 1 - k] = -1;
  return w;
}

// epsilon coordinates -> simple root coordinates (Bourbaki numbering).
Root to_simple_coordinates(char family, const std::vector<int>& v) {
  const std::size_t len = v.size();
  std::vector<int> partial(len, 0);
  int acc = 0;
  for (std::size_t k = 0; k < len; ++k) partial[k] = acc += v[k];
  Root c;
  switch (family) {
    case 'A':
      c.assign(partial.begin(), partial.end() - 1);
      break;
    case 'B':
      c = partial;
      break;
    case 'C':
      c = partial;
      c[len - 1] /= 2;
      break;
    default: {  // D
      c = partial;
      const int s = len >= 2 ? partial[len - 2] : 0;
      c[len - 2] = (s - v[len - 1]) / 2;
      c[len - 1] = (s + v[len - 1]) / 2;
      break;
    }
  }
  return c;
}

CartanType classical_type(char family, std::size_t n) {
  switch (family) {
    case 'A':
      if (n < 2) break;
      return {'A', static_cast<int>(n - 1)};
    case 'B':
      if (n < 3 || n % 2 == 0) break;
      return {'B', static_cast<int>(n / 2)};
    case 'C':
      if (n < 2 || n % 2 != 0) break;
      return {'C', static_cast<int>(n / 2)};
    case 'D':
      if (n < 4 || n % 2 != 0) break;
      return {'D', static_cast<int>(n / 2)};
    default:
      break;
  }
  throw InputError(std::string("classical_matrix_algebra: no algebra of family ") + family + " on k^" +
                   std::to_string(n));
}

std::string entry_label(char prefix, std::size_t i, std::size_t j) {
  return std::string(1, prefix) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

}  // namespace

LieAlgebraTable classical_matrix_algebra(char family, std::size_t n) {
  const CartanType type = classical_type(family, n);
  MatrixRealization mr;
  mr.family = family;
  mr.n = n;

  // Basis vectors grouped as strictly upper triangular, strictly lower
  // triangular, then diagonal, so that positive root vectors come first.
  struct Generator {
    std::vector<Entry> matrix;
    std::vector<Entry> rule;
    std::string label;
    std::size_t row, col;
  };
  std::vector<Generator> upper, lower, diagonal;
  auto place = [&](Generator g) {
    if (g.row < g.col)
      upper.push_back(std::move(g));
    else if (g.row > g.col)
      lower.push_back(std::move(g));
    else
      diagonal.push_back(std::move(g));
  };

  const auto bar = [n](std::size_t i) { return n - 1 - i; };
  if (family == 'A') {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) place({{{i, j, 1}}, {{i, j, 1}}, entry_label('E', i, j), i, j});
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<Entry> rule;
      for (std::size_t k = 0; k <= i; ++k) rule.push_back({k, k, 1});
      place({{{i, i, 1}, {i + 1, i + 1, -1}}, rule, "H[" + std::to_string(i + 1) + "]", i, i});
    }
    mr.form.clear();
  } else {
    const bool symplectic = family == 'C';
    const auto eps = [&](std::size_t i) { return (!symplectic || i < n / 2) ? 1 : -1; };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i + j + 1 < n) {
          // X(i,j) = -eps_i eps_j X(bar j, bar i)
          const int partner = -eps(i) * eps(j);
          place({{{i, j, 1}, {bar(j), bar(i), partner}}, {{i, j, 1}}, entry_label('F', i, j), i, j});
        } else if (symplectic && i + j + 1 == n) {
          place({{{i, j, 1}}, {{i, j, 1}}, entry_label('E', i, j), i, j});
        }
      }
    mr.form.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) mr.form[i][bar(i)] = eps(i);
  }
  std::vector<Generator> all;
  for (auto* group : {&upper, &lower, &diagonal})
    for (auto& g : *group) all.push_back(std::move(g));

  const std::size_t dim = all.size();
  std::vector<std::string> labels;
  std::vector<Root> grading;
  for (auto& g : all) {
    labels.push_back(g.label);
    mr.basis.push_back(g.matrix);
    mr.coordinate_rules.push_back(g.rule);
    const auto wi = standard_weight(family, n, g.row);
    const auto wj = standard_weight(family, n, g.col);
    std::vector<int> w(wi.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = wi[k] - wj[k];
    grading.push_back(to_simple_coordinates(family, w));
  }

  // Structure constants from commutators of the sparse basis matrices.
  std::vector<std::vector<LieAlgebraTable::Term>> table(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      std::map<std::pair<std::size_t, std::size_t>, long> prod;
      for (const auto& x : mr.basis[a])
        for (const auto& y : mr.basis[b]) {
          if (x.col == y.row) prod[{x.row, y.col}] += long(x.value) * y.value;
          if (y.col == x.row) prod[{y.row, x.col}] -= long(x.value) * y.value;
        }
      std::vector<long> coords(dim, 0);
      for (std::size_t k = 0; k < dim; ++k)
        for (const auto& r : mr.coordinate_rules[k]) {
          auto it = prod.find({r.row, r.col});
          if (it != prod.end()) coords[k] += it->second * r.value;
        }
      for (std::size_t k = 0; k < dim; ++k)
        if (coords[k] != 0) table[a * dim + b].push_back({static_cast<std::uint32_t>(k), coords[k]});
    }

  std::string name = family == 'A'   ? "sl" + std::to_string(n)
                     : family == 'C' ? "sp" + std::to_string(n)
                                     : "so" + std::to_string(n);
  LieAlgebraTable L(std::move(name), type, std::move(labels), std::move(table));
  L.attach_basis_roots(std::move(grading));
  L.attach_root_data(build_root_system(type));
  L.attach_realization(std::move(mr));
  return L;
}

}  // namespace lieidx

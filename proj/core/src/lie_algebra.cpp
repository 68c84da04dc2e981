#include "lieidx/lie_algebra.hpp"

#include <numeric>

#include "lieidx/errors.hpp"

namespace lieidx {

LieAlgebraTable::LieAlgebraTable(std::string name, CartanType type, std::vector<std::string> labels,
                                 std::vector<std::vector<Term>> table)
    : name_(std::move(name)),
      type_(type),
      degrees_(invariant_degrees(type)),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  if (table_.size() != labels_.size() * labels_.size())
    throw InputError("LieAlgebraTable: structure table has wrong size");
}

std::size_t LieAlgebraTable::borel_dim() const {
  return static_cast<std::size_t>(std::accumulate(degrees_.begin(), degrees_.end(), 0));
}

void LieAlgebraTable::attach_basis_roots(std::vector<Root> roots) {
  if (roots.size() != dim()) throw InputError("attach_basis_roots: one root per basis vector required");
  basis_roots_ = std::move(roots);
}

std::optional<std::size_t> LieAlgebraTable::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

namespace {

std::vector<std::size_t> support(std::span<const Rational> v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.push_back(i);
  return s;
}

}  // namespace

RatVector LieAlgebraTable::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw InputError("bracket: coordinate length mismatch");
  RatVector out(n);
  const auto su = support(u);
  const auto sv = support(v);
  Rational prod;
  for (std::size_t i : su) {
    for (std::size_t j : sv) {
      const auto& terms = table_[i * n + j];
      if (terms.empty()) continue;
      prod = u[i] * v[j];
      for (const auto& t : terms) out[t.index] += prod * t.coeff;
    }
  }
  return out;
}

RatMatrix LieAlgebraTable::ad(std::span<const Rational> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw InputError("ad: coordinate length mismatch");
  RatMatrix m(n, n);
  for (std::size_t i : support(x))
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : table_[i * n + j]) m(t.index, j) += x[i] * t.coeff;
  return m;
}

RatMatrix LieAlgebraTable::kirillov_matrix(std::span<const Rational> f) const {
  const std::size_t n = dim();
  if (f.size() != n) throw InputError("kirillov_matrix: functional length mismatch");
  RatMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational s = 0;
      for (const auto& t : table_[a * n + b])
        if (sgn(f[t.index]) != 0) s += f[t.index] * t.coeff;
      if (sgn(s) == 0) continue;
      m(b, a) = -s;
      m(a, b) = std::move(s);
    }
  return m;
}

const RatMatrix& LieAlgebraTable::killing() const {
  std::call_once(killing_cache_->once, [this] {
    const std::size_t n = dim();
    // ad matrices as sparse columns: adc[i][m] = terms of [b_i, b_m]
    std::vector<std::int64_t> k(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::int64_t tr = 0;
        for (std::size_t m = 0; m < n; ++m)
          for (const auto& t1 : table_[j * n + m])  // [b_j, b_m] = sum c1 b_k
            for (const auto& t2 : table_[i * n + t1.index])
              if (t2.index == m) tr += t1.coeff * t2.coeff;
        k[i * n + j] = k[j * n + i] = tr;
      }
    RatMatrix km(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) km(i, j) = static_cast<long>(k[i * n + j]);
    killing_cache_->value = std::move(km);
  });
  return killing_cache_->value;
}

Rational LieAlgebraTable::killing(std::span<const Rational> u, std::span<const Rational> v) const {
  const RatVector f = killing_functional(u);
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s += f[i] * v[i];
  return s;
}

RatVector LieAlgebraTable::killing_functional(std::span<const Rational> y) const {
  const RatMatrix& k = killing();
  RatVector f(dim());
  for (std::size_t i : support(y)) axpy(f, y[i], k.row(i));
  return f;
}

AlgElement bracket(const AlgElement& x, const AlgElement& y) {
  if (x.algebra == nullptr || x.algebra != y.algebra) throw InputError("bracket: elements of different algebras");
  return {x.algebra, x.algebra->bracket(x.coords, y.coords)};
}

// ---------------------------------------------------------------------------

LieAlgebraTable chevalley_algebra(const CartanType& t) {
  ChevalleyConstants cc(build_root_system(t));
  const std::size_t n = cc.dim();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(cc.label(i));
  std::vector<std::vector<LieAlgebraTable::Term>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& term : cc.bracket(i, j))
        table[i * n + j].push_back({static_cast<std::uint32_t>(term.index), term.coeff});
  LieAlgebraTable L(t.name(), t, std::move(labels), std::move(table));
  const auto& rs = cc.roots();
  std::vector<Root> grading;
  grading.reserve(n);
  for (const auto& r : rs.positive_roots) grading.push_back(r);
  for (const auto& r : rs.positive_roots) {
    Root neg = r;
    for (int& c : neg) c = -c;
    grading.push_back(std::move(neg));
  }
  grading.resize(n, Root(rs.rank(), 0));
  L.attach_basis_roots(std::move(grading));
  L.attach_root_data(rs);
  return L;
}

LieAlgebraTable algebra_for_type(const CartanType& t) {
  if (!t.valid()) throw InputError("invalid Cartan type " + t.name());
  const auto l = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A':
      return classical_matrix_algebra('A', l + 1);
    case 'B':
      return classical_matrix_algebra('B', 2 * l + 1);
    case 'C':
      return classical_matrix_algebra('C', 2 * l);
    case 'D':
      return classical_matrix_algebra('D', 2 * l);
    default:
      return chevalley_algebra(t);
  }
}

// ---------------------------------------------------------------------------

SubspaceBasis centralizer(const LieAlgebraTable& L, std::span<const RatVector> elems) {
  return centralizer_in(L, SubspaceBasis::full(L.dim()), elems);
}

SubspaceBasis centralizer(const LieAlgebraTable& L, const RatVector& x) {
  return centralizer(L, std::span<const RatVector>(&x, 1));
}

SubspaceBasis centralizer_in(const LieAlgebraTable& L, const SubspaceBasis& sub,
                             std::span<const RatVector> elems) {
  // Shrink one element at a time; later constraints act on a smaller space.
  SubspaceBasis current = sub;
  const std::size_t n = L.dim();
  for (const auto& x : elems) {
    if (current.empty()) break;
    if (is_zero(x)) continue;
    if (current.dim() == n) {
      current = rank_and_kernel(L.ad(x)).kernel;
      continue;
    }
    RatMatrix m(n, current.dim());
    for (std::size_t k = 0; k < current.dim(); ++k) {
      const RatVector col = L.bracket(current[k], x);
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(col[r]) != 0) m(r, k) = col[r];
    }
    const RankKernel rk = rank_and_kernel(m);
    std::vector<RatVector> gens;
    gens.reserve(rk.kernel.dim());
    for (const auto& c : rk.kernel.vectors()) gens.push_back(current.combine(c));
    current = SubspaceBasis::span(n, gens);
  }
  return current;
}

bool is_subalgebra(const LieAlgebraTable& L, const SubspaceBasis& sub) {
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = i + 1; j < sub.dim(); ++j)
      if (!sub.contains(L.bracket(sub[i], sub[j]))) return false;
  return true;
}

SubspaceBasis center_of(const LieAlgebraTable& L, const SubspaceBasis& sub) {
  if (sub.ambient_dim() != L.dim()) throw InputError("center_of: subspace of the wrong ambient dimension");
  if (!is_subalgebra(L, sub)) throw InputError("center_of: subspace is not closed under the bracket");
  return centralizer_in(L, sub, sub.vectors());
}

SubspaceBasis bracket_image(const LieAlgebraTable& L, std::span<const Rational> x, const SubspaceBasis& V) {
  std::vector<RatVector> gens;
  gens.reserve(V.dim());
  for (const auto& v : V.vectors()) gens.push_back(L.bracket(x, v));
  return SubspaceBasis::span(L.dim(), gens);
}

bool is_regular(const LieAlgebraTable& L, std::span<const Rational> x) {
  return rank_and_kernel(L.ad(x)).kernel.dim() == L.rank();
}

bool is_ad_nilpotent(const LieAlgebraTable& L, std::span<const Rational> x, std::size_t max_power) {
  SubspaceBasis img = SubspaceBasis::full(L.dim());
  for (std::size_t k = 0; k < max_power; ++k) {
    const std::size_t before = img.dim();
    img = bracket_image(L, x, img);
    if (img.empty()) return true;
    if (img.dim() == before) return false;
  }
  return false;
}

}  // namespace lieidx

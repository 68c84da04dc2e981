#include "lieidx/weights.hpp"

#include <algorithm>

#include "lieidx/errors.hpp"

namespace lieidx {

namespace {

// Coefficients a_0..a_k (low degree first) of the minimal polynomial, monic.
RatVector minimal_polynomial(const RatMatrix& m) {
  const std::size_t d = m.rows();
  std::vector<RatVector> powers;
  RatMatrix p = RatMatrix::identity(d);
  for (std::size_t k = 0; k <= d; ++k) {
    RatVector flat;
    flat.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) flat.push_back(p(r, c));
    if (k > 0) {
      RatMatrix a(d * d, powers.size());
      for (std::size_t i = 0; i < d * d; ++i)
        for (std::size_t j = 0; j < powers.size(); ++j) a(i, j) = powers[j][i];
      if (auto c = solve(a, flat)) {
        RatVector poly(k + 1);
        for (std::size_t j = 0; j < k; ++j) poly[j] = -(*c)[j];
        poly[k] = 1;
        return poly;
      }
    }
    powers.push_back(std::move(flat));
    p = m * p;
  }
  throw InternalError("minimal polynomial not found");
}

Rational evaluate(const RatVector& poly, const Rational& x) {
  Rational v = 0;
  for (std::size_t k = poly.size(); k-- > 0;) v = v * x + poly[k];
  return v;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000")) throw InputError("eigenvalue search: coefficients too large");
  std::vector<Integer> out;
  for (Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  return out;
}

// Distinct rational roots of poly; throws unless poly splits into distinct
// rational linear factors.
std::vector<Rational> split_roots(RatVector poly) {
  const std::size_t degree = poly.size() - 1;
  std::vector<Rational> roots;
  if (sgn(poly[0]) == 0) {
    roots.push_back(0);
    poly.erase(poly.begin());
    if (sgn(poly[0]) == 0) throw InputError("operator is not diagonalizable");
  }
  Integer l = 1;
  for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : poly) ints.push_back(Integer(c * l));
  if (poly.size() > 1) {
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int s : {1, -1}) {
          Rational x(p * s, q);
          x.canonicalize();
          if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
          if (sgn(evaluate(poly, x)) == 0) roots.push_back(x);
        }
  }
  if (roots.size() != degree) throw InputError("operator has non-rational or repeated eigenvalues");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<RationalEigenspace> rational_eigenspaces(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("rational_eigenspaces: matrix is not square");
  const std::size_t d = m.rows();
  std::vector<RationalEigenspace> out;
  if (d == 0) return out;
  std::size_t total = 0;
  for (const auto& lambda : split_roots(minimal_polynomial(m))) {
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lambda;
    RankKernel rk = rank_and_kernel(shifted);
    total += rk.kernel.dim();
    out.push_back({lambda, std::move(rk.kernel)});
  }
  if (total != d) throw InternalError("eigenspaces do not fill the space");
  return out;
}

std::optional<std::size_t> WeightDecomposition::find(std::span<const Rational> w) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (std::equal(w.begin(), w.end(), weights[i].weight.begin(), weights[i].weight.end())) return i;
  return std::nullopt;
}

std::size_t WeightDecomposition::multiplicity(std::span<const Rational> w) const {
  auto i = find(w);
  return i ? weights[*i].space.dim() : 0;
}

RatMatrix restricted_ad(const LieAlgebraTable& L, const SubspaceBasis& sub, std::span<const Rational> t) {
  const std::size_t d = sub.dim();
  RatMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const RatVector img = L.bracket(t, sub[j]);
    if (!sub.contains(img)) throw InputError("restricted_ad: subspace is not stable");
    for (std::size_t i = 0; i < d; ++i) m(i, j) = img[sub.pivots()[i]];
  }
  return m;
}

WeightDecomposition weight_decomposition(const LieAlgebraTable& L, const SubspaceBasis& sub,
                                         std::vector<RatVector> torus) {
  for (const auto& t : torus)
    if (!sub.contains(t)) throw InputError("weight_decomposition: torus element outside the subalgebra");
  for (std::size_t i = 0; i < torus.size(); ++i)
    for (std::size_t j = i + 1; j < torus.size(); ++j)
      if (!is_zero(L.bracket(torus[i], torus[j]))) throw InputError("weight_decomposition: torus is not commutative");

  const std::size_t d = sub.dim();
  struct Piece {
    RatVector weight;
    SubspaceBasis space;  // sub coordinates
  };
  std::vector<Piece> pieces{{{}, SubspaceBasis::full(d)}};
  for (const auto& t : torus) {
    const auto eig = rational_eigenspaces(restricted_ad(L, sub, t));
    std::vector<Piece> next;
    for (const auto& p : pieces)
      for (const auto& ev : eig) {
        SubspaceBasis common = subspace_intersect(p.space, ev.space);
        if (common.empty()) continue;
        RatVector w = p.weight;
        w.push_back(ev.value);
        next.push_back({std::move(w), std::move(common)});
      }
    pieces = std::move(next);
  }

  WeightDecomposition wd;
  wd.torus_basis = std::move(torus);
  for (auto& p : pieces) {
    std::vector<RatVector> vecs;
    for (const auto& c : p.space.vectors()) vecs.push_back(sub.combine(c));
    wd.weights.push_back({std::move(p.weight), SubspaceBasis::span(L.dim(), vecs)});
  }
  std::sort(wd.weights.begin(), wd.weights.end(),
            [](const WeightSpace& a, const WeightSpace& b) { return a.weight > b.weight; });
  return wd;
}

bool weights_symmetric(const WeightDecomposition& wd) {
  for (const auto& ws : wd.weights) {
    RatVector neg = ws.weight;
    for (auto& x : neg) x = -x;
    if (wd.multiplicity(neg) != ws.space.dim()) return false;
  }
  return true;
}

}  // namespace lieidx

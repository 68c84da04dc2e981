#include "lieidx/errors.hpp"
#include "lieidx/orbits.hpp"

namespace lieidx {

namespace {

RatMatrix stacked(const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix m = top;
  m.append_rows(bottom);
  return m;
}

}  // namespace

Sl2Triple jacobson_morozov(const LieAlgebraTable& L, std::span<const Rational> e) {
  if (is_zero(e)) throw InputError("jacobson_morozov: e is zero");
  if (!passes_nilpotency_check(L, e)) throw InputError("jacobson_morozov: e is not nilpotent");
  const std::size_t n = L.dim();
  const RatMatrix A = L.ad(e);

  // h = [e, z] with (ad e)^2 z = -2e gives [h, e] = 2e and h in im ad e.
  RatVector rhs(e.begin(), e.end());
  for (auto& x : rhs) x *= -2;
  const auto z = solve(A * A, rhs);
  if (!z) throw InternalError("jacobson_morozov: no neutral element found");
  RatVector h = A.apply(*z);

  // f with [e, f] = h and [h, f] = -2f.
  RatMatrix Hshift = L.ad(h);
  for (std::size_t i = 0; i < n; ++i) Hshift(i, i) += 2;
  RatVector rhs2 = h;
  rhs2.resize(2 * n);
  const auto f = solve(stacked(A, Hshift), rhs2);
  if (!f) throw InternalError("jacobson_morozov: no nilnegative element found");

  Sl2Triple t{RatVector(e.begin(), e.end()), std::move(h), *f};
  if (!is_sl2_triple(L, t)) throw InternalError("jacobson_morozov: sl2 relations fail");
  return t;
}

bool is_sl2_triple(const LieAlgebraTable& L, const Sl2Triple& t) {
  RatVector two_e = t.e, minus_two_f = t.f;
  for (auto& x : two_e) x *= 2;
  for (auto& x : minus_two_f) x *= -2;
  return L.bracket(t.h, t.e) == two_e && L.bracket(t.e, t.f) == t.h && L.bracket(t.h, t.f) == minus_two_f;
}

}  // namespace lieidx

#include "lieidx/bolsinov.hpp"

#include <algorithm>

#include "lieidx/errors.hpp"

namespace lieidx {

namespace {

std::size_t min_samples(const LieAlgebraTable& L) {
  const auto& d = L.degrees();
  return static_cast<std::size_t>(d.empty() ? 1 : d.back()) + 1;
}

// Adds g^{x+ty}; returns true when the space grew.
bool add_sample(const LieAlgebraTable& L, ShiftSpace& v, const Rational& t) {
  RatVector z = v.x;
  axpy(z, t, v.y);
  const SubspaceBasis c = centralizer(L, z);
  v.t_samples.push_back(t);
  if (c.dim() > L.rank()) v.nongeneric_t.push_back(t);
  if (v.space.contains(c)) return false;
  v.space = subspace_sum(v.space, c);
  return true;
}

}  // namespace

ShiftSpace shift_space(const LieAlgebraTable& L, RatVector x, RatVector y) {
  if (x.size() != L.dim() || y.size() != L.dim()) throw InputError("shift_space: coordinate length mismatch");
  if (!is_regular(L, x)) throw InputError("shift_space: x is not regular");
  ShiftSpace v;
  v.x = std::move(x);
  v.y = std::move(y);
  v.space = SubspaceBasis(L.dim());
  const std::size_t floor = min_samples(L);
  const std::size_t cap = std::max(2 * L.borel_dim(), floor + 3);
  std::size_t quiet = 0;
  for (long t = 0; static_cast<std::size_t>(t) < cap; ++t) {
    quiet = add_sample(L, v, Rational(t)) ? 0 : quiet + 1;
    if (v.t_samples.size() >= floor && quiet >= 3) {
      v.saturated = true;
      break;
    }
  }
  return v;
}

void extend_shift_space(const LieAlgebraTable& L, ShiftSpace& v, std::size_t extra) {
  long next = 0;
  for (const auto& t : v.t_samples)
    if (t >= next) next = t.get_num().get_si() + 1;
  for (std::size_t k = 0; k < extra; ++k) add_sample(L, v, Rational(next + static_cast<long>(k)));
}

ShiftProperties verify_shift_properties(const LieAlgebraTable& L, const ShiftSpace& v) {
  if (!v.saturated) throw InputError("verify_shift_properties: shift space is not saturated");
  ShiftProperties p;
  const SubspaceBasis& V = v.space;
  p.dim_space = V.dim();

  p.contains_gx = V.contains(centralizer(L, v.x));

  const SubspaceBasis gy = centralizer(L, v.y);
  const SubspaceBasis W = subspace_sum(gy, V);
  const RatVector ky = L.killing_functional(v.y);
  p.isotropic = true;
  for (std::size_t i = 0; i < W.dim() && p.isotropic; ++i)
    for (std::size_t j = i + 1; j < W.dim(); ++j) {
      const RatVector b = L.bracket(W[i], W[j]);
      Rational s = 0;
      for (std::size_t k = 0; k < b.size(); ++k)
        if (sgn(b[k]) != 0) s += ky[k] * b[k];
      if (sgn(s) != 0) {
        p.isotropic = false;
        break;
      }
    }

  p.brackets_agree = bracket_image(L, v.x, V) == bracket_image(L, v.y, V);

  p.dim_intersection = subspace_intersect(gy, V).dim();
  p.intersection_rank = p.dim_intersection == L.rank();
  p.d_applicable = passes_nilpotency_check(L, v.y);

  p.dim_bound = V.dim() <= L.borel_dim();
  return p;
}

RatVector random_regular_element(const LieAlgebraTable& L, Rng& rng, std::size_t max_tries) {
  for (std::size_t k = 0; k < max_tries; ++k) {
    RatVector x = random_integer_vector(rng, L.dim(), -9, 9);
    if (is_regular(L, x)) return x;
  }
  throw SamplingFailure("no regular element found in " + std::to_string(max_tries) + " samples");
}

CriterionResult check_criterion(const LieAlgebraTable& L, const OrbitDescriptor& orbit, std::uint64_t seed,
                                std::size_t attempts) {
  CriterionResult r;
  r.seed = seed;
  r.expected = orbit.dim_orbit / 2 + L.rank();
  Rng rng = stream_rng(seed, 1);
  for (std::size_t k = 0; k < attempts; ++k) {
    ++r.regular_tries;
    ShiftSpace v = shift_space(L, random_regular_element(L, rng), orbit.representative);
    r.dim_space = v.space.dim();
    r.witness = std::move(v);
    if (r.dim_space == r.expected) {
      r.holds = true;
      break;
    }
  }
  return r;
}

}  // namespace lieidx

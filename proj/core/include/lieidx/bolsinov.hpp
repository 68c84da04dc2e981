#pragma once

// Argument-shift subspaces V_{x,y} = sum over t of g^{x + t y}, and the
// dimension criterion dim V_{x,e} = dim(G.e) / 2 + rank.

#include <cstdint>
#include <vector>

#include "lieidx/exact_linalg.hpp"
#include "lieidx/lie_algebra.hpp"
#include "lieidx/orbits.hpp"

namespace lieidx {

struct ShiftSpace {
  RatVector x, y;
  SubspaceBasis space;
  std::vector<Rational> t_samples;
  /// t values where dim g^{x+ty} exceeded the rank.
  std::vector<Rational> nongeneric_t;
  bool saturated = false;
};

/// Sums g^{x+ty} over t = 0, 1, 2, ... until three consecutive samples add
/// nothing, after at least (largest degree + 1) samples and at most
/// max(2 b_g, largest degree + 4).
/// Throws InputError when x is not regular.
ShiftSpace shift_space(const LieAlgebraTable& L, RatVector x, RatVector y);

/// Adds `extra` further t samples to v.
void extend_shift_space(const LieAlgebraTable& L, ShiftSpace& v, std::size_t extra);

struct ShiftProperties {
  bool contains_gx = false;        // (a)
  bool isotropic = false;          // (b) K_y = 0 on g^y + V
  bool brackets_agree = false;     // (c) [x, V] = [y, V]
  bool intersection_rank = false;  // (d) dim(g^y cap V) = rank
  bool d_applicable = false;       // y nilpotent
  bool dim_bound = false;          // (e) dim V <= b_g
  std::size_t dim_space = 0;
  std::size_t dim_intersection = 0;

  bool all() const {
    return contains_gx && isotropic && brackets_agree && (intersection_rank || !d_applicable) && dim_bound;
  }
};

/// Throws InputError for an unsaturated space.
ShiftProperties verify_shift_properties(const LieAlgebraTable& L, const ShiftSpace& v);

struct CriterionResult {
  bool holds = false;
  std::size_t dim_space = 0;
  std::size_t expected = 0;
  std::size_t regular_tries = 0;
  std::uint64_t seed = 0;
  ShiftSpace witness;
};

/// Random regular element with integer coordinates in [-9, 9]. Throws
/// SamplingFailure after `max_tries`.
RatVector random_regular_element(const LieAlgebraTable& L, Rng& rng, std::size_t max_tries = 16);

/// Tries up to `attempts` regular x; holds as soon as one of them gives
/// dim V_{x,e} = dim(G.e) / 2 + rank.
CriterionResult check_criterion(const LieAlgebraTable& L, const OrbitDescriptor& orbit, std::uint64_t seed,
                                std::size_t attempts = 3);

}  // namespace lieidx

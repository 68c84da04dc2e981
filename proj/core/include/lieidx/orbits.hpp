#pragma once

// Nilpotent orbits: partitions for the classical families, form-compatible
// Jordan representatives, parabolic subalgebras and Richardson elements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieidx/exact_linalg.hpp"
#include "lieidx/lie_algebra.hpp"
#include "lieidx/rational.hpp"

namespace lieidx {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int total() const;
  std::size_t multiplicity(int part) const;
  Partition conjugate() const;
  /// "[3,2,2]"
  std::string to_string() const;
  /// Parses "3,2,2", "[3,2,2]" or "3 2 2"; throws InputError.
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Multiplicity rules: in so_n even parts, in sp_n odd parts have even
/// multiplicity. Family A accepts every partition.
bool is_valid_partition(char family, const Partition& p);

/// Partitions of n labelling nilpotent orbits, in reverse lexicographic order.
/// For D, very even partitions label two orbits; they are listed once.
std::vector<Partition> enumerate_nilpotent_partitions(char family, std::size_t n);

bool is_rigid_partition(char family, const Partition& p);

/// Name of the rule behind is_rigid_partition for the family: "zero_orbit_only"
/// (A), "odd_multiplicity_not_2" (B, D), "even_multiplicity_not_2_external" (C,
/// taken from the classification of rigid orbits rather than derived here),
/// "richardson_only" for exceptional families, where every swept orbit is
/// Richardson and rigid orbits come from case files.
std::string rigidity_rule(char family);

/// Families B and D only: false exactly when n1 and n2 are odd and n3 < n2
/// (missing parts count as 0).
bool center_generated_by_powers(char family, const Partition& p);

struct Sl2Triple {
  RatVector e, h, f;
};

struct SupportTerm {
  std::size_t index;  // basis index in the algebra
  Rational coeff;
};

struct OrbitDescriptor {
  enum class Kind { classical, exceptional, richardson };

  Kind kind = Kind::exceptional;
  std::string id;
  std::optional<Partition> partition;
  std::vector<SupportTerm> support;
  std::vector<std::size_t> parabolic_subset;

  RatVector representative;
  std::optional<Sl2Triple> sl2;
  SubspaceBasis centralizer;
  std::size_t dim_centralizer = 0;
  std::size_t dim_orbit = 0;

  // Richardson sampling record.
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
};

/// Fills centralizer and dimensions for a nilpotent e, checking
/// (ad e)^N = 0 with N = 2 * (largest degree). Throws InputError otherwise.
OrbitDescriptor describe_nilpotent(const LieAlgebraTable& L, RatVector e);

OrbitDescriptor nilpotent_from_partition(const LieAlgebraTable& L, const Partition& p);

OrbitDescriptor nilpotent_from_support(const LieAlgebraTable& L, std::vector<SupportTerm> support);

/// (ad e)^N = 0 with N = 2 * (largest invariant degree)
bool passes_nilpotency_check(const LieAlgebraTable& L, std::span<const Rational> e);

/// sl2-triple through e. Throws InputError when e is zero or not nilpotent.
Sl2Triple jacobson_morozov(const LieAlgebraTable& L, std::span<const Rational> e);

bool is_sl2_triple(const LieAlgebraTable& L, const Sl2Triple& t);

struct ParabolicData {
  std::vector<std::size_t> simple_subset;  // 0-based simple root indices
  SubspaceBasis levi;
  SubspaceBasis nilradical;
  SubspaceBasis opposite_nilradical;
};

/// Standard parabolic for a proper subset of the simple roots. Requires an
/// algebra with basis roots attached.
ParabolicData parabolic(const LieAlgebraTable& L, std::vector<std::size_t> subset);

/// All proper subsets of {0, .., rank-1}, by size and then lexicographically.
std::vector<std::vector<std::size_t>> proper_subsets(std::size_t rank);

/// Samples integer points of the nilradical (coordinates in [-9, 9]) until
/// dim g^e = dim l. Throws SamplingFailure after `max_attempts`.
OrbitDescriptor richardson_representative(const LieAlgebraTable& L, const ParabolicData& pd, std::uint64_t seed,
                                          std::size_t max_attempts = 64);

}  // namespace lieidx

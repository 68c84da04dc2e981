#pragma once

// Index of subalgebras through ranks of Kirillov forms at sampled functionals.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieidx/exact_linalg.hpp"
#include "lieidx/lie_algebra.hpp"
#include "lieidx/orbits.hpp"

namespace lieidx {

/// A subalgebra with its own structure constants in the canonical basis of
/// `basis`: for i < j, [b_i, b_j] = sum c b_k over (k, c) in table[i * dim + j].
struct SubalgebraStructure {
  struct Term {
    std::size_t index;
    Rational coeff;
  };
  SubspaceBasis basis;
  std::vector<std::vector<Term>> table;

  std::size_t dim() const { return basis.dim(); }
};

/// Throws InputError when sub is not closed under the bracket.
SubalgebraStructure subalgebra_structure(const LieAlgebraTable& L, const SubspaceBasis& sub);

/// Rank of (i, j) -> xi([b_i, b_j]) with xi given in the dual of the
/// subalgebra basis. Throws InternalError if the rank is odd.
std::size_t kirillov_rank(const SubalgebraStructure& s, std::span<const Rational> xi);
std::size_t kirillov_rank(const LieAlgebraTable& L, const SubspaceBasis& sub, std::span<const Rational> xi);

/// Functional for sample `index` of a run seeded with `seed`: integer
/// coordinates in [-99, 99].
RatVector sample_functional(std::uint64_t seed, std::size_t index, std::size_t dim);

struct IndexUpperBound {
  std::size_t bound = 0;
  RatVector best_functional;
  std::size_t best_rank = 0;
  std::vector<std::size_t> sampled_ranks;
};

IndexUpperBound index_upper_bound(const SubalgebraStructure& s, std::size_t samples, std::uint64_t seed,
                                  std::size_t parallelism = 1);

struct IndexCertificate {
  enum class LowerBound { vinberg_rank, none };

  std::size_t subalgebra_dim = 0;
  std::size_t algebra_rank = 0;
  std::size_t claimed_index = 0;
  RatVector witness_functional;
  std::size_t witness_rank = 0;
  std::size_t samples_tried = 0;
  std::uint64_t rng_seed = 0;
  LowerBound lower_bound_source = LowerBound::none;
  bool certified = false;
  bool parity_ok = true;
  /// dim - rank >= rank g held on every sample (centralizers only).
  bool vinberg_ok = true;
  std::vector<std::size_t> sampled_ranks;
};

/// Samples up to `samples` functionals on g^e and stops at the first one
/// reaching corank rank g. Never throws for a sampling shortfall.
IndexCertificate certify_elashvili(const LieAlgebraTable& L, const OrbitDescriptor& orbit, std::uint64_t seed,
                                   std::size_t samples = 8, std::size_t parallelism = 1);

/// Recomputes the witness rank from the certificate.
bool replay_certificate(const LieAlgebraTable& L, const SubspaceBasis& sub, const IndexCertificate& cert);

nlohmann::json to_json(const IndexCertificate& cert);
IndexCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace lieidx

#pragma once

// Replay of the rigid-orbit computations: weight spaces of a torus t1 in g^e,
// pairing matrices between opposite weight spaces, and the determinant
// conditions on them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieidx/case_file.hpp"
#include "lieidx/index_engine.hpp"
#include "lieidx/lie_algebra.hpp"
#include "lieidx/weights.hpp"

namespace lieidx {

struct PairingMatrix {
  RatVector weight;  // lambda; its opposite indexes the columns
  std::vector<RatVector> v;  // basis of the lambda weight space
  std::vector<RatVector> w;  // basis of the -lambda weight space
  std::vector<std::vector<RatVector>> entries;  // entries[k][l] = [v_k, w_l]

  std::size_t order() const { return v.size(); }
};

/// One matrix for each pair {lambda, -lambda} of weights with lambda(t) > 0,
/// where t is given by its coordinates on wd.torus_basis.
std::vector<PairingMatrix> pairing_matrices(const LieAlgebraTable& L, const WeightDecomposition& wd,
                                            std::span<const Rational> t_coords);

/// Polynomial in the coordinates of the zero weight space: exponent vector
/// to coefficient.
using Polynomial = std::map<std::vector<unsigned>, Rational>;

/// Entries as linear forms on the dual of `zero_space`; throws InputError if
/// an entry lies outside it.
std::vector<std::vector<Polynomial>> entry_forms(const PairingMatrix& pm, const SubspaceBasis& zero_space);

Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m);

/// Determinant of the entries evaluated at xi (coordinates on zero_space).
Rational evaluated_determinant(const std::vector<std::vector<Polynomial>>& m, std::span<const Rational> xi);

struct QResult {
  enum class Method { symbolic_det, evaluation_witness, refused };
  bool nonzero = false;
  Method method = Method::symbolic_det;
  RatVector witness;        // xi with nonzero value, when one was used
  std::size_t terms = 0;    // monomials in the expanded determinant
  std::string diagnostic;
};

/// Nonvanishing of q = det(entries) as a polynomial. Orders up to 5 are
/// expanded; larger orders try evaluation witnesses first and, up to order 8,
/// fall back to expansion. Above order 8 without a witness the result is
/// `refused`.
QResult q_nonzero(const PairingMatrix& pm, const SubspaceBasis& zero_space, std::uint64_t seed);

struct MinorWitness {
  bool found = false;
  std::size_t dropped_row = 0;
  std::size_t dropped_col = 0;
  RatVector witness;
};

/// Searches for a nonzero minor of order (m - 1) by evaluation; dropping the
/// last row and column is tried first.
MinorWitness corank_one_minor(const PairingMatrix& pm, const SubspaceBasis& zero_space, std::uint64_t seed);

struct CaseCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct BlockReport {
  RatVector weight;
  std::size_t order = 0;
  QResult q;
  std::optional<MinorWitness> minor;  // only for q = 0
};

struct CaseReport {
  std::string name;
  std::string cartan_type;
  std::size_t dim_ge = 0;
  std::size_t dim_center = 0;
  std::size_t dim_le = 0;
  std::size_t dim_zero_weight = 0;
  std::map<Rational, std::size_t> t_weights;
  std::vector<std::pair<RatVector, std::size_t>> t1_weights;
  std::vector<BlockReport> blocks;
  bool condition1 = false;
  bool condition2 = false;
  std::optional<IndexCertificate> certificate;
  std::vector<CaseCheck> checks;
  double seconds = 0;

  bool passed() const;
  /// First failing check, empty when passed.
  std::string failure() const;
};

/// Runs every computation of the case and compares it with the expect
/// lines. Computation errors (wrong dimensions, non-semisimple torus, ...)
/// are recorded as failed checks rather than thrown.
CaseReport verify_rigid_case(const LieAlgebraTable& L, const RigidCaseSpec& spec, std::uint64_t seed,
                             std::size_t samples = 8, std::size_t parallelism = 1);

nlohmann::json to_json(const CaseReport& r, bool with_timing = false);

}  // namespace lieidx

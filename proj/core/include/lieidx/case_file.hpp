#pragma once

// Line-oriented description of a rigid nilpotent case.
//
//   # comment
//   name: e7-41
//   type: E7
//   order: gap                 (or: internal)
//   e: 14 1                    (gap: external basis number; internal: basis label)
//   map: 14 x14                (gap only: external number -> basis label)
//   t: h7:1
//   t1: h7:1
//   t1: h2:1 h5:-1
//   expect: dim_ge=41
//
// Coordinates are sparse `label:coefficient` tokens with rational
// coefficients. Recognised expect keys: dim_ge, dim_center, dim_le, dim_t1,
// index, condition, t_weights (list of value:multiplicity), t1_weight
// (comma separated weight, then :multiplicity; may repeat), singular_block
// (order:rank).

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "lieidx/lie_algebra.hpp"
#include "lieidx/orbits.hpp"
#include "lieidx/rational.hpp"
#include "lieidx/root_system.hpp"

namespace lieidx {

using SparseCoords = std::vector<std::pair<std::string, Rational>>;

struct RigidCaseSpec {
  std::string name;
  CartanType cartan_type;
  bool external_order = false;
  std::vector<std::pair<std::string, Rational>> e_support;  // as written
  std::vector<std::pair<std::string, std::string>> translation;
  SparseCoords t;
  std::vector<SparseCoords> t1;
  std::vector<std::pair<std::string, std::string>> expect;

  /// Value of the first expect line with this key.
  std::optional<std::string> expected(const std::string& key) const;
  std::vector<std::string> expected_all(const std::string& key) const;
};

/// Throws InputError naming the offending line.
RigidCaseSpec parse_case(std::istream& in, const std::string& source = "<input>");
RigidCaseSpec load_case_file(const std::string& path);

struct ResolvedCase {
  std::vector<SupportTerm> support;
  RatVector t;
  std::vector<RatVector> t1;
};

/// Translates labels and external indices into coordinates of L.
ResolvedCase resolve_case(const RigidCaseSpec& spec, const LieAlgebraTable& L);

RatVector sparse_to_vector(const SparseCoords& coords, const LieAlgebraTable& L);

}  // namespace lieidx

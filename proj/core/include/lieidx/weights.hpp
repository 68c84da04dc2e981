#pragma once

// Simultaneous eigenspace decomposition of a subalgebra under commuting
// ad-semisimple elements, over the rationals.

#include <vector>

#include "lieidx/exact_linalg.hpp"
#include "lieidx/lie_algebra.hpp"

namespace lieidx {

struct RationalEigenspace {
  Rational value;
  SubspaceBasis space;  // in the coordinates the operator acts on
};

/// Eigenspaces of a square matrix, by increasing eigenvalue. Throws
/// InputError unless the matrix is diagonalizable with rational eigenvalues.
std::vector<RationalEigenspace> rational_eigenspaces(const RatMatrix& m);

struct WeightSpace {
  RatVector weight;  // values on the torus basis
  SubspaceBasis space;
};

struct WeightDecomposition {
  std::vector<RatVector> torus_basis;
  std::vector<WeightSpace> weights;  // decreasing lexicographic order of weight

  /// Index of the space of weight w, if present.
  std::optional<std::size_t> find(std::span<const Rational> w) const;
  std::size_t multiplicity(std::span<const Rational> w) const;
};

/// Matrix of ad t on the subalgebra `sub`, in the coordinates of its
/// canonical basis. Throws InputError when [t, sub] is not inside sub.
RatMatrix restricted_ad(const LieAlgebraTable& L, const SubspaceBasis& sub, std::span<const Rational> t);

/// Weight spaces of the torus spanned by `torus` acting on `sub`. The torus
/// elements must lie in sub, commute pairwise, and act diagonalizably with
/// rational eigenvalues; otherwise InputError.
WeightDecomposition weight_decomposition(const LieAlgebraTable& L, const SubspaceBasis& sub,
                                         std::vector<RatVector> torus);

/// Every weight w has -w with the same multiplicity.
bool weights_symmetric(const WeightDecomposition& wd);

}  // namespace lieidx

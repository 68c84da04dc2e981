#pragma once

// Finite-dimensional Lie algebras given by integral structure constants, and
// the queries built on them: brackets, adjoint matrices, centralizers,
// centers, Killing form.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieidx/exact_linalg.hpp"
#include "lieidx/rational.hpp"
#include "lieidx/root_system.hpp"

namespace lieidx {

/// Matrix model of a classical algebra: basis element i is the sparse n x n
/// matrix `basis[i]`, and the algebra preserves the bilinear form `form`
/// (empty for sl_n).
struct MatrixRealization {
  struct Entry {
    std::size_t row;
    std::size_t col;
    int value;
  };
  char family = 'A';
  std::size_t n = 0;
  std::vector<std::vector<Entry>> basis;
  /// Coordinate i of m is sum value * m(row, col) over coordinate_rules[i].
  std::vector<std::vector<Entry>> coordinate_rules;
  std::vector<std::vector<int>> form;

  RatMatrix matrix_of(std::span<const Rational> coords) const;
  /// Inverse of matrix_of; throws InputError when m is not in the algebra.
  RatVector coordinates_of(const RatMatrix& m) const;
};

class LieAlgebraTable {
 public:
  struct Term {
    std::uint32_t index;
    std::int64_t coeff;
  };

  /// `table` holds dim*dim entries, [b_i, b_j] at i * dim + j.
  LieAlgebraTable(std::string name, CartanType type, std::vector<std::string> labels,
                  std::vector<std::vector<Term>> table);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const CartanType& cartan_type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t borel_dim() const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> label_index(const std::string& label) const;

  const std::vector<Term>& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  RatVector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  /// Column j holds [x, b_j].
  RatMatrix ad(std::span<const Rational> x) const;
  /// M[a][b] = f([b_a, b_b]) for a functional f given by its coordinates.
  RatMatrix kirillov_matrix(std::span<const Rational> f) const;

  /// Killing form trace(ad b_i ad b_j); computed on first use.
  const RatMatrix& killing() const;
  Rational killing(std::span<const Rational> u, std::span<const Rational> v) const;
  /// Coordinates of the functional v -> <y, v>.
  RatVector killing_functional(std::span<const Rational> y) const;

  const RootSystemInfo* root_data() const { return roots_ ? &*roots_ : nullptr; }
  const MatrixRealization* realization() const { return realization_ ? &*realization_ : nullptr; }
  /// Root of each basis vector over the simple roots, zero for Cartan
  /// elements. Empty when the basis is not adapted to a root decomposition.
  const std::vector<Root>& basis_roots() const { return basis_roots_; }

  void attach_root_data(RootSystemInfo rs) { roots_ = std::move(rs); }
  void attach_realization(MatrixRealization mr) { realization_ = std::move(mr); }
  void attach_basis_roots(std::vector<Root> roots);

 private:
  std::string name_;
  CartanType type_;
  std::vector<int> degrees_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;
  std::optional<RootSystemInfo> roots_;
  std::optional<MatrixRealization> realization_;
  std::vector<Root> basis_roots_;

  struct KillingCache {
    std::once_flag once;
    RatMatrix value;
  };
  std::shared_ptr<KillingCache> killing_cache_ = std::make_shared<KillingCache>();
};

/// Vector of an algebra; the algebra must outlive the element.
struct AlgElement {
  const LieAlgebraTable* algebra = nullptr;
  RatVector coords;

  static AlgElement zero(const LieAlgebraTable& L) { return {&L, RatVector(L.dim())}; }
  static AlgElement basis(const LieAlgebraTable& L, std::size_t i) { return {&L, unit_vector(L.dim(), i)}; }
  friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

AlgElement bracket(const AlgElement& x, const AlgElement& y);

/// Split simple algebra of the given type in its Chevalley basis, with root
/// data attached. Basis labels are x1.., y1.., h1.. .
LieAlgebraTable chevalley_algebra(const CartanType& t);

/// sl_n (family A), so_n (B for odd n, D for even n) or sp_n (C, even n).
/// Orthogonal and symplectic forms are antidiagonal.
LieAlgebraTable classical_matrix_algebra(char family, std::size_t n);

/// Algebra for a Cartan type: classical families use matrix realizations,
/// exceptional ones the Chevalley basis.
LieAlgebraTable algebra_for_type(const CartanType& t);

/// {y : [y, x] = 0 for every x in elems}; the whole algebra when elems is empty.
SubspaceBasis centralizer(const LieAlgebraTable& L, std::span<const RatVector> elems);
SubspaceBasis centralizer(const LieAlgebraTable& L, const RatVector& x);
/// {v in sub : [v, x] = 0 for every x in elems}.
SubspaceBasis centralizer_in(const LieAlgebraTable& L, const SubspaceBasis& sub, std::span<const RatVector> elems);

bool is_subalgebra(const LieAlgebraTable& L, const SubspaceBasis& sub);
/// Center of a subalgebra; throws InputError when sub is not bracket-closed.
SubspaceBasis center_of(const LieAlgebraTable& L, const SubspaceBasis& sub);

/// span{[x, v] : v in V}
SubspaceBasis bracket_image(const LieAlgebraTable& L, std::span<const Rational> x, const SubspaceBasis& V);

bool is_regular(const LieAlgebraTable& L, std::span<const Rational> x);

/// True when (ad x)^k = 0 for some k <= max_power.
bool is_ad_nilpotent(const LieAlgebraTable& L, std::span<const Rational> x, std::size_t max_power);

}  // namespace lieidx

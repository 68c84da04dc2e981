#pragma once

// Exact linear algebra over the rationals.
//
// Every routine here is deterministic: row reduction picks the first column
// holding a nonzero entry and, within it, the smallest row index. Rows are
// kept as primitive integer vectors during elimination so intermediate growth
// stays bounded by one gcd per row operation.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lieidx/rational.hpp"

namespace lieidx {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const;
  RatVector column(std::size_t c) const;

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector apply(std::span<const Rational> v) const;

  /// Stacks the rows of `below` under this matrix; column counts must agree.
  void append_rows(const RatMatrix& below);

  bool is_zero() const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RatMatrix reduced;                 // exactly rank() rows, reduced row-echelon
  std::vector<std::size_t> pivots;   // strictly increasing column indices
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm reduced_row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Rank of an integer matrix given row by row. Forward elimination only.
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

/// Canonical basis of a subspace of Q^n: the nonzero rows of its reduced
/// row-echelon form. Equal subspaces have identical representations.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static SubspaceBasis full(std::size_t n);
  static SubspaceBasis span(std::size_t ambient_dim, std::span<const RatVector> generators);
  static SubspaceBasis row_space(const RatMatrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }

  const std::vector<RatVector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const RatVector& operator[](std::size_t i) const { return vectors_[i]; }

  /// v minus the unique combination of basis vectors matching v on the pivots.
  RatVector residual(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const SubspaceBasis& other) const;

  /// Coordinates of a member vector; throws InputError for non-members.
  RatVector coordinates(std::span<const Rational> v) const;
  RatVector combine(std::span<const Rational> coords) const;

  RatMatrix as_matrix() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> vectors_;
  std::vector<std::size_t> pivots_;
};

struct RankKernel {
  std::size_t rank = 0;
  SubspaceBasis kernel;
};

/// Rank and right kernel {v : m v = 0}.
RankKernel rank_and_kernel(const RatMatrix& m);

/// One solution of a x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace lieidx

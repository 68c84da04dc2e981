#include "lieidx/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

#include "lieidx/errors.hpp"

namespace lieidx {

// ---------------------------------------------------------------------------
// rational helpers

Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6c69u};
  return Rng(seq);
}

long uniform_int(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng);
}

RatVector random_integer_vector(Rng& rng, std::size_t n, long lo, long hi) {
  RatVector v(n);
  for (auto& x : v) x = uniform_int(rng, lo, hi);
  return v;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ']';
  return os.str();
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

void axpy(std::span<Rational> a, const Rational& s, std::span<const Rational> b) {
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

// ---------------------------------------------------------------------------
// integer row engine

namespace {

using IntRow = std::vector<Integer>;

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(std::span<const Rational> r) {
  Integer l = 1;
  for (const auto& q : r)
    if (sgn(q) != 0 && q.get_den() != 1)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (sgn(r[i]) == 0) continue;
    if (l == 1) {
      out[i] = r[i].get_num();
    } else {
      Integer f;
      mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), r[i].get_den_mpz_t());
      out[i] = r[i].get_num() * f;
    }
  }
  make_primitive(out);
  return out;
}

struct IntEchelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivots;
};

// Gauss(-Jordan) elimination on primitive integer rows. With reduce_above the
// result is reduced echelon up to a positive scaling of each row.
IntEchelon eliminate(std::vector<IntRow> rows, std::size_t cols, bool reduce_above) {
  IntEchelon out;
  const std::size_t n = rows.size();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  Integer g, a, b;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i) {
      if (sgn(rows[i][c]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != r) std::swap(rows[r], rows[piv]);
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;

    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(rows[r][j]) != 0) nz.push_back(j);
    const Integer& p = rows[r][c];

    for (std::size_t i = reduce_above ? 0 : r + 1; i < n; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      IntRow& row = rows[i];
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), row[c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      if (a != 1)
        for (auto& x : row)
          if (sgn(x) != 0) x *= a;
      for (std::size_t j : nz) mpz_submul(row[j].get_mpz_t(), b.get_mpz_t(), rows[r][j].get_mpz_t());
      make_primitive(row);
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<IntRow> integer_rows(const RatMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_integer_row(m.row(i)));
  return rows;
}

}  // namespace

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("RatMatrix::from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

RatVector RatMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return RatVector(s.begin(), s.end());
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("RatMatrix product: shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      axpy(out.row(i), a, rhs.row(k));
    }
  return out;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InputError("RatMatrix::apply: shape mismatch");
  RatVector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

void RatMatrix::append_rows(const RatMatrix& below) {
  if (rows_ == 0 && cols_ == 0) {
    *this = below;
    return;
  }
  if (below.cols_ != cols_) throw InputError("RatMatrix::append_rows: column mismatch");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
  rows_ += below.rows_;
}

bool RatMatrix::is_zero() const { return lieidx::is_zero(std::span<const Rational>(data_)); }

// ---------------------------------------------------------------------------
// elimination front ends

EchelonForm reduced_row_echelon(const RatMatrix& m) {
  IntEchelon ie = eliminate(integer_rows(m), m.cols(), true);
  EchelonForm out;
  out.pivots = ie.pivots;
  out.reduced = RatMatrix(ie.rows.size(), m.cols());
  for (std::size_t k = 0; k < ie.rows.size(); ++k) {
    const Integer& p = ie.rows[k][ie.pivots[k]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(ie.rows[k][j]) == 0) continue;
      Rational q(ie.rows[k][j], p);
      q.canonicalize();
      out.reduced(k, j) = std::move(q);
    }
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return eliminate(integer_rows(m), m.cols(), false).pivots.size(); }

std::size_t integer_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& r : rows) make_primitive(r);
  return eliminate(std::move(rows), cols, false).pivots.size();
}

// ---------------------------------------------------------------------------
// SubspaceBasis

SubspaceBasis SubspaceBasis::full(std::size_t n) {
  SubspaceBasis s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.vectors_.push_back(unit_vector(n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

SubspaceBasis SubspaceBasis::row_space(const RatMatrix& m) {
  SubspaceBasis s(m.cols());
  if (m.rows() == 0) return s;
  EchelonForm ef = reduced_row_echelon(m);
  s.pivots_ = ef.pivots;
  s.vectors_.reserve(ef.rank());
  for (std::size_t k = 0; k < ef.rank(); ++k) s.vectors_.push_back(ef.reduced.row_vector(k));
  return s;
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, std::span<const RatVector> generators) {
  if (generators.empty()) return SubspaceBasis(ambient_dim);
  return row_space(RatMatrix::from_rows(generators, ambient_dim));
}

RatVector SubspaceBasis::residual(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw InputError("SubspaceBasis: vector length mismatch");
  RatVector r(v.begin(), v.end());
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (sgn(r[pivots_[k]]) == 0) continue;
    Rational s = -r[pivots_[k]];
    axpy(r, s, vectors_[k]);
  }
  return r;
}

bool SubspaceBasis::contains(std::span<const Rational> v) const { return is_zero(residual(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("SubspaceBasis: ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [&](const RatVector& v) { return contains(v); });
}

RatVector SubspaceBasis::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw InputError("SubspaceBasis::coordinates: vector not in subspace");
  RatVector c(vectors_.size());
  for (std::size_t k = 0; k < vectors_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

RatVector SubspaceBasis::combine(std::span<const Rational> coords) const {
  if (coords.size() != vectors_.size()) throw InputError("SubspaceBasis::combine: wrong coordinate count");
  RatVector v(ambient_dim_);
  for (std::size_t k = 0; k < vectors_.size(); ++k) axpy(v, coords[k], vectors_[k]);
  return v;
}

RatMatrix SubspaceBasis::as_matrix() const { return RatMatrix::from_rows(vectors_, ambient_dim_); }

// ---------------------------------------------------------------------------
// kernels and solves

RankKernel rank_and_kernel(const RatMatrix& m) {
  RankKernel out;
  out.kernel = SubspaceBasis(m.cols());
  if (m.rows() == 0) {
    out.kernel = SubspaceBasis::full(m.cols());
    return out;
  }
  EchelonForm ef = reduced_row_echelon(m);
  out.rank = ef.rank();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : ef.pivots) is_pivot[p] = 1;
  std::vector<RatVector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < ef.rank(); ++k)
      if (sgn(ef.reduced(k, f)) != 0) v[ef.pivots[k]] = -ef.reduced(k, f);
    gens.push_back(std::move(v));
  }
  out.kernel = SubspaceBasis::span(m.cols(), gens);
  return out;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InputError("solve: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  EchelonForm ef = reduced_row_echelon(aug);
  if (!ef.pivots.empty() && ef.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t k = 0; k < ef.rank(); ++k) x[ef.pivots[k]] = ef.reduced(k, a.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  EchelonForm ef = reduced_row_echelon(aug);
  if (ef.rank() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
  return inv;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_sum: ambient dimension mismatch");
  std::vector<RatVector> gens = a.vectors();
  gens.insert(gens.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), gens);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.empty() || b.empty()) return SubspaceBasis(n);
  // Columns a_i and -b_j; kernel vectors (c, d) give the common vectors sum c_i a_i.
  RatMatrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b[j][r];
  RankKernel rk = rank_and_kernel(m);
  std::vector<RatVector> gens;
  for (const auto& kv : rk.kernel.vectors()) {
    RatVector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, kv[i], a[i]);
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(n, gens);
}

}  // namespace lieidx

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linjac/field.hpp"

namespace linjac {

using Vec = std::vector<u64>;

/// Dense row-major matrix of residues. The field is supplied per operation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<u64> data);

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length cols).
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<u64> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const u64> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const;

  const std::vector<u64>& data() const noexcept { return data_; }

  Matrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  /// Keep only the first n rows.
  void truncate_rows(std::size_t n);
  void append_rows(const Matrix& other);
  void append_row(std::span<const u64> v);

  bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<u64> data_;
};

/// Subspace of F^ambient held canonically: the basis rows are the transpose of
/// the reduced column echelon form, i.e. a reduced row echelon matrix with
/// strictly increasing pivot columns, unit pivots and zeros above and below.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of F^ambient.
  explicit Subspace(std::size_t ambient) : basis_(0, ambient) {}

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t codim() const noexcept { return ambient_dim() - dim(); }
  bool is_zero() const noexcept { return dim() == 0; }

  /// Canonical basis vectors as rows (dim x ambient).
  const Matrix& rows() const noexcept { return basis_; }
  /// Canonical basis vectors as columns (ambient x dim), the usual A_W.
  Matrix basis() const { return basis_.transposed(); }
  std::span<const u64> vector(std::size_t i) const { return basis_.row(i); }
  Vec vector_copy(std::size_t i) const { return basis_.row_vec(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Membership of a single vector.
  bool contains(const PrimeField& field, std::span<const u64> v) const;
  /// W subset of this.
  bool contains(const PrimeField& field, const Subspace& w) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  /// Internal: wrap an already canonical basis.
  static Subspace from_canonical(Matrix rref, std::vector<std::size_t> pivots);

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; returns the rank and truncates zero rows.
std::size_t row_reduce(const PrimeField& field, Matrix& a, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const PrimeField& field, Matrix a);

/// Classical product; throws DimensionMismatch.
Matrix mat_mul(const PrimeField& field, const Matrix& a, const Matrix& b);
/// a * b^T, computed with row-by-row dot products.
Matrix mat_mul_transposed(const PrimeField& field, const Matrix& a, const Matrix& bt);
Vec mat_vec(const PrimeField& field, const Matrix& a, std::span<const u64> v);
u64 dot(const PrimeField& field, std::span<const u64> a, std::span<const u64> b);

/// Canonical basis of the column space of A.
Subspace column_echelon(const PrimeField& field, const Matrix& a);
/// Canonical basis of the span of the rows of A.
Subspace row_span(const PrimeField& field, Matrix a);
/// Canonical basis of {v : A v = 0}.
Subspace kernel_basis(const PrimeField& field, const Matrix& a);
/// (ambient - dim) x ambient matrix whose kernel is W.
Matrix constraint_matrix(const PrimeField& field, const Subspace& w);

Subspace subspace_sum(const PrimeField& field, const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const PrimeField& field, const Subspace& u, const Subspace& w);
Subspace full_space(std::size_t n);

enum class SubspaceOp { Sum, Intersect };
enum class SubspacePredicate { Equal, Contains };
Subspace subspace_ops(const PrimeField& field, const Subspace& u, const Subspace& w, SubspaceOp op);
bool subspace_ops(const PrimeField& field, const Subspace& u, const Subspace& w, SubspacePredicate op);

/// Grows an echelon basis one vector at a time; used where the span is expected
/// to fill up long before all candidate vectors are seen.
class IncrementalEchelon {
 public:
  IncrementalEchelon(const PrimeField& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  /// Adds v to the basis if it is independent; returns whether it was.
  bool add(std::span<const u64> v);
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rank() == ambient_; }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// dst += c * src  (mod p), elementwise.
void axpy(const PrimeField& field, std::span<u64> dst, std::span<const u64> src, u64 c);
/// sum_i coeffs[i] * mats[i]; all matrices share a shape.
Matrix linear_combination(const PrimeField& field, std::span<const u64> coeffs, const std::vector<Matrix>& mats);

}  // namespace linjac

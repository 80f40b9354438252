#include "linjac/matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "linjac/error.hpp"
#include "linjac/stats.hpp"

namespace linjac {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<u64> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::DimensionMismatch, "matrix data length does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

void Matrix::append_rows(const Matrix& other) {
  if (other.rows_ == 0) return;
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw Error(Errc::DimensionMismatch, "append_rows column count");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void Matrix::append_row(std::span<const u64> v) {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "append_row length");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](u64 x) { return x == 0; });
}

// ---------------------------------------------------------------------------

void axpy(const PrimeField& field, std::span<u64> dst, std::span<const u64> src, u64 c) {
  if (c == 0) return;
  const u64 cp = field.precon(c);
  const std::size_t n = dst.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (src[k] != 0) dst[k] = field.add(dst[k], field.mul_precon(src[k], c, cp));
  }
}

u64 dot(const PrimeField& field, std::span<const u64> a, std::span<const u64> b) {
  const std::size_t n = a.size();
  if (field.fits_u64(n)) {
    u64 acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
    return field.reduce(acc);
  }
  u128 acc = 0;
  const u64 limit = field.lazy_terms();
  u64 count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += u128{a[k]} * b[k];
    if (++count == limit) {
      acc = field.reduce_wide(acc);
      count = 0;
    }
  }
  return field.reduce_wide(acc);
}

std::size_t row_reduce(const PrimeField& field, Matrix& a, std::vector<std::size_t>* pivots) {
  stats().echelon_calls++;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a(piv, c) == 0) ++piv;
    if (piv == m) continue;
    a.swap_rows(piv, r);
    auto pr = a.row(r);
    const u64 lead = pr[c];
    if (lead != 1) {
      const u64 iv = field.inv(lead);
      const u64 ivp = field.precon(iv);
      for (std::size_t k = c; k < n; ++k) pr[k] = field.mul_precon(pr[k], iv, ivp);
    }
    auto tail = std::span<const u64>(pr).subspan(c);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const u64 f = a(i, c);
      if (f == 0) continue;
      axpy(field, a.row(i).subspan(c), tail, field.neg(f));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  a.truncate_rows(r);
  return r;
}

std::size_t rank(const PrimeField& field, Matrix a) { return row_reduce(field, a); }

Matrix mat_mul_transposed(const PrimeField& field, const Matrix& a, const Matrix& bt) {
  if (a.cols() != bt.cols()) {
    throw Error(Errc::DimensionMismatch,
                "inner dimensions " + std::to_string(a.cols()) + " vs " + std::to_string(bt.cols()));
  }
  Matrix c(a.rows(), bt.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ai = a.row(i);
    for (std::size_t j = 0; j < bt.rows(); ++j) c(i, j) = dot(field, ai, bt.row(j));
  }
  return c;
}

Matrix mat_mul(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch,
                "inner dimensions " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  }
  return mat_mul_transposed(field, a, b.transposed());
}

Vec mat_vec(const PrimeField& field, const Matrix& a, std::span<const u64> v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector length");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(field, a.row(i), v);
  return out;
}

Matrix linear_combination(const PrimeField& field, std::span<const u64> coeffs,
                          const std::vector<Matrix>& mats) {
  if (coeffs.size() != mats.size()) throw Error(Errc::DimensionMismatch, "coefficient count");
  if (mats.empty()) return {};
  const std::size_t rows = mats[0].rows(), cols = mats[0].cols(), size = rows * cols;
  std::size_t active = 0;
  for (u64 c : coeffs) active += c != 0;
  std::vector<u64> out(size, 0);
  if (field.fits_u64(active)) {
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const u64 c = coeffs[i];
      if (c == 0) continue;
      const auto& d = mats[i].data();
      for (std::size_t e = 0; e < size; ++e) out[e] += c * d[e];
    }
    for (auto& x : out) x = field.reduce(x);
  } else {
    std::vector<u128> acc(size, 0);
    const u64 limit = field.lazy_terms();
    u64 count = 0;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const u64 c = coeffs[i];
      if (c == 0) continue;
      const auto& d = mats[i].data();
      for (std::size_t e = 0; e < size; ++e) acc[e] += u128{c} * d[e];
      if (++count == limit) {
        for (auto& x : acc) x = field.reduce_wide(x);
        count = 0;
      }
    }
    for (std::size_t e = 0; e < size; ++e) out[e] = field.reduce_wide(acc[e]);
  }
  return Matrix(rows, cols, std::move(out));
}

// ---------------------------------------------------------------------------

Subspace Subspace::from_canonical(Matrix rref, std::vector<std::size_t> pivots) {
  Subspace s;
  s.basis_ = std::move(rref);
  s.pivots_ = std::move(pivots);
  return s;
}

bool Subspace::contains(const PrimeField& field, std::span<const u64> v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::DimensionMismatch, "vector length");
  Vec w(v.begin(), v.end());
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    const u64 c = w[pivots_[t]];
    if (c != 0) axpy(field, w, basis_.row(t), field.neg(c));
  }
  return std::all_of(w.begin(), w.end(), [](u64 x) { return x == 0; });
}

bool Subspace::contains(const PrimeField& field, const Subspace& w) const {
  if (w.ambient_dim() != ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimension");
  if (w.dim() > dim()) return false;
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!contains(field, w.vector(i))) return false;
  return true;
}

bool IncrementalEchelon::add(std::span<const u64> v) {
  if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "vector length");
  Vec w(v.begin(), v.end());
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const u64 c = w[pivots_[t]];
    if (c != 0) axpy(field_, w, rows_[t], field_.neg(c));
  }
  auto it = std::find_if(w.begin(), w.end(), [](u64 x) { return x != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  const u64 iv = field_.inv(*it);
  for (auto& x : w) x = field_.mul(x, iv);
  pivots_.push_back(piv);
  rows_.push_back(std::move(w));
  return true;
}

Subspace row_span(const PrimeField& field, Matrix a) {
  std::vector<std::size_t> piv;
  row_reduce(field, a, &piv);
  return Subspace::from_canonical(std::move(a), std::move(piv));
}

Subspace column_echelon(const PrimeField& field, const Matrix& a) {
  return row_span(field, a.transposed());
}

Subspace kernel_basis(const PrimeField& field, const Matrix& a) {
  stats().kernel_calls++;
  const std::size_t n = a.cols();
  Matrix r = a;
  std::vector<std::size_t> piv;
  row_reduce(field, r, &piv);
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  Matrix k(0, n);
  Vec v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f] = 1;
    for (std::size_t t = 0; t < piv.size(); ++t) v[piv[t]] = field.neg(r(t, f));
    k.append_row(v);
  }
  return row_span(field, std::move(k));
}

Matrix constraint_matrix(const PrimeField& field, const Subspace& w) {
  return kernel_basis(field, w.rows()).rows();
}

Subspace full_space(std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace::from_canonical(Matrix::identity(n), std::move(piv));
}

Subspace subspace_sum(const PrimeField& field, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimension");
  Matrix m = u.rows();
  m.append_rows(w.rows());
  if (m.cols() == 0) return Subspace(u.ambient_dim());
  return row_span(field, std::move(m));
}

Subspace subspace_intersect(const PrimeField& field, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimension");
  Matrix k = constraint_matrix(field, u);
  Matrix kw = constraint_matrix(field, w);
  k.append_rows(kw);
  return kernel_basis(field, k);
}

Subspace subspace_ops(const PrimeField& field, const Subspace& u, const Subspace& w, SubspaceOp op) {
  return op == SubspaceOp::Sum ? subspace_sum(field, u, w) : subspace_intersect(field, u, w);
}

bool subspace_ops(const PrimeField& field, const Subspace& u, const Subspace& w, SubspacePredicate op) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimension");
  return op == SubspacePredicate::Equal ? u == w : u.contains(field, w);
}

}  // namespace linjac

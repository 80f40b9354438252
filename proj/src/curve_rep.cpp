#include "linjac/curve_rep.hpp"

#include <algorithm>
#include <string>

#include "linjac/error.hpp"
#include "linjac/stats.hpp"

namespace linjac {

RepA::RepA(PrimeField field, int genus, int degree, std::vector<Matrix> product_rows)
    : field_(field), genus_(genus), degree_(degree), delta_prime_(0), rows_(std::move(product_rows)) {
  if (rows_.empty()) throw Error(Errc::DimensionMismatch, "RepA needs at least one table");
  delta_prime_ = rows_[0].cols();
  for (const auto& m : rows_) {
    if (m.rows() != rows_.size() || m.cols() != delta_prime_) {
      throw Error(Errc::DimensionMismatch, "every table must be delta x delta'");
    }
  }
}

RepA RepA::from_coefficients(PrimeField field, int genus, int degree, std::size_t delta,
                             std::size_t delta_prime, std::span<const u64> c) {
  if (c.size() != delta * delta * delta_prime) {
    throw Error(Errc::DimensionMismatch, "coefficient table has wrong length");
  }
  std::vector<Matrix> rows(delta, Matrix(delta, delta_prime));
  for (std::size_t k = 0; k < delta_prime; ++k)
    for (std::size_t i = 0; i < delta; ++i)
      for (std::size_t j = 0; j < delta; ++j) rows[i](j, k) = field.reduce(c[(k * delta + i) * delta + j]);
  return RepA(field, genus, degree, std::move(rows));
}

std::vector<u64> RepA::flat_coefficients() const {
  const std::size_t d = delta(), dp = delta_prime();
  std::vector<u64> c(d * d * dp);
  for (std::size_t k = 0; k < dp; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) c[(k * d + i) * d + j] = rows_[i](j, k);
  return c;
}

RepB0::RepB0(PrimeField field, int genus, int degree, Matrix a_v, std::vector<Point> points)
    : field_(field), genus_(genus), degree_(degree), a_v_(std::move(a_v)), points_(std::move(points)) {
  const auto expected = static_cast<std::size_t>(2 * degree_ + 1);
  if (a_v_.rows() != expected) {
    throw Error(Errc::InvalidArgument,
                "RepB0 needs exactly 2*Delta+1 = " + std::to_string(expected) + " points, got " +
                    std::to_string(a_v_.rows()));
  }
  if (!points_.empty() && points_.size() != a_v_.rows()) {
    throw Error(Errc::DimensionMismatch, "point list does not match A_V");
  }
  k_v_ = constraint_matrix(field_, column_echelon(field_, a_v_));
}

std::string to_string(RepTag tag) { return tag == RepTag::A ? "a" : "b0"; }

RepTag rep_tag_from_string(const std::string& s) {
  if (s == "a" || s == "A") return RepTag::A;
  if (s == "b0" || s == "B0") return RepTag::B0;
  throw Error(Errc::InvalidArgument, "unknown representation tag '" + s + "'");
}

CurveRep::CurveRep(RepA rep) {
  const std::size_t n = rep.delta();
  rep_ = std::make_shared<const std::variant<RepA, RepB0>>(std::move(rep));
  v_ = std::make_shared<const Subspace>(full_space(n));
}

CurveRep::CurveRep(RepB0 rep) {
  auto v = column_echelon(rep.field(), rep.a_v());
  rep_ = std::make_shared<const std::variant<RepA, RepB0>>(std::move(rep));
  v_ = std::make_shared<const Subspace>(std::move(v));
}

const PrimeField& CurveRep::field() const noexcept {
  return std::visit([](const auto& r) -> const PrimeField& { return r.field(); }, *rep_);
}
int CurveRep::genus() const noexcept {
  return std::visit([](const auto& r) { return r.genus(); }, *rep_);
}
int CurveRep::degree() const noexcept {
  return std::visit([](const auto& r) { return r.degree(); }, *rep_);
}
std::size_t CurveRep::delta() const noexcept {
  return std::visit([](const auto& r) { return r.delta(); }, *rep_);
}
std::size_t CurveRep::delta_prime() const noexcept {
  return std::visit([](const auto& r) { return r.delta_prime(); }, *rep_);
}
std::size_t CurveRep::n() const noexcept { return is_rep_a() ? rep_a().delta() : rep_b0().n(); }
std::size_t CurveRep::n_prime() const noexcept { return is_rep_a() ? rep_a().delta_prime() : rep_b0().n(); }

// ---------------------------------------------------------------------------

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

ValidationCheck dimension_check(const std::string& name, std::size_t have, long expect) {
  return {name, expect >= 0 && have == static_cast<std::size_t>(expect),
          "have " + std::to_string(have) + ", expected " + std::to_string(expect)};
}

void validate_a(const RepA& rep, ValidationReport& report) {
  const int g = rep.genus(), deg = rep.degree();
  const std::size_t d = rep.delta(), dp = rep.delta_prime();
  report.checks.push_back(dimension_check("dim_v", d, deg + 1 - g));
  report.checks.push_back(dimension_check("dim_v_prime", dp, 2 * deg + 1 - g));
  report.checks.push_back({"degree_bound", deg >= 2 * g + 2,
                           "Delta = " + std::to_string(deg) + ", 2g+2 = " + std::to_string(2 * g + 2)});

  std::size_t bad = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < dp; ++k)
        if (rep.coefficient(i, j, k) != rep.coefficient(j, i, k)) {
          if (bad++ == 0) {
            first_bad = "c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                        "] != c[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "," +
                        std::to_string(k + 1) + "]";
          }
        }
  report.checks.push_back({"symmetry", bad == 0, bad == 0 ? "ok" : first_bad});

  IncrementalEchelon span(rep.field(), dp);
  for (std::size_t i = 0; i < d && !span.full(); ++i)
    for (std::size_t j = i; j < d && !span.full(); ++j) span.add(rep.product_rows(i).row(j));
  report.checks.push_back({"surjectivity", span.full(),
                           "rank of products " + std::to_string(span.rank()) + " of " + std::to_string(dp)});
}

void validate_b0(const RepB0& rep, ValidationReport& report) {
  const auto& field = rep.field();
  const int g = rep.genus(), deg = rep.degree();
  const std::size_t d = rep.delta(), n = rep.n();
  report.checks.push_back(dimension_check("dim_v", d, deg + 1 - g));
  report.checks.push_back(dimension_check("points", n, 2 * deg + 1));
  report.checks.push_back({"degree_bound", deg >= 2 * g + 2,
                           "Delta = " + std::to_string(deg) + ", 2g+2 = " + std::to_string(2 * g + 2)});
  const std::size_t r = rank(field, rep.a_v());
  report.checks.push_back(dimension_check("rank_a_v", r, static_cast<long>(d)));
  report.checks.push_back({"k_v_annihilates", mat_mul(field, rep.k_v(), rep.a_v()).is_zero(), "K_V * A_V"});

  // Pointwise products of the basis must span a space of dimension delta'.
  IncrementalEchelon span(field, n);
  Vec prod(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t t = 0; t < n; ++t) prod[t] = field.mul(rep.a_v()(t, i), rep.a_v()(t, j));
      span.add(prod);
    }
  report.checks.push_back(dimension_check("dim_products", span.rank(), 2 * deg + 1 - g));
}

void check_len(std::span<const u64> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                             ", expected " + std::to_string(n));
  }
}

}  // namespace

ValidationReport validate_rep(const CurveRep& rep) {
  ValidationReport report;
  if (rep.is_rep_a()) {
    validate_a(rep.rep_a(), report);
  } else {
    validate_b0(rep.rep_b0(), report);
  }
  return report;
}

bool is_zero_vector(std::span<const u64> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

Matrix mult_matrix_rows(const CurveRep& rep, std::span<const u64> s) {
  check_len(s, rep.n(), "section");
  stats().mult_matrices++;
  const auto& field = rep.field();
  if (rep.is_rep_a()) return linear_combination(field, s, rep.rep_a().all_product_rows());
  const std::size_t n = rep.n();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(j, j) = s[j];
  return m;
}

Matrix mult_matrix(const CurveRep& rep, std::span<const u64> s) {
  return mult_matrix_rows(rep, s).transposed();
}

Vec product(const CurveRep& rep, std::span<const u64> s, std::span<const u64> u) {
  check_len(s, rep.n(), "section");
  check_len(u, rep.n(), "section");
  const auto& field = rep.field();
  if (!rep.is_rep_a()) {
    Vec out(rep.n());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = field.mul(s[t], u[t]);
    return out;
  }
  // sum_j u_j (s * T_j) = sum_{i,j} s_i u_j (T_i * T_j)
  const auto& a = rep.rep_a();
  Vec out(a.delta_prime(), 0);
  for (std::size_t i = 0; i < a.delta(); ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = 0; j < a.delta(); ++j) {
      if (u[j] == 0) continue;
      axpy(field, out, a.product_rows(i).row(j), field.mul(s[i], u[j]));
    }
  }
  return out;
}

namespace {

/// Unreduced generators of s . W as rows.
Matrix product_generators(const CurveRep& rep, std::span<const u64> s, const Subspace& w) {
  const auto& field = rep.field();
  if (rep.is_rep_a()) {
    Matrix ms_rows = mult_matrix_rows(rep, s);
    if (w.dim() == rep.n() && w.ambient_dim() == rep.n()) return ms_rows;  // W = V = F^N
    return mat_mul_transposed(field, w.rows(), ms_rows.transposed());
  }
  Matrix out = w.rows();
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto row = out.row(r);
    for (std::size_t t = 0; t < row.size(); ++t) row[t] = field.mul(row[t], s[t]);
  }
  return out;
}

}  // namespace

Subspace simple_mul(const CurveRep& rep, std::span<const u64> s, const Subspace& w) {
  check_len(s, rep.n(), "section");
  if (w.ambient_dim() != rep.n()) throw Error(Errc::DimensionMismatch, "W must lie in F^N");
  if (is_zero_vector(s)) throw Error(Errc::ZeroSection, "simple multiplication by zero");
  if (w.is_zero()) return Subspace(rep.n_prime());
  return row_span(rep.field(), product_generators(rep, s, w));
}

Subspace sum_of_products(const CurveRep& rep, std::span<const Vec> sections, const Subspace& w) {
  if (w.ambient_dim() != rep.n()) throw Error(Errc::DimensionMismatch, "W must lie in F^N");
  stats().sums_of_products++;
  Matrix gens(0, rep.n_prime());
  bool any = false;
  for (const auto& s : sections) {
    check_len(s, rep.n(), "section");
    if (is_zero_vector(s)) continue;
    any = true;
    if (!w.is_zero()) gens.append_rows(product_generators(rep, s, w));
  }
  if (!any) throw Error(Errc::AllZeroSections, "sum of products needs a nonzero section");
  return row_span(rep.field(), std::move(gens));
}

Subspace divide(const CurveRep& rep, const Subspace& w_prime, std::span<const Vec> sections) {
  if (w_prime.ambient_dim() != rep.n_prime()) throw Error(Errc::DimensionMismatch, "W' must lie in F^N'");
  stats().divisions++;
  const auto& field = rep.field();
  const Matrix k = constraint_matrix(field, w_prime);
  Matrix stacked(0, rep.n());
  if (!rep.is_rep_a()) stacked.append_rows(rep.rep_b0().k_v());
  bool any = false;
  for (const auto& s : sections) {
    check_len(s, rep.n(), "section");
    if (is_zero_vector(s)) continue;
    any = true;
    if (k.rows() == 0) continue;
    if (rep.is_rep_a()) {
      // K_{W'} M_s = K_{W'} (M_s^T)^T
      stacked.append_rows(mat_mul_transposed(field, k, mult_matrix_rows(rep, s)));
    } else {
      Matrix block = k;
      for (std::size_t r = 0; r < block.rows(); ++r) {
        auto row = block.row(r);
        for (std::size_t t = 0; t < row.size(); ++t) row[t] = field.mul(row[t], s[t]);
      }
      stacked.append_rows(block);
    }
  }
  if (!any) throw Error(Errc::AllZeroSections, "division needs a nonzero section");
  return kernel_basis(field, stacked);
}

}  // namespace linjac

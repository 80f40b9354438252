#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linjac/field.hpp"
#include "linjac/matrix.hpp"

namespace linjac {

/// Curve given by the multiplication table between a basis {T_i} of V = H^0(L)
/// and a basis {U_k} of V' = H^0(L^2): T_i * T_j = sum_k c_ijk U_k.
///
/// The table is kept as delta matrices of shape delta x delta'; row j of the
/// i-th one is the coordinate vector of T_i * T_j. This is the transpose of the
/// usual M_i (delta' x delta), returned by table().
class RepA {
 public:
  RepA(PrimeField field, int genus, int degree, std::vector<Matrix> product_rows);

  /// c is laid out [k][i][j] with k < delta', i, j < delta.
  static RepA from_coefficients(PrimeField field, int genus, int degree, std::size_t delta,
                                std::size_t delta_prime, std::span<const u64> c);

  const PrimeField& field() const noexcept { return field_; }
  int genus() const noexcept { return genus_; }
  int degree() const noexcept { return degree_; }
  std::size_t delta() const noexcept { return rows_.size(); }
  std::size_t delta_prime() const noexcept { return delta_prime_; }

  /// M_i, delta' x delta; column j is T_i * T_j.
  Matrix table(std::size_t i) const { return rows_.at(i).transposed(); }
  /// M_i transposed; row j is T_i * T_j.
  const Matrix& product_rows(std::size_t i) const { return rows_.at(i); }
  const std::vector<Matrix>& all_product_rows() const noexcept { return rows_; }
  u64 coefficient(std::size_t i, std::size_t j, std::size_t k) const { return rows_[i](j, k); }
  std::vector<u64> flat_coefficients() const;

 private:
  PrimeField field_;
  int genus_;
  int degree_;
  std::size_t delta_prime_;
  std::vector<Matrix> rows_;
};

/// Curve given by the values of a basis of V at N = 2*Delta + 1 rational points;
/// multiplication is pointwise.
class RepB0 {
 public:
  using Point = std::pair<u64, u64>;

  /// a_v is N x delta; throws InvalidArgument unless N == 2*degree + 1.
  RepB0(PrimeField field, int genus, int degree, Matrix a_v, std::vector<Point> points = {});

  const PrimeField& field() const noexcept { return field_; }
  int genus() const noexcept { return genus_; }
  int degree() const noexcept { return degree_; }
  std::size_t n() const noexcept { return a_v_.rows(); }
  std::size_t delta() const noexcept { return a_v_.cols(); }
  std::size_t delta_prime() const noexcept { return static_cast<std::size_t>(2 * degree_ + 1 - genus_); }

  const Matrix& a_v() const noexcept { return a_v_; }
  /// (N - rank A_V) x N, kernel is V.
  const Matrix& k_v() const noexcept { return k_v_; }
  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  PrimeField field_;
  int genus_;
  int degree_;
  Matrix a_v_;
  Matrix k_v_;
  std::vector<Point> points_;
};

enum class RepTag { A, B0 };

std::string to_string(RepTag tag);
RepTag rep_tag_from_string(const std::string& s);

/// Either representation behind one interface. V is identified with a subspace
/// of F^N and V' with a subspace of F^N' (N = delta, N' = delta' for RepA;
/// N = N' = number of points for RepB0). Cheap to copy; the tables are shared.
class CurveRep {
 public:
  CurveRep(RepA rep);
  CurveRep(RepB0 rep);

  RepTag tag() const noexcept { return is_rep_a() ? RepTag::A : RepTag::B0; }
  bool is_rep_a() const noexcept { return std::holds_alternative<RepA>(*rep_); }
  const RepA& rep_a() const { return std::get<RepA>(*rep_); }
  const RepB0& rep_b0() const { return std::get<RepB0>(*rep_); }

  const PrimeField& field() const noexcept;
  int genus() const noexcept;
  int degree() const noexcept;
  std::size_t delta() const noexcept;
  std::size_t delta_prime() const noexcept;
  std::size_t n() const noexcept;
  std::size_t n_prime() const noexcept;

  /// V as a subspace of F^N.
  const Subspace& space_v() const noexcept { return *v_; }

  /// Codimension of a subspace of V (resp. V') inside V (resp. V').
  std::size_t codim_in_v(const Subspace& w) const noexcept { return delta() - w.dim(); }
  std::size_t codim_in_v_prime(const Subspace& w) const noexcept { return delta_prime() - w.dim(); }

 private:
  std::shared_ptr<const std::variant<RepA, RepB0>> rep_;
  std::shared_ptr<const Subspace> v_;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  const ValidationCheck* find(const std::string& name) const;
};

/// Symmetry, surjectivity and dimension identities. Ideal saturation and
/// smoothness are not checked.
ValidationReport validate_rep(const CurveRep& rep);

/// s * u in V'.
Vec product(const CurveRep& rep, std::span<const u64> s, std::span<const u64> u);
/// M_s, the N' x N matrix of multiplication by s.
Matrix mult_matrix(const CurveRep& rep, std::span<const u64> s);
/// M_s transposed (N x N'); row j is s times the j-th coordinate vector.
Matrix mult_matrix_rows(const CurveRep& rep, std::span<const u64> s);

/// s . W; throws ZeroSection for s = 0.
Subspace simple_mul(const CurveRep& rep, std::span<const u64> s, const Subspace& w);
/// s_1 . W + ... + s_h . W; throws AllZeroSections.
Subspace sum_of_products(const CurveRep& rep, std::span<const Vec> sections, const Subspace& w);
/// {u in V : u * s_i in W' for all i}; throws AllZeroSections.
Subspace divide(const CurveRep& rep, const Subspace& w_prime, std::span<const Vec> sections);

bool is_zero_vector(std::span<const u64> v) noexcept;

}  // namespace linjac

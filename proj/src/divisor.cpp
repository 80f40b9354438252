#include "linjac/divisor.hpp"

#include <algorithm>
#include <string>

#include "linjac/error.hpp"
#include "linjac/stats.hpp"

namespace linjac {

namespace {

// Smallest k >= 0 with base^k * num >= target * den.
int ceil_log(std::uint64_t base, u128 target, std::uint64_t num = 1, std::uint64_t den = 1) {
  const u128 goal = target * den;
  u128 acc = num;
  int k = 0;
  while (acc < goal) {
    acc *= base;
    ++k;
  }
  return k;
}

void check_degree(const CurveRep& rep, std::size_t deg, const char* what) {
  const long g = rep.genus(), delta = rep.degree(), d = static_cast<long>(deg);
  if (d < 2 * g - 1 || d > delta - 2 * g) {
    throw Error(Errc::PreconditionDegree, std::string(what) + ": degree " + std::to_string(d) +
                                              " outside [" + std::to_string(2 * g - 1) + ", " +
                                              std::to_string(delta - 2 * g) + "]");
  }
}

}  // namespace

DivisorFull make_divisor(const CurveRep& rep, Subspace space) {
  if (space.ambient_dim() != rep.n()) throw Error(Errc::DimensionMismatch, "W_D must lie in F^N");
  const std::size_t deg = rep.delta() - space.dim();
  return {std::move(space), deg};
}

int igs_size_h(int Delta, int deg_d, std::uint64_t sigma_size) {
  if (sigma_size < 2) throw Error(Errc::InvalidArgument, "|Sigma| must be at least 2");
  const long x = 2L * (Delta - deg_d);
  if (x <= 1) return 1;
  return 1 + ceil_log(sigma_size, static_cast<u128>(x));
}

int igs_size_h_fq(int g, int dbar, std::uint64_t q, std::uint64_t eta_num, std::uint64_t eta_den) {
  if (g < 1 || dbar < 2 || q < 2 || eta_num == 0 || eta_num >= eta_den) {
    throw Error(Errc::InvalidArgument, "need g >= 1, dbar >= 2, q >= 2, 0 < eta < 1");
  }
  const int a = 1 + (2 * g - 1 + dbar - 2) / (dbar - 1);
  const int b = 1 + ceil_log(q, static_cast<u128>(6) * static_cast<u128>(g), eta_num, eta_den);
  return std::max(a, b);
}

Vec random_sigma_element(const CurveRep& rep, const Subspace& w, Rng& rng) {
  const auto& field = rep.field();
  Vec out(w.ambient_dim(), 0);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const u64 c = field.sample_sigma(rng);
    if (c != 0) axpy(field, out, w.vector(i), c);
  }
  return out;
}

DivisorBrief random_igs_candidate(const CurveRep& rep, const DivisorFull& d, int h, Rng& rng) {
  if (d.space.is_zero()) throw Error(Errc::EmptySpace, "W_D is zero");
  DivisorBrief s;
  s.sections.reserve(static_cast<std::size_t>(std::max(h, 1)));
  s.sections.push_back(d.space.vector_copy(0));
  for (int i = 1; i < h; ++i) s.sections.push_back(random_sigma_element(rep, d.space, rng));
  return s;
}

DivisorBrief random_igs_candidate(const CurveRep& rep, const DivisorFull& d, Rng& rng) {
  const int h = igs_size_h(rep.degree(), static_cast<int>(d.degree), rep.field().sigma_size());
  return random_igs_candidate(rep, d, h, rng);
}

bool is_igs(const CurveRep& rep, const DivisorBrief& s, std::size_t expected_codim) {
  const Subspace sum = sum_of_products(rep, s.sections, rep.space_v());
  return rep.codim_in_v_prime(sum) == expected_codim;
}

DivisorBrief deflate(const CurveRep& rep, const DivisorFull& d, Rng& rng) {
  check_degree(rep, d.degree, "deflate");
  stats().deflations++;
  const int h = igs_size_h(rep.degree(), static_cast<int>(d.degree), rep.field().sigma_size());
  for (;;) {
    stats().deflation_attempts++;
    DivisorBrief s = random_igs_candidate(rep, d, h, rng);
    if (is_igs(rep, s, d.degree)) return s;
  }
}

bool is_igs_for_v(const CurveRep& rep, const CubicData& cubic, std::span<const Vec> sections) {
  const auto& field = rep.field();
  Matrix gens(0, cubic.delta_pp);
  for (const auto& s : sections) {
    if (s.size() != cubic.star_rows.size()) throw Error(Errc::DimensionMismatch, "section length");
    if (is_zero_vector(s)) continue;
    gens.append_rows(linear_combination(field, s, cubic.star_rows));
  }
  return rank(field, std::move(gens)) == cubic.delta_pp;
}

IgsV igs_for_v(const CurveRep& rep, const CubicData& cubic, Rng& rng) {
  if (!rep.is_rep_a()) throw Error(Errc::InvalidArgument, "igs_for_v needs RepA tables");
  if (cubic.star_rows.size() != rep.delta()) throw Error(Errc::DimensionMismatch, "cubic data does not match V");
  const int h = igs_size_h(rep.degree(), 0, rep.field().sigma_size());
  const DivisorFull v = make_divisor(rep, rep.space_v());
  for (;;) {
    stats().igs_v_attempts++;
    DivisorBrief s = random_igs_candidate(rep, v, h, rng);
    if (is_igs_for_v(rep, cubic, s.sections)) return IgsV{std::move(s.sections)};
  }
}

DivisorFull inflate(const CurveRep& rep, const DivisorBrief& s, const IgsV& defl_v) {
  const Subspace wp = sum_of_products(rep, s.sections, rep.space_v());
  return make_divisor(rep, divide(rep, wp, defl_v.sections));
}

DivisorFull flip_with(const CurveRep& rep, std::span<const u64> s, const DivisorBrief& defl_d) {
  const Subspace sv = simple_mul(rep, s, rep.space_v());
  return make_divisor(rep, divide(rep, sv, defl_d.sections));
}

DivisorFull flip(const CurveRep& rep, const DivisorFull& d, std::optional<Vec> s, Rng& rng) {
  check_degree(rep, d.degree, "flip");
  Vec section = s ? std::move(*s) : d.space.vector_copy(0);
  if (is_zero_vector(section)) throw Error(Errc::ZeroSection, "flip needs a nonzero section");
  if (!d.space.contains(rep.field(), section)) throw Error(Errc::InvalidArgument, "flip section must lie in W_D");
  const DivisorBrief defl = deflate(rep, d, rng);
  return flip_with(rep, section, defl);
}

bool membership_test(const CurveRep& rep, const Subspace& w, const IgsV& defl_v, Rng& rng) {
  const long g = rep.genus(), delta = rep.degree();
  const long c = static_cast<long>(rep.codim_in_v(w));
  if (c < 2 * g || c > delta - 2 * g) {
    throw Error(Errc::PreconditionCodim, "codim " + std::to_string(c) + " outside [" + std::to_string(2 * g) +
                                             ", " + std::to_string(delta - 2 * g) + "]");
  }
  stats().membership_tests++;
  const int h = igs_size_h(rep.degree(), 0, rep.field().sigma_size());
  const DivisorFull as_divisor{w, static_cast<std::size_t>(c)};
  for (;;) {
    stats().membership_attempts++;
    const DivisorBrief s = random_igs_candidate(rep, as_divisor, h, rng);
    const Subspace up = sum_of_products(rep, s.sections, rep.space_v());
    const long cp = static_cast<long>(rep.codim_in_v_prime(up));
    if (cp > c) continue;
    if (cp < c) return false;
    return divide(rep, up, defl_v.sections) == w;
  }
}

}  // namespace linjac

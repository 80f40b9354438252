#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linjac/curve_rep.hpp"

namespace linjac {

/// W_D = H^0(L(-D)) as a subspace of V. degree is delta - dim W_D, which is the
/// degree of D whenever deg D <= Delta - 2g.
struct DivisorFull {
  Subspace space;
  std::size_t degree = 0;
};

DivisorFull make_divisor(const CurveRep& rep, Subspace space);

/// An ideal generating set {s_1, ..., s_h} for D.
struct DivisorBrief {
  std::vector<Vec> sections;
};

/// The map * : V x V' -> V'' for V'' = H^0(L^3). star_rows[i] is delta' x delta'',
/// row k holding the coordinates of T_i * U_k.
struct CubicData {
  std::size_t delta_pp = 0;
  std::vector<Matrix> star_rows;
};

/// An ideal generating set for the empty divisor.
struct IgsV {
  std::vector<Vec> sections;
};

/// h = 1 + ceil(log 2(Delta - deg_d) / log sigma_size), evaluated exactly.
int igs_size_h(int Delta, int deg_d, std::uint64_t sigma_size);

/// max(1 + ceil((2g-1)/(dbar-1)), 1 + ceil(log(6g/eta)/log q)) with
/// eta = eta_num/eta_den. Informational only; deflation does not use it.
int igs_size_h_fq(int g, int dbar, std::uint64_t q, std::uint64_t eta_num, std::uint64_t eta_den);

/// sum_i c_i w_i over the canonical basis of W, c_i uniform in Sigma.
Vec random_sigma_element(const CurveRep& rep, const Subspace& w, Rng& rng);

/// s_1 = first canonical basis vector of W_D, s_2..s_h Sigma-random in W_D.
/// Throws EmptySpace when W_D = 0. Not verified.
DivisorBrief random_igs_candidate(const CurveRep& rep, const DivisorFull& d, int h, Rng& rng);
/// As above with h from igs_size_h.
DivisorBrief random_igs_candidate(const CurveRep& rep, const DivisorFull& d, Rng& rng);

/// True iff s_1 V + ... + s_h V has codimension expected_codim in V'.
bool is_igs(const CurveRep& rep, const DivisorBrief& s, std::size_t expected_codim);

/// Las Vegas deflation; the result always passes is_igs.
/// Throws PreconditionDegree unless 2g-1 <= deg D <= Delta - 2g.
DivisorBrief deflate(const CurveRep& rep, const DivisorFull& d, Rng& rng);

/// Verified IGS for V from the cubic tables (RepA only).
IgsV igs_for_v(const CurveRep& rep, const CubicData& cubic, Rng& rng);
/// Whether s_1 * V' + ... + s_h * V' is all of V''.
bool is_igs_for_v(const CurveRep& rep, const CubicData& cubic, std::span<const Vec> sections);

/// W_D = (s_1 V + ... + s_h V) / defl(V).
DivisorFull inflate(const CurveRep& rep, const DivisorBrief& s, const IgsV& defl_v);

/// W_{D~} with (s) = D + D~, computed as (s V) / defl(W_D). s defaults to the
/// first canonical basis vector of W_D.
DivisorFull flip(const CurveRep& rep, const DivisorFull& d, std::optional<Vec> s, Rng& rng);
/// Same with a deflation of D already at hand.
DivisorFull flip_with(const CurveRep& rep, std::span<const u64> s, const DivisorBrief& defl_d);

/// Whether W equals W_D for D its divisor of common zeros.
/// Throws PreconditionCodim unless 2g <= codim W <= Delta - 2g.
bool membership_test(const CurveRep& rep, const Subspace& w, const IgsV& defl_v, Rng& rng);

}  // namespace linjac

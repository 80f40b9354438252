#include "linjac/curve_gen.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "linjac/error.hpp"

namespace linjac {

int pole_order(const Monomial& m, int genus) { return 2 * m.x + m.y * (2 * genus + 1); }

std::vector<Monomial> monomial_basis(int genus, int bound) {
  std::vector<Monomial> out;
  for (int i = 0; 2 * i <= bound; ++i) out.push_back({i, 0});
  for (int j = 0; 2 * j + 2 * genus + 1 <= bound; ++j) out.push_back({j, 1});
  std::sort(out.begin(), out.end(),
            [genus](const Monomial& a, const Monomial& b) { return pole_order(a, genus) < pole_order(b, genus); });
  return out;
}

bool is_smooth(const PrimeField& field, const HyperellipticCurve& c) {
  if (field.modulus() == 2) {
    if (c.h.is_zero()) return false;
    const Poly fp = poly_derivative(field, c.f);
    const Poly hp = poly_derivative(field, c.h);
    const Poly t = poly_add(field, poly_mul(field, fp, fp), poly_mul(field, poly_mul(field, hp, hp), c.f));
    return poly_gcd(field, c.h, t).degree() == 0;
  }
  const Poly big = poly_add(field, poly_scale(field, c.f, 4), poly_mul(field, c.h, c.h));
  return poly_gcd(field, big, poly_derivative(field, big)).degree() == 0;
}

namespace {

class MonomialIndex {
 public:
  explicit MonomialIndex(const std::vector<Monomial>& basis) {
    int max_x = 0;
    for (const auto& m : basis) max_x = std::max(max_x, m.x);
    idx_.assign(static_cast<std::size_t>(2 * (max_x + 1)), -1);
    for (std::size_t k = 0; k < basis.size(); ++k) idx_[key(basis[k])] = static_cast<long>(k);
  }
  std::size_t at(const Monomial& m) const {
    const std::size_t k = key(m);
    if (k >= idx_.size() || idx_[k] < 0) throw Error(Errc::InvalidArgument, "monomial outside target basis");
    return static_cast<std::size_t>(idx_[k]);
  }

 private:
  static std::size_t key(const Monomial& m) { return static_cast<std::size_t>(2 * m.x + m.y); }
  std::vector<long> idx_;
};

// Adds coordinates of a*b into out, reducing y^2 = f - h y.
void add_product(const PrimeField& field, const HyperellipticCurve& c, const Monomial& a, const Monomial& b,
                 const MonomialIndex& target, std::span<u64> out) {
  const int x = a.x + b.x;
  if (a.y + b.y <= 1) {
    auto& slot = out[target.at({x, a.y + b.y})];
    slot = field.add(slot, 1);
    return;
  }
  for (std::size_t k = 0; k < c.f.coeffs().size(); ++k) {
    if (c.f[k] == 0) continue;
    auto& slot = out[target.at({x + static_cast<int>(k), 0})];
    slot = field.add(slot, c.f[k]);
  }
  for (std::size_t k = 0; k < c.h.coeffs().size(); ++k) {
    if (c.h[k] == 0) continue;
    auto& slot = out[target.at({x + static_cast<int>(k), 1})];
    slot = field.sub(slot, c.h[k]);
  }
}

std::vector<Matrix> product_tables(const PrimeField& field, const HyperellipticCurve& c,
                                   const std::vector<Monomial>& left, const std::vector<Monomial>& right,
                                   const std::vector<Monomial>& target) {
  const MonomialIndex index(target);
  std::vector<Matrix> rows(left.size(), Matrix(right.size(), target.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) add_product(field, c, left[i], right[j], index, rows[i].row(j));
  return rows;
}

Subspace monomial_subspace(const std::vector<Monomial>& basis, int genus, int bound) {
  Matrix rows(0, basis.size());
  std::vector<std::size_t> piv;
  Vec e(basis.size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (pole_order(basis[k], genus) > bound) continue;
    e[k] = 1;
    rows.append_row(e);
    e[k] = 0;
    piv.push_back(k);
  }
  return Subspace::from_canonical(std::move(rows), std::move(piv));
}

CurveBundle assemble(const PrimeField& field, HyperellipticCurve curve, int Delta, bool with_cubic) {
  const int g = curve.genus;
  auto bv = monomial_basis(g, Delta);
  auto bvp = monomial_basis(g, 2 * Delta);
  RepA rep(field, g, Delta, product_tables(field, curve, bv, bv, bvp));
  std::optional<CubicData> cubic;
  if (with_cubic) {
    auto bvpp = monomial_basis(g, 3 * Delta);
    cubic = CubicData{bvpp.size(), product_tables(field, curve, bv, bvp, bvpp)};
  }
  return CurveBundle{std::move(curve), Delta, field, std::move(rep), std::move(bv), std::move(bvp),
                     std::move(cubic), std::nullopt, std::nullopt, RepTag::A};
}

Poly random_poly(const PrimeField& field, int degree, Rng& rng) {
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = field.sample(rng);
  return Poly(std::move(c));
}

}  // namespace

CurveBundle gen_hyperelliptic(int genus, u64 p, Rng& rng, const GenOptions& options) {
  if (genus < 1) throw Error(Errc::InvalidArgument, "genus must be at least 1");
  const PrimeField field(p);
  const bool char2 = p == 2;
  if (options.f && (options.f->degree() != 2 * genus + 1 || !options.f->is_monic())) {
    throw Error(Errc::InvalidArgument, "f must be monic of degree 2g+1");
  }
  if (options.h && options.h->degree() > genus) throw Error(Errc::InvalidArgument, "deg h must be at most g");
  if (char2 && options.h && options.h->is_zero()) {
    throw Error(Errc::BadCharacteristic, "y^2 = f(x) is singular in characteristic 2; supply h != 0");
  }

  const bool random = !options.f || (char2 && !options.h);
  const int attempts = random ? std::max(options.max_attempts, 1) : 1;
  HyperellipticCurve curve{p, genus, {}, {}};
  bool found = false;
  for (int a = 0; a < attempts && !found; ++a) {
    curve.f = options.f ? *options.f : random_monic(field, 2 * genus + 1, rng);
    if (options.h) {
      curve.h = *options.h;
    } else if (char2) {
      do curve.h = random_poly(field, genus, rng);
      while (curve.h.is_zero());
    }
    found = is_smooth(field, curve);
  }
  if (!found) throw Error(Errc::SingularCurve, "no smooth curve found for genus " + std::to_string(genus));

  const int d = std::max(2 * genus, 2);
  CurveBundle b = assemble(field, std::move(curve), 3 * d, options.with_cubic);
  b.precomp = LargePrecomp{d, monomial_subspace(b.basis_v, genus, b.Delta - d),
                           monomial_subspace(b.basis_v, genus, b.Delta - 2 * d), Vec(b.basis_v.size(), 0)};
  b.precomp->s0[0] = 1;  // the constant function, (1) = 3 D_0
  return b;
}

CurveBundle gen_paper_fixture(u64 p) {
  if (p == 2 || p == 3) throw Error(Errc::BadCharacteristic, "y^2 = x^3 + 1 is singular for p = 2, 3");
  const PrimeField field(p);
  HyperellipticCurve curve{p, 1, Poly(std::vector<u64>{1, 0, 0, 1}), {}};
  return assemble(field, std::move(curve), 4, true);
}

std::vector<RepB0::Point> affine_points(const PrimeField& field, const HyperellipticCurve& c) {
  std::vector<RepB0::Point> pts;
  const u64 p = field.modulus();
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x)
      for (u64 y = 0; y < 2; ++y) {
        const u64 lhs = field.add(field.mul(y, y), field.mul(poly_eval(field, c.h, x), y));
        if (lhs == poly_eval(field, c.f, x)) pts.emplace_back(x, y);
      }
    return pts;
  }
  const u64 half = field.inv(2);
  for (u64 x = 0; x < p; ++x) {
    const u64 hx = poly_eval(field, c.h, x);
    const u64 disc = field.add(field.mul(hx, hx), field.mul(4, poly_eval(field, c.f, x)));
    const u64 base = field.mul(field.neg(hx), half);
    if (disc == 0) {
      pts.emplace_back(x, base);
    } else if (field.is_square(disc)) {
      const u64 r = field.mul(field.sqrt(disc), half);
      const u64 y1 = field.add(base, r), y2 = field.sub(base, r);
      pts.emplace_back(x, std::min(y1, y2));
      pts.emplace_back(x, std::max(y1, y2));
    }
  }
  return pts;
}

Vec evaluate_basis(const PrimeField& field, const std::vector<Monomial>& basis, u64 x, u64 y) {
  Vec out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    u64 v = field.pow(x, static_cast<u64>(basis[k].x));
    if (basis[k].y) v = field.mul(v, y);
    out[k] = v;
  }
  return out;
}

void gen_rep_b0(CurveBundle& bundle, Rng& rng) {
  const auto& field = bundle.field;
  auto pts = affine_points(field, bundle.curve);
  const std::size_t n = static_cast<std::size_t>(2 * bundle.Delta + 1);
  if (pts.size() < n) {
    throw Error(Errc::InsufficientRationalPoints, "need " + std::to_string(n) + " affine points, curve has " +
                                                      std::to_string(pts.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pts.size() - i));
    std::swap(pts[i], pts[j]);
  }
  pts.resize(n);
  Matrix a_v(0, bundle.basis_v.size());
  for (const auto& [x, y] : pts) a_v.append_row(evaluate_basis(field, bundle.basis_v, x, y));
  bundle.rep_b0 = RepB0(field, bundle.curve.genus, bundle.Delta, std::move(a_v), std::move(pts));
}

CurveRep bundle_rep(const CurveBundle& bundle, RepTag tag) {
  if (tag == RepTag::A) return CurveRep(bundle.rep_a);
  if (!bundle.rep_b0) throw Error(Errc::InvalidArgument, "bundle has no RepB0 data");
  return CurveRep(*bundle.rep_b0);
}

Vec a_to_b0(const CurveBundle& bundle, std::span<const u64> v) {
  if (!bundle.rep_b0) throw Error(Errc::InvalidArgument, "bundle has no RepB0 data");
  return mat_vec(bundle.field, bundle.rep_b0->a_v(), v);
}

Subspace a_to_b0(const CurveBundle& bundle, const Subspace& w) {
  if (!bundle.rep_b0) throw Error(Errc::InvalidArgument, "bundle has no RepB0 data");
  // Rows of W times A_V^T.
  return row_span(bundle.field, mat_mul_transposed(bundle.field, w.rows(), bundle.rep_b0->a_v()));
}

Subspace b0_to_a(const CurveBundle& bundle, const Subspace& w) {
  if (!bundle.rep_b0) throw Error(Errc::InvalidArgument, "bundle has no RepB0 data");
  const auto& field = bundle.field;
  const Matrix& a = bundle.rep_b0->a_v();
  const std::size_t delta = a.cols();
  // Pick delta independent rows of A_V and invert that square block.
  Matrix at = a.transposed();
  std::vector<std::size_t> rows;
  row_reduce(field, at, &rows);
  Matrix aug(delta, 2 * delta);
  for (std::size_t r = 0; r < delta; ++r) {
    for (std::size_t c = 0; c < delta; ++c) aug(r, c) = a(rows[r], c);
    aug(r, delta + r) = 1;
  }
  row_reduce(field, aug);
  Matrix inv(delta, delta);
  for (std::size_t r = 0; r < delta; ++r)
    for (std::size_t c = 0; c < delta; ++c) inv(r, c) = aug(r, delta + c);
  Matrix picked(w.dim(), delta);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t r = 0; r < delta; ++r) picked(i, r) = w.rows()(i, rows[r]);
  return row_span(field, mat_mul_transposed(field, picked, inv));
}

LargePrecomp bundle_precomp(const CurveBundle& bundle, RepTag tag) {
  if (!bundle.precomp) throw Error(Errc::InconsistentPrecomp, "bundle has no large-model data");
  if (tag == RepTag::A) return *bundle.precomp;
  const auto& pre = *bundle.precomp;
  return {pre.d, a_to_b0(bundle, pre.w_d0), a_to_b0(bundle, pre.w_2d0), a_to_b0(bundle, std::span<const u64>(pre.s0))};
}

LargeModel bundle_model(const CurveBundle& bundle, RepTag tag, bool with_defl_v, Rng& rng) {
  const CurveRep rep = bundle_rep(bundle, tag);
  std::optional<IgsV> defl_v;
  if (with_defl_v) {
    if (!bundle.cubic) throw Error(Errc::InvalidArgument, "bundle has no cubic data");
    defl_v = igs_for_v(CurveRep(bundle.rep_a), *bundle.cubic, rng);
    if (tag == RepTag::B0)
      for (auto& s : defl_v->sections) s = a_to_b0(bundle, std::span<const u64>(s));
  }
  return make_large_model(rep, bundle_precomp(bundle, tag), std::move(defl_v), rng);
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

constexpr const char* kFormat = "linjac-curve-bundle";
constexpr int kVersion = 1;

json monomials_json(const std::vector<Monomial>& b) {
  json out = json::array();
  for (const auto& m : b) out.push_back({m.x, m.y});
  return out;
}

std::vector<Monomial> monomials_from(const json& j) {
  std::vector<Monomial> out;
  for (const auto& m : j) out.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
  return out;
}

json matrix_rows_json(const Matrix& m) { return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.data()}}; }

Matrix matrix_from(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  auto data = j.at("data").get<std::vector<u64>>();
  if (data.size() != rows * cols) throw Error(Errc::MalformedFile, "matrix data has the wrong length");
  return Matrix(rows, cols, std::move(data));
}

Subspace subspace_from(const PrimeField& field, const json& j) {
  Matrix m = matrix_from(j);
  for (u64 x : m.data())
    if (x >= field.modulus()) throw Error(Errc::MalformedFile, "residue out of range");
  Subspace s = row_span(field, m);
  if (!(s.rows() == m)) throw Error(Errc::MalformedFile, "stored subspace is not in canonical form");
  return s;
}

void check_residues(const PrimeField& field, const std::vector<u64>& v) {
  for (u64 x : v)
    if (x >= field.modulus()) throw Error(Errc::MalformedFile, "residue out of range");
}

}  // namespace

std::string bundle_to_json(const CurveBundle& b) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["p"] = b.field.modulus();
  j["sigma_size"] = b.field.sigma_size();
  j["genus"] = b.curve.genus;
  j["Delta"] = b.Delta;
  j["rep"] = to_string(b.preferred);
  j["curve"] = {{"f", b.curve.f.coeffs()},
                {"h", b.curve.h.coeffs()},
                {"basis_v", monomials_json(b.basis_v)},
                {"basis_v_prime", monomials_json(b.basis_vp)}};
  j["rep_a"] = {{"delta", b.rep_a.delta()}, {"delta_prime", b.rep_a.delta_prime()}, {"c", b.rep_a.flat_coefficients()}};
  if (b.cubic) {
    json star = json::array();
    for (const auto& m : b.cubic->star_rows) star.push_back(m.data());
    j["cubic"] = {{"delta_pp", b.cubic->delta_pp}, {"star_rows", star}};
  }
  if (b.rep_b0) {
    json pts = json::array();
    for (const auto& [x, y] : b.rep_b0->points()) pts.push_back({x, y});
    j["rep_b0"] = {{"points", pts}, {"a_v", matrix_rows_json(b.rep_b0->a_v())}};
  }
  if (b.precomp) {
    j["precomp"] = {{"d", b.precomp->d},
                    {"w_d0", matrix_rows_json(b.precomp->w_d0.rows())},
                    {"w_2d0", matrix_rows_json(b.precomp->w_2d0.rows())},
                    {"s0", b.precomp->s0}};
  }
  return j.dump();
}

CurveBundle bundle_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, e.what());
  }
  try {
    if (!j.is_object() || j.value("format", std::string()) != kFormat) {
      throw Error(Errc::MalformedFile, "not a curve bundle");
    }
    const int version = j.at("version").get<int>();
    if (version != kVersion) {
      throw Error(Errc::VersionMismatch, "bundle version " + std::to_string(version) + ", expected " +
                                             std::to_string(kVersion));
    }
    const PrimeField field(j.at("p").get<u64>(), j.at("sigma_size").get<u64>());
    const int g = j.at("genus").get<int>();
    const int Delta = j.at("Delta").get<int>();
    const auto& jc = j.at("curve");
    auto f = jc.at("f").get<std::vector<u64>>();
    auto h = jc.at("h").get<std::vector<u64>>();
    check_residues(field, f);
    check_residues(field, h);
    HyperellipticCurve curve{field.modulus(), g, Poly(std::move(f)), Poly(std::move(h))};

    const auto& ja = j.at("rep_a");
    const auto delta = ja.at("delta").get<std::size_t>(), delta_p = ja.at("delta_prime").get<std::size_t>();
    auto c = ja.at("c").get<std::vector<u64>>();
    check_residues(field, c);
    RepA rep = RepA::from_coefficients(field, g, Delta, delta, delta_p, c);

    std::optional<CubicData> cubic;
    if (j.contains("cubic")) {
      const auto& jq = j.at("cubic");
      CubicData cd{jq.at("delta_pp").get<std::size_t>(), {}};
      for (const auto& m : jq.at("star_rows")) {
        auto data = m.get<std::vector<u64>>();
        check_residues(field, data);
        if (data.size() != delta_p * cd.delta_pp) throw Error(Errc::MalformedFile, "cubic table has the wrong length");
        cd.star_rows.emplace_back(delta_p, cd.delta_pp, std::move(data));
      }
      if (cd.star_rows.size() != delta) throw Error(Errc::MalformedFile, "cubic table count");
      cubic = std::move(cd);
    }

    std::optional<RepB0> b0;
    if (j.contains("rep_b0")) {
      const auto& jb = j.at("rep_b0");
      std::vector<RepB0::Point> pts;
      for (const auto& pt : jb.at("points")) pts.emplace_back(pt.at(0).get<u64>(), pt.at(1).get<u64>());
      Matrix a_v = matrix_from(jb.at("a_v"));
      check_residues(field, a_v.data());
      b0 = RepB0(field, g, Delta, std::move(a_v), std::move(pts));
    }

    std::optional<LargePrecomp> pre;
    if (j.contains("precomp")) {
      const auto& jp = j.at("precomp");
      auto s0 = jp.at("s0").get<std::vector<u64>>();
      check_residues(field, s0);
      pre = LargePrecomp{jp.at("d").get<int>(), subspace_from(field, jp.at("w_d0")), subspace_from(field, jp.at("w_2d0")),
                         std::move(s0)};
    }

    return CurveBundle{std::move(curve),
                       Delta,
                       field,
                       std::move(rep),
                       monomials_from(jc.at("basis_v")),
                       monomials_from(jc.at("basis_v_prime")),
                       std::move(cubic),
                       std::move(b0),
                       std::move(pre),
                       rep_tag_from_string(j.at("rep").get<std::string>())};
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::VersionMismatch || e.code() == Errc::MalformedFile) throw;
    throw Error(Errc::MalformedFile, e.what());
  }
}

void save_bundle(const CurveBundle& bundle, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << bundle_to_json(bundle) << '\n';
}

CurveBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedFile, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return bundle_from_json(ss.str());
}

}  // namespace linjac

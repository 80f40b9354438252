#include "linjac/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "linjac/error.hpp"

namespace linjac {

std::string to_json_line(const CaseResult& r) {
  nlohmann::json j{{"suite", r.suite}, {"case", r.name}, {"pass", r.pass}, {"details", r.details}, {"seed", r.seed}};
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fixture", "axioms", "oracle", "igs-stats", "membership", "roundtrip", "dual"};
  return names;
}

JacobianPoint points_to_point(const CurveBundle& bundle, const LargeModel& model,
                              const std::vector<RepB0::Point>& pts, PointSize size) {
  const auto& field = bundle.field;
  const int k = size == PointSize::Small ? model.d : 2 * model.d;
  const int pad = k - static_cast<int>(pts.size());
  if (pad < 0) throw Error(Errc::InvalidArgument, "too many points for the divisor degree");
  if (std::set<RepB0::Point>(pts.begin(), pts.end()).size() != pts.size()) {
    throw Error(Errc::InvalidArgument, "points must be distinct");
  }
  const auto& basis = bundle.basis_v;
  Matrix cond(0, basis.size());
  for (const auto& [x, y] : pts) cond.append_row(evaluate_basis(field, basis, x, y));
  Vec e(basis.size(), 0);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    if (pole_order(basis[col], bundle.curve.genus) <= bundle.Delta - pad) continue;
    e[col] = 1;
    cond.append_row(e);
    e[col] = 0;
  }
  Subspace w = kernel_basis(field, cond);
  if (model.rep.tag() == RepTag::B0) w = a_to_b0(bundle, w);
  return {size, std::move(w)};
}

namespace {

bool cantor_capable(const CurveBundle& b) { return b.curve.p != 2 && b.curve.h.is_zero(); }

}  // namespace

JacobianPoint random_point(const CurveBundle& bundle, const LargeModel& model, PointSize size, Rng& rng) {
  if (cantor_capable(bundle)) return mumford_to_point(bundle, model, random_mumford(bundle.curve, rng), size);
  auto pts = affine_points(bundle.field, bundle.curve);
  const std::size_t k = std::min<std::size_t>(pts.size(), static_cast<std::size_t>(bundle.curve.genus));
  for (std::size_t i = 0; i < k; ++i) std::swap(pts[i], pts[i + rng.below(pts.size() - i)]);
  pts.resize(rng.below(k + 1));
  return points_to_point(bundle, model, pts, size);
}

IgsStats igs_statistics(const CurveBundle& bundle, int trials, std::uint64_t seed) {
  Rng rng(seed);
  const LargeModel m = bundle_model(bundle, RepTag::A, false, rng);
  IgsStats out;
  const OpStats before = take_stats();
  for (int t = 0; t < trials; ++t) {
    Vec s;
    do s = random_sigma_element(m.rep, m.w_2d0.space, rng);
    while (is_zero_vector(s));
    const DivisorFull d = flip_with(m.rep, s, m.defl_2d0);
    take_stats();
    const DivisorBrief cand = random_igs_candidate(m.rep, d, rng);
    out.successes += is_igs(m.rep, cand, d.degree);
    (void)deflate(m.rep, d, rng);
    const OpStats st = take_stats();
    out.deflations += st.deflations;
    out.deflation_attempts += st.deflation_attempts;
    ++out.trials;
  }
  stats() = before;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Tally {
  int passed = 0;
  int total = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  CaseResult result(const std::string& suite, const std::string& name, std::uint64_t seed) const {
    std::ostringstream os;
    os << passed << "/" << total;
    if (!first_failure.empty()) os << "; first failure: " << first_failure;
    return {suite, name, total > 0 && passed == total, os.str(), seed};
  }
};

using Cases = std::vector<CaseResult>;

void fixture_suite(const CurveBundle& b, std::uint64_t seed, Cases& out) {
  const std::string suite = "fixture";
  const bool is_fixture = b.curve.genus == 1 && b.Delta == 4 && b.curve.f == Poly(std::vector<u64>{1, 0, 0, 1}) &&
                          b.curve.h.is_zero();
  if (!is_fixture) {
    out.push_back({suite, "bundle", false, "bundle is not the y^2 = x^3 + 1 fixture", seed});
    return;
  }
  const CurveRep rep(b.rep_a);
  const auto report = validate_rep(rep);
  std::string detail;
  for (const auto& c : report.checks) detail += c.name + (c.passed ? "=ok " : "=FAIL ");
  out.push_back({suite, "validate_rep", report.ok(), detail, seed});

  auto unit = [&](std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  const Vec u5 = unit(8, 4);
  Vec u1u6 = unit(8, 0);
  u1u6[5] = 1;
  out.push_back({suite, "T2*T3=U5", product(rep, unit(4, 1), unit(4, 2)) == u5, "", seed});
  out.push_back({suite, "T3*T3=U1+U6", product(rep, unit(4, 2), unit(4, 2)) == u1u6, "", seed});
  bool ones = true;
  for (std::size_t j = 0; j < 4; ++j) ones = ones && product(rep, unit(4, 0), unit(4, j)) == unit(8, j);
  out.push_back({suite, "T1*Tj=Uj", ones, "", seed});
}

void axioms_suite(const CurveBundle& b, int trials, std::uint64_t seed, Cases& out) {
  const std::string suite = "axioms";
  Rng master(seed);
  const LargeModel m = bundle_model(b, b.rep_b0 ? b.preferred : RepTag::A, false, master);
  Tally identity, inverse, commut, assoc, dneg, large_laws, symmetric, distrib;
  const auto zs = zero_point(m, PointSize::Small), zl = zero_point(m, PointSize::Large);
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.split();
    const std::string tag = "trial " + std::to_string(t);
    const auto x = random_point(b, m, PointSize::Small, rng);
    const auto y = random_point(b, m, PointSize::Small, rng);
    const auto z = random_point(b, m, PointSize::Small, rng);
    identity.record(equal_class(m, add(m, x, zs, rng), x, rng), tag);
    inverse.record(equal_class(m, add(m, x, negate(m, x, rng), rng), zs, rng), tag);
    commut.record(equal_class(m, addflip(m, x, y, rng), addflip(m, y, x, rng), rng) &&
                      equal_class(m, add(m, x, y, rng), add(m, y, x, rng), rng),
                  tag);
    assoc.record(equal_class(m, add(m, add(m, x, y, rng), z, rng), add(m, x, add(m, y, z, rng), rng), rng), tag);
    dneg.record(equal_class(m, addflip(m, addflip(m, x, zs, rng), zs, rng), x, rng), tag);
    symmetric.record(equal_class(m, x, y, rng) == equal_class(m, y, x, rng), tag);

    const auto xl = to_large(m, x, rng), yl = to_large(m, y, rng), zl3 = to_large(m, z, rng);
    large_laws.record(equal_class(m, add(m, xl, zl, rng), xl, rng) &&
                          equal_class(m, add(m, xl, negate(m, xl, rng), rng), zl, rng) &&
                          equal_class(m, addflip(m, xl, yl, rng), addflip(m, yl, xl, rng), rng) &&
                          equal_class(m, add(m, add(m, xl, yl, rng), zl3, rng), add(m, xl, add(m, yl, zl3, rng), rng),
                                      rng) &&
                          equal_class(m, to_small(m, add(m, xl, yl, rng), rng), add(m, x, y, rng), rng),
                      tag);
    if (t < std::max(1, trials / 5)) {
      const auto a = static_cast<std::int64_t>(rng.below(51)), c = static_cast<std::int64_t>(rng.below(51));
      distrib.record(equal_class(m, scalar_mul(m, a + c, x, rng),
                                 add(m, scalar_mul(m, a, x, rng), scalar_mul(m, c, x, rng), rng), rng),
                     tag + " m=" + std::to_string(a) + " n=" + std::to_string(c));
    }
  }
  out.push_back(identity.result(suite, "identity", seed));
  out.push_back(inverse.result(suite, "inverse", seed));
  out.push_back(commut.result(suite, "commutativity", seed));
  out.push_back(assoc.result(suite, "associativity", seed));
  out.push_back(dneg.result(suite, "double_negation", seed));
  out.push_back(symmetric.result(suite, "equal_class_symmetric", seed));
  out.push_back(large_laws.result(suite, "large_model_laws", seed));
  out.push_back(distrib.result(suite, "scalar_distributivity", seed));
}

void oracle_suite(const CurveBundle& b, int trials, std::uint64_t seed, Cases& out) {
  const std::string suite = "oracle";
  if (!cantor_capable(b)) {
    out.push_back({suite, "curve", false, "Cantor oracle needs y^2 = f(x) with p odd", seed});
    return;
  }
  const auto& c = b.curve;
  Rng master(seed);
  const LargeModel m = bundle_model(b, RepTag::A, false, master);
  Tally af_small, af_large, sum_small, sum_large, neg, smul, distinct, homo;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.split();
    const std::string tag = "trial " + std::to_string(t);
    const auto a = random_mumford(c, rng), e = random_mumford(c, rng);
    const auto xs = mumford_to_point(b, m, a, PointSize::Small), ys = mumford_to_point(b, m, e, PointSize::Small);
    const auto xl = mumford_to_point(b, m, a, PointSize::Large), yl = mumford_to_point(b, m, e, PointSize::Large);
    const auto sum = cantor_add(c, a, e);
    const auto minus_sum = cantor_negate(c, sum);
    af_small.record(oracle_compare(b, m, addflip_small(m, xs, ys, rng), minus_sum, rng), tag);
    af_large.record(oracle_compare(b, m, addflip_large(m, xl, yl, rng), minus_sum, rng), tag);
    sum_small.record(oracle_compare(b, m, add(m, xs, ys, rng), sum, rng), tag);
    sum_large.record(oracle_compare(b, m, add(m, xl, yl, rng), sum, rng), tag);
    neg.record(oracle_compare(b, m, negate(m, xs, rng), cantor_negate(c, a), rng) &&
                   oracle_compare(b, m, negate(m, xl, rng), cantor_negate(c, a), rng),
               tag);
    const auto n = static_cast<std::int64_t>(1 + rng.below(50));
    smul.record(oracle_compare(b, m, scalar_mul(m, n, xs, rng), cantor_scalar_mul(c, n, a), rng),
                tag + " n=" + std::to_string(n));
    distinct.record(equal_class(m, xs, ys, rng) == (a == e), tag);
    homo.record(equal_class(m, mumford_to_point(b, m, sum, PointSize::Small), add(m, xs, ys, rng), rng), tag);
  }
  out.push_back(af_small.result(suite, "addflip_small", seed));
  out.push_back(af_large.result(suite, "addflip_large", seed));
  out.push_back(sum_small.result(suite, "add_small", seed));
  out.push_back(sum_large.result(suite, "add_large", seed));
  out.push_back(neg.result(suite, "negate", seed));
  out.push_back(smul.result(suite, "scalar_mul", seed));
  out.push_back(distinct.result(suite, "distinct_classes", seed));
  out.push_back(homo.result(suite, "bridge_homomorphism", seed));
}

void igs_suite(const CurveBundle& b, int trials, std::uint64_t seed, Cases& out) {
  const std::string suite = "igs-stats";
  const IgsStats st = igs_statistics(b, trials, seed);
  std::ostringstream f, r;
  f << st.successes << "/" << st.trials << " = " << st.success_fraction() << " (need >= 0.45)";
  r << st.deflation_attempts << " attempts over " << st.deflations << " deflations = " << st.mean_attempts()
    << " (need <= 2.5)";
  out.push_back({suite, "success_fraction", st.trials > 0 && st.success_fraction() >= 0.45, f.str(), seed});
  out.push_back({suite, "mean_deflation_attempts", st.deflations > 0 && st.mean_attempts() <= 2.5, r.str(), seed});
}

Subspace perturb(const LargeModel& m, const Subspace& w, Rng& rng) {
  const auto& field = m.rep.field();
  for (;;) {
    Matrix rows = w.rows();
    const std::size_t i = rng.below(rows.rows());
    Vec v(m.rep.n(), 0);
    for (std::size_t k = 0; k < m.rep.delta(); ++k) axpy(field, v, m.rep.space_v().vector(k), field.sample(rng));
    std::copy(v.begin(), v.end(), rows.row(i).begin());
    Subspace out = row_span(field, std::move(rows));
    if (out.dim() == w.dim() && !(out == w)) return out;
  }
}

void membership_suite(const CurveBundle& b, int trials, std::uint64_t seed, Cases& out) {
  const std::string suite = "membership";
  Rng master(seed);
  const LargeModel m = bundle_model(b, RepTag::A, true, master);
  Tally genuine, perturbed;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.split();
    const std::string tag = "trial " + std::to_string(t);
    const auto x = random_point(b, m, t % 2 ? PointSize::Large : PointSize::Small, rng);
    genuine.record(membership_test(m.rep, x.space, *m.defl_v, rng), tag);
    perturbed.record(!membership_test(m.rep, perturb(m, x.space, rng), *m.defl_v, rng), tag);
  }
  out.push_back(genuine.result(suite, "genuine_accepted", seed));
  out.push_back(perturbed.result(suite, "perturbed_rejected", seed));
}

void roundtrip_suite(const CurveBundle& b, int trials, std::uint64_t seed, Cases& out) {
  const std::string suite = "roundtrip";
  Rng master(seed);
  const LargeModel m = bundle_model(b, RepTag::A, true, master);
  const auto delta = m.rep.delta();
  const auto Delta = static_cast<std::size_t>(m.rep.degree());
  Tally round, dims, flip_deg, flip2;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.split();
    const std::string tag = "trial " + std::to_string(t);
    const PointSize size = t % 2 ? PointSize::Large : PointSize::Small;
    const auto x = random_point(b, m, size, rng);
    const DivisorFull d = make_divisor(m.rep, x.space);
    const std::size_t expect = size == PointSize::Small ? m.d : 2 * m.d;
    const DivisorFull back = inflate(m.rep, deflate(m.rep, d, rng), *m.defl_v);
    round.record(back.space == d.space, tag);
    const DivisorFull fl = flip(m.rep, d, std::nullopt, rng);
    const DivisorFull fl2 = flip(m.rep, fl, std::nullopt, rng);
    dims.record(d.space.dim() == delta - expect && fl.space.dim() == delta - (Delta - expect) &&
                    fl2.space.dim() == delta - expect,
                tag);
    flip_deg.record(d.degree + fl.degree == Delta && fl.degree + fl2.degree == Delta, tag);
    flip2.record(equal_class(m, {size, fl2.space}, x, rng), tag);
  }
  out.push_back(round.result(suite, "inflate_deflate", seed));
  out.push_back(dims.result(suite, "riemann_roch_dimension", seed));
  out.push_back(flip_deg.result(suite, "flip_degree", seed));
  out.push_back(flip2.result(suite, "double_flip_class", seed));
}

void dual_suite(const CurveBundle& input, int trials, std::uint64_t seed, Cases& out) {
  const std::string suite = "dual";
  CurveBundle b = input;
  Rng master(seed);
  if (!b.rep_b0) gen_rep_b0(b, master);
  const CurveRep rb(*b.rep_b0);
  const auto report = validate_rep(rb);
  out.push_back({suite, "validate_b0", report.ok(), report.ok() ? "ok" : "RepB0 checks failed", seed});

  // Evaluation intertwines the two products.
  const CurveRep ra(b.rep_a);
  Tally eval;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.split();
    Vec s(ra.n()), u(ra.n());
    for (auto& x : s) x = b.field.sample(rng);
    for (auto& x : u) x = b.field.sample(rng);
    const Vec pa = product(ra, s, u);
    const Vec pb = product(rb, a_to_b0(b, std::span<const u64>(s)), a_to_b0(b, std::span<const u64>(u)));
    Vec ev(rb.n(), 0);
    for (std::size_t r = 0; r < rb.n(); ++r) {
      const auto [px, py] = b.rep_b0->points()[r];
      ev[r] = dot(b.field, evaluate_basis(b.field, b.basis_vp, px, py), pa);
    }
    eval.record(ev == pb, "trial " + std::to_string(t));
  }
  out.push_back(eval.result(suite, "evaluation_intertwines_products", seed));

  Rng seed_a(seed ^ 0xa5a5), seed_b(seed ^ 0xa5a5);
  const LargeModel ma = bundle_model(b, RepTag::A, false, seed_a);
  const LargeModel mb = bundle_model(b, RepTag::B0, false, seed_b);
  Tally small, large, chain;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.split();
    const std::string tag = "trial " + std::to_string(t);
    const auto x = random_point(b, ma, PointSize::Small, rng), y = random_point(b, ma, PointSize::Small, rng);
    const JacobianPoint xb{PointSize::Small, a_to_b0(b, x.space)}, yb{PointSize::Small, a_to_b0(b, y.space)};
    const std::uint64_t op_seed = rng.next();
    Rng ra1(op_seed), rb1(op_seed);
    const auto ea = addflip_small(ma, x, y, ra1);
    const auto eb = addflip_small(mb, xb, yb, rb1);
    small.record(equal_class(ma, ea, {PointSize::Small, b0_to_a(b, eb.space)}, rng), tag);

    Rng ra2(op_seed), rb2(op_seed);
    const auto xl = to_large(ma, x, ra2), yl = to_large(ma, y, ra2);
    const auto xlb = to_large(mb, xb, rb2), ylb = to_large(mb, yb, rb2);
    const auto la = addflip_large(ma, xl, yl, ra2);
    const auto lb = addflip_large(mb, xlb, ylb, rb2);
    large.record(equal_class(ma, la, {PointSize::Large, b0_to_a(b, lb.space)}, rng), tag);

    Rng ra3(op_seed), rb3(op_seed);
    const auto ca = add(ma, scalar_mul(ma, 3, x, ra3), negate(ma, y, ra3), ra3);
    const auto cb = add(mb, scalar_mul(mb, 3, xb, rb3), negate(mb, yb, rb3), rb3);
    chain.record(equal_class(ma, ca, {PointSize::Small, b0_to_a(b, cb.space)}, rng), tag);
  }
  out.push_back(small.result(suite, "addflip_small", seed));
  out.push_back(large.result(suite, "addflip_large", seed));
  out.push_back(chain.result(suite, "mixed_chain", seed));
}

}  // namespace

std::vector<CaseResult> run_suite(const CurveBundle& bundle, const std::string& suite, int trials,
                                  std::uint64_t seed) {
  static const std::map<std::string, std::function<void(const CurveBundle&, int, std::uint64_t, Cases&)>> table{
      {"fixture", [](const CurveBundle& b, int, std::uint64_t s, Cases& o) { fixture_suite(b, s, o); }},
      {"axioms", axioms_suite},
      {"oracle", oracle_suite},
      {"igs-stats", igs_suite},
      {"membership", membership_suite},
      {"roundtrip", roundtrip_suite},
      {"dual", dual_suite},
  };
  const auto it = table.find(suite);
  if (it == table.end()) throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
  Cases out;
  try {
    it->second(bundle, trials, seed, out);
  } catch (const std::exception& e) {
    out.push_back({suite, "exception", false, e.what(), seed});
  }
  return out;
}

// ---------------------------------------------------------------------------

ScaleOp scale_op_from_string(const std::string& s) {
  if (s == "addflip-large") return ScaleOp::AddflipLarge;
  if (s == "addflip-small") return ScaleOp::AddflipSmall;
  if (s == "equal") return ScaleOp::Equal;
  if (s == "flip") return ScaleOp::Flip;
  throw Error(Errc::InvalidArgument, "unknown operation '" + s + "'");
}

std::string to_string(ScaleOp op) {
  switch (op) {
    case ScaleOp::AddflipLarge: return "addflip-large";
    case ScaleOp::AddflipSmall: return "addflip-small";
    case ScaleOp::Equal: return "equal";
    case ScaleOp::Flip: return "flip";
  }
  return "?";
}

namespace {

void accumulate(OpStats& into, const OpStats& s) {
  into.echelon_calls += s.echelon_calls;
  into.kernel_calls += s.kernel_calls;
  into.mult_matrices += s.mult_matrices;
  into.sums_of_products += s.sums_of_products;
  into.divisions += s.divisions;
  into.deflations += s.deflations;
  into.deflation_attempts += s.deflation_attempts;
  into.membership_tests += s.membership_tests;
  into.membership_attempts += s.membership_attempts;
  into.igs_v_attempts += s.igs_v_attempts;
}

}  // namespace

std::vector<ScaleRow> run_scale(const std::vector<int>& genus_list, std::uint64_t p, ScaleOp op, int trials,
                                std::uint64_t seed) {
  if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be positive");
  std::vector<ScaleRow> rows;
  for (int g : genus_list) {
    Rng rng(seed + static_cast<std::uint64_t>(g));
    GenOptions opts;
    opts.with_cubic = false;
    const CurveBundle b = gen_hyperelliptic(g, p, rng, opts);
    const LargeModel m = bundle_model(b, RepTag::A, false, rng);
    const PointSize size = op == ScaleOp::AddflipLarge ? PointSize::Large : PointSize::Small;
    std::vector<double> ns;
    ScaleRow row{g, op, 0, trials, {}};
    for (int t = 0; t < trials; ++t) {
      Rng trial = rng.split();
      const auto x = random_point(b, m, size, trial);
      const auto y = random_point(b, m, size, trial);
      take_stats();
      const auto t0 = std::chrono::steady_clock::now();
      switch (op) {
        case ScaleOp::AddflipLarge: (void)addflip_large(m, x, y, trial); break;
        case ScaleOp::AddflipSmall: (void)addflip_small(m, x, y, trial); break;
        case ScaleOp::Equal: (void)equal_class(m, x, y, trial); break;
        case ScaleOp::Flip: (void)flip(m.rep, make_divisor(m.rep, x.space), std::nullopt, trial); break;
      }
      const auto t1 = std::chrono::steady_clock::now();
      accumulate(row.counts, take_stats());
      ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    std::sort(ns.begin(), ns.end());
    const std::size_t n = ns.size();
    row.median_ns = n % 2 ? ns[n / 2] : 0.5 * (ns[n / 2 - 1] + ns[n / 2]);
    rows.push_back(row);
  }
  return rows;
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "x and y lengths differ");
  if (std::set<double>(x.begin(), x.end()).size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string scale_csv(const std::vector<ScaleRow>& rows) {
  std::ostringstream os;
  os << "genus,op,median_ns,trials\n";
  for (const auto& r : rows) os << r.genus << ',' << to_string(r.op) << ',' << static_cast<long long>(r.median_ns) << ',' << r.trials << '\n';
  return os.str();
}

}  // namespace linjac

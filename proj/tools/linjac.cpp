// Command-line driver: generate curve bundles, run verification suites and
// measure how group operations scale with the genus.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linjac/bench.hpp"
#include "linjac/error.hpp"

using namespace linjac;

namespace {

int cmd_gen(int genus, std::uint64_t prime, std::uint64_t seed, const std::string& rep, const std::string& path,
            bool fixture, bool no_cubic) {
  Rng rng(seed);
  CurveBundle b = [&] {
    if (fixture) return gen_paper_fixture(prime);
    GenOptions opts;
    opts.with_cubic = !no_cubic;
    return gen_hyperelliptic(genus, prime, rng, opts);
  }();
  b.preferred = rep_tag_from_string(rep);
  if (b.preferred == RepTag::B0) gen_rep_b0(b, rng);
  save_bundle(b, path);
  std::cerr << "wrote " << path << ": g=" << b.curve.genus << " p=" << prime << " Delta=" << b.Delta
            << " delta=" << b.rep_a.delta() << " delta'=" << b.rep_a.delta_prime()
            << (b.precomp ? " d=" + std::to_string(b.precomp->d) : std::string()) << " rep=" << rep << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& suites, int trials, std::uint64_t seed) {
  const CurveBundle b = load_bundle(path);
  std::vector<CaseResult> all;
  for (const auto& s : suites) {
    for (auto& r : run_suite(b, s, trials, seed)) {
      std::cout << to_json_line(r) << "\n";
      all.push_back(std::move(r));
    }
  }
  std::cout.flush();
  bool ok = true;
  std::cerr << "curve g=" << b.curve.genus << " p=" << b.field.modulus() << " Delta=" << b.Delta
            << " rep=" << to_string(b.preferred) << " seed=" << seed << "\n";
  std::cerr << std::left << std::setw(12) << "suite" << std::setw(34) << "case" << std::setw(6) << "pass"
            << "details\n";
  for (const auto& r : all) {
    ok = ok && r.pass;
    std::cerr << std::left << std::setw(12) << r.suite << std::setw(34) << r.name << std::setw(6)
              << (r.pass ? "ok" : "FAIL") << r.details << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_scale(const std::vector<int>& genus, std::uint64_t prime, const std::string& op, int trials,
              std::uint64_t seed, const std::string& csv) {
  const auto rows = run_scale(genus, prime, scale_op_from_string(op), trials, seed);
  const std::string text = scale_csv(rows);
  if (csv.empty()) {
    std::cout << text;
  } else {
    std::ofstream(csv) << text;
  }
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    xs.push_back(r.genus);
    ys.push_back(r.median_ns);
    std::cerr << "g=" << r.genus << " median " << r.median_ns / 1e6 << " ms, divisions " << r.counts.divisions
              << ", deflation attempts " << r.counts.deflation_attempts << "/" << r.counts.deflations << "\n";
  }
  const auto slope = loglog_slope(xs, ys);
  std::ostringstream s;
  if (slope) {
    s << std::fixed << std::setprecision(3) << *slope;
  } else {
    s << "n/a";
  }
  std::cerr << "log-log slope: " << s.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian arithmetic on curves by linear algebra over prime fields"};
  app.require_subcommand(1);

  int genus = 2;
  std::uint64_t prime = 1009, seed = 1;
  std::string rep = "a", out = "curve.json";
  bool fixture = false, no_cubic = false;
  auto* gen = app.add_subcommand("gen", "generate a curve bundle");
  gen->add_option("--genus", genus, "genus")->check(CLI::PositiveNumber);
  gen->add_option("--prime", prime, "field characteristic");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--rep", rep, "representation")->check(CLI::IsMember({"a", "b0"}));
  gen->add_option("--out", out, "output path");
  gen->add_flag("--fixture", fixture, "the elliptic curve y^2 = x^3 + 1 with Delta = 4");
  gen->add_flag("--no-cubic", no_cubic, "skip the cubic tables (no membership test or inflation)");

  std::string bundle;
  std::vector<std::string> suites;
  int trials = 100;
  auto* verify = app.add_subcommand("verify", "run verification suites on a bundle");
  verify->add_option("--bundle", bundle, "bundle path")->required();
  verify->add_option("--suite", suites, "suites to run")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", trials, "trials per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  std::vector<int> genus_list{5, 10, 20, 40};
  std::string op = "addflip-large", csv;
  int scale_trials = 5;
  auto* scale = app.add_subcommand("scale", "time an operation across genera");
  scale->add_option("--genus-list", genus_list, "genera")->delimiter(',');
  scale->add_option("--prime", prime, "field characteristic");
  scale->add_option("--op", op, "operation")->check(CLI::IsMember({"addflip-large", "addflip-small", "equal", "flip"}));
  scale->add_option("--trials", scale_trials, "trials per genus")->check(CLI::PositiveNumber);
  scale->add_option("--seed", seed, "random seed");
  scale->add_option("--out-csv", csv, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(genus, prime, seed, rep, out, fixture, no_cubic);
    if (*verify) return cmd_verify(bundle, suites, trials, seed);
    if (*scale) return cmd_scale(genus_list, prime, op, scale_trials, seed, csv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

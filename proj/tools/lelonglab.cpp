#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lelong/error.hpp"
#include "lelong/io.hpp"
#include "lelong/lelong.hpp"
#include "lelong/mass.hpp"
#include "lelong/svg.hpp"
#include "lelong/theorems.hpp"

namespace fs = std::filesystem;
using namespace lelong;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kInputError = 2, kNumericFailure = 3 };

struct RunConfig {
  std::string input;
  std::string out = ".";
  QuadratureConfig quad;
  Schedule schedule;
  double r = 1.0;
  long k0 = 0;
  std::uint64_t seed = 42;
  std::optional<std::string> case_id;
  double tol_scale = 1.0;
  int loops = 0;
  std::size_t atom = 0;
  std::string lambdas = "1,1/2,-1";
  std::string families = "single,family,b0";
};

std::string out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  return (fs::path(cfg.out) / name).string();
}

// Closed form when one applies, else nullopt.
std::optional<double> closed_form(const Current& c, double r) {
  try {
    if (c.lambda().positive()) return mass_closed_form_positive_periodic(c, r);
    return mass_closed_form_negative_periodic(c, r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedCurrent) return std::nullopt;
    throw;
  }
}

int cmd_mass(const RunConfig& cfg) {
  const Current c = load_current(cfg.input);
  const MassResult m = mass_quadrature(c, cfg.r, cfg.k0, cfg.quad);
  Json j = to_json(m);
  j["k0"] = cfg.k0;
  if (const auto cf = closed_form(c, cfg.r)) {
    j["closed_form"] = *cf;
    j["discrepancy"] = *cf != 0.0 ? std::abs(m.value - *cf) / std::abs(*cf) : std::abs(m.value);
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_lelong(const RunConfig& cfg) {
  const Current c = load_current(cfg.input);
  const LelongEstimate est = lelong_estimate(c, cfg.schedule, cfg.quad, cfg.k0);
  write_file(out_path(cfg, "schedule.csv"), schedule_csv(est));
  std::cout << to_json(est).dump(2) << '\n';
  std::cerr << "limit bracket [" << format_number(est.limit_bracket.first) << ", "
            << format_number(est.limit_bracket.second) << "]\n";
  return kOk;
}

void print_table(const std::vector<VerificationReport>& reports) {
  std::printf("%-26s %10s  %-16s %-8s observed\n", "case", "lambda", "claim", "verdict");
  for (const auto& r : reports) {
    std::string obs;
    for (double x : r.observed) obs += (obs.empty() ? "" : " ") + format_number(x);
    std::printf("%-26s %10.6f  %-16s %-8s [%s]\n", r.case_id.c_str(), r.lambda, claim_name(r.claim),
                verdict_name(r.verdict), obs.c_str());
  }
}

int cmd_verify(const RunConfig& cfg) {
  SuiteConfig sc;
  sc.quad = cfg.quad;
  sc.schedule = cfg.schedule;
  sc.tol_scale = cfg.tol_scale;
  const auto reports = run_corpus(cfg.seed, sc, cfg.case_id);
  print_table(reports);
  std::cout << to_json(reports).dump(2) << '\n';
  return all_pass(reports) ? kOk : kVerifyFail;
}

int cmd_leafplot(const RunConfig& cfg) {
  const Current c = load_current(cfg.input);
  if (cfg.atom >= c.atoms().size()) throw Error(ErrorKind::Input, "--atom: index out of range");
  const Eigenvalue& l = c.lambda();
  int loops = cfg.loops;
  if (loops <= 0) loops = l.has_fraction() ? static_cast<int>(l.denominator()) : 20;
  const double r = cfg.r < 1.0 ? cfg.r : 0.5;
  write_file(out_path(cfg, "torus.svg"), torus_svg(l, c.atoms()[cfg.atom].alpha, r, loops));
  const LelongEstimate est = lelong_estimate(c, cfg.schedule, cfg.quad, cfg.k0);
  write_file(out_path(cfg, "schedule.svg"), schedule_svg(est));
  return kOk;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

template <class T>
T parse_token(const std::string& s, const std::string& what) {
  T x{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error(ErrorKind::Input, what + ": cannot parse '" + s + "'");
  return x;
}

// "a/b" and integers are exact fractions; a plain decimal is declared irrational (or negative).
Eigenvalue parse_lambda(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const long a = parse_token<long>(s.substr(0, slash), "--lambdas");
    const long b = parse_token<long>(s.substr(slash + 1), "--lambdas");
    return a < 0 ? Eigenvalue::negative_rational(-a, b) : Eigenvalue::rational(a, b);
  }
  long whole = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), whole);
  if (res.ec == std::errc() && res.ptr == s.data() + s.size())
    return whole < 0 ? Eigenvalue::negative_rational(-whole, 1) : Eigenvalue::rational(whole, 1);
  const double v = parse_token<double>(s, "--lambdas");
  return v < 0.0 ? Eigenvalue::negative(v) : Eigenvalue::irrational(v);
}

Current sweep_current(const Eigenvalue& l, const std::string& family) {
  if (!l.positive()) {
    if (family == "single") {
      const double m = std::exp(-1.0);
      return build_current(l, {{m, 1.0, strip_spec_for(l, m, 1.0, 0.0)}});
    }
    if (family == "family") return build_current(l, accumulation_family(l, 4.0, 2.0, 24));
    if (family == "b0") return build_current(l, accumulation_family(l, 4.0, 2.0, 24, 0.5));
  } else {
    FourierSpec f;
    f.a0 = 1.0;
    if (family == "single") return build_current(l, {{0.5, 1.0, HarmonicSpec::fourier(f)}});
    if (family == "family") {
      std::vector<TransversalAtom> atoms;
      for (int j = 1; j <= 8; ++j) atoms.push_back({std::pow(4.0, -j), std::pow(2.0, -j), HarmonicSpec::fourier(f)});
      return build_current(l, std::move(atoms));
    }
    if (family == "b0") {
      f.b0 = 0.5;
      return build_current(l, {{0.5, 1.0, HarmonicSpec::fourier(f)}});
    }
  }
  throw Error(ErrorKind::Input, "--families: unknown family '" + family + "'");
}

int cmd_sweep(const RunConfig& cfg) {
  std::string csv = "lambda,family,limit_estimate,lower,upper,monotone_ok,slope,r_squared,diverging\n";
  int row = 0;
  for (const auto& ls : split(cfg.lambdas)) {
    const Eigenvalue l = parse_lambda(ls);
    for (const auto& fam : split(cfg.families)) {
      const Current c = sweep_current(l, fam);
      write_file(out_path(cfg, "sweep-" + std::to_string(row++) + ".json"), to_json(c).dump(2) + "\n");
      const LelongEstimate e = lelong_estimate(c, cfg.schedule, cfg.quad, cfg.k0);
      csv += ls + ',' + fam + ',' + format_number(e.limit_estimate) + ',' + format_number(e.limit_bracket.first) +
             ',' + format_number(e.limit_bracket.second) + ',' + (e.monotone_ok ? "1" : "0") + ',' +
             format_number(e.fit.slope) + ',' + format_number(e.fit.r_squared) + ',' + (e.diverging ? "1" : "0") +
             '\n';
    }
  }
  write_file(out_path(cfg, "sweep.csv"), csv);
  std::cout << csv;
  return kOk;
}

void add_quadrature(CLI::App* app, RunConfig& cfg) {
  app->add_option("--rel-tol", cfg.quad.rel_tol, "relative quadrature tolerance");
  app->add_option("--abs-tol", cfg.quad.abs_tol, "absolute quadrature tolerance");
}

void add_schedule(CLI::App* app, RunConfig& cfg) {
  app->add_option("--r-start", cfg.schedule.r_start, "first radius");
  app->add_option("--ratio", cfg.schedule.ratio, "radius ratio between steps");
  app->add_option("--steps", cfg.schedule.steps, "number of radii");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lelong numbers of directed harmonic currents near a linear foliation singularity"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* mass = app.add_subcommand("mass", "mass of the current in the disc of radius r");
  mass->add_option("--input", cfg.input, "current JSON")->required();
  mass->add_option("--r", cfg.r, "radius");
  mass->add_option("--k0", cfg.k0, "sheet index of the u-window");
  add_quadrature(mass, cfg);

  auto* lel = app.add_subcommand("lelong", "normalized mass along a radius schedule");
  lel->add_option("--input", cfg.input, "current JSON")->required();
  lel->add_option("--out", cfg.out, "output directory for schedule.csv");
  lel->add_option("--k0", cfg.k0, "sheet index of the u-window");
  add_schedule(lel, cfg);
  add_quadrature(lel, cfg);

  auto* ver = app.add_subcommand("verify", "run the verification corpus");
  ver->add_option("--seed", cfg.seed, "corpus seed");
  ver->add_option("--case", cfg.case_id, "run a single case id");
  ver->add_option("--tol-scale", cfg.tol_scale, "multiplier for verdict tolerances")->check(CLI::NonNegativeNumber);
  add_schedule(ver, cfg);
  add_quadrature(ver, cfg);

  auto* plot = app.add_subcommand("leafplot", "torus curve and schedule SVGs");
  plot->add_option("--input", cfg.input, "current JSON")->required();
  plot->add_option("--out", cfg.out, "output directory");
  plot->add_option("--r", cfg.r, "radius of the torus |z| = r");
  plot->add_option("--loops", cfg.loops, "number of loops (default b, or 20 for irrational)");
  plot->add_option("--atom", cfg.atom, "atom index");
  plot->add_option("--k0", cfg.k0, "sheet index of the u-window");
  add_schedule(plot, cfg);
  add_quadrature(plot, cfg);

  auto* sweep = app.add_subcommand("sweep", "limit estimates over a lambda x family grid");
  sweep->add_option("--lambdas", cfg.lambdas, "comma list; a/b is exact, decimals are irrational");
  sweep->add_option("--families", cfg.families, "comma list of single, family, b0");
  sweep->add_option("--out", cfg.out, "output directory");
  sweep->add_option("--k0", cfg.k0, "sheet index of the u-window");
  add_schedule(sweep, cfg);
  add_quadrature(sweep, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    validate(cfg.quad);
    validate(cfg.schedule);
    if (*mass) return cmd_mass(cfg);
    if (*lel) return cmd_lelong(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*plot) return cmd_leafplot(cfg);
    return cmd_sweep(cfg);
  } catch (const QuadratureFailure& e) {
    std::cerr << "numerical failure: " << e.what() << " (best " << format_number(e.best_estimate()) << ", error "
              << format_number(e.error_estimate()) << ")\n";
    return kNumericFailure;
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << " error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

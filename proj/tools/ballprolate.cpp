// ballprolate: eigenvalue tables, profile samples and verification reports.
//
// Exit codes: 0 ok, 1 bad configuration, 2 solver failure, 3 a gating
// verification report failed.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "verify_suite.hpp"

namespace {

using namespace bpswf;

struct RunConfig {
  int d = 2;
  double c = 1.0;
  int m = 0;
  int k = 0;
  int kmax = 5;
  int N = -1;
  int Nmax = 16;
  double delta = 0.5;
  double tol = 1e-6;
  int trunc = 0;
  int grid = 11;
  std::string format = "csv";
  std::string out;
  unsigned seed = 1234;
  bool quick = false;
  std::string family = "all";
  // which of d/c/m were given explicitly
  bool has_d = false, has_c = false, has_m = false;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void check_common(const RunConfig& cfg) {
  if (cfg.d < 1 || cfg.d > 3) throw ConfigError("--d must be in [1,3] for this command");
  if (!(cfg.c > 0.0) || cfg.c > 20.0) throw ConfigError("--c must be in (0, 20]");
  if (cfg.m < 0) throw ConfigError("--m must be >= 0");
  if (harmonic_dim(cfg.d, cfg.m) == 0) throw ConfigError("--m: d = 1 only has m in {0, 1}");
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("--format must be csv or json");
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open --out file " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_eigs(const RunConfig& cfg) {
  check_common(cfg);
  if (cfg.kmax < 0) throw ConfigError("--kmax must be >= 0");
  const auto ps = solve_prolate_range({cfg.d, cfg.c, cfg.m}, cfg.kmax, cfg.trunc);
  Sink sink(cfg.out);
  auto& os = sink.os();
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back({{"prolate", p}, {"spectral", hankel_eigenvalue(p)}});
    os << arr.dump(1) << '\n';
    return 0;
  }
  os << "m,k,chi,alpha,mu_modulus,nu_Q,commutation_residual,trunc\n";
  for (const auto& p : ps) {
    const auto s = hankel_eigenvalue(p);
    os << cfg.m << ',' << p.k << ',' << csv_real(p.chi) << ',' << csv_real(s.alpha_H) << ','
       << csv_real(s.mu_modulus) << ',' << csv_real(s.nu_Q) << ',' << csv_real(s.commutation_residual) << ','
       << p.trunc << '\n';
  }
  return 0;
}

int cmd_eval(const RunConfig& cfg) {
  check_common(cfg);
  if (cfg.k < 0) throw ConfigError("--k must be >= 0");
  if (cfg.grid < 2) throw ConfigError("--grid must be >= 2");
  const auto p = solve_prolate({cfg.d, cfg.c, cfg.m}, cfg.k, cfg.trunc);
  Sink sink(cfg.out);
  auto& os = sink.os();
  std::vector<double> rs, vs;
  for (int i = 0; i < cfg.grid; ++i) {
    const double r = static_cast<double>(i) / (cfg.grid - 1);
    rs.push_back(r);
    vs.push_back(prolate_eval_radial(p, r));
  }
  if (cfg.format == "json") {
    os << nlohmann::json{{"prolate", p}, {"r", rs}, {"radial", vs}}.dump(1) << '\n';
    return 0;
  }
  os << "r,radial\n";
  for (std::size_t i = 0; i < rs.size(); ++i) os << csv_real(rs[i]) << ',' << csv_real(vs[i]) << '\n';
  return 0;
}

// Families that accept a single (d, c[, m]) point instead of their default grid.
std::optional<suite::Reports> targeted(const RunConfig& cfg) {
  if (!(cfg.has_d && cfg.has_c)) return std::nullopt;
  check_common(cfg);
  const std::string& f = cfg.family;
  if (f == "trace") return suite::Reports{trace_check(build_spectrum(cfg.d, cfg.c, cfg.tol))};
  if (f == "hs") return hs_check(build_spectrum(cfg.d, cfg.c, cfg.tol));
  if (f == "counting") return counting_check(build_spectrum(cfg.d, cfg.c, cfg.tol), cfg.delta);
  if (f == "decay") return decay_bounds_check(cfg.d, cfg.m, cfg.c, std::max(1, cfg.k), std::max(cfg.kmax, cfg.k + 1));
  if (f == "supnorm") return supnorm_bounds_check(cfg.d, cfg.m, cfg.c, cfg.k, std::max(cfg.kmax, cfg.k));
  if (f == "coeffs") {
    suite::Reports out;
    for (const auto& p : solve_prolate_range({cfg.d, cfg.c, cfg.m}, cfg.kmax))
      suite::append(out, coeff_decay_report(p, hankel_eigenvalue(p)));
    return out;
  }
  if (f == "theorem-b" || f == "theorem-c") {
    const auto g = make_gaussian_test(cfg.d, cfg.m, 1, 1.0);
    suite::Reports out;
    const int lo = cfg.N >= 0 ? cfg.N : 0;
    for (int n = lo; n <= std::max(lo, cfg.Nmax); ++n) {
      if (f == "theorem-b") {
        const auto p = project_prolate(g, cfg.c, n);
        out.push_back(suite::from_projection("theorem_b", p, std::max(p.rhs_sec4, p.rhs_intro), p.condition_met));
      } else {
        const auto p = project_ballpoly(g, cfg.c, n);
        out.push_back(suite::from_projection("theorem_c", p, p.rhs_sec4, p.condition_met));
        out.push_back(ballpoly_lemma_sum_report(p));
      }
    }
    return out;
  }
  return std::nullopt;
}

int cmd_verify(const RunConfig& cfg) {
  const auto fams = suite::families(cfg.seed);
  bool known = cfg.family == "all";
  for (const auto& f : fams) known = known || f.name == cfg.family;
  if (!known) throw ConfigError("unknown verify family '" + cfg.family + "'");
  if (cfg.format != "csv") throw ConfigError("verify writes csv only");

  Sink sink(cfg.out);
  bool header = true;
  long pass = 0, fail = 0, skipped = 0, advisory = 0;
  auto emit = [&](const std::string& family, const suite::Reports& rs, double secs) {
    write_report_csv(sink.os(), rs, header);
    header = false;
    long f_fail = 0;
    for (const auto& r : rs) {
      if (!r.condition_met) ++skipped;
      else if (!suite::gating(r)) ++advisory;
      else if (r.pass) ++pass;
      else { ++fail; ++f_fail; }
    }
    std::fprintf(stderr, "%-14s %5zu reports  %s  (%.2f s)\n", family.c_str(), rs.size(),
                 f_fail ? "FAIL" : "ok", secs);
  };

  if (auto t = targeted(cfg)) {
    emit(cfg.family, *t, 0.0);
  } else {
    for (const auto& f : fams) {
      if (cfg.family != "all" && f.name != cfg.family) continue;
      const auto t0 = std::chrono::steady_clock::now();
      const auto rs = f.run(cfg.quick);
      emit(f.name, rs, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
  }
  std::fprintf(stderr, "summary: pass=%ld fail=%ld skipped=%ld advisory=%ld\n", pass, fail, skipped, advisory);
  return fail ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ball prolate spheroidal wave functions: spectra, samples and bound verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    auto* d = sub->add_option("--d", cfg.d, "dimension");
    auto* c = sub->add_option("--c", cfg.c, "bandwidth");
    auto* m = sub->add_option("--m", cfg.m, "harmonic degree");
    d->each([&](const std::string&) { cfg.has_d = true; });
    c->each([&](const std::string&) { cfg.has_c = true; });
    m->each([&](const std::string&) { cfg.has_m = true; });
    sub->add_option("--k", cfg.k, "radial index");
    sub->add_option("--kmax", cfg.kmax, "largest radial index");
    sub->add_option("--N", cfg.N, "projection order (first)");
    sub->add_option("--Nmax", cfg.Nmax, "projection order (last)");
    sub->add_option("--delta", cfg.delta, "counting threshold");
    sub->add_option("--tol", cfg.tol, "spectrum tail tolerance");
    sub->add_option("--trunc", cfg.trunc, "initial truncation K (0 = automatic)");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--seed", cfg.seed, "seed for randomized sample points");
    sub->add_flag("--quick", cfg.quick, "acceptance-sized grids");
  };

  auto* eigs = app.add_subcommand("eigs", "chi, Hankel and concentration eigenvalues for k = 0..kmax");
  add_common(eigs);
  auto* eval = app.add_subcommand("eval", "radial profile r^m phi_k(2r^2-1) on a uniform r grid");
  add_common(eval);
  eval->add_option("--grid", cfg.grid, "number of r samples");
  auto* verify = app.add_subcommand("verify", "run verification report families");
  add_common(verify);
  verify->add_option("family", cfg.family,
                     "degeneration|sandwich|galerkin|commutation|trace|hs|counting|decay|supnorm|coeffs|"
                     "identities|fourier-image|theorem-b|theorem-c|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*eigs) return cmd_eigs(cfg);
    if (*eval) return cmd_eval(cfg);
    return cmd_verify(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return 2;
  }
}

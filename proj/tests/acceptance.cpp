// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to ballprolate binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "verify_suite.hpp"

namespace {

using namespace bpswf;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::vector<std::string> families;
};

void show_failures(const suite::Reports& rs) {
  int shown = 0;
  for (const auto& r : rs) {
    if (!suite::gating(r) || r.pass) continue;
    if (shown++ == 4) {
      std::printf("      ...\n");
      break;
    }
    std::printf("      %s d=%d c=%g m=%d k=%d lhs=%.6g rhs=%.6g %s\n", r.name.c_str(), r.d, r.c, r.m, r.k, r.lhs,
                r.rhs, r.note.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <ballprolate binary>\n");
    return 2;
  }
  const std::string cli = argv[1];
  const auto fams = suite::families(1234);
  std::map<std::string, std::function<suite::Reports(bool)>> by_name;
  for (const auto& f : fams) by_name[f.name] = f.run;

  const std::vector<Criterion> criteria{
      {1, "c -> 0 degeneration", 10, {"degeneration"}},
      {2, "chi sandwich", 30, {"sandwich"}},
      {3, "Galerkin matrix oracle", 5, {"galerkin"}},
      {4, "Hankel commutation", 60, {"commutation"}},
      {5, "trace identity", 300, {"trace"}},
      {6, "Hilbert-Schmidt identity and Landau brackets", 300, {"hs"}},
      {7, "counting leading order", 600, {"counting"}},
      {8, "eigenvalue decay bounds", 30, {"decay"}},
      {9, "sup-norm machinery", 60, {"supnorm"}},
      {10, "coefficient decay", 30, {"coeffs"}},
      {11, "identity suite", 120, {"identities", "fourier-image"}},
      {12, "projection theorems and coefficient lemma", 300, {"theorem-b", "theorem-c"}},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    suite::Reports rs;
    std::string err;
    try {
      for (const auto& f : c.families) suite::append(rs, by_name.at(f)(true));
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    long checked = 0, bad = 0;
    for (const auto& r : rs)
      if (suite::gating(r) && r.condition_met) {
        ++checked;
        if (!r.pass) ++bad;
      }
    const bool ok = err.empty() && bad == 0 && checked > 0 && secs < c.limit_s;
    failed += !ok;
    std::printf("criterion %2d %s  %-46s %6ld checked %4ld failed  %8.2f s (limit %g s)\n", c.id, ok ? "PASS" : "FAIL",
                c.title.c_str(), checked, bad, secs, c.limit_s);
    if (!err.empty()) std::printf("      exception: %s\n", err.c_str());
    if (bad) show_failures(rs);
  }

  {
    const auto t0 = Clock::now();
    const std::string cmd = cli + " verify all --quick > /dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    const bool ok = code == 0 && secs < 1200.0;
    failed += !ok;
    std::printf("criterion 13 %s  %-46s exit code %d  %8.2f s (limit 1200 s)\n", ok ? "PASS" : "FAIL",
                "verify all --quick", code, secs);
  }

  std::printf("%d of 13 criteria failed\n", failed);
  return failed ? 1 : 0;
}

#ifndef BALLPROLATE_REPORT_HPP
#define BALLPROLATE_REPORT_HPP

#include <cmath>
#include <string>
#include <vector>

namespace bpswf {

/// One verified inequality, always written in the form lhs <= rhs.
///
/// `condition_met` says whether the hypothesis of the inequality holds for the
/// given parameters; reports with condition_met == false are recorded but
/// never evaluated as failures.
struct BoundReport {
  std::string name;
  int d = 0;
  double c = 0.0;
  int m = -1;
  int k = -1;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool condition_met = true;
  bool pass = true;
  std::string note;
};

inline constexpr double kReportRelTol = 1e-12;

inline BoundReport make_report(std::string name, double lhs, double rhs,
                               bool condition_met = true) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.condition_met = condition_met;
  r.pass = !condition_met ||
           (std::isfinite(lhs) && std::isfinite(rhs) &&
            r.slack >= -kReportRelTol * std::abs(rhs));
  return r;
}

inline BoundReport& with_params(BoundReport& r, int d, double c, int m, int k) {
  r.d = d;
  r.c = c;
  r.m = m;
  r.k = k;
  return r;
}

inline bool all_pass(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace bpswf

#endif  // BALLPROLATE_REPORT_HPP

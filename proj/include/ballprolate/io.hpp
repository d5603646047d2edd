#ifndef BALLPROLATE_IO_HPP
#define BALLPROLATE_IO_HPP

// CSV rows for reports and JSON for solved prolates. CSV reals use %.17g so
// that a re-read gives back the same doubles.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "approx.hpp"
#include "prolate.hpp"
#include "report.hpp"

namespace bpswf {

inline std::string csv_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline void write_report_csv(std::ostream& os, const std::vector<BoundReport>& rs, bool header = true) {
  if (header) os << "name,d,c,m,k,lhs,rhs,slack,condition_met,pass,note\n";
  for (const auto& r : rs)
    os << csv_field(r.name) << ',' << r.d << ',' << csv_real(r.c) << ',' << r.m << ',' << r.k << ','
       << csv_real(r.lhs) << ',' << csv_real(r.rhs) << ',' << csv_real(r.slack) << ',' << int(r.condition_met)
       << ',' << int(r.pass) << ',' << csv_field(r.note) << '\n';
}

inline void write_projection_csv(std::ostream& os, const std::vector<ProjectionReport>& rs, bool header = true) {
  if (header) os << "kind,d,m,c,N,error,rhs_sec4,rhs_intro,eps_term,spectral_term,condition_met,pass\n";
  for (const auto& r : rs)
    os << r.kind << ',' << r.d << ',' << r.m << ',' << csv_real(r.c) << ',' << r.N << ',' << csv_real(r.error) << ','
       << csv_real(r.rhs_sec4) << ',' << csv_real(r.rhs_intro) << ',' << csv_real(r.eps_term) << ','
       << csv_real(r.spectral_term) << ',' << int(r.condition_met) << ',' << int(r.pass) << '\n';
}

// nlohmann writes doubles in shortest round-trip form, so parsing is lossless.

inline void to_json(nlohmann::json& j, const ProblemParams& p) { j = {{"d", p.d}, {"c", p.c}, {"m", p.m}}; }

inline void from_json(const nlohmann::json& j, ProblemParams& p) {
  j.at("d").get_to(p.d);
  j.at("c").get_to(p.c);
  j.at("m").get_to(p.m);
}

inline void to_json(nlohmann::json& j, const RadialProlate& p) {
  j = {{"params", p.params}, {"k", p.k},         {"chi", p.chi},
       {"theta", p.theta},   {"coeffs", p.coeffs}, {"trunc", p.trunc},
       {"tail_bound", p.tail_bound}};
}

inline void from_json(const nlohmann::json& j, RadialProlate& p) {
  j.at("params").get_to(p.params);
  j.at("k").get_to(p.k);
  j.at("chi").get_to(p.chi);
  j.at("theta").get_to(p.theta);
  j.at("coeffs").get_to(p.coeffs);
  j.at("trunc").get_to(p.trunc);
  j.at("tail_bound").get_to(p.tail_bound);
  p.params.validate();
  if (p.coeffs.size() != static_cast<std::size_t>(p.trunc))
    throw std::invalid_argument("RadialProlate json: coeffs length differs from trunc");
}

inline void to_json(nlohmann::json& j, const SpectralEigenvalues& s) {
  j = {{"alpha_H", s.alpha_H},   {"alpha_rayleigh", s.alpha_rayleigh},
       {"mu_modulus", s.mu_modulus}, {"nu_Q", s.nu_Q},
       {"commutation_residual", s.commutation_residual}, {"flagged", s.flagged}};
}

inline void from_json(const nlohmann::json& j, SpectralEigenvalues& s) {
  j.at("alpha_H").get_to(s.alpha_H);
  j.at("alpha_rayleigh").get_to(s.alpha_rayleigh);
  j.at("mu_modulus").get_to(s.mu_modulus);
  j.at("nu_Q").get_to(s.nu_Q);
  j.at("commutation_residual").get_to(s.commutation_residual);
  j.at("flagged").get_to(s.flagged);
}

}  // namespace bpswf

#endif  // BALLPROLATE_IO_HPP

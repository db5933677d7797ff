// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "apv/classical.hpp"
#include "apv/cos_example.hpp"
#include "apv/principal_value.hpp"
#include "apv/spf.hpp"
#include "support/corpus.hpp"
#include "support/properties.hpp"

namespace {

using namespace apv;
using apv::testing::corpus;

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& check) {
  Verdict line;
  try {
    line = check();
  } catch (const std::exception& e) {
    line = {false, std::string("exception: ") + e.what()};
  }
  if (!line.pass) ++failures;
  std::printf("[%s] %2d %-28s %s\n", line.pass ? "PASS" : "FAIL", id, title, line.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* spec, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, spec, a, b, c);
  return buf;
}

IntegralSpec cos_spec(int n) {
  return IntegralSpec(parse("cos(z)"), AnalyticityDecl::entire_function(), -1.0, 1.0, 0.0, n);
}

double apv_of(const IntegralSpec& spec, double eps, const QuadConfig& cfg = {}) {
  return apv_average(spec, semicircle_path(spec, eps, Side::above),
                     semicircle_path(spec, eps, Side::below), cfg)
      .value;
}

double apv_default(const IntegralSpec& spec, const QuadConfig& cfg = {}) {
  return apv_average(spec, default_path(spec, Side::above), default_path(spec, Side::below), cfg).value;
}

}  // namespace

int main() {
  const QuadConfig cfg;

  report(1, "golden value n=1", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const double v = apv_default(cos_spec(1), cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double err = std::abs(v - cos_fpi_n1());
    return Verdict{err <= 1e-9 && secs < 1.0,
                fmt("APV %.15f, |err| %.2e (tol 1e-9), %.3f s (limit 1 s)", v, err, secs)};
  });

  report(2, "golden value n=3", [&] {
    const double v = apv_default(cos_spec(3), cfg);
    const double err = std::abs(v - cos_fpi_n3());
    return Verdict{err <= 1e-9, fmt("APV %.15f, |err| %.2e (tol 1e-9)", v, err)};
  });

  report(3, "vanishing even cases", [&] {
    double worst = 0.0;
    for (int n : {0, 2, 4, 6}) worst = std::max(worst, std::abs(apv_default(cos_spec(n), cfg)));
    return Verdict{worst <= 1e-10, fmt("max |APV| over n=0,2,4,6: %.2e (tol 1e-10)", worst)};
  });

  report(4, "route equivalence", [&] {
    double worst = 0.0;
    for (const auto& c : corpus()) {
      const IntegralSpec s = c.spec();
      const auto up = default_path(s, Side::above), down = default_path(s, Side::below);
      const double avg = apv_average(s, up, down, cfg).value;
      worst = std::max({worst, std::abs(avg - apv_upper(s, up, cfg).value),
                        std::abs(avg - apv_lower(s, down, cfg).value)});
    }
    return Verdict{worst <= 1e-8, fmt("%.0f specs, max |avg-upper|,|avg-lower| %.2e (tol 1e-8)",
                                   static_cast<double>(corpus().size()), worst)};
  });

  report(5, "jump relation", [&] {
    double worst = 0.0;
    for (const auto& c : corpus()) {
      const IntegralSpec s = c.spec();
      worst = std::max(worst, jump_relation_check(s, default_path(s, Side::above),
                                                  default_path(s, Side::below), cfg)
                                  .abs_diff);
    }
    return Verdict{worst <= 1e-8, fmt("max |(Int- - Int+) - 2 pi i c_n| %.2e (tol 1e-8)", worst)};
  });

  report(6, "path independence", [&] {
    double worst = 0.0;
    for (const auto& c : corpus()) {
      const IntegralSpec s = c.spec();
      std::vector<double> v;
      for (double eps : {0.05, 0.1, 0.25}) v.push_back(apv_of(s, eps, cfg));
      const double r = 0.9 * s.pole_gap();
      v.push_back(apv_average(s, semicircle_bulge_path(s, r, Side::above),
                              semicircle_bulge_path(s, r, Side::below), cfg)
                      .value);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, std::abs(v[i] - v[j]));
    }
    return Verdict{worst <= 1e-8,
                fmt("eps 0.05/0.1/0.25 and bulge, max pairwise diff %.2e (tol 1e-8)", worst)};
  });

  report(7, "oracle triangle", [&] {
    double worst = 0.0;
    int count = 0;
    for (const auto& c : corpus()) {
      if (!c.entire()) continue;
      ++count;
      const IntegralSpec s = c.spec();
      const double apv = apv_default(s, cfg);
      const double fox = fox_limit(s, EpsSchedule::defaults(s), cfg).value;
      const TaylorCoeffs t = taylor_from_expr(s, default_taylor_terms, cfg);
      const double ser = series_value(t, s, default_taylor_terms).value;
      worst = std::max({worst, std::abs(apv - fox), std::abs(apv - ser), std::abs(fox - ser)});
    }
    return Verdict{worst <= 1e-6, fmt("%.0f entire specs, max pairwise APV/fox/series %.2e (tol 1e-6)",
                                   count, worst)};
  });

  report(8, "boundary-value identities", [&] {
    double worst_id = 0.0, worst_avg = 0.0;
    int count = 0;
    for (const auto& c : corpus()) {
      if (c.n > 2) continue;
      ++count;
      const IntegralSpec s = c.spec();
      const SpfIdentity id = spf_identity_check(s, default_path(s, Side::above),
                                                default_path(s, Side::below),
                                                YSchedule::defaults(s), cfg);
      worst_id = std::max(worst_id, id.max_abs_diff);
      const double re = (0.5 * (id.boundary.phi_plus + id.boundary.phi_minus)).real();
      worst_avg = std::max(worst_avg, std::abs(re - apv_default(s, cfg)));
    }
    return Verdict{worst_id <= 1e-6 && worst_avg <= 1e-6,
                fmt("%.0f specs n<=2, max |Phi+-Int-|,|Phi- -Int+| %.2e, |Re avg Phi - APV| %.2e "
                    "(tol 1e-6)",
                    count, worst_id, worst_avg)};
  });

  report(9, "divergence witness", [&] {
    const IntegralSpec s = cos_spec(1);
    const EpsSchedule sched = EpsSchedule::defaults(s);
    double worst = 0.0;
    const auto& eps = sched.eps_values;
    for (std::size_t k = eps.size() - 3; k < eps.size(); ++k) {
      worst = std::max(worst, std::abs(raw_symmetric_sum(s, eps[k], cfg).value.real() * eps[k] - 2.0));
    }
    return Verdict{worst <= 0.05,
                fmt("three smallest eps down to %.3g, max |S_raw eps - 2| %.2e (tol 0.05)",
                    eps.back(), worst)};
  });

  report(10, "large-n expansion", [&] {
    const QuadConfig tight{1e-14, 1e-17, 8000};
    std::vector<int> ns;
    for (int n = 21; n <= 101; n += 2) ns.push_back(n);
    const auto rows = asymptotic_table(ns, 6, tight);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
      const double x = std::log(r.n), y = std::log(r.abs_err);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(rows.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double rel21 = rows.front().abs_err / std::abs(rows.front().apv_value);
    return Verdict{slope <= -6.5 && rel21 <= 1e-4,
                fmt("log-log slope %.2f (limit -6.5), rel err at n=21 %.2e (tol 1e-4)", slope, rel21)};
  });

  report(11, "property suites", [&] {
    using namespace apv::testing;
    const int cases = 500;
    const PropertyTally t[] = {expression_round_trip(cases, 11), side_classification_round_trip(cases, 12),
                               quadrature_orientation_additivity(cases, 13),
                               phi_conjugate_symmetry(cases, 14)};
    const char* names[] = {"expr", "side", "quad", "phi"};
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 4; ++k) {
      pass = pass && t[k].ok() && t[k].cases >= 500;
      detail += std::string(names[k]) + " " + std::to_string(t[k].cases - t[k].failures) + "/" +
                std::to_string(t[k].cases) + (k < 3 ? ", " : "");
      if (!t[k].ok()) detail += " [" + t[k].first_failure + "]";
    }
    return Verdict{pass, detail};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}

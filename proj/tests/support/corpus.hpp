#pragma once

// Integrals shared by the unit tests, the acceptance suite and the benchmarks.
// Every entry keeps min(x0-a, b-x0) > 0.25 so the 0.05/0.1/0.25 semicircles fit.

#include <string>
#include <vector>

#include "apv/integral_spec.hpp"

namespace apv::testing {

struct CorpusEntry {
  std::string f;
  std::vector<complex> poles;
  double a, b, x0;
  int n;

  IntegralSpec spec() const {
    const Expr e = parse(f);
    return IntegralSpec(e, poles.empty() ? AnalyticityDecl::entire_function()
                                         : AnalyticityDecl::with_poles(poles),
                        a, b, x0, n);
  }
  bool entire() const { return poles.empty(); }
  std::string label() const {
    return f + " n=" + std::to_string(n) + " on [" + std::to_string(a) + ", " + std::to_string(b) +
           "] x0=" + std::to_string(x0);
  }
};

inline const std::vector<CorpusEntry>& corpus() {
  const complex i{0.0, 1.0};
  static const std::vector<CorpusEntry> entries{
      {"cos(z)", {}, -1.0, 1.0, 0.0, 0},
      {"cos(z)", {}, -1.0, 1.0, 0.0, 1},
      {"cos(z)", {}, -1.0, 1.0, 0.0, 3},
      {"exp(z)", {}, -1.0, 2.0, 0.0, 0},
      {"exp(z)", {}, -0.5, 1.5, 0.3, 2},
      {"z^3 + 2*z + 1", {}, -1.0, 1.5, 0.4, 1},
      {"z^3 + 2*z + 1", {}, -2.0, 1.0, -0.5, 4},
      {"sinh(z)", {}, -1.0, 1.0, 0.2, 2},
      {"sinh(z)", {}, 0.0, 2.0, 0.7, 3},
      {"1/(1+z^2)", {i, -i}, -0.5, 0.5, 0.1, 0},
      {"1/(1+z^2)", {i, -i}, -0.6, 0.8, 0.0, 1},
      {"1/(1+z^2)", {i, -i}, -0.5, 0.6, 0.05, 4},
  };
  return entries;
}

}  // namespace apv::testing

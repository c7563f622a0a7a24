#pragma once

#include <map>
#include <vector>

#include "clumpstat/multipoly.hpp"
#include "clumpstat/oracle.hpp"
#include "clumpstat/ratfun.hpp"

namespace test_support {

using namespace clumpstat;

// Distribution of the exponents of `vars` inside one series coefficient:
// monomial x^i u^j ... -> key (i, j, ...). Any other mark variable present
// in the coefficient is an error (set it to 1 before extracting).
inline std::map<std::vector<long>, Rat> poly_distribution(
    const MultiPoly& coeff, const std::vector<int>& vars) {
  std::map<std::vector<long>, Rat> out;
  for (const auto& [m, c] : coeff.terms()) {
    std::vector<long> key;
    key.reserve(vars.size());
    unsigned accounted = 0;
    for (int v : vars) {
      key.push_back(m.exp[static_cast<size_t>(v)]);
      accounted += m.exp[static_cast<size_t>(v)];
    }
    if (accounted != m.total_degree())
      throw std::runtime_error("stray variable in series coefficient");
    out[key] += c;
    if (out[key] == 0) out.erase(key);
  }
  return out;
}

inline std::map<std::vector<long>, Rat> gf_distribution(
    const RationalFunction& f, int n, const std::vector<int>& vars) {
  SeriesTable table = series_coefficients(f, n);
  return poly_distribution(table[n], vars);
}

// Exact mean of a marked statistic at text length n: [z^n] df/dvar at 1.
inline Rat gf_mean(const RationalFunction& f, int mark, int n) {
  RationalFunction d = f.derivative(mark).set_one(mark);
  return series_coefficients(d, n)[n].as_constant();
}

}  // namespace test_support

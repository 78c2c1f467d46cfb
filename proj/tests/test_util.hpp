#ifndef CURVEPI_TEST_UTIL_HPP
#define CURVEPI_TEST_UTIL_HPP

#include <cstdlib>
#include <random>

#include "poly.hpp"

namespace curvepi_test {

using curvepi::exactpoly::Rational;
using curvepi::exactpoly::SparsePolynomial;

// Seed shared by the randomized helpers; overridable via CURVEPI_SEED.
inline unsigned test_seed() {
  if (const char* s = std::getenv("CURVEPI_SEED")) return static_cast<unsigned>(std::atoi(s));
  return 20240811;
}

inline SparsePolynomial random_poly(std::mt19937& rng, int vars = 2, int max_deg = 5,
                                    int max_terms = 6, bool through_origin = false) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<std::string> names = vars == 2 ? std::vector<std::string>{"x", "y"}
                                             : std::vector<std::string>{"x", "y", "z"};
  SparsePolynomial p(names);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(vars);
    for (int& k : e) k = exp(rng);
    if (through_origin && std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) e[0] = 1;
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(e, c);
  }
  if (p.is_zero()) p.add_term(std::vector<int>(vars, 1), 1);
  return p;
}

} // namespace curvepi_test

#endif

#ifndef QMVAL_TESTS_SUPPORT_HPP
#define QMVAL_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qmval/intersection.hpp"
#include "qmval/parse.hpp"

namespace testsupport {

using namespace qmval;

inline const std::vector<std::string> kXY{"x", "y"};

inline MPoly poly(const std::string& text) { return parse_poly(text, kXY); }

inline CurveGerm germ(const std::string& text) {
  return CurveGerm::make(poly(text), true);
}

// Random bivariate polynomial: every monomial of total degree <= max_degree
// appears with probability 1/2, coefficients uniform in [-5,5] \ {0}.
inline MPoly random_poly(std::mt19937_64& rng, int max_degree,
                         bool vanish_at_origin) {
  std::uniform_int_distribution<int> keep(0, 1);
  std::uniform_int_distribution<int> magnitude(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  while (true) {
    MPoly out(2);
    for (int i = 0; i <= max_degree; ++i) {
      for (int j = 0; i + j <= max_degree; ++j) {
        if (vanish_at_origin && i == 0 && j == 0) continue;
        if (keep(rng) == 0) continue;
        int c = magnitude(rng) * (sign(rng) ? 1 : -1);
        out.add_term({i, j}, Rat(c));
      }
    }
    if (!out.is_zero()) return out;
  }
}

// Germs of pairwise distinct irreducible curves. The first entries are
// verifiable by the Newton-polygon test; the last one is the Figure-1
// branch whose polygon test is inconclusive, kept here as asserted.
inline std::vector<CurveGerm> irreducible_pool() {
  std::vector<CurveGerm> pool;
  for (const char* text :
       {"x", "y", "y - x", "y + x", "y - 2*x", "y - x^2", "y + x^2",
        "y - x^3", "y^2 - x^3", "y^3 - x^2", "y^2 - x^5", "y^5 - x^2",
        "y - x - 2*x^2", "y - x - 2*x^2 - 6*x^3", "(y^2 - x^3)^3 - x^10"})
    pool.push_back(germ(text));
  return pool;
}

// f_j = y - 1!x - 2!x^2 - ... - j!x^j
inline CurveGerm factorial_curve(int j) {
  MPoly f = poly("y");
  Rat factorial(1);
  for (int m = 1; m <= j; ++m) {
    factorial *= m;
    f.add_term({m, 0}, Rat(-factorial));
  }
  return CurveGerm::make(std::move(f), true);
}

inline Rat random_rat(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rat(num(rng), den(rng));
}

}  // namespace testsupport

#endif

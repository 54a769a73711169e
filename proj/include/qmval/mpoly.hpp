#ifndef QMVAL_MPOLY_HPP
#define QMVAL_MPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmval/rational.hpp"

namespace qmval {

// Exponent vector; entries are nonnegative and bounded by kMaxExponent.
using Expvec = std::vector<std::int64_t>;

// Sparse multivariate polynomial over Rat. The term map never stores a
// zero coefficient, so equality of polynomials is equality of maps.
class MPoly {
 public:
  static constexpr std::int64_t kMaxExponent = std::int64_t{1} << 31;

  explicit MPoly(int nvars);
  static MPoly constant(int nvars, Rat value);
  static MPoly variable(int nvars, int index);
  static MPoly monomial(int nvars, Expvec exponents, Rat coefficient);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expvec, Rat>& terms() const { return terms_; }

  // Zero when the exponent vector is absent.
  Rat coefficient(const Expvec& exponents) const;
  Rat constant_term() const;
  bool vanishes_at_origin() const { return constant_term() == 0; }

  // Minimum total degree over the support (the multiplicity m(f)).
  // Throws invalid_input on the zero polynomial.
  std::int64_t order() const;
  std::int64_t total_degree() const;  // maximum; throws on zero

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& f, const MPoly& g);
  friend MPoly operator-(const MPoly& f, const MPoly& g);
  friend MPoly operator*(const MPoly& f, const MPoly& g);
  friend MPoly operator*(const Rat& c, const MPoly& f);
  friend bool operator==(const MPoly& f, const MPoly& g) = default;

  MPoly pow(std::int64_t k) const;  // k >= 0; pow(f, 0) = 1

  // Deterministic rendering in the input grammar: terms in graded-lex
  // descending order, explicit '*', exponents via '^'. parse -> print ->
  // parse is the identity on term maps.
  std::string to_string(const std::vector<std::string>& vars) const;

  // Adds c * z^e, erasing the term if the sum vanishes.
  void add_term(const Expvec& exponents, const Rat& coefficient);

 private:
  int nvars_;
  std::map<Expvec, Rat> terms_;
};

// Dense square matrix of rationals, row-major; rows[i][j] multiplies
// variable j in the image of variable i.
using RatMatrix = std::vector<std::vector<Rat>>;

// Exact substitution f(M z). Throws invalid_input when M is singular or
// its dimension differs from f.nvars().
MPoly subst_linear(const MPoly& f, const RatMatrix& m);

}  // namespace qmval

#endif

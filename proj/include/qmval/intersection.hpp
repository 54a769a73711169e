#ifndef QMVAL_INTERSECTION_HPP
#define QMVAL_INTERSECTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qmval/mpoly.hpp"

namespace qmval {

// A plane curve germ at the origin: a nonzero bivariate polynomial with no
// constant term, carrying the caller's irreducibility assertion and the
// cached multiplicity m(f).
class CurveGerm {
 public:
  static CurveGerm make(MPoly poly, bool irreducible_asserted);

  const MPoly& poly() const { return poly_; }
  std::int64_t multiplicity() const { return multiplicity_; }
  bool irreducible_asserted() const { return irreducible_asserted_; }

 private:
  CurveGerm(MPoly poly, bool asserted, std::int64_t mult)
      : poly_(std::move(poly)), irreducible_asserted_(asserted), multiplicity_(mult) {}

  MPoly poly_;
  bool irreducible_asserted_;
  std::int64_t multiplicity_;
};

// Lower-left boundary of support(f) + first quadrant. Vertices have
// strictly increasing x and strictly decreasing y.
struct NewtonPolygon {
  std::vector<std::pair<std::int64_t, std::int64_t>> vertices;
};

NewtonPolygon newton_polygon(const MPoly& f);

enum class IrreducibleTest { kIrreducible, kUnknown };

// Single-segment Newton polygon criterion: Irreducible when the polygon is
// one segment (0,m)--(n,0) with gcd(m,n) = 1, or a lone vertex (1,0)/(0,1)
// (a coordinate axis times a unit). Sufficient only; never a false positive.
IrreducibleTest irreducible_sufficient(const MPoly& f);

// Local intersection multiplicity at the origin,
// dim C[[x,y]]/(f,g), via Fulton's axiomatic reduction.
// 0 iff one input has a nonzero constant term; +inf iff f and g share a
// component through the origin. Finite values are integers.
ExtRat imult(const MPoly& f, const MPoly& g);

struct OracleOptions {
  std::int64_t start = 2;    // first truncation degree tried
  std::int64_t ceiling = 64; // throws once exceeded without stabilizing
};

// Independent check of imult: codimension of the span of truncated monomial
// multiples of f and g below total degree D, escalated until two consecutive
// degrees agree. Requires no common component through the origin.
std::int64_t imult_oracle(const MPoly& f, const MPoly& g, OracleOptions options = {});

}  // namespace qmval

#endif

#ifndef QMVAL_VALUATION_HPP
#define QMVAL_VALUATION_HPP

#include <span>
#include <vector>

#include "qmval/intersection.hpp"

namespace qmval {

// A quasimonomial valuation v_{C,t}: the tree point at skewness t on the
// segment from the multiplicity valuation toward the curve valuation v_C.
// t = +inf encodes v_C itself. Representation is extensional: two distinct
// (curve, t) pairs may denote the same valuation; qm_equal is the semantic
// test.
class QMValuation {
 public:
  QMValuation(CurveGerm curve, ExtRat parameter);

  const CurveGerm& curve() const { return curve_; }
  const ExtRat& parameter() const { return parameter_; }
  bool is_curve_valuation() const { return parameter_.is_infinite(); }

 private:
  CurveGerm curve_;
  ExtRat parameter_;
};

// alpha(v_f ^ v_g) = I(f,g) / (m(f) m(g)); +inf exactly when the two germs
// define the same curve. Always >= 1 when finite.
ExtRat skewness_pair(const CurveGerm& f, const CurveGerm& g);

// Skewness of the infimum of the curve valuations: +inf for a single curve
// (or all equal), otherwise the minimum over unordered pairs.
ExtRat inf_skewness(std::span<const CurveGerm> curves);

// v(g) for irreducible g: m(g) * min{t, alpha(v_C ^ v_g)}.
ExtRat qm_eval_irreducible(const QMValuation& v, const CurveGerm& g);

struct WeightedGerm {
  CurveGerm germ;
  std::int64_t exponent;  // positive
};

// v(prod g_k^{e_k}) = sum e_k v(g_k); the empty product is a unit, value 0.
ExtRat qm_eval_product(const QMValuation& v, std::span<const WeightedGerm> factors);

// v_{C,s} = v_{D,t} iff s = t <= alpha(v_C ^ v_D). Requires finite
// parameters; compare curve valuations through skewness_pair instead.
bool qm_equal(const QMValuation& a, const QMValuation& b);

}  // namespace qmval

#endif

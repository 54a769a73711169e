#include "qmval/valuation.hpp"

namespace qmval {

QMValuation::QMValuation(CurveGerm curve, ExtRat parameter)
    : curve_(std::move(curve)), parameter_(std::move(parameter)) {
  if (!curve_.irreducible_asserted())
    throw invalid_input("quasimonomial valuations require an irreducible-asserted curve");
  if (parameter_.is_finite() && parameter_.finite_value() < 1)
    throw invalid_input("quasimonomial parameter must satisfy t >= 1");
}

ExtRat skewness_pair(const CurveGerm& f, const CurveGerm& g) {
  if (!f.irreducible_asserted() || !g.irreducible_asserted())
    throw invalid_input("skewness_pair requires irreducible-asserted germs");
  ExtRat intersection = imult(f.poly(), g.poly());
  if (intersection.is_infinite()) return ExtRat::infinity();
  Rat denominator(f.multiplicity() * g.multiplicity());
  return ExtRat(Rat(intersection.finite_value() / denominator));
}

ExtRat inf_skewness(std::span<const CurveGerm> curves) {
  if (curves.empty()) throw invalid_input("inf_skewness of an empty list");
  ExtRat best = ExtRat::infinity();
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      best = min(best, skewness_pair(curves[i], curves[j]));
  return best;
}

ExtRat qm_eval_irreducible(const QMValuation& v, const CurveGerm& g) {
  if (!g.irreducible_asserted())
    throw invalid_input("qm_eval_irreducible requires an irreducible-asserted germ");
  ExtRat level = min(v.parameter(), skewness_pair(v.curve(), g));
  return Rat(g.multiplicity()) * level;
}

ExtRat qm_eval_product(const QMValuation& v, std::span<const WeightedGerm> factors) {
  ExtRat total{Rat(0)};
  for (const WeightedGerm& factor : factors) {
    if (factor.exponent <= 0) throw invalid_input("factor exponents must be positive");
    total = total + Rat(factor.exponent) * qm_eval_irreducible(v, factor.germ);
  }
  return total;
}

bool qm_equal(const QMValuation& a, const QMValuation& b) {
  if (a.parameter().is_infinite() || b.parameter().is_infinite())
    throw invalid_input(
        "qm_equal requires finite parameters; compare curve valuations via skewness_pair");
  if (!(a.parameter() == b.parameter())) return false;
  return ExtRat(a.parameter()) <= skewness_pair(a.curve(), b.curve());
}

}  // namespace qmval

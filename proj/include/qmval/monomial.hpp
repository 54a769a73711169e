#ifndef QMVAL_MONOMIAL_HPP
#define QMVAL_MONOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qmval/mpoly.hpp"

namespace qmval {

// The max-monomial weight max{a_1 log|z_1|, ..., a_n log|z_n|}, optionally
// restricted to a subset of active variables.
class MonomialWeight {
 public:
  static MonomialWeight make(std::vector<Rat> scales);
  static MonomialWeight make_masked(std::vector<Rat> scales, std::vector<bool> active);

  std::size_t nvars() const { return scales_.size(); }
  const std::vector<Rat>& scales() const { return scales_; }
  const std::vector<bool>& active() const { return active_; }

 private:
  MonomialWeight(std::vector<Rat> scales, std::vector<bool> active)
      : scales_(std::move(scales)), active_(std::move(active)) {}

  std::vector<Rat> scales_;
  std::vector<bool> active_;
};

// The weight log sum_j |z^{beta_j}|^{1/a_j}; comparable on bounded
// neighborhoods to max_j |z|^{beta_j/a_j}, which is the form used for all
// relative types here.
class FracMonomialWeight {
 public:
  static FracMonomialWeight make(std::vector<std::pair<Expvec, Rat>> parts);

  const std::vector<std::pair<Expvec, Rat>>& parts() const { return parts_; }
  std::size_t nvars() const { return parts_.front().first.size(); }

 private:
  explicit FracMonomialWeight(std::vector<std::pair<Expvec, Rat>> parts)
      : parts_(std::move(parts)) {}

  std::vector<std::pair<Expvec, Rat>> parts_;
};

// Membership of the germ of f in the multiplier ideal of c * the weight:
// every support point alpha must satisfy sum_j (alpha_j + 1)/(c a_j) > 1.
bool ideal_member(const MPoly& f, const MonomialWeight& w, const Rat& c);

// sup{c >= 0 : |f|^2 e^{-2c phi} integrable near o}
//   = min over support of sum_j (alpha_j + 1)/a_j.
Rat jumping_number(const MPoly& f, const MonomialWeight& w);

// Kiselman relative type sigma(log|f|, phi)
//   = min over support of sum_j alpha_j/a_j.
Rat kiselman_sigma(const MPoly& f, const MonomialWeight& w);

struct TianValue {
  Rat formula;              // jumping_number(g) + t * kiselman_sigma(f)
  std::optional<Rat> exact; // jumping_number(g f^t) when t is an integer
  bool consistent = true;   // false exposes a cancellation witness
};

// Tian function of |g|^2 |f|^{2t} against the weight, evaluated through the
// affine formula; integer t additionally gets the exact jumping number of
// the expanded product so cancellation is surfaced instead of trusted away.
TianValue tian_monomial(const MPoly& g, const MPoly& f, const MonomialWeight& w,
                        const Rat& t);

struct Facet {
  std::vector<Rat> normal;  // componentwise >= 0, coprime integers
  Rat offset;               // normal . x >= offset on the polyhedron
};

struct NewtonPolyhedron {
  std::vector<std::vector<Rat>> generators;
  std::vector<Facet> facets;  // deterministic order
};

// Facet description of conv(points) + nonnegative orthant, by enumerating
// hyperplanes through n-subsets of points and coordinate directions.
NewtonPolyhedron newton_facets(const std::vector<std::vector<Rat>>& points,
                               std::size_t max_dim = 6);

// Relative type of z^gamma against a fractional monomial weight:
// sup{c : gamma in c * (conv{beta_j/a_j} + orthant)}
//   = min over facets with positive offset of (normal . gamma)/offset.
Rat relative_type_frac(const Expvec& gamma, const FracMonomialWeight& w);

// Farkas-style infeasibility witness: multipliers lambda with
// sum_j lambda_j beta_j >= 0 componentwise and lambda . a < 0.
struct InfeasibilityCertificate {
  std::vector<Rat> multipliers;
};

struct LpResult {
  std::optional<std::vector<Rat>> witness;  // nonnegative solution when feasible
  std::optional<InfeasibilityCertificate> certificate;
};

// Exact feasibility of {beta_j . w = a_j, w >= 0} by Fourier-Motzkin
// elimination with multiplier tracking. On feasibility the witness is the
// basic solution with the lexicographically smallest support.
LpResult feasibility_lp(const std::vector<std::pair<Expvec, Rat>>& rows,
                        std::size_t max_vars = 6);

struct MonomialDecision {
  bool accepted = false;
  std::vector<Rat> witness;  // interpolating monomial weights when accepted
  Rat criterion_value;       // relative type of z^{sum beta_j}
  Rat criterion_required;    // sum a_j
  std::optional<InfeasibilityCertificate> certificate;
};

// Decides whether a valuation takes value a_j on each monomial z^{beta_j},
// by two provably equivalent routes that must agree:
//   (A) relative_type_frac(sum beta_j, weight) == sum a_j, and
//   (B) exact feasibility of {beta_j . w = a_j, w >= 0}.
// A disagreement raises internal_error: it can only mean a bug.
MonomialDecision monomial_interp_decide(
    const std::vector<std::pair<Expvec, Rat>>& pairs);

}  // namespace qmval

#endif

#ifndef QMVAL_BIVARIATE_GCD_HPP
#define QMVAL_BIVARIATE_GCD_HPP

#include "qmval/mpoly.hpp"

namespace qmval {

// Integer coefficients with content 1 and a positive graded-lex leading
// coefficient; the canonical representative of the associate class.
MPoly primitive_normal_form(const MPoly& f);

// gcd in Q[x,y], returned in primitive normal form. Requires nvars == 2
// and nonzero inputs.
MPoly gcd_bivariate(const MPoly& f, const MPoly& g);

}  // namespace qmval

#endif

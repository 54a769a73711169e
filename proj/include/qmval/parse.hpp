#ifndef QMVAL_PARSE_HPP
#define QMVAL_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qmval/mpoly.hpp"

namespace qmval {

// Expression grammar (whitespace insignificant, no implicit multiplication):
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | var | '(' expr ')' | '-' atom
//   rational := uint ('/' uint)?
//   var      := declared name
//
// Note the unary minus is an atom, so it binds before '^'.
// Throws parse_error with a 0-based position on any violation.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

}  // namespace qmval

#endif

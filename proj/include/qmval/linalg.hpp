#ifndef QMVAL_LINALG_HPP
#define QMVAL_LINALG_HPP

#include <optional>
#include <vector>

#include "qmval/rational.hpp"

namespace qmval {

// Exact Gaussian elimination over Rat, sized for desk-scale systems.

int matrix_rank(std::vector<std::vector<Rat>> rows);

// Unique solution of A x = b, or nullopt when the system is inconsistent
// or underdetermined.
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b);

// A spanning vector of the null space of the row set when that space has
// dimension exactly one; nullopt otherwise. `ncols` covers empty rows.
std::optional<std::vector<Rat>> nullspace_line(std::vector<std::vector<Rat>> rows,
                                               std::size_t ncols);

}  // namespace qmval

#endif

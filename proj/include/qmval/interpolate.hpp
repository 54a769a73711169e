#ifndef QMVAL_INTERPOLATE_HPP
#define QMVAL_INTERPOLATE_HPP

#include <optional>
#include <vector>

#include "qmval/valuation.hpp"

namespace qmval {

struct InterpItem {
  CurveGerm germ;
  Rat target;  // b_j
};

enum class IrreducibilityRecord { kVerified, kAsserted };

// A validated interpolation instance with its derived data: normalized
// targets B_j = b_j / m(f_j), their maximum, the index partition into
// principal (B_j maximal) and secondary indices, and the cached pairwise
// intersection numbers.
class InterpInstance {
 public:
  const std::vector<InterpItem>& items() const { return items_; }
  const std::vector<Rat>& normalized_targets() const { return normalized_; }
  const Rat& max_normalized_target() const { return max_normalized_; }
  const std::vector<std::size_t>& principal_indices() const { return principal_; }
  const std::vector<std::size_t>& secondary_indices() const { return secondary_; }
  const std::vector<IrreducibilityRecord>& irreducibility() const {
    return irreducibility_;
  }

  // Finite by the pairwise-distinctness hypothesis; i != j.
  Rat pair_skewness(std::size_t i, std::size_t j) const;

  friend InterpInstance validate_instance(std::vector<InterpItem> items);

 private:
  InterpInstance() = default;

  std::vector<InterpItem> items_;
  std::vector<Rat> normalized_;
  Rat max_normalized_;
  std::vector<std::size_t> principal_;
  std::vector<std::size_t> secondary_;
  std::vector<IrreducibilityRecord> irreducibility_;
  std::vector<std::vector<Rat>> skewness_;  // full symmetric matrix, diag unused
};

// Checks the problem hypotheses: nonempty, all germs irreducible-asserted,
// b_j >= 1, b_j >= m(f_j), pairwise distinct curves. Throws invalid_input
// naming the violated hypothesis; records which irreducibility assertions
// were machine-verified.
InterpInstance validate_instance(std::vector<InterpItem> items);

struct PairValue {
  std::size_t i, j;  // 0-based item indices
  Rat value;         // skewness of the pair
};

enum class Violation {
  kNone,
  kPrincipalSkewnessBelowTarget,  // condition (1)
  kCrossSkewnessMismatch,         // condition (2)
};

struct InterpCertificate {
  std::vector<PairValue> principal_pairs;  // within I1
  std::vector<PairValue> cross_pairs;      // I1 x I2, required value is B_j
  Violation violation = Violation::kNone;
  std::size_t offending_i = 0, offending_j = 0;
  Rat computed;
  Rat required;
};

struct InterpResult {
  bool accepted = false;
  std::optional<QMValuation> minimal_solution;
  InterpCertificate certificate;
  std::vector<IrreducibilityRecord> irreducibility;
  std::vector<Rat> verified_values;  // v_min(f_j) recomputed on acceptance
};

// The finite interpolation decision: accept iff
//   (1) every skewness within the principal set is >= the maximal
//       normalized target, and
//   (2) skewness(f_i, f_j) equals B_j exactly for every principal i and
//       secondary j.
// On acceptance the minimal solution (f_{i*}, max B) with i* the smallest
// principal index is re-verified against every target before returning.
InterpResult decide_finite(const InterpInstance& instance);

struct SequencePairCheck {
  std::size_t i, j;  // i > j, 0-based
  ExtRat computed;   // I(f_i, f_j)
  Rat required;      // m(f_i) b_j
};

struct SequenceReport {
  std::size_t pairs_checked = 0;
  bool all_pass = false;
  std::optional<SequencePairCheck> first_failure;
  Rat normalized_sup;              // max B_j over the prefix
  Int denominator_sup;             // max denominator of the b_j
  bool denominators_grow = false;  // a later b_j has a strictly larger denominator
};

// Prefix check for the truncated infinite problem: requires B_j strictly
// increasing and verifies I(f_i, f_j) = m(f_i) b_j for all i > j, stopping
// at the first failure. The two trailing fields are classification hints:
// a quasimonomial solution forces the B_j to stay bounded, and unbounded
// target denominators force any solution to be infinitely singular.
SequenceReport check_sequence_prefix(const std::vector<InterpItem>& items);

}  // namespace qmval

#endif

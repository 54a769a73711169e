#include "qmval/interpolate.hpp"

#include <algorithm>
#include <string>

namespace qmval {

namespace {

std::string item_label(std::size_t index) {
  return "item " + std::to_string(index + 1);
}

}  // namespace

Rat InterpInstance::pair_skewness(std::size_t i, std::size_t j) const {
  if (i == j) throw invalid_input("pair_skewness requires distinct indices");
  return skewness_[i][j];
}

InterpInstance validate_instance(std::vector<InterpItem> items) {
  if (items.empty()) throw invalid_input("empty interpolation instance");

  InterpInstance instance;
  for (std::size_t j = 0; j < items.size(); ++j) {
    const InterpItem& item = items[j];
    if (!item.germ.irreducible_asserted())
      throw invalid_input(item_label(j) + ": germ is not irreducible-asserted");
    if (item.target < 1)
      throw invalid_input(item_label(j) + ": target b=" + rat_to_string(item.target) +
                          " violates b >= 1");
    if (item.target < item.germ.multiplicity())
      throw invalid_input(item_label(j) + ": target b=" + rat_to_string(item.target) +
                          " is below the multiplicity m=" +
                          std::to_string(item.germ.multiplicity()) +
                          " (every valuation satisfies v(f) >= m(f))");
    instance.irreducibility_.push_back(
        irreducible_sufficient(item.germ.poly()) == IrreducibleTest::kIrreducible
            ? IrreducibilityRecord::kVerified
            : IrreducibilityRecord::kAsserted);
  }

  const std::size_t k = items.size();
  instance.skewness_.assign(k, std::vector<Rat>(k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ExtRat skew = skewness_pair(items[i].germ, items[j].germ);
      if (skew.is_infinite())
        throw invalid_input("duplicate curve: " + item_label(i) + " and " +
                            item_label(j) + " define the same germ");
      instance.skewness_[i][j] = skew.finite_value();
      instance.skewness_[j][i] = instance.skewness_[i][j];
    }
  }

  for (const InterpItem& item : items)
    instance.normalized_.push_back(
        Rat(item.target / Rat(item.germ.multiplicity())));
  instance.max_normalized_ =
      *std::max_element(instance.normalized_.begin(), instance.normalized_.end());
  for (std::size_t j = 0; j < k; ++j) {
    if (instance.normalized_[j] == instance.max_normalized_)
      instance.principal_.push_back(j);
    else
      instance.secondary_.push_back(j);
  }

  instance.items_ = std::move(items);
  return instance;
}

InterpResult decide_finite(const InterpInstance& instance) {
  InterpResult result;
  result.irreducibility = instance.irreducibility();
  InterpCertificate& cert = result.certificate;

  const auto& principal = instance.principal_indices();
  const auto& secondary = instance.secondary_indices();
  const Rat& target = instance.max_normalized_target();

  // Condition (1): inf of skewness within the principal set is >= B~.
  // A singleton infimum is the curve valuation itself, skewness +inf.
  for (std::size_t a = 0; a < principal.size(); ++a) {
    for (std::size_t b = a + 1; b < principal.size(); ++b) {
      Rat skew = instance.pair_skewness(principal[a], principal[b]);
      cert.principal_pairs.push_back({principal[a], principal[b], skew});
      if (cert.violation == Violation::kNone && skew < target) {
        cert.violation = Violation::kPrincipalSkewnessBelowTarget;
        cert.offending_i = principal[a];
        cert.offending_j = principal[b];
        cert.computed = skew;
        cert.required = target;
      }
    }
  }

  // Condition (2): skewness(f_i, f_j) = B_j exactly on I1 x I2.
  if (cert.violation == Violation::kNone) {
    for (std::size_t i : principal) {
      for (std::size_t j : secondary) {
        Rat skew = instance.pair_skewness(i, j);
        cert.cross_pairs.push_back({i, j, skew});
        if (skew != instance.normalized_targets()[j]) {
          cert.violation = Violation::kCrossSkewnessMismatch;
          cert.offending_i = i;
          cert.offending_j = j;
          cert.computed = skew;
          cert.required = instance.normalized_targets()[j];
          break;
        }
      }
      if (cert.violation != Violation::kNone) break;
    }
  }

  if (cert.violation != Violation::kNone) return result;

  QMValuation minimal(instance.items()[principal.front()].germ, ExtRat(target));
  for (std::size_t j = 0; j < instance.items().size(); ++j) {
    ExtRat value = qm_eval_irreducible(minimal, instance.items()[j].germ);
    if (!(value == instance.items()[j].target))
      throw internal_error("accepted instance fails re-verification at " +
                           item_label(j) + ": v_min gives " +
                           extrat_to_string(value) + ", target " +
                           rat_to_string(instance.items()[j].target));
    result.verified_values.push_back(value.finite_value());
  }

  result.accepted = true;
  result.minimal_solution = std::move(minimal);
  return result;
}

SequenceReport check_sequence_prefix(const std::vector<InterpItem>& items) {
  InterpInstance instance = validate_instance(items);
  const auto& normalized = instance.normalized_targets();
  for (std::size_t j = 0; j + 1 < normalized.size(); ++j) {
    if (!(normalized[j] < normalized[j + 1]))
      throw invalid_input(
          "normalized targets must be strictly increasing for the sequence check; "
          "use the finite decision procedure instead");
  }

  SequenceReport report;
  report.normalized_sup = instance.max_normalized_target();
  report.denominator_sup = 1;
  Int previous_max = 0;
  for (const InterpItem& item : items) {
    Int den = denominator(item.target);
    if (previous_max != 0 && den > previous_max) report.denominators_grow = true;
    previous_max = std::max(previous_max, den);
    report.denominator_sup = previous_max;
  }

  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rat required(Rat(items[i].germ.multiplicity()) * items[j].target);
      Rat computed(instance.pair_skewness(i, j) *
                   Rat(items[i].germ.multiplicity() * items[j].germ.multiplicity()));
      ++report.pairs_checked;
      if (computed != required) {
        report.first_failure = SequencePairCheck{i, j, ExtRat(computed), required};
        report.all_pass = false;
        return report;
      }
    }
  }
  report.all_pass = true;
  return report;
}

}  // namespace qmval

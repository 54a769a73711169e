#include "qmval/json_io.hpp"

#include "qmval/parse.hpp"

namespace qmval::io {

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw invalid_input(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string())
    throw invalid_input(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> vars_from_json(const json& j) {
  const json& v = require(j, "vars");
  if (!v.is_array() || v.empty())
    throw invalid_input("\"vars\" must be a nonempty array of names");
  std::vector<std::string> vars;
  for (const json& name : v) {
    if (!name.is_string()) throw invalid_input("variable names must be strings");
    vars.push_back(name.get<std::string>());
  }
  return vars;
}

CurveGerm germ_from_json(const json& j, const std::vector<std::string>& vars,
                         std::size_t index) {
  MPoly poly = parse_poly(require_string(j, "poly"), vars);
  std::string mode = j.contains("irreducible")
                         ? j.at("irreducible").get<std::string>()
                         : "asserted";
  if (mode != "asserted" && mode != "verify")
    throw invalid_input("curve " + std::to_string(index + 1) +
                        ": \"irreducible\" must be \"asserted\" or \"verify\"");
  if (mode == "verify" &&
      irreducible_sufficient(poly) != IrreducibleTest::kIrreducible)
    throw invalid_input("curve " + std::to_string(index + 1) +
                        ": irreducibility could not be verified "
                        "(single-segment Newton polygon test inconclusive)");
  return CurveGerm::make(std::move(poly), true);
}

json pair_values_to_json(const std::vector<PairValue>& pairs, bool with_required,
                         const InterpInstance& instance) {
  json out = json::array();
  for (const PairValue& p : pairs) {
    json entry{{"i", p.i + 1}, {"j", p.j + 1}, {"skewness", rat_to_string(p.value)}};
    if (with_required)
      entry["required"] = rat_to_string(instance.normalized_targets()[p.j]);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

InstanceFile instance_from_json(const json& j) {
  InstanceFile file;
  file.vars = vars_from_json(j);
  if (file.vars.size() != 2)
    throw invalid_input("interpolation instances are bivariate");

  const json& curves = require(j, "curves");
  if (!curves.is_array() || curves.empty())
    throw invalid_input("\"curves\" must be a nonempty array");
  for (std::size_t index = 0; index < curves.size(); ++index) {
    const json& c = curves[index];
    file.items.push_back(InterpItem{
        germ_from_json(c, file.vars, index),
        rat_from_string(require_string(c, "b"))});
  }
  return file;
}

json result_to_json(const InterpResult& result, const InterpInstance& instance,
                    const std::vector<std::string>& vars) {
  json certificate{
      {"max_normalized_target", rat_to_string(instance.max_normalized_target())}};
  json principal = json::array(), secondary = json::array();
  for (std::size_t i : instance.principal_indices()) principal.push_back(i + 1);
  for (std::size_t j : instance.secondary_indices()) secondary.push_back(j + 1);
  certificate["principal"] = std::move(principal);
  certificate["secondary"] = std::move(secondary);
  certificate["principal_pairs"] =
      pair_values_to_json(result.certificate.principal_pairs, false, instance);
  certificate["cross_pairs"] =
      pair_values_to_json(result.certificate.cross_pairs, true, instance);
  if (result.certificate.violation != Violation::kNone) {
    certificate["violated"] =
        result.certificate.violation == Violation::kPrincipalSkewnessBelowTarget
            ? "principal_skewness_below_target"
            : "cross_skewness_mismatch";
    certificate["i"] = result.certificate.offending_i + 1;
    certificate["j"] = result.certificate.offending_j + 1;
    certificate["computed"] = rat_to_string(result.certificate.computed);
    certificate["required"] = rat_to_string(result.certificate.required);
  }

  json irreducibility = json::array();
  for (std::size_t i = 0; i < result.irreducibility.size(); ++i)
    irreducibility.push_back(
        {{"index", i + 1},
         {"status", result.irreducibility[i] == IrreducibilityRecord::kVerified
                        ? "verified"
                        : "asserted"}});

  json out{{"decision", result.accepted ? "yes" : "no"},
           {"certificate", std::move(certificate)},
           {"irreducibility", std::move(irreducibility)}};
  if (result.accepted) {
    const QMValuation& v = *result.minimal_solution;
    out["minimal_solution"] = {{"curve", v.curve().poly().to_string(vars)},
                               {"t", extrat_to_string(v.parameter())}};
    json values = json::array();
    for (const Rat& value : result.verified_values)
      values.push_back(rat_to_string(value));
    out["verified_values"] = std::move(values);
  }
  return out;
}

json sequence_report_to_json(const SequenceReport& report) {
  json out{{"pairs_checked", report.pairs_checked},
           {"all_pass", report.all_pass},
           {"normalized_sup", rat_to_string(report.normalized_sup)},
           {"denominator_sup", report.denominator_sup.str()},
           {"denominators_grow", report.denominators_grow}};
  if (report.first_failure) {
    out["first_failure"] = {
        {"i", report.first_failure->i + 1},
        {"j", report.first_failure->j + 1},
        {"computed", extrat_to_string(report.first_failure->computed)},
        {"required", rat_to_string(report.first_failure->required)}};
  }
  return out;
}

EvalRequest eval_request_from_json(const json& j, bool verify_irreducibility) {
  std::vector<std::string> vars = vars_from_json(j);
  if (vars.size() != 2) throw invalid_input("evaluation requests are bivariate");

  const json& vj = require(j, "valuation");
  MPoly curve_poly = parse_poly(require_string(vj, "curve"), vars);
  if (verify_irreducibility &&
      irreducible_sufficient(curve_poly) != IrreducibleTest::kIrreducible)
    throw invalid_input("valuation curve: irreducibility could not be verified");
  ExtRat t = extrat_from_string(require_string(vj, "t"));
  QMValuation valuation(CurveGerm::make(std::move(curve_poly), true), std::move(t));

  std::vector<WeightedGerm> factors;
  const json& fj = require(j, "factors");
  if (!fj.is_array()) throw invalid_input("\"factors\" must be an array");
  for (std::size_t index = 0; index < fj.size(); ++index) {
    const json& f = fj[index];
    MPoly poly = parse_poly(require_string(f, "poly"), vars);
    if (verify_irreducibility &&
        irreducible_sufficient(poly) != IrreducibleTest::kIrreducible)
      throw invalid_input("factor " + std::to_string(index + 1) +
                          ": irreducibility could not be verified");
    std::int64_t exponent =
        f.contains("exponent") ? f.at("exponent").get<std::int64_t>() : 1;
    factors.push_back(
        WeightedGerm{CurveGerm::make(std::move(poly), true), exponent});
  }
  return EvalRequest{std::move(vars), std::move(valuation), std::move(factors)};
}

MonomialRequest monomial_request_from_json(const json& j) {
  const json& vj = require(j, "vars");
  if (!vj.is_number_unsigned() || vj.get<std::size_t>() == 0)
    throw invalid_input("\"vars\" must be a positive variable count");
  std::size_t n = vj.get<std::size_t>();

  const json& aj = require(j, "a");
  if (!aj.is_array() || aj.size() != n)
    throw invalid_input("\"a\" must list one scale per variable");
  std::vector<Rat> scales;
  for (const json& a : aj) scales.push_back(rat_from_string(a.get<std::string>()));

  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));

  MonomialRequest request{MonomialWeight::make(std::move(scales)),
                          parse_poly(require_string(j, "f"), vars),
                          std::nullopt, std::nullopt};
  if (j.contains("g"))
    request.g = parse_poly(j.at("g").get<std::string>(), vars);
  if (j.contains("t")) request.t = rat_from_string(j.at("t").get<std::string>());
  return request;
}

std::vector<std::pair<Expvec, Rat>> pairs_from_json(const json& j) {
  const json& pj = require(j, "pairs");
  if (!pj.is_array() || pj.empty())
    throw invalid_input("\"pairs\" must be a nonempty array");
  std::vector<std::pair<Expvec, Rat>> pairs;
  for (const json& p : pj) {
    const json& bj = require(p, "beta");
    if (!bj.is_array()) throw invalid_input("\"beta\" must be an array of integers");
    Expvec beta;
    for (const json& e : bj) beta.push_back(e.get<std::int64_t>());
    pairs.emplace_back(std::move(beta), rat_from_string(require_string(p, "a")));
  }
  return pairs;
}

json decision_to_json(const MonomialDecision& decision) {
  json out{{"decision", decision.accepted ? "yes" : "no"},
           {"criterion", {{"value", rat_to_string(decision.criterion_value)},
                          {"required", rat_to_string(decision.criterion_required)}}}};
  if (decision.accepted) {
    json witness = json::array();
    for (const Rat& w : decision.witness) witness.push_back(rat_to_string(w));
    out["witness"] = std::move(witness);
  }
  if (decision.certificate) {
    json multipliers = json::array();
    for (const Rat& l : decision.certificate->multipliers)
      multipliers.push_back(rat_to_string(l));
    out["certificate"] = {{"multipliers", std::move(multipliers)}};
  }
  return out;
}

json lp_result_to_json(const LpResult& result) {
  json out{{"feasible", result.witness.has_value()}};
  if (result.witness) {
    json witness = json::array();
    for (const Rat& w : *result.witness) witness.push_back(rat_to_string(w));
    out["witness"] = std::move(witness);
  }
  if (result.certificate) {
    json multipliers = json::array();
    for (const Rat& l : result.certificate->multipliers)
      multipliers.push_back(rat_to_string(l));
    out["certificate"] = {{"multipliers", std::move(multipliers)}};
  }
  return out;
}

json tian_to_json(const TianValue& value) {
  json out{{"formula", rat_to_string(value.formula)},
           {"consistent", value.consistent}};
  if (value.exact) out["exact"] = rat_to_string(*value.exact);
  return out;
}

}  // namespace qmval::io

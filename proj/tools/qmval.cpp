#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmval/bivariate_gcd.hpp"
#include "qmval/json_io.hpp"
#include "qmval/parse.hpp"

namespace {

using namespace qmval;
using nlohmann::json;

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  std::stringstream stream(csv);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (!name.empty()) names.push_back(name);
  }
  if (names.empty()) throw invalid_input("empty variable list");
  return names;
}

std::vector<std::string> numbered_vars(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  return vars;
}

json load_json(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw invalid_input("cannot open input file '" + path + "'");
  try {
    return json::parse(stream);
  } catch (const json::parse_error& e) {
    throw invalid_input("malformed JSON in '" + path + "': " + e.what());
  }
}

void emit(bool as_json, const json& structured, const std::string& text) {
  if (as_json)
    std::cout << structured.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

CurveGerm germ_from_text(const std::string& text, const std::vector<std::string>& vars,
                         bool verify) {
  MPoly poly = parse_poly(text, vars);
  if (verify && irreducible_sufficient(poly) != IrreducibleTest::kIrreducible)
    throw invalid_input("irreducibility of '" + text +
                        "' could not be verified; pass --irreducible assert "
                        "to take responsibility for it");
  return CurveGerm::make(std::move(poly), true);
}

MonomialWeight weight_from_flags(std::size_t nvars,
                                 const std::vector<std::string>& scales) {
  if (scales.size() != nvars)
    throw invalid_input("expected " + std::to_string(nvars) +
                        " occurrences of --a, got " + std::to_string(scales.size()));
  std::vector<Rat> a;
  for (const std::string& s : scales) a.push_back(rat_from_string(s));
  return MonomialWeight::make(std::move(a));
}

std::string interp_text(const InterpResult& result, const InterpInstance& instance,
                        const std::vector<std::string>& vars) {
  std::ostringstream out;
  out << "decision: " << (result.accepted ? "yes" : "no");
  if (result.accepted) {
    const QMValuation& v = *result.minimal_solution;
    out << "\nv_min: curve = " << v.curve().poly().to_string(vars)
        << ", t = " << extrat_to_string(v.parameter());
    for (const PairValue& p : result.certificate.cross_pairs)
      out << "\n  skew(f_" << p.i + 1 << ", f_" << p.j + 1
          << ") = " << rat_to_string(p.value) << " = B_" << p.j + 1;
    for (const PairValue& p : result.certificate.principal_pairs)
      out << "\n  skew(f_" << p.i + 1 << ", f_" << p.j + 1
          << ") = " << rat_to_string(p.value)
          << " >= " << rat_to_string(instance.max_normalized_target());
    out << "\n  v_min(f_j) = b_j re-verified for all j";
  } else {
    const InterpCertificate& c = result.certificate;
    if (c.violation == Violation::kPrincipalSkewnessBelowTarget)
      out << "\nviolated: skew(f_" << c.offending_i + 1 << ", f_" << c.offending_j + 1
          << ") = " << rat_to_string(c.computed) << " < required "
          << rat_to_string(c.required);
    else
      out << "\nviolated: skew(f_" << c.offending_i + 1 << ", f_" << c.offending_j + 1
          << ") = " << rat_to_string(c.computed) << " != required B_"
          << c.offending_j + 1 << " = " << rat_to_string(c.required);
  }
  return out.str();
}

std::string sequence_text(const SequenceReport& report) {
  std::ostringstream out;
  if (report.all_pass)
    out << "all " << report.pairs_checked << " pairs pass";
  else
    out << "pair (" << report.first_failure->i + 1 << ", "
        << report.first_failure->j + 1
        << ") fails: I = " << extrat_to_string(report.first_failure->computed)
        << ", required " << rat_to_string(report.first_failure->required);
  out << "\nnormalized targets bounded so far by "
      << rat_to_string(report.normalized_sup)
      << " (a quasimonomial solution keeps them bounded)";
  out << "\ntarget denominators " << (report.denominators_grow ? "grow" : "do not grow")
      << ", max " << report.denominator_sup.str()
      << (report.denominators_grow
              ? " (unbounded denominators force an infinitely singular solution)"
              : "");
  return out.str();
}

std::string decision_text(const MonomialDecision& decision) {
  std::ostringstream out;
  out << "decision: " << (decision.accepted ? "yes" : "no");
  if (decision.accepted) {
    out << "\nwitness w = (";
    for (std::size_t i = 0; i < decision.witness.size(); ++i)
      out << (i ? ", " : "") << rat_to_string(decision.witness[i]);
    out << ")";
  }
  out << "\ncriterion: relative type " << rat_to_string(decision.criterion_value)
      << (decision.accepted ? " = " : " != ") << "sum a = "
      << rat_to_string(decision.criterion_required);
  if (decision.certificate) {
    out << "\ninfeasibility multipliers: (";
    const auto& l = decision.certificate->multipliers;
    for (std::size_t i = 0; i < l.size(); ++i)
      out << (i ? ", " : "") << rat_to_string(l[i]);
    out << ")";
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact decision procedures for valuative interpolation on plane "
               "curve germs, with a monomial-weight calculator"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string vars_csv = "x,y";
  std::string irreducible_mode = "assert";

  auto add_common = [&](CLI::App* cmd, bool with_vars = true) {
    cmd->add_flag("--json", as_json, "emit structured JSON");
    if (with_vars)
      cmd->add_option("--vars", vars_csv, "comma-separated variable names")
          ->capture_default_str();
  };

  // --- bivariate commands -------------------------------------------------
  std::string poly_f, poly_g;

  CLI::App* c_imult = app.add_subcommand(
      "imult", "local intersection multiplicity of two germs at the origin");
  c_imult->add_option("f", poly_f)->required();
  c_imult->add_option("g", poly_g)->required();
  add_common(c_imult);
  c_imult->callback([&] {
    auto vars = split_names(vars_csv);
    ExtRat value = imult(parse_poly(poly_f, vars), parse_poly(poly_g, vars));
    emit(as_json, json{{"imult", extrat_to_string(value)}}, extrat_to_string(value));
  });

  CLI::App* c_mult = app.add_subcommand("mult", "multiplicity m(f) of a germ");
  c_mult->add_option("f", poly_f)->required();
  add_common(c_mult);
  c_mult->callback([&] {
    auto vars = split_names(vars_csv);
    std::int64_t m = parse_poly(poly_f, vars).order();
    emit(as_json, json{{"mult", m}}, std::to_string(m));
  });

  CLI::App* c_skew = app.add_subcommand(
      "skewness", "skewness of the infimum of two curve valuations");
  c_skew->add_option("f", poly_f)->required();
  c_skew->add_option("g", poly_g)->required();
  c_skew->add_option("--irreducible", irreducible_mode, "assert|verify")
      ->check(CLI::IsMember({"assert", "verify"}))
      ->capture_default_str();
  add_common(c_skew);
  c_skew->callback([&] {
    auto vars = split_names(vars_csv);
    bool verify = irreducible_mode == "verify";
    ExtRat value = skewness_pair(germ_from_text(poly_f, vars, verify),
                                 germ_from_text(poly_g, vars, verify));
    emit(as_json, json{{"skewness", extrat_to_string(value)}},
         extrat_to_string(value));
  });

  std::int64_t oracle_start = 2, oracle_ceiling = 64;
  CLI::App* c_oracle = app.add_subcommand(
      "oracle-imult", "truncated-Macaulay oracle for the intersection multiplicity");
  c_oracle->add_option("f", poly_f)->required();
  c_oracle->add_option("g", poly_g)->required();
  c_oracle->add_option("--start", oracle_start, "first truncation degree")
      ->capture_default_str();
  c_oracle->add_option("--ceiling", oracle_ceiling, "truncation-degree ceiling")
      ->capture_default_str();
  add_common(c_oracle);
  c_oracle->callback([&] {
    auto vars = split_names(vars_csv);
    std::int64_t value =
        imult_oracle(parse_poly(poly_f, vars), parse_poly(poly_g, vars),
                     OracleOptions{oracle_start, oracle_ceiling});
    emit(as_json, json{{"imult", value}}, std::to_string(value));
  });

  // --- interpolation ------------------------------------------------------
  std::string input_path;

  CLI::App* c_interp = app.add_subcommand(
      "interpolate", "decide a finite valuative interpolation instance");
  c_interp->add_option("--input", input_path, "instance JSON file")->required();
  add_common(c_interp, false);
  c_interp->callback([&] {
    io::InstanceFile file = io::instance_from_json(load_json(input_path));
    InterpInstance instance = validate_instance(std::move(file.items));
    InterpResult result = decide_finite(instance);
    emit(as_json, io::result_to_json(result, instance, file.vars),
         interp_text(result, instance, file.vars));
  });

  CLI::App* c_seq = app.add_subcommand(
      "check-sequence",
      "pairwise conditions for a strictly increasing sequence prefix");
  c_seq->add_option("--input", input_path, "instance JSON file")->required();
  add_common(c_seq, false);
  c_seq->callback([&] {
    io::InstanceFile file = io::instance_from_json(load_json(input_path));
    SequenceReport report = check_sequence_prefix(file.items);
    emit(as_json, io::sequence_report_to_json(report), sequence_text(report));
  });

  std::string curve_text, parameter_text;
  std::vector<std::string> factor_texts;
  CLI::App* c_eval = app.add_subcommand(
      "evaluate", "evaluate a quasimonomial valuation on irreducible germs");
  c_eval->add_option("--input", input_path, "evaluation request JSON file");
  c_eval->add_option("curve", curve_text, "defining polynomial of the curve");
  c_eval->add_option("t", parameter_text, "skewness parameter, p/q or inf");
  c_eval->add_option("germs", factor_texts, "irreducible germs to evaluate on");
  c_eval->add_option("--irreducible", irreducible_mode, "assert|verify")
      ->check(CLI::IsMember({"assert", "verify"}))
      ->capture_default_str();
  add_common(c_eval);
  c_eval->callback([&] {
    bool verify = irreducible_mode == "verify";
    ExtRat value{Rat(0)};
    if (!input_path.empty()) {
      io::EvalRequest request =
          io::eval_request_from_json(load_json(input_path), verify);
      value = qm_eval_product(request.valuation, request.factors);
    } else {
      if (curve_text.empty() || parameter_text.empty() || factor_texts.empty())
        throw invalid_input("evaluate needs --input or: curve t germs...");
      auto vars = split_names(vars_csv);
      QMValuation valuation(germ_from_text(curve_text, vars, verify),
                            extrat_from_string(parameter_text));
      std::vector<WeightedGerm> factors;
      for (const std::string& text : factor_texts)
        factors.push_back(WeightedGerm{germ_from_text(text, vars, verify), 1});
      value = qm_eval_product(valuation, factors);
    }
    emit(as_json, json{{"value", extrat_to_string(value)}}, extrat_to_string(value));
  });

  // --- monomial-weight commands -------------------------------------------
  std::size_t weight_nvars = 0;
  std::vector<std::string> weight_scales;
  std::string tian_t, tian_g;

  auto add_weight_flags = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path,
                    "request JSON file {\"vars\":n,\"a\":[...],\"f\":...}");
    cmd->add_option("--vars", weight_nvars, "number of variables z1..zn");
    cmd->add_option("--a", weight_scales, "weight scale a_j, once per variable")
        ->allow_extra_args(false);
    cmd->add_flag("--json", as_json, "emit structured JSON");
  };

  // Inputs come either from a request file or from --vars/--a flags with
  // variables named z1..zn.
  auto monomial_request = [&]() -> io::MonomialRequest {
    if (!input_path.empty()) {
      io::MonomialRequest request =
          io::monomial_request_from_json(load_json(input_path));
      if (!tian_g.empty() || !tian_t.empty())
        throw invalid_input("--g/--t conflict with --input; set them in the file");
      return request;
    }
    if (weight_nvars == 0 || poly_f.empty())
      throw invalid_input("provide --input FILE or --vars N, --a ..., and f");
    MonomialWeight w = weight_from_flags(weight_nvars, weight_scales);
    auto vars = numbered_vars(weight_nvars);
    io::MonomialRequest request{std::move(w), parse_poly(poly_f, vars),
                                std::nullopt, std::nullopt};
    if (!tian_g.empty()) request.g = parse_poly(tian_g, vars);
    if (!tian_t.empty()) request.t = rat_from_string(tian_t);
    return request;
  };

  CLI::App* c_sigma = app.add_subcommand(
      "monomial-sigma", "Kiselman relative type of f against a max-monomial weight");
  c_sigma->add_option("f", poly_f);
  add_weight_flags(c_sigma);
  c_sigma->callback([&] {
    io::MonomialRequest request = monomial_request();
    Rat value = kiselman_sigma(request.f, request.weight);
    emit(as_json, json{{"sigma", rat_to_string(value)}}, rat_to_string(value));
  });

  CLI::App* c_jump = app.add_subcommand(
      "monomial-jump", "jumping number of f against a max-monomial weight");
  c_jump->add_option("f", poly_f);
  add_weight_flags(c_jump);
  c_jump->callback([&] {
    io::MonomialRequest request = monomial_request();
    Rat value = jumping_number(request.f, request.weight);
    emit(as_json, json{{"jumping_number", rat_to_string(value)}},
         rat_to_string(value));
  });

  CLI::App* c_tian = app.add_subcommand(
      "monomial-tian", "Tian function of |g|^2 |f|^{2t} against a max-monomial weight");
  c_tian->add_option("f", poly_f);
  c_tian->add_option("--t", tian_t, "exponent t >= 0");
  c_tian->add_option("--g", tian_g, "companion holomorphic factor (default 1)");
  add_weight_flags(c_tian);
  c_tian->callback([&] {
    io::MonomialRequest request = monomial_request();
    MPoly g = request.g ? *request.g
                        : MPoly::constant(request.f.nvars(), Rat(1));
    TianValue value = tian_monomial(g, request.f, request.weight,
                                    request.t.value_or(Rat(0)));
    std::string text = "formula: " + rat_to_string(value.formula);
    if (value.exact)
      text += "\nexact: " + rat_to_string(*value.exact) +
              (value.consistent ? " (consistent)" : " (CANCELLATION WITNESS)");
    emit(as_json, io::tian_to_json(value), text);
  });

  std::vector<std::string> beta_texts;
  CLI::App* c_decide = app.add_subcommand(
      "monomial-decide",
      "existence of a valuation with prescribed values on monomials");
  c_decide->add_option("--input", input_path, "pairs JSON file");
  c_decide->add_option("--beta", beta_texts, "comma-separated exponent vector")
      ->allow_extra_args(false);
  c_decide->add_option("--a", weight_scales, "target value for the matching --beta")
      ->allow_extra_args(false);
  c_decide->add_flag("--json", as_json, "emit structured JSON");
  c_decide->callback([&] {
    std::vector<std::pair<Expvec, Rat>> pairs;
    if (!input_path.empty()) {
      pairs = io::pairs_from_json(load_json(input_path));
    } else {
      if (beta_texts.empty() || beta_texts.size() != weight_scales.size())
        throw invalid_input("monomial-decide needs --input or matching --beta/--a");
      for (std::size_t i = 0; i < beta_texts.size(); ++i) {
        Expvec beta;
        for (const std::string& piece : split_names(beta_texts[i]))
          beta.push_back(std::stoll(piece));
        pairs.emplace_back(std::move(beta), rat_from_string(weight_scales[i]));
      }
    }
    MonomialDecision decision = monomial_interp_decide(pairs);
    emit(as_json, io::decision_to_json(decision), decision_text(decision));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qmval::internal_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

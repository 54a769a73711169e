#ifndef QMVAL_JSON_IO_HPP
#define QMVAL_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qmval/interpolate.hpp"
#include "qmval/monomial.hpp"

namespace qmval::io {

using nlohmann::json;

// {"vars":["x","y"],
//  "curves":[{"poly":"y^2-x^3","b":"3/2","irreducible":"asserted"|"verify"},...]}
// "verify" demands a machine proof of irreducibility and fails otherwise;
// the field defaults to "asserted".
struct InstanceFile {
  std::vector<std::string> vars;
  std::vector<InterpItem> items;
};

InstanceFile instance_from_json(const json& j);

json result_to_json(const InterpResult& result, const InterpInstance& instance,
                    const std::vector<std::string>& vars);

json sequence_report_to_json(const SequenceReport& report);

// {"vars":["x","y"],"valuation":{"curve":"...","t":"p/q"},
//  "factors":[{"poly":"...","exponent":2},...]}
// The "valuation" object is exactly the "minimal_solution" emitted by the
// interpolation result, so outputs can be re-fed unchanged.
struct EvalRequest {
  std::vector<std::string> vars;
  QMValuation valuation;
  std::vector<WeightedGerm> factors;
};

EvalRequest eval_request_from_json(const json& j, bool verify_irreducibility);

// {"vars":n,"a":["p/q",...],"f":"poly","g":"poly","t":"p/q"} with variables
// named z1..zn; "g" and "t" are optional.
struct MonomialRequest {
  MonomialWeight weight;
  MPoly f;
  std::optional<MPoly> g;
  std::optional<Rat> t;
};

MonomialRequest monomial_request_from_json(const json& j);

// {"pairs":[{"beta":[1,0],"a":"p/q"},...]}
std::vector<std::pair<Expvec, Rat>> pairs_from_json(const json& j);

json decision_to_json(const MonomialDecision& decision);
json lp_result_to_json(const LpResult& result);
json tian_to_json(const TianValue& value);

}  // namespace qmval::io

#endif

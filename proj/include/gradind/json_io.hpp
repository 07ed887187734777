#pragma once

// JSON encodings shared by the CLI and tests.
//
//   CycloNum       {"conductor": N, "coeffs": ["p/q", ...]}  (deg Phi_N entries)
//   field value    "p/q" when rational, otherwise a CycloNum object; inputs
//                  also accept integers and "zeta:n:k"
//   series         {"truncation": K, "coeffs": [field value, ...]}
//   model          {"kind": "rotation|clifford|laurent|tensor", "n": n,
//                   "q": "zeta:n:k", "m": generators, "left": model, "right": model}
//   element        [{"monomial": [exponents], "coeff": field value}, ...]
//   partition      [[1,3],[2,4]]

#include <json.hpp>

#include "gradind/algebra.hpp"
#include "gradind/cumulants.hpp"
#include "gradind/cyclo.hpp"
#include "gradind/partitions.hpp"
#include "gradind/series.hpp"

namespace gradind {

using Json = nlohmann::ordered_json;

Json cyclo_to_json(const CycloNum& x);
Json value_to_json(const CycloNum& x);
CycloNum value_from_json(const Json& j);

Json values_to_json(const std::vector<CycloNum>& xs);
std::vector<CycloNum> values_from_json(const Json& j);

Json series_to_json(const FormalSeries& s);
FormalSeries series_from_json(const Json& j);

Json partition_to_json(const SetPartition& p);

AlgebraSpec model_from_json(const Json& j);
Json model_to_json(const AlgebraSpec& spec);

AlgebraElement element_from_json(const AlgebraSpec& spec, const Json& j);
Json element_to_json(const AlgebraElement& x);

}  // namespace gradind

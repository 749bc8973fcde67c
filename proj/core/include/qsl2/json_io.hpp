#pragma once

#include <string>
#include <string_view>

#include "qsl2/bases.hpp"
#include "qsl2/tensor_module.hpp"
#include "qsl2/udot.hpp"

namespace qsl2 {

// JSON wire formats. Emission is deterministic, so serializing a value twice
// yields byte-identical strings and parse/emit round-trips are exact.
//
//   LaurentPoly       [[exp, "p/q"], ...] sorted by exponent
//   RationalFunction  {"num": LaurentPoly, "den": LaurentPoly}
//   UPoly             [[uexp, RationalFunction], ...] sorted by exponent
//   UdotElement       {"m": int, "terms": [{"a", "b", "orient", "coeff"}]}
//   PBWCombo          {"m": int, "terms": [{"a", "b", "coeff"}]}
//   TensorVector      {"mode": "symbolic"|"concrete", "p"?: int, "m": int,
//                      "terms": [{"a", "b", "coeff": UPoly-or-RF}]}

std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(std::string_view s);

std::string ratfun_to_json(const RationalFunction& r);
RationalFunction ratfun_from_json(std::string_view s);

std::string upoly_to_json(const UPoly& p);
UPoly upoly_from_json(std::string_view s);

std::string udot_to_json(const UdotElement& x);
UdotElement udot_from_json(std::string_view s);

std::string pbw_combo_to_json(const PBWCombo& x);

std::string tensor_to_json(const TensorVector& v);
TensorVector tensor_from_json(std::string_view s);

std::string transition_matrix_to_json(const TransitionMatrix& t);
std::string transition_matrix_to_csv(const TransitionMatrix& t);

std::string positivity_report_to_json(const PositivityReport& r);
std::string positivity_report_to_csv(const PositivityReport& r);

}  // namespace qsl2

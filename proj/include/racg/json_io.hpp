#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "racg/coxeter.hpp"
#include "racg/iwahori.hpp"
#include "racg/operators.hpp"
#include "racg/series.hpp"

namespace racg {

/// Schema: { "generators": ["s","t",...], "commuting": [["s","t"],...] }.
/// The list order of "generators" defines the ShortLex letter order.
CoxeterSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const CoxeterSystem& sys);

/// Complete map generator name -> value, e.g. {"s": 0.25, "t": 0.5}.
std::vector<double> real_map_from_json(const nlohmann::json& j, const CoxeterSystem& sys,
                                       const std::string& what);
std::vector<int> int_map_from_json(const nlohmann::json& j, const CoxeterSystem& sys,
                                   const std::string& what);
/// Optional sign map {"s": 1, "t": -1}; entries must be +1 or -1.
SignVector sign_map_from_json(const nlohmann::json& j, const CoxeterSystem& sys);

nlohmann::json sign_vector_to_json(const CoxeterSystem& sys, const SignVector& eps);
nlohmann::json verdict_to_json(const ConvergenceVerdict& v);
nlohmann::json factoriality_to_json(const CoxeterSystem& sys, const FactorialityReport& rep);
nlohmann::json spherical_to_json(const CoxeterSystem& sys, const SphericalReport& rep);
nlohmann::json check_report_to_json(const std::string& suite, const CheckReport& rep);

std::string word_label(const CoxeterSystem& sys, const Word& w);

} // namespace racg

#include "racg/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace racg {

using nlohmann::json;

CoxeterSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw std::invalid_argument("system JSON must be an object with a 'generators' array");
  std::vector<std::string> names = j["generators"].get<std::vector<std::string>>();
  const int rank = static_cast<int>(names.size());
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("commuting")) {
    for (const auto& pair : j["commuting"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("each 'commuting' entry must be a pair of generator names");
      auto find = [&](const std::string& n) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end())
          throw std::invalid_argument("commuting pair references unknown generator '" + n + "'");
        return static_cast<int>(it - names.begin());
      };
      pairs.emplace_back(find(pair[0].get<std::string>()), find(pair[1].get<std::string>()));
    }
  }
  return CoxeterSystem(rank, pairs, std::move(names));
}

json system_to_json(const CoxeterSystem& sys) {
  json j;
  j["generators"] = sys.names();
  json pairs = json::array();
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t)
      if (sys.commutes(s, t)) pairs.push_back({sys.name(s), sys.name(t)});
  j["commuting"] = pairs;
  return j;
}

namespace {

template <class T>
std::vector<T> map_from_json(const json& j, const CoxeterSystem& sys, const std::string& what) {
  if (!j.is_object())
    throw std::invalid_argument(what + " must be a JSON object keyed by generator name");
  std::vector<T> out(static_cast<size_t>(sys.rank()));
  std::vector<bool> seen(static_cast<size_t>(sys.rank()), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int s = sys.index_of(it.key());
    if (s < 0) throw std::invalid_argument(what + " references unknown generator '" + it.key() + "'");
    out[static_cast<size_t>(s)] = it.value().get<T>();
    seen[static_cast<size_t>(s)] = true;
  }
  for (int s = 0; s < sys.rank(); ++s)
    if (!seen[static_cast<size_t>(s)])
      throw std::invalid_argument(what + " is missing generator '" + sys.name(s) + "'");
  return out;
}

} // namespace

std::vector<double> real_map_from_json(const json& j, const CoxeterSystem& sys,
                                       const std::string& what) {
  return map_from_json<double>(j, sys, what);
}

std::vector<int> int_map_from_json(const json& j, const CoxeterSystem& sys,
                                   const std::string& what) {
  return map_from_json<int>(j, sys, what);
}

SignVector sign_map_from_json(const json& j, const CoxeterSystem& sys) {
  std::vector<int> raw = map_from_json<int>(j, sys, "sign vector");
  SignVector eps;
  for (int v : raw) {
    if (v != 1 && v != -1)
      throw std::invalid_argument("sign vector entries must be +1 or -1");
    eps.eps.push_back(static_cast<std::int8_t>(v));
  }
  return eps;
}

json sign_vector_to_json(const CoxeterSystem& sys, const SignVector& eps) {
  json j = json::object();
  for (int s = 0; s < sys.rank(); ++s) j[sys.name(s)] = eps.sign(s);
  return j;
}

json verdict_to_json(const ConvergenceVerdict& v) {
  json j;
  switch (v.result) {
    case ConvergenceResult::converges: j["result"] = "converges"; break;
    case ConvergenceResult::diverges: j["result"] = "diverges"; break;
    case ConvergenceResult::inconclusive_boundary: j["result"] = "inconclusive-boundary"; break;
  }
  j["converges"] = v.converges();
  j["method_conflict"] = v.method_conflict;
  j["denominator"] = {{"min", v.denominator.min_value},
                      {"argmin_t", v.denominator.argmin},
                      {"at_one", v.denominator.at_one},
                      {"sign_change", v.denominator.sign_change},
                      {"finite_group", v.denominator.finite_group}};
  json bfs;
  bfs["ran"] = v.bfs.ran;
  if (v.bfs.ran) {
    bfs["sphere_sums"] = v.bfs.sphere_sums;
    bfs["rho_est"] = v.bfs.rho_est;
    bfs["decisive"] = v.bfs.decisive;
  }
  if (!v.bfs.note.empty()) bfs["note"] = v.bfs.note;
  j["bfs"] = bfs;
  return j;
}

json factoriality_to_json(const CoxeterSystem& sys, const FactorialityReport& rep) {
  json j;
  j["r"] = rep.r;
  j["r_tilde"] = rep.r_tilde;
  json c = json::array(), ct = json::array();
  for (const auto& e : rep.C) c.push_back(sign_vector_to_json(sys, e));
  for (const auto& e : rep.C_tilde) ct.push_back(sign_vector_to_json(sys, e));
  j["C"] = c;
  j["C_tilde"] = ct;
  j["is_factor"] = rep.is_factor;
  json summands = json::array();
  for (const auto& sm : rep.summands) {
    json w = json::object();
    for (int s = 0; s < sys.rank(); ++s) w[sys.name(s)] = sm.weight[static_cast<size_t>(s)];
    summands.push_back({{"eps", sign_vector_to_json(sys, sm.eps)}, {"weight", w}});
  }
  j["summands"] = summands;
  j["warnings"] = rep.warnings;
  return j;
}

json spherical_to_json(const CoxeterSystem& sys, const SphericalReport& rep) {
  json j;
  json d = json::object(), q = json::object();
  for (int s = 0; s < sys.rank(); ++s) {
    d[sys.name(s)] = rep.thickness.d[static_cast<size_t>(s)];
    q[sys.name(s)] = rep.q[static_cast<size_t>(s)];
  }
  j["thickness"] = d;
  j["q"] = q;
  json c = json::array();
  for (const auto& e : rep.C) c.push_back(sign_vector_to_json(sys, e));
  j["C"] = c;
  j["factor_only"] = rep.factor_only;
  j["steinberg_summands"] = rep.steinberg_summands;
  j["decomposition"] = rep.decomposition;
  j["constant_thickness"] = rep.constant_thickness;
  if (!rep.constant_thickness_note.empty())
    j["constant_thickness_note"] = rep.constant_thickness_note;
  if (rep.example_criterion) {
    j["example_family"] = rep.example_family;
    j["example_criterion_converges"] = *rep.example_criterion;
  }
  j["warnings"] = rep.warnings;
  return j;
}

json check_report_to_json(const std::string& suite, const CheckReport& rep) {
  json j;
  j["suite"] = suite;
  j["checks"] = rep.checks;
  j["worst"] = rep.worst;
  j["violation_count"] = rep.violations.size();
  json v = json::array();
  for (size_t i = 0; i < rep.violations.size() && i < 100; ++i)
    v.push_back({{"context", rep.violations[i].context},
                 {"magnitude", rep.violations[i].magnitude}});
  j["violations"] = v;
  return j;
}

std::string word_label(const CoxeterSystem& sys, const Word& w) {
  if (w.is_identity()) return "e";
  bool single = std::all_of(sys.names().begin(), sys.names().end(),
                            [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i && !single) out += " ";
    out += sys.name(w.letter(i));
  }
  return out;
}

} // namespace racg

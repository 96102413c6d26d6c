// Command-line surface: factoriality and growth analyses, verification
// suites, building-side spherical reports, character tables.
//
// Exit codes: 0 ok, 1 violations found, 2 hypothesis error, 3 capacity
// error, 64 usage/input error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "racg/central.hpp"
#include "racg/errors.hpp"
#include "racg/graph_product.hpp"
#include "racg/iwahori.hpp"
#include "racg/json_io.hpp"
#include "racg/operators.hpp"
#include "racg/series.hpp"
#include "racg/version.hpp"

using nlohmann::json;
using namespace racg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitUsage = 64;

struct Options {
  std::string system_path;
  std::string q_json, d_json, a_json, eps_json;
  double r = 2.0;
  double exponent = 1.0;
  int radius = 6;
  int max_len = 12;
  std::uint64_t seed = 1;
  std::size_t cap = 10'000'000;
  std::string format = "json";
  std::string suite;
};

CoxeterSystem load_system(const Options& opt) {
  if (opt.system_path.empty())
    throw std::invalid_argument("--system PATH is required");
  std::ifstream in(opt.system_path);
  if (!in) throw std::invalid_argument("cannot open system file '" + opt.system_path + "'");
  json j;
  in >> j;
  return system_from_json(j);
}

json config_echo(const Options& opt, const CoxeterSystem& sys, const std::string& command) {
  json c;
  c["version"] = kVersion;
  c["schema"] = kReportSchemaVersion;
  c["command"] = command;
  c["system"] = system_to_json(sys);
  if (!opt.q_json.empty()) c["q"] = json::parse(opt.q_json);
  if (!opt.d_json.empty()) c["d"] = json::parse(opt.d_json);
  if (!opt.a_json.empty()) c["a"] = json::parse(opt.a_json);
  if (!opt.eps_json.empty()) c["epsilon"] = json::parse(opt.eps_json);
  c["r"] = opt.r;
  c["radius"] = opt.radius;
  c["max_len"] = opt.max_len;
  c["seed"] = opt.seed;
  return c;
}

// exactly one of q / d accepted where a parameter vector is required
ParameterVector resolve_q(const Options& opt, const CoxeterSystem& sys, std::mt19937_64* rng) {
  if (!opt.q_json.empty() && !opt.d_json.empty())
    throw std::invalid_argument("supply exactly one of --q and --d");
  if (!opt.q_json.empty()) {
    auto vals = real_map_from_json(json::parse(opt.q_json), sys, "--q");
    auto [q, flips] = reduce_parameters(vals);
    if (!flips.is_all_ones())
      std::cerr << "note: parameters above 1 were reduced to (0,1]\n";
    return q;
  }
  if (!opt.d_json.empty()) {
    Thickness d{int_map_from_json(json::parse(opt.d_json), sys, "--d")};
    return thickness_to_parameter_vector(d);
  }
  if (!rng) throw std::invalid_argument("one of --q or --d is required");
  ParameterVector q;
  q.normalized = true;
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  for (int s = 0; s < sys.rank(); ++s) q.q.push_back(dist(*rng));
  return q;
}

RepParameter resolve_a(const Options& opt, const CoxeterSystem& sys, std::mt19937_64* rng,
                       bool nonnegative) {
  if (!opt.a_json.empty())
    return RepParameter::from_a(real_map_from_json(json::parse(opt.a_json), sys, "--a"));
  if (!rng) throw std::invalid_argument("--a is required");
  std::uniform_real_distribution<double> dist(nonnegative ? 0.0 : -0.9, 0.9);
  std::vector<double> a;
  a.reserve(static_cast<size_t>(sys.rank()));
  for (int s = 0; s < sys.rank(); ++s) a.push_back(dist(*rng));
  return RepParameter::from_a(std::move(a));
}

void text_banner(const std::string& command) {
  std::cout << "# racg " << kVersion << " " << command << "\n";
}

void emit(const json& report, const Options& opt) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    if (report.contains("lines"))
      for (const auto& line : report["lines"]) std::cout << line.get<std::string>() << "\n";
    else
      std::cout << report.dump(2) << "\n";
  }
}

int cmd_factoriality(const Options& opt) {
  CoxeterSystem sys = load_system(opt);
  ParameterVector q = resolve_q(opt, sys, nullptr);
  SeriesOptions sopt;
  sopt.max_len = opt.max_len;
  sopt.ball_cap = opt.cap;
  FactorialityReport rep = factoriality_report(sys, q, opt.r, sopt);
  json out = factoriality_to_json(sys, rep);
  out["config"] = config_echo(opt, sys, "factoriality");
  if (opt.format == "text") {
    text_banner("factoriality");
    std::cout << (rep.is_factor ? "factor" : "not a factor") << " (r = " << rep.r
              << ", r~ = " << rep.r_tilde << ", |C| = " << rep.C.size()
              << ", |C~| = " << rep.C_tilde.size() << ")\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
  } else {
    emit(out, opt);
  }
  return kExitOk;
}

int cmd_growth(const Options& opt) {
  CoxeterSystem sys = load_system(opt);
  ParameterVector q = resolve_q(opt, sys, nullptr);
  SignVector eps = opt.eps_json.empty() ? SignVector::all_ones(sys.rank())
                                        : sign_map_from_json(json::parse(opt.eps_json), sys);
  SeriesOptions sopt;
  sopt.max_len = opt.max_len;
  sopt.ball_cap = opt.cap;
  ConvergenceVerdict v = decide_convergence(sys, q, eps, opt.exponent, sopt);
  if (opt.format == "text") {
    text_banner("growth");
    std::cout << "n,c_n\n";
    if (v.bfs.ran)
      for (size_t n = 0; n < v.bfs.sphere_sums.size(); ++n)
        std::cout << n << "," << v.bfs.sphere_sums[n] << "\n";
    std::cout << "verdict: " << verdict_to_json(v)["result"].get<std::string>() << "\n";
  } else {
    json out;
    out["verdict"] = verdict_to_json(v);
    out["sums"] = v.bfs.ran ? json(v.bfs.sphere_sums) : json::array();
    out["config"] = config_echo(opt, sys, "growth");
    emit(out, opt);
  }
  return kExitOk;
}

int cmd_spherical(const Options& opt) {
  CoxeterSystem sys = load_system(opt);
  if (opt.d_json.empty()) throw std::invalid_argument("spherical requires --d");
  Thickness d{int_map_from_json(json::parse(opt.d_json), sys, "--d")};
  SeriesOptions sopt;
  sopt.max_len = opt.max_len;
  sopt.ball_cap = opt.cap;
  SphericalReport rep = spherical_report(sys, d, sopt);
  json out = spherical_to_json(sys, rep);
  out["config"] = config_echo(opt, sys, "spherical");
  if (opt.format == "text") {
    text_banner("spherical");
    std::cout << rep.decomposition << "\n";
    if (!rep.constant_thickness_note.empty()) std::cout << rep.constant_thickness_note << "\n";
  } else {
    emit(out, opt);
  }
  return kExitOk;
}

int cmd_characters(const Options& opt) {
  CoxeterSystem sys = load_system(opt);
  if (opt.a_json.empty()) throw std::invalid_argument("characters requires --a");
  RepParameter rep = resolve_a(opt, sys, nullptr, false);
  int max_len = std::min(opt.max_len, 8);
  BallBasis ball = enumerate_ball(sys, max_len + 1, {opt.cap, true, true});
  std::vector<Word> words(ball.words().begin(), ball.words().begin() + ball.sphere_end(max_len));
  auto values = character_table(ball, rep, words);
  if (opt.format == "text") {
    text_banner("characters");
    for (size_t i = 0; i < words.size(); ++i)
      std::cout << word_label(sys, words[i]) << ";" << values[i] << "\n";
  } else {
    json rows = json::array();
    for (size_t i = 0; i < words.size(); ++i)
      rows.push_back({{"word", word_label(sys, words[i])}, {"value", values[i]}});
    json out;
    out["characters"] = rows;
    out["config"] = config_echo(opt, sys, "characters");
    emit(out, opt);
  }
  return kExitOk;
}

CheckReport run_suite(const std::string& suite, const Options& opt, const CoxeterSystem& sys,
                      std::mt19937_64& rng, json& extra) {
  if (suite == "hecke-relations") {
    BallBasis ball = enumerate_ball(sys, opt.radius, {opt.cap, true, true});
    ParameterVector q = resolve_q(opt, sys, &rng);
    CheckReport rep = quadratic_relation_check(ball, q);
    CheckReport comm = commuting_relation_check(ball, q);
    CheckReport lr = left_right_commutation_check(ball, q);
    rep.checks += comm.checks + lr.checks;
    rep.worst = std::max({rep.worst, comm.worst, lr.worst});
    rep.violations.insert(rep.violations.end(), comm.violations.begin(), comm.violations.end());
    rep.violations.insert(rep.violations.end(), lr.violations.begin(), lr.violations.end());
    return rep;
  }
  if (suite == "eigenvectors") {
    BallBasis ball = enumerate_ball(sys, opt.radius, {opt.cap, true, true});
    ParameterVector q = resolve_q(opt, sys, &rng);
    auto cs = c_sets(sys, q, opt.r, {});
    extra["convergent_eps"] = cs.C.size();
    CheckReport rep;
    for (const auto& eps : cs.C) {
      CheckReport one = eigenvector_relation_check(ball, q, eps);
      rep.checks += one.checks;
      rep.worst = std::max(rep.worst, one.worst);
      rep.violations.insert(rep.violations.end(), one.violations.begin(), one.violations.end());
    }
    return rep;
  }
  if (suite == "central") {
    BallBasis ball = enumerate_ball(sys, opt.radius, {opt.cap, true, true});
    ParameterVector q = resolve_q(opt, sys, &rng);
    CentralSpace space = solve_central_space(ball, q, 1);
    extra["dimension"] = space.dimension; // informational: boundary inflates it
    CheckReport rep;
    std::vector<double> delta_e(static_cast<size_t>(ball.size()), 0.0);
    delta_e[0] = 1.0;
    double r0 = space.containment_residual(delta_e);
    rep.record(r0 > 1e-8, r0, "containment of delta_e");
    auto cs = c_sets(sys, q, opt.r, {});
    for (const auto& eps : cs.C) {
      auto eta = eigenvector_coeffs(ball, q, eps);
      double r1 = space.containment_residual(eta);
      rep.record(r1 > 1e-8, r1, "containment of a convergent eigenvector");
    }
    for (const auto& v : space.basis) {
      double r2 = space.constraint_residual(v);
      rep.record(r2 > 1e-8, r2, "constraint residual of a basis vector");
    }
    return rep;
  }
  if (suite == "double-coset") {
    BallBasis ball = enumerate_ball(sys, opt.radius, {opt.cap, true, true});
    ParameterVector q = resolve_q(opt, sys, &rng);
    auto eta = eigenvector_coeffs(ball, q, SignVector::all_ones(sys.rank()));
    CheckReport rep;
    for (int s = 0; s < sys.rank(); ++s) {
      for (int t = s + 1; t < sys.rank(); ++t) {
        if (sys.commutes(s, t)) continue;
        for (int w = 0; w < ball.size() && rep.checks < 40; ++w) {
          if (ball.length(w) + 4 > ball.radius() || w == 0) continue;
          const Word& word = ball.word(w);
          if (sys.is_left_descent(word, s) || sys.is_left_descent(word, t) ||
              sys.is_right_descent(word, s) || sys.is_right_descent(word, t))
            continue;
          bool sc = sys.prepend(word, s) == sys.append(word, s);
          bool tc = sys.prepend(word, t) == sys.append(word, t);
          if (sc && tc) continue;
          auto fit = double_coset_form_check(ball, q, s, t, word, eta);
          rep.record(fit.residual > 1e-9 || std::abs(fit.b) > 1e-9 || std::abs(fit.c) > 1e-9,
                     fit.residual,
                     "eigenvector profile on coset at " + word_label(sys, word));
        }
      }
    }
    CheckReport fs = fundamental_solution_check(q.q[0], q.q[sys.rank() > 1 ? 1 : 0], 20);
    rep.checks += fs.checks;
    rep.worst = std::max(rep.worst, fs.worst);
    rep.violations.insert(rep.violations.end(), fs.violations.begin(), fs.violations.end());
    return rep;
  }
  if (suite == "characters") {
    RepParameter rep_a = resolve_a(opt, sys, &rng, false);
    CheckReport rep;
    BallBasis ball = enumerate_ball(sys, 5, {opt.cap, true, true});
    // closed forms at lengths 1..4 against matrix evaluation
    for (int s = 0; s < sys.rank(); ++s) {
      double tau = character(ball, rep_a, sys.normalize(std::vector<int>{s}));
      double gap = std::abs(tau - rep_a.a[static_cast<size_t>(s)]);
      rep.record(gap > 1e-9, gap, "tau(" + sys.name(s) + ")");
      for (int t = 0; t < sys.rank(); ++t) {
        if (t == s) continue;
        double tau2 = character(ball, rep_a, sys.multiply(sys.normalize(std::vector<int>{s}),
                                                          sys.normalize(std::vector<int>{t})));
        double gap2 = std::abs(tau2 - rep_a.a[static_cast<size_t>(s)] * rep_a.a[static_cast<size_t>(t)]);
        rep.record(gap2 > 1e-9, gap2, "tau(" + sys.name(s) + sys.name(t) + ")");
        if (!sys.commutes(s, t)) {
          Word stst = sys.normalize(std::vector<int>{s, t, s, t});
          double as = rep_a.a[static_cast<size_t>(s)], at = rep_a.a[static_cast<size_t>(t)];
          double gap4 = std::abs(character(ball, rep_a, stst) - (as * as + at * at - as * as * at * at));
          rep.record(gap4 > 1e-9, gap4, "tau((" + sys.name(s) + sys.name(t) + ")^2)");
        }
      }
    }
    return rep;
  }
  if (suite == "translation") {
    BallBasis ball = enumerate_ball(sys, opt.radius, {opt.cap, true, true});
    RepParameter rep_a = resolve_a(opt, sys, &rng, true);
    return hecke_translation_check(ball, rep_a);
  }
  if (suite == "iwahori") {
    BallBasis ball = enumerate_ball(sys, std::min(opt.radius, 5), {opt.cap, true, true});
    Thickness d;
    if (!opt.d_json.empty())
      d.d = int_map_from_json(json::parse(opt.d_json), sys, "--d");
    else
      for (int s = 0; s < sys.rank(); ++s)
        d.d.push_back(2 + static_cast<int>((opt.seed + static_cast<std::uint64_t>(s)) % 3));
    PhiTransport phi(ball, d);
    CheckReport rep = phi.homomorphism_check();
    for (CheckReport part : {phi.quadratic_transport_check(), phi.positivity_check()}) {
      rep.checks += part.checks;
      rep.worst = std::max(rep.worst, part.worst);
      rep.violations.insert(rep.violations.end(), part.violations.begin(), part.violations.end());
    }
    return rep;
  }
  throw CLI::ValidationError("--suite",
                             "unknown suite '" + suite +
                                 "' (expected hecke-relations, eigenvectors, central, "
                                 "double-coset, characters, translation, iwahori)");
}

int cmd_verify(const Options& opt) {
  CoxeterSystem sys = load_system(opt);
  std::mt19937_64 rng(opt.seed);
  json extra = json::object();
  CheckReport rep = run_suite(opt.suite, opt, sys, rng, extra);
  json out = check_report_to_json(opt.suite, rep);
  out["config"] = config_echo(opt, sys, "verify " + opt.suite);
  for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
  if (opt.format == "text") {
    text_banner("verify " + opt.suite);
    std::cout << "suite " << opt.suite << ": " << rep.checks << " checks, "
              << rep.violations.size() << " violations, worst " << rep.worst << "\n";
    for (size_t i = 0; i < rep.violations.size() && i < 20; ++i)
      std::cout << "  " << rep.violations[i].context << " (" << rep.violations[i].magnitude
                << ")\n";
  } else {
    emit(out, opt);
  }
  return rep.ok() ? kExitOk : kExitViolations;
}

int run(int argc, char** argv) {
  CLI::App app{"analyses and verification suites for multiparameter Hecke algebras of "
               "right-angled Coxeter systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("racg ") + kVersion);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--system", opt.system_path, "path to the system JSON file");
    cmd->add_option("--q", opt.q_json, "deformation parameters, JSON map name -> positive real");
    cmd->add_option("--d", opt.d_json, "building thickness, JSON map name -> integer >= 2");
    cmd->add_option("--a", opt.a_json, "representation parameters, JSON map name -> (-1,1)");
    cmd->add_option("--epsilon", opt.eps_json, "sign vector, JSON map name -> +1/-1");
    cmd->add_option("--r", opt.r, "exponent r in (1, infinity)");
    cmd->add_option("--exponent", opt.exponent, "series exponent on q (growth command)");
    cmd->add_option("--radius", opt.radius, "truncation ball radius");
    cmd->add_option("--max-len", opt.max_len, "series depth / maximal word length");
    cmd->add_option("--seed", opt.seed, "seed for randomized suites");
    cmd->add_option("--cap", opt.cap, "ball element cap");
    cmd->add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* fact = app.add_subcommand("factoriality", "factoriality verdict and the sets C, C~");
  add_common(fact);
  CLI::App* growth = app.add_subcommand("growth", "weighted sphere sums and convergence verdict");
  add_common(growth);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", opt.suite, "one of hecke-relations, eigenvectors, central, "
                                         "double-coset, characters, translation, iwahori");
  add_common(verify);
  CLI::App* spherical = app.add_subcommand("spherical", "building-side decomposition report");
  add_common(spherical);
  CLI::App* characters = app.add_subcommand("characters", "character table of the deformed family");
  add_common(characters);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (fact->parsed()) return cmd_factoriality(opt);
    if (growth->parsed()) return cmd_growth(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (spherical->parsed()) return cmd_spherical(opt);
    if (characters->parsed()) return cmd_characters(opt);
    return kExitUsage;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return 70;
  }
}

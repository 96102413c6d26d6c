// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Tolerances are pinned here, in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "racg/central.hpp"
#include "racg/graph_product.hpp"
#include "racg/iwahori.hpp"
#include "racg/operators.hpp"
#include "racg/series.hpp"

using namespace racg;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

CoxeterSystem free_product(int n) { return CoxeterSystem(n, {}); }

ParameterVector make_q(std::vector<double> q) {
  ParameterVector p;
  p.q = std::move(q);
  p.normalized = true;
  return p;
}

bool convergent(const CoxeterSystem& sys, const ParameterVector& q, const SeriesOptions& opt) {
  // boundary verdicts count as divergent (series of an infinite group at
  // its radius of convergence)
  return decide_convergence(sys, q, SignVector::all_ones(sys.rank()), 1.0, opt).converges();
}

// ---------------------------------------------------------------------

bool criterion1_normal_forms(std::string& detail) {
  std::size_t words = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    for (const CoxeterSystem& sys : oracle::all_systems_of_rank(rank)) {
      auto oex = oracle::build_exhaustive_oracle(sys, 8);
      for (std::size_t i = 0; i < oex.total(); ++i) {
        std::string raw = oex.word_at(i);
        std::vector<int> letters(raw.begin(), raw.end());
        std::string expect = oex.word_at(static_cast<size_t>(oex.canonical_of[i]));
        if (sys.normalize(letters).letters() != expect) {
          detail = "mismatch on a word of length " + std::to_string(raw.size());
          return false;
        }
        ++words;
      }
    }
  }
  detail = std::to_string(words) + " raw words across 75 systems, exact agreement";
  return true;
}

bool criterion2_growth_criteria(std::string& detail) {
  SeriesOptions opt;
  opt.max_len = 8;
  int checked = 0;

  // (a) Z/2^2 * Z/2: q_u ((1+q_s)(1+q_t) - 1) < 1
  CoxeterSystem tri(3, {{0, 1}});
  for (int ds = 2; ds <= 6; ++ds)
    for (int dt = 2; dt <= 6; ++dt)
      for (int du = 2; du <= 6; ++du) {
        Rational qs(1, ds), qt(1, dt), qu(1, du);
        bool closed = qu * ((Rational(1) + qs) * (Rational(1) + qt) - Rational(1)) < Rational(1);
        bool got = convergent(tri, make_q({1.0 / ds, 1.0 / dt, 1.0 / du}), opt);
        if (closed != got) {
          detail = "family (a) mismatch at d = (" + std::to_string(ds) + "," + std::to_string(dt) +
                   "," + std::to_string(du) + ")";
          return false;
        }
        ++checked;
      }

  // (b) Z/2^2 * Z/2^2: ((1+q_s)(1+q_t)-1)((1+q_u)(1+q_v)-1) < 1
  CoxeterSystem sq(4, {{0, 1}, {2, 3}});
  for (int ds = 2; ds <= 6; ++ds)
    for (int dt = 2; dt <= 6; ++dt)
      for (int du = 2; du <= 6; ++du)
        for (int dv = 2; dv <= 6; ++dv) {
          Rational qs(1, ds), qt(1, dt), qu(1, du), qv(1, dv);
          Rational left = (Rational(1) + qs) * (Rational(1) + qt) - Rational(1);
          Rational right = (Rational(1) + qu) * (Rational(1) + qv) - Rational(1);
          bool closed = left * right < Rational(1);
          bool got = convergent(sq, make_q({1.0 / ds, 1.0 / dt, 1.0 / du, 1.0 / dv}), opt);
          if (closed != got) {
            detail = "family (b) mismatch at d = (" + std::to_string(ds) + "," +
                     std::to_string(dt) + "," + std::to_string(du) + "," + std::to_string(dv) + ")";
            return false;
          }
          ++checked;
        }

  // (c) Z/2^{*k}: summable iff d > k - 1
  for (int k = 3; k <= 6; ++k) {
    CoxeterSystem fr = free_product(k);
    for (int d = 2; d <= 6; ++d) {
      bool closed = d > k - 1;
      bool got = convergent(fr, make_q(std::vector<double>(static_cast<size_t>(k), 1.0 / d)), opt);
      if (closed != got) {
        detail = "family (c) mismatch at k = " + std::to_string(k) + ", d = " + std::to_string(d);
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " thickness combinations, zero mismatches";
  return true;
}

bool criterion3_factoriality(std::string& detail) {
  auto r1 = factoriality_report(free_product(4), make_q({1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3}), 2.0);
  if (!r1.is_factor) {
    detail = "free product at d = 3 must be a factor";
    return false;
  }
  auto r2 = factoriality_report(free_product(4), make_q({0.25, 0.25, 0.25, 0.25}), 2.0);
  if (r2.is_factor || r2.C_tilde.size() != 1 || !r2.C_tilde[0].is_all_ones()) {
    detail = "free product at d = 4 must split off exactly the all-ones eigenvector";
    return false;
  }
  auto r3 = factoriality_report(CoxeterSystem(3, {{0, 1}}), make_q({0.5, 0.5, 0.5}), 2.0);
  if (r3.is_factor) {
    detail = "triangle family at d = (2,2,2) must not be a factor";
    return false;
  }
  detail = "three verdicts exact";
  return true;
}

bool criterion4_hecke_relations(std::string& detail) {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  double worst = 0.0;
  for (const CoxeterSystem& sys :
       {free_product(4), CoxeterSystem(4, {{0, 1}, {2, 3}})}) {
    BallBasis ball = enumerate_ball(sys, 8);
    for (int grid = 0; grid < 10; ++grid) {
      ParameterVector q = make_q({dist(rng), dist(rng), dist(rng), dist(rng)});
      auto quad = quadratic_relation_check(ball, q, 1e-9);
      auto comm = commuting_relation_check(ball, q, 1e-9);
      worst = std::max({worst, quad.worst, comm.worst});
      if (!quad.ok() || !comm.ok()) {
        detail = "residual above 1e-9 on grid " + std::to_string(grid);
        return false;
      }
    }
  }
  detail = "20 grids on radius-8 balls, worst residual " + std::to_string(worst);
  return true;
}

bool criterion5_eigenvector_relation(std::string& detail) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> qdist(0.05, 0.6);
  int systems_done = 0, eigenvectors = 0;
  while (systems_done < 10) {
    int rank = 3 + static_cast<int>(rng() % 2);
    auto all = oracle::all_systems_of_rank(rank);
    const CoxeterSystem& sys = all[rng() % all.size()];
    ParameterVector q;
    q.normalized = true;
    for (int s = 0; s < rank; ++s) q.q.push_back(qdist(rng));
    ++systems_done;
    auto cs = c_sets(sys, q, 2.0, {});
    BallBasis ball = enumerate_ball(sys, 6);
    for (const auto& eps : cs.C) {
      auto rep = eigenvector_relation_check(ball, q, eps, 1e-9);
      if (!rep.ok()) {
        detail = "residual above 1e-9";
        return false;
      }
      ++eigenvectors;
    }
  }
  detail = std::to_string(systems_done) + " systems, " + std::to_string(eigenvectors) +
           " convergent eigenvectors checked";
  return true;
}

bool criterion6_central_containment(std::string& detail) {
  struct Case {
    CoxeterSystem sys;
    ParameterVector q;
  };
  std::vector<Case> cases;
  cases.push_back({free_product(3), make_q({1.0 / 9, 1.0 / 9, 1.0 / 9})});
  cases.push_back({CoxeterSystem(3, {{0, 1}}), make_q({0.5, 0.5, 0.1})});
  int contained = 0;
  for (const auto& c : cases) {
    BallBasis ball = enumerate_ball(c.sys, 6);
    CentralSpace space = solve_central_space(ball, c.q, 1);
    std::vector<double> delta_e(static_cast<size_t>(ball.size()), 0.0);
    delta_e[0] = 1.0;
    if (space.containment_residual(delta_e) > 1e-8) {
      detail = "delta_e escapes the null space";
      return false;
    }
    ++contained;
    for (const auto& eps : c_sets(c.sys, c.q, 2.0, {}).C) {
      auto eta = eigenvector_coeffs(ball, c.q, eps);
      if (space.containment_residual(eta) > 1e-8) {
        detail = "a convergent eigenvector escapes the null space";
        return false;
      }
      ++contained;
    }
  }
  detail = std::to_string(contained) + " vectors contained to 1e-8 (radius 6, margin 1)";
  return true;
}

bool criterion7_fundamental_solutions(std::string& detail) {
  // relative residual: the solutions grow like q^{-n/2}, so an absolute
  // 1e-12 would be below double precision at the grid corner
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      auto rep = fundamental_solution_check(i / 10.0, j / 10.0, 20, 1e-12);
      if (!rep.ok()) {
        detail = "float recurrence residual above 1e-12 at q = (" + std::to_string(i / 10.0) +
                 "," + std::to_string(j / 10.0) + ")";
        return false;
      }
    }
  }
  for (int i = 1; i <= 10; ++i) {
    auto exact = fundamental_solution_check_exact(Rational(i, 10), Rational(i, 10));
    if (!exact.ok()) {
      detail = "exact identity fails at q_s = q_t = " + std::to_string(i) + "/10";
      return false;
    }
  }
  detail = "10x10 grid to n = 20 plus exact rational identities";
  return true;
}

bool criterion8_character_formulas(std::string& detail) {
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> dist(-0.9, 0.9);
  CoxeterSystem sys = free_product(3);
  BallBasis ball = enumerate_ball(sys, 5);
  Word s = sys.normalize(std::vector<int>{0});
  Word st = sys.normalize(std::vector<int>{0, 1});
  Word stu = sys.normalize(std::vector<int>{0, 1, 2});
  Word stst = sys.normalize(std::vector<int>{0, 1, 0, 1});
  for (int trial = 0; trial < 100; ++trial) {
    double a0 = dist(rng), a1 = dist(rng), a2 = dist(rng);
    RepParameter rep = RepParameter::from_a({a0, a1, a2});
    if (std::abs(character(ball, rep, s) - a0) > 1e-9 ||
        std::abs(character(ball, rep, st) - a0 * a1) > 1e-9 ||
        std::abs(character(ball, rep, stu) - a0 * a1 * a2) > 1e-9 ||
        std::abs(character(ball, rep, stst) - (a0 * a0 + a1 * a1 - a0 * a0 * a1 * a1)) > 1e-9) {
      detail = "closed form mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  RepParameter half = RepParameter::from_a({0.5, 0.5, 0.0});
  if (std::abs(character(ball, half, stst) - 7.0 / 16.0) > 1e-12) {
    detail = "alternating word at a = (1/2, 1/2) must equal 7/16";
    return false;
  }
  detail = "100 random parameters, all four closed forms";
  return true;
}

bool criterion9_translation(std::string& detail) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(0.0, 0.9);
  double worst = 0.0;
  for (const CoxeterSystem& sys : {free_product(3), CoxeterSystem(3, {{0, 1}})}) {
    BallBasis ball = enumerate_ball(sys, 6);
    for (int trial = 0; trial < 25; ++trial) {
      RepParameter rep = RepParameter::from_a({dist(rng), dist(rng), dist(rng)});
      auto check = hecke_translation_check(ball, rep, 1e-12);
      worst = std::max(worst, check.worst);
      if (!check.ok()) {
        detail = "entrywise gap above 1e-12";
        return false;
      }
    }
  }
  detail = "50 random parameters, worst entrywise gap " + std::to_string(worst);
  return true;
}

bool criterion10_iwahori(std::string& detail) {
  int combos = 0;
  for (const CoxeterSystem& sys : {free_product(3), CoxeterSystem(3, {{0, 1}})}) {
    BallBasis ball = enumerate_ball(sys, 5);
    for (int d0 : {2, 3, 4})
      for (int d1 : {2, 3, 4})
        for (int d2 : {2, 3, 4}) {
          PhiTransport phi(ball, Thickness{{d0, d1, d2}});
          if (!phi.homomorphism_check().ok()) {
            detail = "homomorphism fails at d = (" + std::to_string(d0) + "," +
                     std::to_string(d1) + "," + std::to_string(d2) + ")";
            return false;
          }
          if (!phi.quadratic_transport_check().ok()) {
            detail = "quadratic transport fails at d = (" + std::to_string(d0) + "," +
                     std::to_string(d1) + "," + std::to_string(d2) + ")";
            return false;
          }
          ++combos;
        }
  }
  detail = std::to_string(combos) + " thickness combinations, exact rational arithmetic";
  return true;
}

bool criterion11_character_separation(std::string& detail) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  CoxeterSystem sys = free_product(3);
  int max_seen = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a = {dist(rng), dist(rng), dist(rng)};
    std::vector<double> b = {dist(rng), dist(rng), dist(rng)};
    if (a == b) b[0] += 0.1;
    auto w = find_distinguishing_word(sys, RepParameter::from_a(a), RepParameter::from_a(b), 4);
    if (!w || w->length() > 4) {
      detail = "pair not separated within length 4";
      return false;
    }
    max_seen = std::max(max_seen, w->length());
  }
  detail = "50 pairs separated, longest witness length " + std::to_string(max_seen);
  return true;
}

} // namespace

int main() {
  std::printf("acceptance suite (library version)\n");
  criterion(1, "normal-form oracle equivalence, |S| <= 4, words <= 8", criterion1_normal_forms);
  criterion(2, "growth criteria reproduction, thickness 2..6", criterion2_growth_criteria);
  criterion(3, "factoriality verdicts", criterion3_factoriality);
  criterion(4, "Hecke quadratic/commuting relations, radius 8, 20 grids", criterion4_hecke_relations);
  criterion(5, "eigenvector relation for every convergent sign vector", criterion5_eigenvector_relation);
  criterion(6, "central null-space containment, radius 6, margin 1", criterion6_central_containment);
  criterion(7, "double-coset fundamental solutions, n <= 20", criterion7_fundamental_solutions);
  criterion(8, "character closed forms, 100 random parameters", criterion8_character_formulas);
  criterion(9, "Hecke translation identity, 50 random parameters", criterion9_translation);
  criterion(10, "Iwahori isomorphism and quadratic transport, d in {2,3,4}^S", criterion10_iwahori);
  criterion(11, "character separation within length 4, 50 pairs", criterion11_character_separation);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}

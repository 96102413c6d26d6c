#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <iostream>

#include "oracle.hpp"
#include "racg/central.hpp"

using namespace racg;

namespace {

const CoxeterSystem kFree3(3, {});
const CoxeterSystem kTriangle(3, {{0, 1}}); // s,t commute; u free

ParameterVector make_q(std::vector<double> q) {
  ParameterVector p;
  p.q = std::move(q);
  p.normalized = true;
  return p;
}

} // namespace

TEST_CASE("central constraint pairs match a brute-force scan") {
  for (const CoxeterSystem* sys : {&kFree3, &kTriangle}) {
    BallBasis ball = enumerate_ball(*sys, 5);
    auto pairs = central_constraint_pairs(ball, 0);

    // double-loop oracle over all (w, s)
    std::vector<std::pair<int, int>> expect;
    for (int j = 0; j < ball.size(); ++j) {
      for (int s = 0; s < sys->rank(); ++s) {
        Word sws = sys->append(sys->prepend(ball.word(j), s), s);
        if (sws.length() == ball.length(j) + 2 && sws.length() <= ball.radius())
          expect.emplace_back(j, s);
      }
    }
    CHECK(pairs == expect);

    // no instance references a word outside the ball, and (e, s) is never
    // an instance since s e s = e
    for (auto [j, s] : pairs) {
      CHECK(ball.length(j) + 2 <= ball.radius());
      CHECK_FALSE((j == 0));
    }
  }
}

TEST_CASE("delta_e and eigenvector restrictions satisfy the constraints") {
  BallBasis ball = enumerate_ball(kTriangle, 6);
  ParameterVector q = make_q({0.5, 0.5, 0.1});
  CentralSpace space = solve_central_space(ball, q, 1);

  std::vector<double> delta_e(static_cast<size_t>(ball.size()), 0.0);
  delta_e[0] = 1.0;
  CHECK(space.constraint_residual(delta_e) == 0.0);

  SignVector ones = SignVector::all_ones(3);
  auto eta = eigenvector_coeffs(ball, q, ones);
  CHECK(space.constraint_residual(eta) < 1e-12);
}

TEST_CASE("solved null space contains delta_e and every convergent eigenvector") {
  // q = (0.5, 0.5, 0.1) on Z/2^2 * Z/2: C at exponent 1 is exactly
  // { eps : eps_u = +1 }, by the closed-form criterion
  BallBasis ball = enumerate_ball(kTriangle, 6);
  ParameterVector q = make_q({0.5, 0.5, 0.1});
  auto cs = c_sets(ball.system(), q, 2.0, {});
  REQUIRE(cs.C.size() == 4);
  for (const auto& e : cs.C) CHECK(e.sign(2) == 1);

  CentralSpace space = solve_central_space(ball, q, 1);
  CHECK(space.dimension >= 1 + static_cast<int>(cs.C.size()));
  std::cout << "central null-space dimension (radius 6, margin 1): " << space.dimension
            << " with " << cs.C.size() << " convergent eigenvectors\n";

  std::vector<double> delta_e(static_cast<size_t>(ball.size()), 0.0);
  delta_e[0] = 1.0;
  CHECK(space.containment_residual(delta_e) < 1e-8);
  for (const auto& eps : cs.C) {
    auto eta = eigenvector_coeffs(ball, q, eps);
    CHECK(space.containment_residual(eta) < 1e-8);
  }

  // returned basis vectors satisfy the constraints
  for (const auto& v : space.basis) CHECK(space.constraint_residual(v) < 1e-8);
}

TEST_CASE("containment also holds on the free product") {
  BallBasis ball = enumerate_ball(kFree3, 6);
  ParameterVector q = make_q({1.0 / 9, 1.0 / 9, 1.0 / 9});
  auto cs = c_sets(ball.system(), q, 2.0, {});
  REQUIRE(!cs.C.empty());
  CentralSpace space = solve_central_space(ball, q, 1);
  for (const auto& eps : cs.C) {
    auto eta = eigenvector_coeffs(ball, q, eps);
    CHECK(space.containment_residual(eta) < 1e-8);
  }
}

TEST_CASE("double-coset fit: eigenvector restriction is a pure first profile") {
  BallBasis ball = enumerate_ball(kFree3, 7);
  ParameterVector q = make_q({0.25, 0.5, 0.7});
  auto eta = eigenvector_coeffs(ball, q, SignVector::all_ones(3));

  // coset <s,t> u <s,t>, shortest element u (index 2)
  Word u = kFree3.normalize(std::vector<int>{2});
  auto fit = double_coset_form_check(ball, q, 0, 1, u, eta);
  CHECK(fit.points > 10);
  CHECK(fit.a == doctest::Approx(eta[static_cast<size_t>(ball.find(u))]));
  CHECK(std::abs(fit.b) < 1e-12);
  CHECK(std::abs(fit.c) < 1e-12);
  CHECK(fit.residual < 1e-9);
}

TEST_CASE("double-coset fit: delta_e on a coset avoiding e") {
  BallBasis ball = enumerate_ball(kFree3, 6);
  ParameterVector q = make_q({0.25, 0.5, 0.7});
  std::vector<double> delta_e(static_cast<size_t>(ball.size()), 0.0);
  delta_e[0] = 1.0;
  Word u = kFree3.normalize(std::vector<int>{2});
  auto fit = double_coset_form_check(ball, q, 0, 1, u, delta_e);
  CHECK(std::abs(fit.a) < 1e-12);
  CHECK(std::abs(fit.b) < 1e-12);
  CHECK(std::abs(fit.c) < 1e-12);
  CHECK(fit.residual < 1e-12);
}

TEST_CASE("double-coset fit: mixed combination keeps b = 0 when q_s < q_t") {
  // q_s < q_t, so admissible profiles are a (all +1) and c (+1 at s, -1 at t)
  BallBasis ball = enumerate_ball(kFree3, 7);
  ParameterVector q = make_q({0.2, 0.8, 0.5});
  auto eta1 = eigenvector_coeffs(ball, q, SignVector::all_ones(3));
  auto etac = eigenvector_coeffs(ball, q, SignVector{{1, -1, 1}});
  std::vector<double> xi(eta1.size());
  for (size_t i = 0; i < xi.size(); ++i) xi[i] = 0.7 * eta1[i] - 1.3 * etac[i];

  Word u = kFree3.normalize(std::vector<int>{2});
  auto fit = double_coset_form_check(ball, q, 0, 1, u, xi);
  CHECK(fit.b == 0.0); // structurally excluded
  CHECK(fit.residual < 1e-9);
  double eu = eta1[static_cast<size_t>(ball.find(u))];
  double cu = etac[static_cast<size_t>(ball.find(u))];
  CHECK(fit.a == doctest::Approx(0.7 * eu));
  CHECK(fit.c == doctest::Approx(-1.3 * cu));
}

TEST_CASE("double-coset fit: preconditions") {
  BallBasis ball = enumerate_ball(kTriangle, 6);
  ParameterVector q = make_q({0.25, 0.5, 0.7});
  std::vector<double> xi(static_cast<size_t>(ball.size()), 0.0);
  // commuting pair rejected
  CHECK_THROWS_AS(double_coset_form_check(ball, q, 0, 1, Word(), xi), std::invalid_argument);
  // degenerate coset: e commutes with everything
  CHECK_THROWS_AS(double_coset_form_check(ball, q, 0, 2, Word(), xi), std::invalid_argument);
  // not the shortest element
  Word u2 = kTriangle.normalize(std::vector<int>{2});
  CHECK_THROWS_AS(double_coset_form_check(ball, q, 0, 2, u2, xi), std::invalid_argument);
}

TEST_CASE("double-coset fit handles w commuting with s") {
  // In Z/2^2 * Z/2 take the coset <t,u> s <t,u>: s commutes with t = 0? No:
  // generators are s=0,t=1,u=2 with {0,1} commuting. Use pair (1,2) = (t,u)
  // and w = s: w commutes with t but not with u, so the coset is
  // non-degenerate and exercises the commuting-absorption branch.
  BallBasis ball = enumerate_ball(kTriangle, 7);
  ParameterVector q = make_q({0.3, 0.25, 0.5});
  auto eta = eigenvector_coeffs(ball, q, SignVector::all_ones(3));
  Word s = kTriangle.normalize(std::vector<int>{0});
  auto fit = double_coset_form_check(ball, q, 1, 2, s, eta);
  CHECK(fit.a == doctest::Approx(eta[static_cast<size_t>(ball.find(s))]));
  CHECK(fit.residual < 1e-9);
}

TEST_CASE("fundamental solutions satisfy both recurrences, float grid") {
  auto rep = fundamental_solution_check(0.25, 0.7, 20);
  CHECK(rep.ok());
  CHECK(rep.worst < 1e-12);

  // degenerate q_s = 1 (p_s = 0) still fine
  auto rep1 = fundamental_solution_check(1.0, 0.5, 20);
  CHECK(rep1.ok());

  CHECK_THROWS_AS(fundamental_solution_check(0.0, 0.5, 5), std::invalid_argument);
}

TEST_CASE("fundamental solutions: exact ring identities and worked identity") {
  for (auto [ns, ds] : {std::pair{1, 4}, {2, 3}, {1, 1}, {3, 10}}) {
    for (auto [nt, dt] : {std::pair{1, 2}, {5, 7}, {1, 1}}) {
      auto rep = fundamental_solution_check_exact(Rational(ns, ds), Rational(nt, dt));
      CHECK(rep.ok());
    }
  }
}

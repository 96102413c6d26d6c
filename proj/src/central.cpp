#include "racg/central.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace racg {

std::vector<std::pair<int, int>> central_constraint_pairs(const BallBasis& ball, int margin) {
  std::vector<std::pair<int, int>> pairs;
  const int rank = ball.system().rank();
  const int max_len = ball.radius() - margin;
  for (int j = 0; j < ball.size(); ++j) {
    if (ball.length(j) + 2 > max_len) continue;
    for (int s = 0; s < rank; ++s) {
      int sw = ball.left_mult(j, s);
      if (sw < 0 || ball.length(sw) != ball.length(j) + 1) continue;
      int sws = ball.right_mult(sw, s);
      if (sws < 0 || ball.length(sws) != ball.length(j) + 2) continue;
      pairs.emplace_back(j, s);
    }
  }
  return pairs;
}

double CentralSpace::containment_residual(std::span<const double> v) const {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 == 0.0) return 0.0;
  std::vector<double> res(v.begin(), v.end());
  for (const auto& b : basis) {
    double dot = 0.0;
    for (size_t i = 0; i < b.size(); ++i) dot += b[i] * v[i];
    for (size_t i = 0; i < b.size(); ++i) res[i] -= dot * b[i];
  }
  double r2 = 0.0;
  for (double x : res) r2 += x * x;
  return std::sqrt(r2 / norm2);
}

double CentralSpace::constraint_residual(std::span<const double> v) const {
  double worst = 0.0;
  for (const auto& row : rows) {
    double acc = 0.0;
    for (auto [i, c] : row) acc += c * v[static_cast<size_t>(i)];
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

CentralSpace solve_central_space(const BallBasis& ball, const ParameterVector& q, int margin,
                                 double rel_cutoff) {
  if (!q.normalized) throw std::invalid_argument("solve_central_space: q must be normalized");
  const int n = ball.size();
  CentralSpace space;

  auto pairs = central_constraint_pairs(ball, margin);
  for (auto [j, s] : pairs) {
    int sw = ball.left_mult(j, s);
    int ws = ball.right_mult(j, s);
    int sws = ball.right_mult(sw, s);
    double ps = (q.q[static_cast<size_t>(s)] - 1.0) / std::sqrt(q.q[static_cast<size_t>(s)]);
    if (sw != ws) space.rows.push_back({{sw, 1.0}, {ws, -1.0}});
    space.rows.push_back({{sws, 1.0}, {j, -1.0}, {sw, -ps}});
  }

  const int m = static_cast<int>(space.rows.size());
  if (m == 0) {
    for (int i = 0; i < n; ++i) {
      std::vector<double> v(static_cast<size_t>(n), 0.0);
      v[static_cast<size_t>(i)] = 1.0;
      space.basis.push_back(std::move(v));
    }
    space.dimension = n;
    return space;
  }

  // SVD of the stacked constraint matrix itself; a normal-matrix route
  // would square the conditioning and smear exact kernel directions up to
  // the cutoff scale
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, n);
  for (int r = 0; r < m; ++r)
    for (auto [i, c] : space.rows[static_cast<size_t>(r)]) A(r, i) = c;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues(); // descending, length min(m, n)
  const int nsv = static_cast<int>(sigma.size());
  double cutoff = rel_cutoff * (nsv > 0 ? sigma(0) : 0.0);

  space.singular_values.assign(sigma.data(), sigma.data() + nsv);
  for (int i = 0; i < n; ++i) {
    if (i < nsv && sigma(i) > cutoff) continue;
    std::vector<double> v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = svd.matrixV()(k, i);
    space.basis.push_back(std::move(v));
  }
  space.dimension = static_cast<int>(space.basis.size());
  return space;
}

namespace {

// canonical words of the infinite dihedral subgroup <s,t>: alternating
// strings of each length, one starting with s and one with t
std::vector<Word> dihedral_elements(int s, int t, int max_len) {
  std::vector<Word> out = {Word()};
  for (int len = 1; len <= max_len; ++len) {
    std::string a, b;
    for (int i = 0; i < len; ++i) {
      a.push_back(static_cast<char>(i % 2 == 0 ? s : t));
      b.push_back(static_cast<char>(i % 2 == 0 ? t : s));
    }
    out.push_back(Word::from_canonical(a));
    out.push_back(Word::from_canonical(b));
  }
  return out;
}

} // namespace

DoubleCosetFit double_coset_form_check(const BallBasis& ball, const ParameterVector& q, int s,
                                       int t, const Word& w, std::span<const double> xi) {
  const CoxeterSystem& sys = ball.system();
  if (!q.normalized) throw std::invalid_argument("double_coset_form_check: q must be normalized");
  if (s == t || sys.commutes(s, t))
    throw std::invalid_argument("double_coset_form_check: s and t must be distinct non-commuting");
  if (static_cast<int>(xi.size()) != ball.size())
    throw std::invalid_argument("double_coset_form_check: xi must live on the ball");
  if (sys.is_left_descent(w, s) || sys.is_left_descent(w, t) || sys.is_right_descent(w, s) ||
      sys.is_right_descent(w, t))
    throw std::invalid_argument("double_coset_form_check: w is not the shortest coset element");
  bool s_commutes = sys.prepend(w, s) == sys.append(w, s);
  bool t_commutes = sys.prepend(w, t) == sys.append(w, t);
  if (s_commutes && t_commutes)
    throw std::invalid_argument("double_coset_form_check: degenerate double coset (w commutes "
                                "with both s and t)");

  const double qs = q.q[static_cast<size_t>(s)], qt = q.q[static_cast<size_t>(t)];
  LetterStatistics base = sys.statistics(w);
  const int budget = ball.radius() - w.length();
  auto dihedral = dihedral_elements(s, t, std::max(0, budget));

  std::set<int> seen;
  std::vector<int> points;
  std::vector<std::pair<int, int>> deltas; // (delta l_s, delta l_t)
  for (const Word& d : dihedral) {
    if (d.length() > budget) continue;
    Word dw = sys.multiply(d, w);
    for (const Word& dp : dihedral) {
      if (d.length() + dp.length() > budget) continue;
      Word x = sys.multiply(dw, dp);
      int idx = ball.find(x);
      if (idx < 0 || !seen.insert(idx).second) continue;
      LetterStatistics st = sys.statistics(x);
      points.push_back(idx);
      deltas.emplace_back(st.count[static_cast<size_t>(s)] - base.count[static_cast<size_t>(s)],
                          st.count[static_cast<size_t>(t)] - base.count[static_cast<size_t>(t)]);
    }
  }

  // active profiles per the parameter order
  bool use_b = qs > qt;
  bool use_c = qs < qt;
  int ncols = 1 + (use_b ? 1 : 0) + (use_c ? 1 : 0);
  const int m = static_cast<int>(points.size());
  Eigen::MatrixXd A(m, ncols);
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) {
    auto [ds, dt] = deltas[static_cast<size_t>(i)];
    double p1 = std::pow(qs, ds * 0.5) * std::pow(qt, dt * 0.5);
    double p2 = ((ds & 1) ? -1.0 : 1.0) * std::pow(qs, -ds * 0.5) * std::pow(qt, dt * 0.5);
    double p3 = ((dt & 1) ? -1.0 : 1.0) * std::pow(qs, ds * 0.5) * std::pow(qt, -dt * 0.5);
    int col = 0;
    A(i, col++) = p1;
    if (use_b) A(i, col++) = p2;
    if (use_c) A(i, col++) = p3;
    y(i) = xi[static_cast<size_t>(points[static_cast<size_t>(i)])];
  }

  Eigen::VectorXd coef = A.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
  DoubleCosetFit fit;
  fit.points = m;
  int col = 0;
  fit.a = coef(col++);
  if (use_b) fit.b = coef(col++);
  if (use_c) fit.c = coef(col++);
  Eigen::VectorXd r = A * coef - y;
  fit.residual = m > 0 ? r.cwiseAbs().maxCoeff() : 0.0;
  return fit;
}

namespace {

double relative_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

} // namespace

CheckReport fundamental_solution_check(double q_s, double q_t, int n_max, double tol) {
  CheckReport rep;
  if (!(q_s > 0.0 && q_s <= 1.0 && q_t > 0.0 && q_t <= 1.0))
    throw std::invalid_argument("fundamental_solution_check: parameters must lie in (0,1]");
  const double ps = (q_s - 1.0) / std::sqrt(q_s);
  const double pt = (q_t - 1.0) / std::sqrt(q_t);
  struct Solution {
    const char* name;
    double (*g1)(double, double, int);
    double (*g2)(double, double, int);
  };
  const Solution solutions[4] = {
      {"first",
       [](double qs, double qt, int n) { return std::pow(qs, n * 0.5) * std::pow(qt, n * 0.5); },
       [](double qs, double qt, int n) { return std::pow(qs, n * 0.5) * std::pow(qt, (n + 1) * 0.5); }},
      {"second",
       [](double qs, double qt, int n) { return ((n & 1) ? -1.0 : 1.0) * std::pow(qs, -n * 0.5) * std::pow(qt, n * 0.5); },
       [](double qs, double qt, int n) { return ((n & 1) ? -1.0 : 1.0) * std::pow(qs, -n * 0.5) * std::pow(qt, (n + 1) * 0.5); }},
      {"third",
       [](double qs, double qt, int n) { return ((n & 1) ? -1.0 : 1.0) * std::pow(qs, n * 0.5) * std::pow(qt, -n * 0.5); },
       [](double qs, double qt, int n) { return ((n & 1) ? 1.0 : -1.0) * std::pow(qs, n * 0.5) * std::pow(qt, -(n + 1) * 0.5); }},
      {"fourth",
       [](double qs, double qt, int n) { return std::pow(qs, -n * 0.5) * std::pow(qt, -n * 0.5); },
       [](double qs, double qt, int n) { return -std::pow(qs, -n * 0.5) * std::pow(qt, -(n + 1) * 0.5); }},
  };
  for (const auto& sol : solutions) {
    for (int n = 0; n + 2 <= n_max; ++n) {
      double lhs1 = sol.g1(q_s, q_t, n + 2);
      double rhs1 = sol.g1(q_s, q_t, n) + ps * sol.g2(q_s, q_t, n + 1) + pt * sol.g2(q_s, q_t, n);
      double m1 = relative_gap(lhs1, rhs1);
      rep.record(m1 > tol, m1,
                 std::string(sol.name) + " solution, first recurrence at n=" + std::to_string(n));
      double lhs2 = sol.g2(q_s, q_t, n + 2);
      double rhs2 = sol.g2(q_s, q_t, n) + pt * sol.g1(q_s, q_t, n + 2) + ps * sol.g1(q_s, q_t, n + 1);
      double m2 = relative_gap(lhs2, rhs2);
      rep.record(m2 > tol, m2,
                 std::string(sol.name) + " solution, second recurrence at n=" + std::to_string(n));
    }
  }
  return rep;
}

CheckReport fundamental_solution_check_exact(const Rational& q_s, const Rational& q_t) {
  CheckReport rep;
  SqrtRing ring({q_s, q_t});
  const SqrtScalar one{Rational(1)};
  const SqrtScalar rs = ring.root(0), rt = ring.root(1);
  const SqrtScalar ps = ring.p(0), pt = ring.p(1);
  const SqrtScalar inv_qt{Rational(1) / q_t}, inv_qs{Rational(1) / q_s};

  // each solution is geometric: g1(n) = rho^n, g2(n) = rho^n * beta, so both
  // recurrences reduce to the n-independent identities
  //   rho^2 = 1 + p_s rho beta + p_t beta
  //   rho^2 beta = beta + p_t rho^2 + p_s rho
  struct Pair { const char* name; SqrtScalar rho, beta; };
  const SqrtScalar rsrt = ring.mul(rs, rt);
  const Pair pairs[4] = {
      {"first", rsrt, rt},
      {"second", -ring.mul(rsrt, inv_qs), rt},
      {"third", -ring.mul(rsrt, inv_qt), -ring.mul(rt, inv_qt)},
      {"fourth", ring.mul(rsrt, ring.mul(inv_qs, inv_qt)), -ring.mul(rt, inv_qt)},
  };
  for (const auto& p : pairs) {
    SqrtScalar rho2 = ring.mul(p.rho, p.rho);
    SqrtScalar rhs1 = one + ring.mul(ps, ring.mul(p.rho, p.beta)) + ring.mul(pt, p.beta);
    rep.record(!(rho2 == rhs1), (rho2 == rhs1) ? 0.0 : 1.0,
               std::string(p.name) + " solution, first recurrence (exact)");
    SqrtScalar lhs2 = ring.mul(rho2, p.beta);
    SqrtScalar rhs2 = p.beta + ring.mul(pt, rho2) + ring.mul(ps, p.rho);
    rep.record(!(lhs2 == rhs2), (lhs2 == rhs2) ? 0.0 : 1.0,
               std::string(p.name) + " solution, second recurrence (exact)");
  }

  // worked identity 1 + (q_s - 1) q_t + (q_t - 1) = q_s q_t
  Rational lhs = Rational(1) + (q_s - Rational(1)) * q_t + (q_t - Rational(1));
  Rational rhs = q_s * q_t;
  rep.record(!(lhs == rhs), lhs == rhs ? 0.0 : 1.0, "worked identity (exact)");
  return rep;
}

} // namespace racg

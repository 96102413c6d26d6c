#include "racg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace racg {

std::vector<double> SparseOperator::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != size)
    throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
  std::vector<double> y(static_cast<size_t>(size), 0.0);
  for (int j = 0; j < size; ++j) {
    double xj = x[static_cast<size_t>(j)];
    if (xj == 0.0) continue;
    for (auto [i, v] : cols[static_cast<size_t>(j)]) y[static_cast<size_t>(i)] += v * xj;
  }
  return y;
}

SparseOperator SparseOperator::identity(int n) {
  SparseOperator op;
  op.size = n;
  op.safe_margin = 0;
  op.cols.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) op.cols[static_cast<size_t>(i)] = {{i, 1.0}};
  return op;
}

namespace {

void sort_col(std::vector<std::pair<int, double>>& col) {
  std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
}

} // namespace

SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
  if (a.size != b.size) throw std::invalid_argument("compose: dimension mismatch");
  SparseOperator c;
  c.size = a.size;
  c.safe_margin = a.safe_margin + b.safe_margin;
  c.cols.resize(static_cast<size_t>(c.size));
  std::vector<double> scratch(static_cast<size_t>(c.size), 0.0);
  std::vector<int> touched;
  for (int j = 0; j < c.size; ++j) {
    touched.clear();
    for (auto [k, vb] : b.cols[static_cast<size_t>(j)]) {
      for (auto [i, va] : a.cols[static_cast<size_t>(k)]) {
        if (scratch[static_cast<size_t>(i)] == 0.0) touched.push_back(i);
        scratch[static_cast<size_t>(i)] += va * vb;
      }
    }
    auto& col = c.cols[static_cast<size_t>(j)];
    col.reserve(touched.size());
    for (int i : touched) {
      if (scratch[static_cast<size_t>(i)] != 0.0) col.emplace_back(i, scratch[static_cast<size_t>(i)]);
      scratch[static_cast<size_t>(i)] = 0.0;
    }
    sort_col(col);
  }
  return c;
}

SparseOperator linear_combination(double alpha, const SparseOperator& a, double beta,
                                  const SparseOperator& b) {
  if (a.size != b.size) throw std::invalid_argument("linear_combination: dimension mismatch");
  SparseOperator c;
  c.size = a.size;
  c.safe_margin = std::max(a.safe_margin, b.safe_margin);
  c.cols.resize(static_cast<size_t>(c.size));
  for (int j = 0; j < c.size; ++j) {
    std::vector<std::pair<int, double>> col;
    for (auto [i, v] : a.cols[static_cast<size_t>(j)]) col.emplace_back(i, alpha * v);
    for (auto [i, v] : b.cols[static_cast<size_t>(j)]) col.emplace_back(i, beta * v);
    sort_col(col);
    auto& out = c.cols[static_cast<size_t>(j)];
    for (auto [i, v] : col) {
      if (!out.empty() && out.back().first == i)
        out.back().second += v;
      else
        out.emplace_back(i, v);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](auto& p) { return p.second == 0.0; }),
              out.end());
  }
  return c;
}

double max_interior_entry(const SparseOperator& op, const BallBasis& ball, int margin) {
  double worst = 0.0;
  int end = ball.interior_end(margin);
  for (int j = 0; j < end; ++j)
    for (auto [i, v] : op.cols[static_cast<size_t>(j)]) worst = std::max(worst, std::abs(v));
  return worst;
}

double max_interior_column_diff(const SparseOperator& a, const SparseOperator& b,
                                const BallBasis& ball, int margin) {
  SparseOperator d = linear_combination(1.0, a, -1.0, b);
  return max_interior_entry(d, ball, margin);
}

namespace {

double hecke_p(double q) { return (q - 1.0) / std::sqrt(q); }

void require_normalized(const ParameterVector& q, const BallBasis& ball) {
  if (!q.normalized) throw std::invalid_argument("hecke operator: q must be normalized");
  if (static_cast<int>(q.q.size()) != ball.system().rank())
    throw std::invalid_argument("hecke operator: one parameter per generator required");
}

} // namespace

SparseOperator left_hecke_operator(const BallBasis& ball, const ParameterVector& q, int s) {
  require_normalized(q, ball);
  const double ps = hecke_p(q.q[static_cast<size_t>(s)]);
  SparseOperator op;
  op.size = ball.size();
  op.safe_margin = 1;
  op.cols.resize(static_cast<size_t>(op.size));
  for (int j = 0; j < op.size; ++j) {
    int i = ball.left_mult(j, s);
    auto& col = op.cols[static_cast<size_t>(j)];
    if (i < 0) continue; // |sw| > radius: ascent entry truncated away
    if (ball.length(i) > ball.length(j)) {
      col = {{i, 1.0}};
    } else {
      col = {{i, 1.0}, {j, ps}};
      sort_col(col);
    }
  }
  return op;
}

SparseOperator right_hecke_operator(const BallBasis& ball, const ParameterVector& q, int s) {
  require_normalized(q, ball);
  const double ps = hecke_p(q.q[static_cast<size_t>(s)]);
  SparseOperator op;
  op.size = ball.size();
  op.safe_margin = 1;
  op.cols.resize(static_cast<size_t>(op.size));
  for (int j = 0; j < op.size; ++j) {
    int i = ball.right_mult(j, s);
    auto& col = op.cols[static_cast<size_t>(j)];
    if (i < 0) continue;
    if (ball.length(i) > ball.length(j)) {
      col = {{i, 1.0}};
    } else {
      col = {{i, 1.0}, {j, ps}};
      sort_col(col);
    }
  }
  return op;
}

SparseOperator hecke_word_operator(const BallBasis& ball, const ParameterVector& q, const Word& w) {
  SparseOperator op = SparseOperator::identity(ball.size());
  // rightmost factor applies first: T_w = T_{s_1} ... T_{s_n}
  for (int k = w.length() - 1; k >= 0; --k) {
    op = compose(left_hecke_operator(ball, q, w.letter(k)), op);
  }
  op.safe_margin = w.length();
  return op;
}

SparseOperator inversion_operator(const BallBasis& ball) {
  SparseOperator op;
  op.size = ball.size();
  op.safe_margin = 0;
  op.cols.resize(static_cast<size_t>(op.size));
  for (int j = 0; j < op.size; ++j) op.cols[static_cast<size_t>(j)] = {{ball.inverse_index(j), 1.0}};
  return op;
}

SparseOperator left_translation(const BallBasis& ball, int s) {
  SparseOperator op;
  op.size = ball.size();
  op.safe_margin = 1;
  op.cols.resize(static_cast<size_t>(op.size));
  for (int j = 0; j < op.size; ++j) {
    int i = ball.left_mult(j, s);
    if (i >= 0) op.cols[static_cast<size_t>(j)] = {{i, 1.0}};
  }
  return op;
}

std::vector<double> eigenvector_coeffs(const BallBasis& ball, const ParameterVector& q,
                                       const SignVector& eps) {
  if (!q.normalized) throw std::invalid_argument("eigenvector_coeffs: q must be normalized");
  std::vector<double> roots(q.q.size());
  for (size_t s = 0; s < q.q.size(); ++s) roots[s] = std::sqrt(q.q[s]);
  return eigenvector_coefficients<double>(ball, roots, eps);
}

double eigenvector_weight(const ParameterVector& q, const SignVector& eps, int s) {
  return eps.sign(s) * std::pow(q.q[static_cast<size_t>(s)], eps.sign(s) * 0.5);
}

EigenvectorSpec make_eigenvector_spec(const BallBasis& ball, const ParameterVector& q,
                                      const SignVector& eps) {
  EigenvectorSpec spec;
  spec.eps = eps;
  spec.coefficients = eigenvector_coeffs(ball, q, eps);
  for (int s = 0; s < ball.system().rank(); ++s)
    spec.weight.push_back(eigenvector_weight(q, eps, s));
  return spec;
}

void CheckReport::record(bool bad, double magnitude, const std::string& context) {
  ++checks;
  worst = std::max(worst, magnitude);
  if (bad) violations.push_back({context, magnitude});
}

CheckReport quadratic_relation_check(const BallBasis& ball, const ParameterVector& q, double tol) {
  CheckReport rep;
  for (int s = 0; s < ball.system().rank(); ++s) {
    double rq = std::sqrt(q.q[static_cast<size_t>(s)]);
    SparseOperator T = left_hecke_operator(ball, q, s);
    // (T - sqrt(q))(T + 1/sqrt(q)) = T^2 + (1/sqrt(q) - sqrt(q)) T - 1
    SparseOperator expr = linear_combination(
        1.0, compose(T, T),
        -1.0,
        linear_combination(rq - 1.0 / rq, T, 1.0, SparseOperator::identity(ball.size())));
    double worst = max_interior_entry(expr, ball, 1);
    rep.record(worst > tol, worst,
               "quadratic relation at generator " + ball.system().name(s));
  }
  return rep;
}

CheckReport commuting_relation_check(const BallBasis& ball, const ParameterVector& q, double tol) {
  CheckReport rep;
  const CoxeterSystem& sys = ball.system();
  for (int s = 0; s < sys.rank(); ++s) {
    for (int t = s + 1; t < sys.rank(); ++t) {
      if (!sys.commutes(s, t)) continue;
      SparseOperator Ts = left_hecke_operator(ball, q, s);
      SparseOperator Tt = left_hecke_operator(ball, q, t);
      double worst =
          max_interior_column_diff(compose(Ts, Tt), compose(Tt, Ts), ball, 2);
      rep.record(worst > tol, worst,
                 "commuting relation at pair (" + sys.name(s) + "," + sys.name(t) + ")");
    }
  }
  return rep;
}

CheckReport left_right_commutation_check(const BallBasis& ball, const ParameterVector& q,
                                         double tol) {
  CheckReport rep;
  const CoxeterSystem& sys = ball.system();
  for (int s = 0; s < sys.rank(); ++s) {
    SparseOperator L = left_hecke_operator(ball, q, s);
    for (int t = 0; t < sys.rank(); ++t) {
      SparseOperator R = right_hecke_operator(ball, q, t);
      double worst = max_interior_column_diff(compose(L, R), compose(R, L), ball, 2);
      rep.record(worst > tol, worst,
                 "left/right commutation at (" + sys.name(s) + "," + sys.name(t) + ")");
    }
  }
  return rep;
}

CheckReport eigenvector_relation_check(const BallBasis& ball, const ParameterVector& q,
                                       const SignVector& eps, double tol) {
  CheckReport rep;
  std::vector<double> eta = eigenvector_coeffs(ball, q, eps);
  int interior = ball.interior_end(1);
  for (int s = 0; s < ball.system().rank(); ++s) {
    SparseOperator T = left_hecke_operator(ball, q, s);
    std::vector<double> lhs = T.apply(eta);
    double c = eigenvector_weight(q, eps, s);
    double worst = 0.0;
    // rows of length <= radius-1 receive no contribution from outside the
    // ball, so the relation is exact there up to rounding
    for (int i = 0; i < interior; ++i)
      worst = std::max(worst, std::abs(lhs[static_cast<size_t>(i)] - c * eta[static_cast<size_t>(i)]));
    rep.record(worst > tol, worst,
               "eigenvector relation at generator " + ball.system().name(s));
  }
  return rep;
}

namespace {

template <class Scalar>
CheckReport adding_letters_impl(const BallBasis& ball, const std::vector<Scalar>& roots,
                                const SignVector& eps, double tol,
                                const std::vector<double>* root_doubles) {
  CheckReport rep;
  const CoxeterSystem& sys = ball.system();
  std::vector<Scalar> eta = eigenvector_coefficients<Scalar>(ball, roots, eps);
  auto magnitude = [&](const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, double>)
      return std::abs(x);
    else
      return x.is_zero() ? 0.0 : 1.0;
  };
  (void)root_doubles;
  for (int j = 0; j < ball.size(); ++j) {
    for (int s = 0; s < sys.rank(); ++s) {
      Scalar ps = (roots[static_cast<size_t>(s)] * roots[static_cast<size_t>(s)] - Scalar(1)) /
                  roots[static_cast<size_t>(s)];
      int sw = ball.left_mult(j, s);
      int ws = ball.right_mult(j, s);
      if (sw >= 0 && ball.length(sw) > ball.length(j) && eps.sign(s) > 0) {
        Scalar d = eta[static_cast<size_t>(sw)] - roots[static_cast<size_t>(s)] * eta[static_cast<size_t>(j)];
        double m = magnitude(d);
        rep.record(m > tol, m,
                   "ascent identity at (" + ball.word(j).letters() + "," + sys.name(s) + ")");
      }
      if (sw < 0 || ws < 0) continue;
      if (ball.length(sw) != ball.length(j) + 1 || ball.length(ws) != ball.length(j) + 1) continue;
      int sws = ball.right_mult(sw, s);
      if (sws < 0 || ball.length(sws) != ball.length(j) + 2) continue;
      Scalar d1 = eta[static_cast<size_t>(sw)] - eta[static_cast<size_t>(ws)];
      double m1 = magnitude(d1);
      rep.record(m1 > tol, m1,
                 "swap identity at (" + ball.word(j).letters() + "," + sys.name(s) + ")");
      Scalar d2 = eta[static_cast<size_t>(sws)] - eta[static_cast<size_t>(j)] -
                  ps * eta[static_cast<size_t>(ws)];
      double m2 = magnitude(d2);
      rep.record(m2 > tol, m2,
                 "double-step identity at (" + ball.word(j).letters() + "," + sys.name(s) + ")");
    }
  }
  return rep;
}

} // namespace

CheckReport adding_letters_check(const BallBasis& ball, const ParameterVector& q,
                                 const SignVector& eps, double tol) {
  if (!q.normalized) throw std::invalid_argument("adding_letters_check: q must be normalized");
  std::vector<double> roots(q.q.size());
  for (size_t s = 0; s < q.q.size(); ++s) roots[s] = std::sqrt(q.q[s]);
  return adding_letters_impl<double>(ball, roots, eps, tol, nullptr);
}

CheckReport adding_letters_check_exact(const BallBasis& ball, const std::vector<Rational>& roots,
                                       const SignVector& eps) {
  return adding_letters_impl<Rational>(ball, roots, eps, 0.0, nullptr);
}

} // namespace racg

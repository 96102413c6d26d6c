#include "racg/graph_product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "racg/parallel.hpp"

namespace racg {

RepParameter RepParameter::from_a(std::vector<double> a) {
  RepParameter rep;
  for (size_t s = 0; s < a.size(); ++s)
    if (!(std::abs(a[s]) < 1.0))
      throw std::invalid_argument("RepParameter: a[" + std::to_string(s) + "] must lie in (-1,1)");
  rep.z.resize(a.size());
  for (size_t s = 0; s < a.size(); ++s) rep.z[s] = std::sqrt(1.0 - a[s] * a[s]);
  rep.a = std::move(a);
  return rep;
}

SparseOperator sign_operator(const BallBasis& ball, int s) {
  SparseOperator op;
  op.size = ball.size();
  op.safe_margin = 0;
  op.cols.resize(static_cast<size_t>(op.size));
  for (int j = 0; j < op.size; ++j) {
    bool descent = !ball.is_left_ascent(j, s);
    op.cols[static_cast<size_t>(j)] = {{j, descent ? -1.0 : 1.0}};
  }
  return op;
}

SparseOperator rep_generator(const BallBasis& ball, const RepParameter& rep, int s) {
  if (static_cast<int>(rep.a.size()) != ball.system().rank())
    throw std::invalid_argument("rep_generator: one parameter per generator required");
  return linear_combination(rep.a[static_cast<size_t>(s)], sign_operator(ball, s),
                            rep.z[static_cast<size_t>(s)], left_translation(ball, s));
}

namespace {

// applies rep(s) to v in place; cheaper than materialising the operator
void apply_rep_generator(const BallBasis& ball, const RepParameter& rep, int s,
                         const std::vector<double>& v, std::vector<double>& out) {
  const double a = rep.a[static_cast<size_t>(s)], z = rep.z[static_cast<size_t>(s)];
  std::fill(out.begin(), out.end(), 0.0);
  for (int j = 0; j < ball.size(); ++j) {
    double x = v[static_cast<size_t>(j)];
    if (x == 0.0) continue;
    int i = ball.left_mult(j, s);
    bool descent = i >= 0 && ball.length(i) < ball.length(j);
    out[static_cast<size_t>(j)] += (descent ? -a : a) * x;
    if (i >= 0) out[static_cast<size_t>(i)] += z * x;
  }
}

double character_on_ball(const BallBasis& ball, const RepParameter& rep, const Word& w) {
  std::vector<double> v(static_cast<size_t>(ball.size()), 0.0), tmp(v.size());
  v[0] = 1.0; // delta_e
  for (int k = w.length() - 1; k >= 0; --k) {
    apply_rep_generator(ball, rep, w.letter(k), v, tmp);
    std::swap(v, tmp);
  }
  return v[0];
}

} // namespace

double character(const BallBasis& ball, const RepParameter& rep, const Word& w) {
  if (ball.radius() < w.length() + 1)
    throw std::invalid_argument("character: ball radius must be at least |w| + 1");
  return character_on_ball(ball, rep, w);
}

double character(const CoxeterSystem& sys, const RepParameter& rep, const Word& w) {
  BallBasis ball = enumerate_ball(sys, w.length() + 1);
  return character_on_ball(ball, rep, w);
}

std::vector<double> character_table(const BallBasis& ball, const RepParameter& rep,
                                    std::span<const Word> words, bool parallel) {
  for (const Word& w : words)
    if (ball.radius() < w.length() + 1)
      throw std::invalid_argument("character_table: ball radius must exceed word lengths");
  std::vector<double> out(words.size());
  par::for_each_index(words.size(), parallel,
                      [&](std::size_t i) { out[i] = character_on_ball(ball, rep, words[i]); });
  return out;
}

double sign_character(const CoxeterSystem& sys, const RepParameter& rep, const Word& w) {
  double v = 1.0;
  for (int k = 0; k < w.length(); ++k) {
    double a = rep.a[static_cast<size_t>(w.letter(k))];
    if (a == 0.0) throw std::invalid_argument("sign_character: a_s = 0 has no sign");
    v *= a > 0.0 ? 1.0 : -1.0;
  }
  (void)sys;
  return v;
}

CheckReport hecke_translation_check(const BallBasis& ball, const RepParameter& rep, double tol) {
  CheckReport report;
  const CoxeterSystem& sys = ball.system();
  ParameterVector q;
  q.normalized = true;
  q.q.resize(rep.a.size());
  for (size_t s = 0; s < rep.a.size(); ++s) {
    if (!(rep.a[s] >= 0.0 && rep.a[s] < 1.0))
      throw std::invalid_argument("hecke_translation_check: a_s must lie in [0,1)");
    double root = (1.0 - rep.a[s]) / rep.z[s];
    q.q[s] = root * root;
  }
  for (int s = 0; s < sys.rank(); ++s) {
    SparseOperator lhs = rep_generator(ball, rep, s);
    SparseOperator rhs = linear_combination(
        rep.a[static_cast<size_t>(s)], SparseOperator::identity(ball.size()),
        rep.z[static_cast<size_t>(s)], left_hecke_operator(ball, q, s));
    double worst = max_interior_column_diff(lhs, rhs, ball, 1);
    report.record(worst > tol, worst, "translation identity at generator " + sys.name(s));
  }
  return report;
}

CheckReport rep_eigenvector_check(const BallBasis& ball, const RepParameter& rep,
                                  const SignVector& eps, double tol) {
  CheckReport report;
  const CoxeterSystem& sys = ball.system();
  std::vector<double> roots(rep.a.size());
  for (size_t s = 0; s < rep.a.size(); ++s) {
    if (rep.a[s] == 0.0)
      throw std::invalid_argument("rep_eigenvector_check: a_s = 0 excluded (sign undefined)");
    double sign = rep.a[s] > 0.0 ? 1.0 : -1.0;
    roots[s] = sign * (1.0 - std::abs(rep.a[s])) / rep.z[s];
  }
  std::vector<double> eta = eigenvector_coefficients<double>(ball, roots, eps);
  std::vector<double> out(eta.size());
  int interior = ball.interior_end(1);
  for (int s = 0; s < sys.rank(); ++s) {
    apply_rep_generator(ball, rep, s, eta, out);
    double ev = (rep.a[static_cast<size_t>(s)] > 0.0 ? 1.0 : -1.0) * eps.sign(s);
    double worst = 0.0;
    for (int i = 0; i < interior; ++i)
      worst = std::max(worst,
                       std::abs(out[static_cast<size_t>(i)] - ev * eta[static_cast<size_t>(i)]));
    report.record(worst > tol, worst,
                  "representation eigenvector relation at generator " + sys.name(s));
  }
  return report;
}

std::optional<Word> find_distinguishing_word(const CoxeterSystem& sys, const RepParameter& a,
                                             const RepParameter& b, int max_len, double tol,
                                             bool parallel) {
  BallBasis ball = enumerate_ball(sys, max_len + 1);
  int end = ball.sphere_end(max_len);
  std::vector<Word> words(ball.words().begin(), ball.words().begin() + end);
  std::vector<double> ta = character_table(ball, a, words, parallel);
  std::vector<double> tb = character_table(ball, b, words, parallel);
  for (int i = 0; i < end; ++i)
    if (std::abs(ta[static_cast<size_t>(i)] - tb[static_cast<size_t>(i)]) > tol)
      return words[static_cast<size_t>(i)];
  return std::nullopt;
}

double convex_combination_residual(const CoxeterSystem& sys, const RepParameter& a,
                                   const RepParameter& b, double c, double d, int max_len,
                                   bool parallel) {
  BallBasis ball = enumerate_ball(sys, max_len + 1);
  int end = ball.sphere_end(max_len);
  std::vector<Word> words(ball.words().begin(), ball.words().begin() + end);
  std::vector<double> ta = character_table(ball, a, words, parallel);
  std::vector<double> tb = character_table(ball, b, words, parallel);
  double worst = 0.0;
  for (int i = 0; i < end; ++i) {
    const Word& w = words[static_cast<size_t>(i)];
    double expect = c * sign_character(sys, a, w) + d * sign_character(sys, b, w) +
                    (1.0 - c - d) * tb[static_cast<size_t>(i)];
    worst = std::max(worst, std::abs(ta[static_cast<size_t>(i)] - expect));
  }
  return worst;
}

} // namespace racg

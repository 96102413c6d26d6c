#pragma once

#include <span>
#include <string>
#include <vector>

#include "racg/ball.hpp"
#include "racg/exact.hpp"
#include "racg/series.hpp"

namespace racg {

/// Sparse linear operator on a ball basis, column-major. safe_margin
/// records the largest k such that columns indexed by interior(k) carry the
/// exact action of the untruncated operator (entries at rows outside the
/// ball are dropped, never wrong).
struct SparseOperator {
  int size = 0;
  int safe_margin = 0;
  std::vector<std::vector<std::pair<int, double>>> cols;

  std::vector<double> apply(std::span<const double> x) const;
  static SparseOperator identity(int n);
};

SparseOperator compose(const SparseOperator& a, const SparseOperator& b); // a after b
SparseOperator linear_combination(double alpha, const SparseOperator& a, double beta,
                                  const SparseOperator& b);
/// Largest |entry| over columns of interior(margin).
double max_interior_entry(const SparseOperator& op, const BallBasis& ball, int margin);
/// Largest |(a-b) entry| over columns of interior(margin).
double max_interior_column_diff(const SparseOperator& a, const SparseOperator& b,
                                const BallBasis& ball, int margin);

/// pi(T_s): delta_w -> delta_{sw} when |sw| > |w|, delta_{sw} + p_s delta_w
/// when |sw| < |w|, with p_s = (q_s - 1)/sqrt(q_s). Requires q normalized.
SparseOperator left_hecke_operator(const BallBasis& ball, const ParameterVector& q, int s);
/// rho(T_s): the right-multiplication analogue (delta_{ws} branch on |ws|).
SparseOperator right_hecke_operator(const BallBasis& ball, const ParameterVector& q, int s);
/// T_w as the product over the canonical reduced expression; margin |w|.
SparseOperator hecke_word_operator(const BallBasis& ball, const ParameterVector& q, const Word& w);
/// Basis permutation J: delta_w -> delta_{w^{-1}}.
SparseOperator inversion_operator(const BallBasis& ball);
/// Plain left translation lambda(s): delta_w -> delta_{sw}.
SparseOperator left_translation(const BallBasis& ball, int s);

/// Coefficients of the formal Hecke eigenvector on the ball: entry at w is
/// the product over a reduced expression of the per-letter factor
/// eps_s = +1 -> root_s, eps_s = -1 -> -1/root_s. With root_s = sqrt(q_s)
/// this is q_{w,eps}^{1/2} under the sign convention
/// x^{1/2} = sgn(x)|x|^{1/2}. Scalar is double or an exact type.
template <class Scalar>
std::vector<Scalar> eigenvector_coefficients(const BallBasis& ball,
                                             const std::vector<Scalar>& roots,
                                             const SignVector& eps) {
  std::vector<Scalar> out(static_cast<size_t>(ball.size()));
  for (int i = 0; i < ball.size(); ++i) {
    Scalar v(1);
    const Word& w = ball.word(i);
    for (int k = 0; k < w.length(); ++k) {
      int s = w.letter(k);
      if (eps.sign(s) > 0)
        v = v * roots[static_cast<size_t>(s)];
      else
        v = v * (Scalar(-1) / roots[static_cast<size_t>(s)]);
    }
    out[static_cast<size_t>(i)] = v;
  }
  return out;
}

std::vector<double> eigenvector_coeffs(const BallBasis& ball, const ParameterVector& q,
                                       const SignVector& eps);
/// Eigenvalue of T_s on the eigenvector: eps_s q_s^{eps_s/2}.
double eigenvector_weight(const ParameterVector& q, const SignVector& eps, int s);

/// Sign vector, ball coefficients and per-generator weight of a formal
/// Hecke eigenvector, bundled.
struct EigenvectorSpec {
  SignVector eps;
  std::vector<double> coefficients; // indexed by the ball
  std::vector<double> weight;       // s -> eps_s q_s^{eps_s/2}
};

EigenvectorSpec make_eigenvector_spec(const BallBasis& ball, const ParameterVector& q,
                                      const SignVector& eps);

struct Violation {
  std::string context;
  double magnitude = 0.0;
};

struct CheckReport {
  std::size_t checks = 0;
  std::vector<Violation> violations;
  double worst = 0.0;

  bool ok() const { return violations.empty(); }
  void record(bool bad, double magnitude, const std::string& context);
};

/// Residual of (T_s - sqrt(q_s))(T_s + q_s^{-1/2}) = 0 over interior(1).
CheckReport quadratic_relation_check(const BallBasis& ball, const ParameterVector& q,
                                     double tol = 1e-9);
/// [T_s, T_t] = 0 for commuting pairs over interior(2).
CheckReport commuting_relation_check(const BallBasis& ball, const ParameterVector& q,
                                     double tol = 1e-9);
/// [pi(T_s), rho(T_t)] = 0 over interior(2).
CheckReport left_right_commutation_check(const BallBasis& ball, const ParameterVector& q,
                                         double tol = 1e-9);
/// T_s eta_eps = eps_s q_s^{eps_s/2} eta_eps over interior(1) rows.
CheckReport eigenvector_relation_check(const BallBasis& ball, const ParameterVector& q,
                                       const SignVector& eps, double tol = 1e-9);

/// The local identities of eigenvector coefficients: for |sws| = |w| + 2,
///   eta_{sws} = eta_w + p_s eta_{ws} and eta_{sw} = eta_{ws};
/// and eta_{sw} = sqrt(q_s) eta_w when eps_s = +1, |sw| > |w|.
CheckReport adding_letters_check(const BallBasis& ball, const ParameterVector& q,
                                 const SignVector& eps, double tol = 1e-12);
/// Exact-arithmetic variant for q with rational square roots.
CheckReport adding_letters_check_exact(const BallBasis& ball, const std::vector<Rational>& roots,
                                       const SignVector& eps);

} // namespace racg

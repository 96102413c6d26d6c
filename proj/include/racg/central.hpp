#pragma once

#include <span>
#include <vector>

#include "racg/exact.hpp"
#include "racg/operators.hpp"

namespace racg {

/// Constraint instances (w, s) with |sws| = |w| + 2 and sws inside the
/// length-(radius - margin) interior. Each instance yields the two linear
/// identities xi_{sw} = xi_{ws} and xi_{sws} = xi_w + p_s xi_{sw}
/// characterising vectors commuting with T_s.
std::vector<std::pair<int, int>> central_constraint_pairs(const BallBasis& ball, int margin = 0);

struct CentralSpace {
  std::vector<std::vector<double>> basis; // orthonormal null-space vectors
  std::vector<double> singular_values;    // all singular values, descending
  int dimension = 0;                      // boundary effects inflate this; reported, never asserted
  // sparse constraint rows kept for residual checks
  std::vector<std::vector<std::pair<int, double>>> rows;

  /// Relative distance of v from the computed span.
  double containment_residual(std::span<const double> v) const;
  /// Largest |row . v| over all constraint rows.
  double constraint_residual(std::span<const double> v) const;
};

/// Orthonormal basis of the null space of the stacked central-vector
/// constraints with boundary margin k, via eigendecomposition of the
/// normal matrix with relative singular-value cutoff (default 1e-8;
/// constraint matrices are ill-conditioned near the boundary).
CentralSpace solve_central_space(const BallBasis& ball, const ParameterVector& q, int margin,
                                 double rel_cutoff = 1e-8);

struct DoubleCosetFit {
  double a = 0.0; // coefficient of the q^{1/2} profile
  double b = 0.0; // coefficient of the (-1 at s, +1 at t) profile
  double c = 0.0; // coefficient of the (+1 at s, -1 at t) profile
  double residual = 0.0; // max abs misfit over the coset points used
  int points = 0;
};

/// Least-squares fit of xi on the double coset <s,t> w <s,t> against the
/// three profile families, normalised at w, with the parameter-order
/// constraints b = 0 when q_s < q_t, c = 0 when q_s > q_t, b = c = 0 when
/// q_s = q_t. Requires s,t non-commuting, w the shortest coset element and
/// the coset non-degenerate.
DoubleCosetFit double_coset_form_check(const BallBasis& ball, const ParameterVector& q, int s,
                                       int t, const Word& w, std::span<const double> xi);

/// The four closed-form solution pairs of the two-term recurrences
///   g1(n+2) = g1(n) + p_s g2(n+1) + p_t g2(n)
///   g2(n+2) = g2(n) + p_t g1(n+2) + p_s g1(n+1).
/// residuals are relative: |lhs-rhs| / max(1, |lhs|, |rhs|), since the
/// solutions grow like q^{-n/2}.
CheckReport fundamental_solution_check(double q_s, double q_t, int n_max, double tol = 1e-12);

/// Exact verification: for rational q the n-independent normalised ratio
/// form of both recurrences holds identically in Q[sqrt(q_s), sqrt(q_t)]
/// for all four solutions. Also checks the q_s = q_t worked identity
/// 1 + (q_s - 1) q_t + (q_t - 1) = q_s q_t.
CheckReport fundamental_solution_check_exact(const Rational& q_s, const Rational& q_t);

} // namespace racg

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "racg/operators.hpp"

namespace racg {

/// Parameters of the deformed translation family: a_s in (-1, 1) with
/// z_s = sqrt(1 - a_s^2), so a_s^2 + z_s^2 = 1. Complex phases are
/// normalised away up front; every generator matrix is real symmetric.
struct RepParameter {
  std::vector<double> a;
  std::vector<double> z;

  static RepParameter from_a(std::vector<double> a);
};

/// Diagonal sign operator: +delta_w when |sw| > |w|, -delta_w when
/// |sw| < |w|. Exact.
SparseOperator sign_operator(const BallBasis& ball, int s);

/// Generator of the deformed family: a_s * sign(s) + z_s * lambda(s).
SparseOperator rep_generator(const BallBasis& ball, const RepParameter& rep, int s);

/// <rep(s_1)...rep(s_n) delta_e, delta_e> on a ball of radius >= |w| + 1,
/// which keeps every intermediate vector exact.
double character(const BallBasis& ball, const RepParameter& rep, const Word& w);
/// Convenience overload building its own ball.
double character(const CoxeterSystem& sys, const RepParameter& rep, const Word& w);

/// Characters of many words on a shared ball; parallel per word.
std::vector<double> character_table(const BallBasis& ball, const RepParameter& rep,
                                    std::span<const Word> words, bool parallel = true);

/// One-dimensional character w -> prod_s sign(a_s)^{l_s(w)}; requires
/// a_s != 0 for every s.
double sign_character(const CoxeterSystem& sys, const RepParameter& rep, const Word& w);

/// With q_s^{1/2} = (1 - a_s)/z_s the identity
/// rep(s) = a_s I + z_s T_s^{(q)} holds entrywise on interior(1).
/// Requires a_s in [0, 1).
CheckReport hecke_translation_check(const BallBasis& ball, const RepParameter& rep,
                                    double tol = 1e-12);

/// rep(s) eta_eps = eps_s sign(a_s) eta_eps on interior(1) rows, where
/// eta_eps is built from the signed roots q_s^{1/2} = sign(a_s)(1-|a_s|)/z_s.
/// Requires a_s != 0 for every s.
CheckReport rep_eigenvector_check(const BallBasis& ball, const RepParameter& rep,
                                  const SignVector& eps, double tol = 1e-9);

/// Smallest word (length, then ShortLex) with |tau_a(w) - tau_b(w)| > tol
/// among lengths <= max_len, or nothing when all characters agree.
std::optional<Word> find_distinguishing_word(const CoxeterSystem& sys, const RepParameter& a,
                                             const RepParameter& b, int max_len,
                                             double tol = 1e-9, bool parallel = true);

/// max over |w| <= max_len of
/// |tau_a(w) - c sigma_a(w) - d sigma_b(w) - (1-c-d) tau_b(w)|.
double convex_combination_residual(const CoxeterSystem& sys, const RepParameter& a,
                                   const RepParameter& b, double c, double d, int max_len,
                                   bool parallel = true);

} // namespace racg

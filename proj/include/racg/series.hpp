#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/ball.hpp"
#include "racg/coxeter.hpp"

namespace racg {

/// Deformation parameters q_s > 0, one per generator. normalized means all
/// entries lie in (0, 1].
struct ParameterVector {
  std::vector<double> q;
  bool normalized = false;
};

/// Sign vector in {-1, +1}^S.
struct SignVector {
  std::vector<std::int8_t> eps;

  static SignVector all_ones(int rank) { return SignVector{std::vector<std::int8_t>(static_cast<size_t>(rank), 1)}; }
  int sign(int s) const { return eps[static_cast<size_t>(s)]; }
  bool is_all_ones() const;
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Kazhdan-Lusztig style reduction: q'_s = q_s^{flip_s} in (0,1] with
/// flip_s = -1 exactly when q_s > 1. Throws on non-positive entries.
std::pair<ParameterVector, SignVector> reduce_parameters(const std::vector<double>& q);

/// Per-letter weights u_s = q_s^{eps_s * exponent} of the weighted growth
/// series at the given exponent. Requires q normalized.
std::vector<double> effective_weights(const ParameterVector& q, const SignVector& eps,
                                      double exponent);

/// Alternating clique sum over the commuting graph:
///   D(t) = sum over cliques T (including the empty one) of
///          (-1)^|T| * prod_{s in T} (t u_s) / (1 + t u_s).
/// 1/D(t) is the generating function of the weighted sphere sums, so the
/// series converges at t = 1 iff D stays positive on [0, 1].
class CliqueDenominator {
public:
  CliqueDenominator(const CoxeterSystem& sys, std::vector<double> u,
                    std::size_t clique_cap = 5'000'000);
  double operator()(double t) const;
  std::size_t clique_count() const { return cliques_.size(); }

private:
  std::vector<std::uint32_t> cliques_;
  std::vector<double> u_;
};

struct SeriesOptions {
  int max_len = 12;        // BFS depth N
  int ratio_window = 3;    // k in rho_est = (c_N / c_{N-k})^{1/k}
  double delta_pos = 1e-9; // boundary tolerance on the denominator minimum
  double ratio_band = 0.05;// |rho_est - 1| beyond which BFS is decisive
  std::size_t ball_cap = 10'000'000;
  int grid_points = 1024;
  bool parallel = true;
};

enum class ConvergenceResult { converges, diverges, inconclusive_boundary };

struct DenominatorEvidence {
  double min_value = 0.0; // refined minimum of D over [0,1]
  double argmin = 0.0;
  double at_one = 0.0;
  bool sign_change = false;
  bool finite_group = false;
};

struct BfsEvidence {
  bool ran = false;
  std::vector<double> sphere_sums;
  double rho_est = 0.0;
  bool decisive = false;
  std::string note;
};

struct ConvergenceVerdict {
  ConvergenceResult result = ConvergenceResult::inconclusive_boundary;
  bool method_conflict = false; // decisive BFS contradicted the denominator
  DenominatorEvidence denominator;
  BfsEvidence bfs;

  bool converges() const { return result == ConvergenceResult::converges; }
};

/// Decides absolute convergence of sum over w of prod_s q_s^{eps_s l_s(w) e}
/// (e = exponent). Runs the denominator positivity test and the BFS ratio
/// estimate; the denominator answers, the BFS cross-checks, and a decisive
/// disagreement downgrades the verdict to inconclusive_boundary.
ConvergenceVerdict decide_convergence(const CoxeterSystem& sys, const ParameterVector& q,
                                      const SignVector& eps, double exponent,
                                      const SeriesOptions& opt = {});

struct CSets {
  std::vector<SignVector> C;       // convergent at exponent r/2
  std::vector<SignVector> C_tilde; // convergent at exponent min(r, r')/2
  std::vector<std::string> warnings;
};

/// The sets C and C~ of Hecke-eigenvector sign parameters, swept with
/// monotone pruning (flipping eps_s from -1 to +1 never destroys
/// convergence when q is normalized). Inconclusive boundary verdicts count
/// as divergent and add a warning.
CSets c_sets(const CoxeterSystem& sys, const ParameterVector& q, double r,
             const SeriesOptions& opt = {});

struct EigenSummand {
  SignVector eps;
  std::vector<double> weight; // s -> eps_s q_s^{eps_s/2}
};

struct FactorialityReport {
  double r = 2.0;
  double r_tilde = 2.0;
  std::vector<SignVector> C;
  std::vector<SignVector> C_tilde;
  bool is_factor = false; // all-ones sign vector divergent at exponent r~/2
  std::vector<EigenSummand> summands; // one-dimensional central projections
  std::vector<std::string> warnings;
};

/// Factoriality verdict for an irreducible system with at least three
/// generators and normalized q. Throws hypothesis_error otherwise.
FactorialityReport factoriality_report(const CoxeterSystem& sys, const ParameterVector& q,
                                       double r, const SeriesOptions& opt = {});

double conjugate_exponent(double r);

} // namespace racg

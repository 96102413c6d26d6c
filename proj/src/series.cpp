#include "racg/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "racg/errors.hpp"
#include "racg/parallel.hpp"

namespace racg {

bool SignVector::is_all_ones() const {
  return std::all_of(eps.begin(), eps.end(), [](std::int8_t e) { return e == 1; });
}

std::pair<ParameterVector, SignVector> reduce_parameters(const std::vector<double>& q) {
  ParameterVector out;
  SignVector flips;
  out.q.reserve(q.size());
  flips.eps.reserve(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (!(q[i] > 0.0))
      throw std::invalid_argument("reduce_parameters: q[" + std::to_string(i) +
                                  "] must be strictly positive");
    if (q[i] > 1.0) {
      out.q.push_back(1.0 / q[i]);
      flips.eps.push_back(-1);
    } else {
      out.q.push_back(q[i]);
      flips.eps.push_back(1);
    }
  }
  out.normalized = true;
  return {out, flips};
}

std::vector<double> effective_weights(const ParameterVector& q, const SignVector& eps,
                                      double exponent) {
  if (!q.normalized) throw std::invalid_argument("effective_weights: q must be normalized");
  if (q.q.size() != eps.eps.size())
    throw std::invalid_argument("effective_weights: size mismatch between q and eps");
  std::vector<double> u(q.q.size());
  for (size_t s = 0; s < u.size(); ++s)
    u[s] = std::pow(q.q[s], static_cast<double>(eps.eps[s]) * exponent);
  return u;
}

CliqueDenominator::CliqueDenominator(const CoxeterSystem& sys, std::vector<double> u,
                                     std::size_t clique_cap)
    : u_(std::move(u)) {
  if (static_cast<int>(u_.size()) != sys.rank())
    throw std::invalid_argument("CliqueDenominator: one weight per generator required");
  if (sys.rank() > 25)
    throw capacity_error("CliqueDenominator: commuting graph larger than 25 vertices");
  // all cliques of the commuting graph by ordered extension
  cliques_.push_back(0u);
  std::size_t head = 0;
  while (head < cliques_.size()) {
    std::uint32_t c = cliques_[head++];
    int top = c == 0 ? -1 : 31 - __builtin_clz(c);
    for (int s = top + 1; s < sys.rank(); ++s) {
      bool ok = true;
      for (int t = 0; t <= top && ok; ++t)
        if (c >> t & 1u) ok = sys.commutes(t, s);
      if (ok) {
        cliques_.push_back(c | (1u << s));
        if (cliques_.size() > clique_cap)
          throw capacity_error("CliqueDenominator: clique enumeration exceeds cap");
      }
    }
  }
}

double CliqueDenominator::operator()(double t) const {
  double total = 0.0;
  for (std::uint32_t c : cliques_) {
    double term = 1.0;
    std::uint32_t m = c;
    while (m) {
      int s = __builtin_ctz(m);
      m &= m - 1;
      double x = t * u_[static_cast<size_t>(s)];
      term *= x / (1.0 + x);
    }
    total += (__builtin_popcount(c) & 1) ? -term : term;
  }
  return total;
}

namespace {

bool commuting_graph_complete(const CoxeterSystem& sys) {
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t)
      if (!sys.commutes(s, t)) return false;
  return true;
}

DenominatorEvidence denominator_evidence(const CoxeterSystem& sys, const std::vector<double>& u,
                                         const SeriesOptions& opt) {
  CliqueDenominator D(sys, u);
  DenominatorEvidence ev;
  ev.at_one = D(1.0);
  const int G = std::max(opt.grid_points, 8);
  double best_t = 0.0, best = D(0.0);
  for (int i = 1; i <= G; ++i) {
    double t = static_cast<double>(i) / G;
    double v = D(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  // local refinement by ternary search around the grid minimum
  double lo = std::max(0.0, best_t - 1.0 / G), hi = std::min(1.0, best_t + 1.0 / G);
  for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (D(m1) < D(m2)) hi = m2; else lo = m1;
  }
  double t_ref = 0.5 * (lo + hi), v_ref = D(t_ref);
  if (v_ref < best) {
    best = v_ref;
    best_t = t_ref;
  }
  ev.min_value = best;
  ev.argmin = best_t;
  ev.sign_change = best < 0.0; // D(0) = 1
  return ev;
}

BfsEvidence bfs_evidence(const CoxeterSystem& sys, const std::vector<double>& u,
                         const SeriesOptions& opt) {
  BfsEvidence ev;
  try {
    ev.sphere_sums = weighted_sphere_sums(sys, u, opt.max_len, opt.ball_cap, opt.parallel);
    ev.ran = true;
  } catch (const capacity_error& e) {
    ev.ran = false;
    ev.note = std::string("sphere sums omitted: ") + e.what() +
              "; denominator method alone decides";
    return ev;
  }
  int last = -1;
  for (int n = 0; n < static_cast<int>(ev.sphere_sums.size()); ++n)
    if (ev.sphere_sums[static_cast<size_t>(n)] > 0.0) last = n;
  if (last < opt.ratio_window) {
    ev.rho_est = 0.0; // series terminated: finite group
    ev.decisive = true;
  } else {
    double num = ev.sphere_sums[static_cast<size_t>(last)];
    double den = ev.sphere_sums[static_cast<size_t>(last - opt.ratio_window)];
    ev.rho_est = std::pow(num / den, 1.0 / opt.ratio_window);
    ev.decisive = std::abs(ev.rho_est - 1.0) > opt.ratio_band;
  }
  return ev;
}

} // namespace

ConvergenceVerdict decide_convergence(const CoxeterSystem& sys, const ParameterVector& q,
                                      const SignVector& eps, double exponent,
                                      const SeriesOptions& opt) {
  if (!q.normalized) throw std::invalid_argument("decide_convergence: q must be normalized");
  std::vector<double> u = effective_weights(q, eps, exponent);

  ConvergenceVerdict v;
  if (commuting_graph_complete(sys)) {
    // finite group: the series is a finite sum
    v.denominator = denominator_evidence(sys, u, opt);
    v.denominator.finite_group = true;
    v.bfs = bfs_evidence(sys, u, opt);
    v.result = ConvergenceResult::converges;
    return v;
  }

  v.denominator = denominator_evidence(sys, u, opt);
  const double delta = opt.delta_pos;
  ConvergenceResult denom_result;
  if (v.denominator.min_value < -delta || v.denominator.at_one < -delta)
    denom_result = ConvergenceResult::diverges;
  else if (v.denominator.min_value > delta)
    denom_result = ConvergenceResult::converges;
  else
    denom_result = ConvergenceResult::inconclusive_boundary;

  v.bfs = bfs_evidence(sys, u, opt);
  v.result = denom_result;
  if (v.bfs.ran && v.bfs.decisive && denom_result != ConvergenceResult::inconclusive_boundary) {
    bool bfs_converges = v.bfs.rho_est < 1.0;
    if (bfs_converges != (denom_result == ConvergenceResult::converges)) {
      v.method_conflict = true;
      v.result = ConvergenceResult::inconclusive_boundary;
    }
  }
  return v;
}

namespace {

std::string sign_string(const CoxeterSystem& sys, const SignVector& eps) {
  std::string s = "(";
  for (int i = 0; i < sys.rank(); ++i) {
    if (i) s += ",";
    s += eps.sign(i) > 0 ? "+1" : "-1";
  }
  return s + ")";
}

// Monotone level sweep over sign vectors: a candidate is tested only when
// every parent (one -1 flipped to +1) converged; pruned candidates are
// divergent by monotonicity. mask bit set <=> eps_s = -1.
std::vector<SignVector> convergent_signs(const CoxeterSystem& sys, const ParameterVector& q,
                                         double exponent, const SeriesOptions& opt,
                                         std::vector<std::string>& warnings) {
  const int n = sys.rank();
  if (n > 16) throw capacity_error("c_sets: sign sweep capped at rank 16");
  auto eps_of_mask = [n](std::uint32_t mask) {
    SignVector e = SignVector::all_ones(n);
    for (int s = 0; s < n; ++s)
      if (mask >> s & 1u) e.eps[static_cast<size_t>(s)] = -1;
    return e;
  };
  SeriesOptions inner = opt;
  inner.parallel = false; // parallelism lives at the candidate level
  std::vector<std::uint8_t> conv(1u << n, 0);
  std::vector<std::uint32_t> level = {0u};
  std::vector<SignVector> out;
  while (!level.empty()) {
    std::vector<std::uint8_t> res(level.size(), 0);
    std::vector<std::uint8_t> boundary(level.size(), 0);
    par::for_each_index(level.size(), opt.parallel, [&](std::size_t i) {
      ConvergenceVerdict v = decide_convergence(sys, q, eps_of_mask(level[i]), exponent, inner);
      res[i] = v.converges() ? 1 : 0;
      boundary[i] = v.result == ConvergenceResult::inconclusive_boundary ? 1 : 0;
    });
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      conv[level[i]] = res[i];
      if (boundary[i])
        warnings.push_back("inconclusive boundary at eps = " + sign_string(sys, eps_of_mask(level[i])) +
                           ", exponent " + std::to_string(exponent) + "; counted divergent");
      if (res[i]) out.push_back(eps_of_mask(level[i]));
    }
    // children of convergent masks whose every parent converged
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!res[i]) continue;
      std::uint32_t m = level[i];
      for (int s = 0; s < n; ++s) {
        if (m >> s & 1u) continue;
        std::uint32_t child = m | (1u << s);
        bool all_parents_ok = true;
        for (int t = 0; t < n && all_parents_ok; ++t)
          if (child >> t & 1u) all_parents_ok = conv[child & ~(1u << t)] != 0;
        if (all_parents_ok && std::find(next.begin(), next.end(), child) == next.end())
          next.push_back(child);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const SignVector& a, const SignVector& b) {
    return a.eps > b.eps; // all-ones first, then lexicographic on signs
  });
  return out;
}

} // namespace

double conjugate_exponent(double r) { return r / (r - 1.0); }

CSets c_sets(const CoxeterSystem& sys, const ParameterVector& q, double r,
             const SeriesOptions& opt) {
  if (!q.normalized) throw std::invalid_argument("c_sets: q must be normalized");
  if (!(r > 1.0) || !std::isfinite(r))
    throw std::invalid_argument("c_sets: r must lie in (1, infinity)");
  CSets cs;
  double r_tilde = std::min(r, conjugate_exponent(r));
  cs.C = convergent_signs(sys, q, r / 2.0, opt, cs.warnings);
  if (r_tilde == r)
    cs.C_tilde = cs.C;
  else
    cs.C_tilde = convergent_signs(sys, q, r_tilde / 2.0, opt, cs.warnings);
  return cs;
}

FactorialityReport factoriality_report(const CoxeterSystem& sys, const ParameterVector& q,
                                       double r, const SeriesOptions& opt) {
  if (!sys.is_irreducible())
    throw hypothesis_error("factoriality_report: system is reducible (the Coxeter graph on "
                           "non-commuting pairs is disconnected)");
  if (sys.rank() < 3)
    throw hypothesis_error("factoriality_report: at least three generators required, got " +
                           std::to_string(sys.rank()));
  if (!q.normalized) throw std::invalid_argument("factoriality_report: q must be normalized");
  if (!(r > 1.0) || !std::isfinite(r))
    throw std::invalid_argument("factoriality_report: r must lie in (1, infinity)");

  FactorialityReport rep;
  rep.r = r;
  rep.r_tilde = std::min(r, conjugate_exponent(r));
  CSets cs = c_sets(sys, q, r, opt);
  rep.C = std::move(cs.C);
  rep.C_tilde = std::move(cs.C_tilde);
  rep.warnings = std::move(cs.warnings);
  SignVector ones = SignVector::all_ones(sys.rank());
  rep.is_factor = std::find(rep.C_tilde.begin(), rep.C_tilde.end(), ones) == rep.C_tilde.end();
  for (const SignVector& e : rep.C_tilde) {
    EigenSummand sm;
    sm.eps = e;
    sm.weight.resize(static_cast<size_t>(sys.rank()));
    for (int s = 0; s < sys.rank(); ++s)
      sm.weight[static_cast<size_t>(s)] =
          e.sign(s) * std::pow(q.q[static_cast<size_t>(s)], e.sign(s) * 0.5);
    rep.summands.push_back(std::move(sm));
  }
  return rep;
}

} // namespace racg

#include "racg/iwahori.hpp"

#include <algorithm>
#include <cmath>

#include "racg/errors.hpp"

namespace racg {

std::vector<Rational> thickness_to_parameters(const Thickness& d) {
  std::vector<Rational> q;
  q.reserve(d.d.size());
  for (size_t s = 0; s < d.d.size(); ++s) {
    if (d.d[s] < 2)
      throw std::invalid_argument("thickness_to_parameters: d[" + std::to_string(s) +
                                  "] must be at least 2 (thick building)");
    q.emplace_back(1, d.d[s]);
  }
  return q;
}

ParameterVector thickness_to_parameter_vector(const Thickness& d) {
  ParameterVector q;
  for (const Rational& r : thickness_to_parameters(d)) q.q.push_back(r.to_double());
  q.normalized = true;
  return q;
}

IwahoriElement iwahori_basis_element(int ball_index) { return {{ball_index, Rational(1)}}; }

namespace {

// 1_{BsB} * y, expanding by the two defining relations. K is Rational or
// SqrtScalar; mul combines scalars.
template <class K, class Mul>
std::map<int, K> coset_generator_product(const BallBasis& ball, const Thickness& d, int s,
                                         const std::map<int, K>& y, const Mul& mul) {
  std::map<int, K> out;
  auto add = [&out](int idx, const K& value) {
    auto [it, inserted] = out.emplace(idx, value);
    if (!inserted) it->second = it->second + value;
  };
  for (const auto& [v, c] : y) {
    int sv = ball.left_mult(v, s);
    if (sv < 0)
      throw ball_overflow_error("iwahori product: support escapes the ball at word " +
                                (ball.system().prepend(ball.word(v), s)).letters());
    if (ball.length(sv) > ball.length(v)) {
      add(sv, c);
    } else {
      add(v, mul(K(Rational(d.d[static_cast<size_t>(s)] - 1)), c));
      add(sv, mul(K(Rational(d.d[static_cast<size_t>(s)])), c));
    }
  }
  return out;
}

template <class K>
void prune_zeros(std::map<int, K>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero())
      it = m.erase(it);
    else
      ++it;
  }
}

template <class K, class Mul>
std::map<int, K> coset_product_impl(const BallBasis& ball, const Thickness& d,
                                    const std::map<int, K>& x, const std::map<int, K>& y,
                                    const Mul& mul) {
  std::map<int, K> total;
  for (const auto& [w, cw] : x) {
    // 1_{BwB} = 1_{Bs_1B} ... 1_{Bs_nB} over the reduced expression;
    // rightmost factor applies first
    std::map<int, K> acc = y;
    const Word& word = ball.word(w);
    for (int k = word.length() - 1; k >= 0; --k)
      acc = coset_generator_product<K>(ball, d, word.letter(k), acc, mul);
    for (auto& [v, c] : acc) {
      K scaled = mul(cw, c);
      auto [it, inserted] = total.emplace(v, scaled);
      if (!inserted) it->second = it->second + scaled;
    }
  }
  prune_zeros(total);
  return total;
}

} // namespace

IwahoriElement iwahori_product(const BallBasis& ball, const Thickness& d, const IwahoriElement& x,
                               const IwahoriElement& y) {
  if (static_cast<int>(d.d.size()) != ball.system().rank())
    throw std::invalid_argument("iwahori_product: one thickness per generator required");
  return coset_product_impl<Rational>(ball, d, x, y,
                                      [](const Rational& a, const Rational& b) { return a * b; });
}

PhiTransport::PhiTransport(const BallBasis& ball, const Thickness& d)
    : ball_(ball), d_(d), ring_(thickness_to_parameters(d)) {
  if (static_cast<int>(d.d.size()) != ball.system().rank())
    throw std::invalid_argument("PhiTransport: one thickness per generator required");
}

SqrtScalar PhiTransport::phi_coefficient(int ball_index) const {
  const Word& w = ball_.word(ball_index);
  LetterStatistics st = ball_.system().statistics(w);
  Rational c((w.length() & 1) ? -1 : 1);
  SqrtScalar acc{c};
  for (int s = 0; s < ball_.system().rank(); ++s) {
    int l = st.count[static_cast<size_t>(s)];
    const Rational& qs = ring_.squares()[static_cast<size_t>(s)];
    Rational even(1);
    for (int k = 0; k < l / 2; ++k) even *= qs;
    acc = ring_.mul(acc, SqrtScalar(even));
    if (l & 1) acc = ring_.mul(acc, ring_.root(s));
  }
  return acc;
}

PhiTransport::Element PhiTransport::phi_of_word(int ball_index) const {
  return {{ball_index, phi_coefficient(ball_index)}};
}

PhiTransport::Element PhiTransport::coset_product(const Element& x, const Element& y) const {
  return coset_product_impl<SqrtScalar>(
      ball_, d_, x, y, [this](const SqrtScalar& a, const SqrtScalar& b) { return ring_.mul(a, b); });
}

PhiTransport::Element PhiTransport::hecke_generator_product(int s, const Element& x) const {
  Element out;
  auto add = [&out](int idx, const SqrtScalar& v) {
    auto [it, inserted] = out.emplace(idx, v);
    if (!inserted) it->second = it->second + v;
  };
  for (const auto& [w, c] : x) {
    int sw = ball_.left_mult(w, s);
    if (sw < 0)
      throw ball_overflow_error("hecke product: support escapes the ball at word " +
                                ball_.system().prepend(ball_.word(w), s).letters());
    if (ball_.length(sw) > ball_.length(w)) {
      add(sw, c);
    } else {
      add(sw, c);
      add(w, ring_.mul(ring_.p(s), c));
    }
  }
  prune_zeros(out);
  return out;
}

PhiTransport::Element PhiTransport::phi(const Element& hecke_element) const {
  Element out;
  for (const auto& [w, c] : hecke_element) {
    SqrtScalar v = ring_.mul(c, phi_coefficient(w));
    if (!v.is_zero()) out.emplace(w, v);
  }
  return out;
}

CheckReport PhiTransport::homomorphism_check() const {
  CheckReport rep;
  const CoxeterSystem& sys = ball_.system();
  for (int s = 0; s < sys.rank(); ++s) {
    Element phi_s = phi_of_word(ball_.find(sys.normalize(std::vector<int>{s})));
    for (int w = 0; w < ball_.size(); ++w) {
      int sw = ball_.left_mult(w, s);
      if (sw < 0) continue; // product support would escape the ball
      Element lhs = coset_product(phi_s, phi_of_word(w));
      Element rhs = phi(hecke_generator_product(s, {{w, SqrtScalar(Rational(1))}}));
      bool equal = lhs == rhs;
      rep.record(!equal, equal ? 0.0 : 1.0,
                 "phi homomorphism at (" + sys.name(s) + ", " +
                     (ball_.word(w).is_identity() ? std::string("e") : ball_.word(w).letters()) +
                     ")");
    }
  }
  return rep;
}

CheckReport PhiTransport::quadratic_transport_check() const {
  CheckReport rep;
  const CoxeterSystem& sys = ball_.system();
  const SqrtScalar one(Rational(1));
  for (int s = 0; s < sys.rank(); ++s) {
    int si = ball_.find(sys.normalize(std::vector<int>{s}));
    Element phi_s = phi_of_word(si);
    // phi(T_s)^2 + (1/sqrt(q_s) - sqrt(q_s)) phi(T_s) - phi(1) must vanish
    Element sq = coset_product(phi_s, phi_s);
    SqrtScalar mid = ring_.inv_root(s) - ring_.root(s);
    for (auto& [v, c] : phi_s) {
      SqrtScalar add = ring_.mul(mid, c);
      auto [it, inserted] = sq.emplace(v, add);
      if (!inserted) it->second = it->second + add;
    }
    {
      auto [it, inserted] = sq.emplace(0, -one);
      if (!inserted) it->second = it->second - one;
    }
    prune_zeros(sq);
    rep.record(!sq.empty(), sq.empty() ? 0.0 : 1.0,
               "quadratic relation transport at generator " + sys.name(s));

    // 1_{BsB}^2 = (d_s - 1) 1_{BsB} + d_s 1_B, in rational arithmetic
    IwahoriElement cell = iwahori_basis_element(si);
    IwahoriElement prod = iwahori_product(ball_, d_, cell, cell);
    IwahoriElement expect = {{si, Rational(d_.d[static_cast<size_t>(s)] - 1)},
                             {0, Rational(d_.d[static_cast<size_t>(s)])}};
    prune_zeros(expect);
    bool equal = prod == expect;
    rep.record(!equal, equal ? 0.0 : 1.0, "cell quadratic relation at generator " + sys.name(s));
  }
  return rep;
}

CheckReport PhiTransport::positivity_check() const {
  CheckReport rep;
  for (int w = 0; w < ball_.size(); ++w) {
    if (2 * ball_.length(w) > ball_.radius()) continue;
    IwahoriElement prod = iwahori_product(ball_, d_, iwahori_basis_element(w),
                                          iwahori_basis_element(ball_.inverse_index(w)));
    auto it = prod.find(0);
    bool positive = it != prod.end() && it->second > Rational(0);
    rep.record(!positive, positive ? 0.0 : 1.0,
               "cell volume positivity at word " +
                   (ball_.word(w).is_identity() ? std::string("e") : ball_.word(w).letters()));
  }
  return rep;
}

CheckReport PhiTransport::integrality_check() const {
  CheckReport rep;
  for (int w = 0; w < ball_.size() && ball_.length(w) * 2 <= ball_.radius(); ++w) {
    for (int v = 0; v < ball_.size(); ++v) {
      if (ball_.length(w) + ball_.length(v) > ball_.radius()) continue;
      IwahoriElement prod =
          iwahori_product(ball_, d_, iwahori_basis_element(w), iwahori_basis_element(v));
      bool integral = std::all_of(prod.begin(), prod.end(),
                                  [](const auto& kv) { return kv.second.den() == 1; });
      rep.record(!integral, integral ? 0.0 : 1.0,
                 "integer structure constants at (" + ball_.word(w).letters() + "," +
                     ball_.word(v).letters() + ")");
    }
  }
  return rep;
}

std::map<int, SqrtScalar> phi_isomorphism(const BallBasis& ball, const Thickness& d,
                                          const Word& w) {
  int idx = ball.find(w);
  if (idx < 0)
    throw std::invalid_argument("phi_isomorphism: word lies outside the ball");
  return PhiTransport(ball, d).phi_of_word(idx);
}

namespace {

// closed-form convergence criteria for the three worked families, exact
struct FamilyCriterion {
  std::string family;
  bool converges;
};

std::optional<FamilyCriterion> detect_example_family(const CoxeterSystem& sys,
                                                     const Thickness& d) {
  int n = sys.rank();
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (sys.commutes(s, t)) pairs.emplace_back(s, t);
  auto q = thickness_to_parameters(d);
  const Rational one(1);
  if (pairs.empty() && n >= 3) {
    // free product of n copies of Z/2 with uniform thickness:
    // summable iff d > n - 1
    bool uniform = std::all_of(d.d.begin(), d.d.end(), [&](int x) { return x == d.d[0]; });
    if (!uniform) return std::nullopt;
    return FamilyCriterion{"free product Z/2^{*" + std::to_string(n) + "}", d.d[0] > n - 1};
  }
  if (n == 3 && pairs.size() == 1) {
    auto [s, t] = pairs[0];
    int u = 3 - s - t;
    Rational lhs = q[static_cast<size_t>(u)] *
                   ((one + q[static_cast<size_t>(s)]) * (one + q[static_cast<size_t>(t)]) - one);
    return FamilyCriterion{"Z/2^2 * Z/2", lhs < one};
  }
  if (n == 4 && pairs.size() == 2) {
    auto [s, t] = pairs[0];
    auto [u, v] = pairs[1];
    if ((s == u || s == v || t == u || t == v)) return std::nullopt;
    auto factor = [&](int x, int y) {
      return (one + q[static_cast<size_t>(x)]) * (one + q[static_cast<size_t>(y)]) - one;
    };
    // ((1+q_s)(1+q_t) - 1)((1+q_u)(1+q_v) - 1) < 1 in the q = 1/d variables
    return FamilyCriterion{"Z/2^2 * Z/2^2", factor(s, t) * factor(u, v) < one};
  }
  return std::nullopt;
}

std::string sign_label(const CoxeterSystem& sys, const SignVector& eps) {
  std::string s = "St_(";
  for (int i = 0; i < sys.rank(); ++i) {
    if (i) s += ",";
    s += eps.sign(i) > 0 ? "+" : "-";
  }
  return s + ")";
}

} // namespace

SphericalReport spherical_report(const CoxeterSystem& sys, const Thickness& d,
                                 const SeriesOptions& opt) {
  if (!sys.is_irreducible())
    throw hypothesis_error("spherical_report: system is reducible");
  if (sys.rank() < 3)
    throw hypothesis_error("spherical_report: building rank must be at least 3, got " +
                           std::to_string(sys.rank()));
  if (static_cast<int>(d.d.size()) != sys.rank())
    throw std::invalid_argument("spherical_report: one thickness per generator required");
  for (size_t s = 0; s < d.d.size(); ++s)
    if (d.d[s] < 2)
      throw hypothesis_error("spherical_report: building must be thick (d_s >= 2), got d[" +
                             std::to_string(s) + "] = " + std::to_string(d.d[s]));

  SphericalReport rep;
  rep.thickness = d;
  ParameterVector q = thickness_to_parameter_vector(d);
  rep.q = q.q;
  CSets cs = c_sets(sys, q, 2.0, opt);
  rep.C = cs.C;
  rep.warnings = cs.warnings;
  rep.warnings.push_back("convergence exponent fixed at r = 2 (Hilbert-space case); the "
                         "criterion set C is evaluated at exponent 1");
  rep.factor_only = rep.C.empty();
  for (const SignVector& e : rep.C) rep.steinberg_summands.push_back(sign_label(sys, e));
  if (rep.factor_only) {
    rep.decomposition = "lambda_{G,B} is a type II_infinity factor representation";
  } else {
    rep.decomposition = "lambda_{G,B} = (type II_infinity factor part)";
    for (const std::string& st : rep.steinberg_summands) rep.decomposition += " + " + st;
  }
  rep.constant_thickness =
      std::all_of(d.d.begin(), d.d.end(), [&](int x) { return x == d.d[0]; });
  if (rep.constant_thickness)
    rep.constant_thickness_note =
        "constant thickness: lambda_{G,K} is a type II_infinity factor representation";
  if (auto fam = detect_example_family(sys, d)) {
    rep.example_family = fam->family;
    rep.example_criterion = fam->converges;
  }
  return rep;
}

} // namespace racg

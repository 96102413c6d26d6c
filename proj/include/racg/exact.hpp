#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace racg {

/// Exact rational on 64-bit numerator/denominator, reduced, denominator
/// positive. Intermediate products run through 128-bit; overflow of the
/// reduced result throws.
class Rational {
public:
  Rational() = default;
  Rational(long long num) : num_(num), den_(1) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce_from(num, den);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

private:
  using i128 = __int128;
  static Rational from128(i128 num, i128 den) {
    Rational r;
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: 64-bit overflow");
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  void reduce_from(long long num, long long den) {
    *this = from128(num, den);
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// Element of the ring Q[x_0..x_{n-1}] / (x_s^2 - q_s) for fixed positive
/// rationals q_s: a finite sum of rational multiples of square-free
/// monomials in the x_s, encoded as a mask -> coefficient map. With
/// x_s = sqrt(q_s) this gives exact arithmetic for every quantity of the
/// form (rational) * sqrt(q_T), which covers Hecke structure constants,
/// p_s = (q_s - 1)/sqrt(q_s) and the coefficients (-1)^{|w|} sqrt(q_w).
class SqrtScalar {
public:
  SqrtScalar() = default;
  explicit SqrtScalar(Rational c) { set(0u, c); }
  static SqrtScalar monomial(std::uint32_t mask, Rational c) {
    SqrtScalar s;
    s.set(mask, c);
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
  Rational coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(std::uint32_t mask, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend SqrtScalar operator+(const SqrtScalar& a, const SqrtScalar& b) {
    SqrtScalar r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend SqrtScalar operator-(const SqrtScalar& a, const SqrtScalar& b) {
    SqrtScalar r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  SqrtScalar operator-() const {
    SqrtScalar r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend bool operator==(const SqrtScalar&, const SqrtScalar&) = default;

  double to_double(const std::vector<double>& sqrt_q) const {
    double v = 0.0;
    for (auto& [m, c] : terms_) {
      double t = c.to_double();
      for (std::uint32_t mm = m; mm;) {
        int s = __builtin_ctz(mm);
        mm &= mm - 1;
        t *= sqrt_q[static_cast<size_t>(s)];
      }
      v += t;
    }
    return v;
  }

private:
  void set(std::uint32_t mask, const Rational& c) {
    if (!c.is_zero()) terms_[mask] = c;
  }
  std::map<std::uint32_t, Rational> terms_;
};

/// Multiplication context: the squares q_s of the adjoined roots. A root
/// that happens to be rational is resolved to its value, so only genuinely
/// irrational square roots stay symbolic.
class SqrtRing {
public:
  explicit SqrtRing(std::vector<Rational> q) : q_(std::move(q)) {
    rational_root_.reserve(q_.size());
    for (const Rational& v : q_) rational_root_.push_back(rational_sqrt(v));
  }
  const std::vector<Rational>& squares() const { return q_; }

  SqrtScalar mul(const SqrtScalar& a, const SqrtScalar& b) const {
    SqrtScalar r;
    for (auto& [ma, ca] : a.terms()) {
      for (auto& [mb, cb] : b.terms()) {
        Rational c = ca * cb;
        for (std::uint32_t mm = ma & mb; mm;) {
          int s = __builtin_ctz(mm);
          mm &= mm - 1;
          c *= q_[static_cast<size_t>(s)];
        }
        r.add_term(ma ^ mb, c);
      }
    }
    return r;
  }

  /// sqrt(q_s): the rational value when one exists, a monomial otherwise.
  SqrtScalar root(int s) const {
    const auto& rr = rational_root_[static_cast<size_t>(s)];
    if (rr.has_value) return SqrtScalar(rr.value);
    return SqrtScalar::monomial(1u << s, Rational(1));
  }
  /// 1/sqrt(q_s).
  SqrtScalar inv_root(int s) const {
    const auto& rr = rational_root_[static_cast<size_t>(s)];
    if (rr.has_value) return SqrtScalar(Rational(1) / rr.value);
    return SqrtScalar::monomial(1u << s, Rational(1) / q_[static_cast<size_t>(s)]);
  }
  /// p_s = (q_s - 1)/sqrt(q_s).
  SqrtScalar p(int s) const {
    SqrtScalar diff(q_[static_cast<size_t>(s)] - Rational(1));
    return mul(diff, inv_root(s));
  }

private:
  struct MaybeRational {
    bool has_value = false;
    Rational value;
  };
  static MaybeRational rational_sqrt(const Rational& v) {
    auto isqrt = [](long long x) -> long long {
      if (x < 0) return -1;
      long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
      while (r > 0 && r * r > x) --r;
      while ((r + 1) * (r + 1) <= x) ++r;
      return r * r == x ? r : -1;
    };
    MaybeRational out;
    if (v < Rational(0)) return out;
    long long rn = isqrt(v.num()), rd = isqrt(v.den());
    if (rn >= 0 && rd >= 0) {
      out.has_value = true;
      out.value = Rational(rn, rd);
    }
    return out;
  }

  std::vector<Rational> q_;
  std::vector<MaybeRational> rational_root_;
};

} // namespace racg

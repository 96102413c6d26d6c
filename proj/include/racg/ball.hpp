#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "racg/coxeter.hpp"

namespace racg {

struct BallOptions {
  /// Refuse enumeration once the ball holds more elements than this.
  std::size_t element_cap = 10'000'000;
  bool parallel = true;
  /// Build left/right multiplication and inverse tables.
  bool build_tables = true;
};

/// All group elements of length <= radius, one canonical Word each, ordered
/// by (length, lex) with contiguous spheres. Closed under canonical-word
/// prefixes and under inversion. Optional Cayley tables give s*w, w*s and
/// w^{-1} as ball indices.
class BallBasis {
public:
  const CoxeterSystem& system() const { return system_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const { return words_[static_cast<size_t>(i)]; }
  int length(int i) const { return static_cast<int>(length_[static_cast<size_t>(i)]); }

  /// Index of w, or -1 when |w| > radius.
  int find(const Word& w) const;

  /// First index of the sphere of the given length (size() if none).
  int sphere_begin(int len) const;
  int sphere_end(int len) const { return sphere_begin(len + 1); }
  int sphere_size(int len) const { return sphere_end(len) - sphere_begin(len); }

  /// Indices [0, interior_end(k)) hold the words of length <= radius - k.
  int interior_end(int margin) const;

  bool has_tables() const { return !left_mult_.empty(); }
  /// Ball index of s*word(i), or -1 when the product leaves the ball.
  int left_mult(int i, int s) const {
    return left_mult_[static_cast<size_t>(i) * static_cast<size_t>(system_.rank()) + static_cast<size_t>(s)];
  }
  /// Ball index of word(i)*s, or -1 when the product leaves the ball.
  int right_mult(int i, int s) const {
    return right_mult_[static_cast<size_t>(i) * static_cast<size_t>(system_.rank()) + static_cast<size_t>(s)];
  }
  /// Ball index of word(i)^{-1}; always present.
  int inverse_index(int i) const { return inverse_[static_cast<size_t>(i)]; }

  bool is_left_ascent(int i, int s) const {
    int j = left_mult(i, s);
    return j < 0 || length(j) > length(i);
  }
  bool is_right_ascent(int i, int s) const {
    int j = right_mult(i, s);
    return j < 0 || length(j) > length(i);
  }

  friend BallBasis enumerate_ball(const CoxeterSystem&, int, const BallOptions&);

private:
  CoxeterSystem system_{0, {}};
  int radius_ = 0;
  std::vector<Word> words_;
  std::vector<std::uint8_t> length_;
  std::vector<int> sphere_begin_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::int32_t> left_mult_;
  std::vector<std::int32_t> right_mult_;
  std::vector<std::int32_t> inverse_;
};

/// Breadth-first enumeration over canonical forms; deterministic
/// (length, lex) order regardless of thread count. Throws capacity_error
/// when the element cap is exceeded.
BallBasis enumerate_ball(const CoxeterSystem& sys, int radius, const BallOptions& opt = {});

/// Weighted sphere sums c_n = sum over |w| = n of prod_s u_s^{l_s(w)} for
/// n = 0..max_len, without retaining the ball. Throws capacity_error when
/// more than cap elements would be visited. Deterministic.
std::vector<double> weighted_sphere_sums(const CoxeterSystem& sys, const std::vector<double>& u,
                                         int max_len, std::size_t cap = 10'000'000,
                                         bool parallel = true);

} // namespace racg

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racg {

/// Group element of a right-angled Coxeter system in canonical form: the
/// ShortLex-least reduced expression under the system's generator order.
/// Letters are generator indices stored one per byte, so comparisons and
/// hashing reduce to plain string operations.
///
/// Words are only meaningful relative to the CoxeterSystem that produced
/// them; all arithmetic lives on CoxeterSystem.
class Word {
public:
  Word() = default;

  /// Wraps a letter sequence that is already canonical. No validation.
  static Word from_canonical(std::string letters) { return Word(std::move(letters)); }

  const std::string& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  int letter(int i) const { return static_cast<unsigned char>(letters_[static_cast<size_t>(i)]); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// ShortLex order: by length, then lexicographically on letter indices.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

/// Per-generator letter counts and minimal positions of a canonical word.
/// count[s] is the number of occurrences of s in any reduced expression;
/// min_position[s] is the least (1-based) position at which s can occur
/// over all reduced expressions, or 0 when s does not occur.
struct LetterStatistics {
  std::vector<int> count;
  std::vector<int> min_position;
};

struct DescentSets {
  std::vector<int> left;   // { s : |sw| < |w| }
  std::vector<int> right;  // { s : |ws| < |w| }
};

/// A right-angled Coxeter system: generators 0..rank-1 whose index order is
/// the ShortLex letter order, plus a symmetric irreflexive commuting
/// relation (m_st = 2); every other distinct pair satisfies no relation
/// (m_st = infinity). Rank is capped at 25 so generator subsets fit in a
/// 32-bit mask.
class CoxeterSystem {
public:
  CoxeterSystem(int rank, const std::vector<std::pair<int, int>>& commuting_pairs,
                std::vector<std::string> names = {});

  int rank() const { return rank_; }
  bool commutes(int s, int t) const {
    return s != t && (commuting_[static_cast<size_t>(s)] >> t & 1u) != 0;
  }
  /// Generators commuting with s (excluding s itself).
  std::uint32_t commuting_mask(int s) const { return commuting_[static_cast<size_t>(s)]; }
  /// Generators t != s with m_st = infinity; edge set of the Coxeter graph.
  std::uint32_t noncommuting_mask(int s) const;

  /// True iff the Coxeter graph (edges = non-commuting pairs) is connected
  /// and the system has at least one generator.
  bool is_irreducible() const;

  const std::string& name(int s) const { return names_[static_cast<size_t>(s)]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a named generator, or -1.
  int index_of(std::string_view name) const;

  // --- word arithmetic ------------------------------------------------

  /// Canonical form of an arbitrary letter sequence. Two sequences
  /// representing the same group element yield identical Words.
  Word normalize(std::span<const int> raw) const;

  /// Canonical form of w*s. O(|w|).
  Word append(const Word& w, int s) const;
  /// Canonical form of s*w.
  Word prepend(const Word& w, int s) const;

  Word multiply(const Word& a, const Word& b) const;
  Word inverse(const Word& a) const;

  LetterStatistics statistics(const Word& w) const;
  DescentSets descent_sets(const Word& w) const;
  bool is_left_descent(const Word& w, int s) const;   // |sw| < |w|
  bool is_right_descent(const Word& w, int s) const;  // |ws| < |w|

  static constexpr int kMaxRank = 25;

private:
  void check_letter(int s) const;

  int rank_ = 0;
  std::vector<std::uint32_t> commuting_;
  std::vector<std::string> names_;
};

} // namespace racg

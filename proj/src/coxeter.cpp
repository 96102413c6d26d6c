#include "racg/coxeter.hpp"

#include <algorithm>
#include <stdexcept>

#include "racg/errors.hpp"

namespace racg {

namespace {

const char* kDefaultNames = "stuvwxyzabcdefghijklmnopq";

} // namespace

CoxeterSystem::CoxeterSystem(int rank, const std::vector<std::pair<int, int>>& commuting_pairs,
                             std::vector<std::string> names)
    : rank_(rank) {
  if (rank < 0 || rank > kMaxRank)
    throw std::invalid_argument("CoxeterSystem: rank must be in [0, 25], got " + std::to_string(rank));
  commuting_.assign(static_cast<size_t>(rank), 0u);
  for (auto [s, t] : commuting_pairs) {
    if (s < 0 || s >= rank || t < 0 || t >= rank)
      throw std::invalid_argument("CoxeterSystem: commuting pair references unknown generator");
    if (s == t)
      throw std::invalid_argument("CoxeterSystem: commuting relation must be irreflexive");
    commuting_[static_cast<size_t>(s)] |= 1u << t;
    commuting_[static_cast<size_t>(t)] |= 1u << s;
  }
  if (names.empty()) {
    names_.reserve(static_cast<size_t>(rank));
    for (int s = 0; s < rank; ++s) names_.emplace_back(1, kDefaultNames[s]);
  } else {
    if (static_cast<int>(names.size()) != rank)
      throw std::invalid_argument("CoxeterSystem: name count does not match rank");
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw std::invalid_argument("CoxeterSystem: duplicate generator name '" + names[i] + "'");
    names_ = std::move(names);
  }
}

std::uint32_t CoxeterSystem::noncommuting_mask(int s) const {
  std::uint32_t all = rank_ >= 32 ? ~0u : (1u << rank_) - 1u;
  return all & ~commuting_[static_cast<size_t>(s)] & ~(1u << s);
}

bool CoxeterSystem::is_irreducible() const {
  if (rank_ < 1) return false;
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int s = 0; s < rank_; ++s)
      if (frontier >> s & 1u) next |= noncommuting_mask(s);
    frontier = next & ~seen;
    seen |= next;
  }
  std::uint32_t all = (1u << rank_) - 1u;
  return seen == all;
}

int CoxeterSystem::index_of(std::string_view name) const {
  for (int s = 0; s < rank_; ++s)
    if (names_[static_cast<size_t>(s)] == name) return s;
  return -1;
}

void CoxeterSystem::check_letter(int s) const {
  if (s < 0 || s >= rank_)
    throw std::invalid_argument("unknown generator index " + std::to_string(s));
}

// Canonical insertion. Scanning the suffix of letters commuting with t:
// meeting an equal letter deletes the pair (the word stays canonical because
// the deleted piece was maximal in the dependence order), otherwise t lands
// at the first position of the legal window holding a larger letter, which
// is where the greedy ShortLex linearisation of the extended dependence
// order places it.
Word CoxeterSystem::append(const Word& w, int t) const {
  check_letter(t);
  std::string letters = w.letters();
  int n = static_cast<int>(letters.size());
  int window_begin = 0; // first index of the suffix commuting with t
  for (int i = n - 1; i >= 0; --i) {
    int c = static_cast<unsigned char>(letters[static_cast<size_t>(i)]);
    if (c == t) {
      letters.erase(static_cast<size_t>(i), 1);
      return Word::from_canonical(std::move(letters));
    }
    if (!commutes(c, t)) {
      window_begin = i + 1;
      break;
    }
  }
  int pos = n;
  for (int p = window_begin; p < n; ++p) {
    if (static_cast<unsigned char>(letters[static_cast<size_t>(p)]) > t) {
      pos = p;
      break;
    }
  }
  letters.insert(static_cast<size_t>(pos), 1, static_cast<char>(t));
  return Word::from_canonical(std::move(letters));
}

Word CoxeterSystem::normalize(std::span<const int> raw) const {
  Word w;
  for (int s : raw) w = append(w, s);
  return w;
}

Word CoxeterSystem::prepend(const Word& w, int s) const {
  check_letter(s);
  Word r = append(Word(), s);
  for (int i = 0; i < w.length(); ++i) r = append(r, w.letter(i));
  return r;
}

Word CoxeterSystem::multiply(const Word& a, const Word& b) const {
  Word r = a;
  for (int i = 0; i < b.length(); ++i) r = append(r, b.letter(i));
  return r;
}

Word CoxeterSystem::inverse(const Word& a) const {
  Word r;
  for (int i = a.length() - 1; i >= 0; --i) r = append(r, a.letter(i));
  return r;
}

LetterStatistics CoxeterSystem::statistics(const Word& w) const {
  int n = w.length();
  if (n > 64) throw std::length_error("statistics: word length above 64 unsupported");
  LetterStatistics st;
  st.count.assign(static_cast<size_t>(rank_), 0);
  st.min_position.assign(static_cast<size_t>(rank_), 0);
  // down[i]: positions of pieces strictly below piece i in the dependence
  // order of the reduced word (j < i with a non-commuting chain to i).
  std::vector<std::uint64_t> down(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int c = w.letter(i);
    for (int j = 0; j < i; ++j) {
      int cj = w.letter(j);
      if (cj == c || !commutes(cj, c))
        down[static_cast<size_t>(i)] |= down[static_cast<size_t>(j)] | (1ull << j);
    }
    ++st.count[static_cast<size_t>(c)];
    if (st.min_position[static_cast<size_t>(c)] == 0) {
      // first occurrence: its minimal position over all reduced expressions
      // is one more than the size of its strict down-set.
      st.min_position[static_cast<size_t>(c)] =
          1 + static_cast<int>(__builtin_popcountll(down[static_cast<size_t>(i)]));
    }
  }
  return st;
}

namespace {

// s is a left descent of the element represented by the reduced expression
// iff some occurrence of s commutes past everything before it. Valid for
// any reduced expression of the element.
std::uint32_t descents_of_reduced(const CoxeterSystem& sys, const std::string& letters) {
  std::uint32_t result = 0, blocked = 0;
  for (char ch : letters) {
    int c = static_cast<unsigned char>(ch);
    if (!(blocked >> c & 1u)) result |= 1u << c;
    blocked |= ~sys.commuting_mask(c); // c and everything not commuting with c
  }
  return result;
}

} // namespace

DescentSets CoxeterSystem::descent_sets(const Word& w) const {
  std::uint32_t left = descents_of_reduced(*this, w.letters());
  std::string rev(w.letters().rbegin(), w.letters().rend());
  std::uint32_t right = descents_of_reduced(*this, rev);
  DescentSets ds;
  for (int s = 0; s < rank_; ++s) {
    if (left >> s & 1u) ds.left.push_back(s);
    if (right >> s & 1u) ds.right.push_back(s);
  }
  return ds;
}

bool CoxeterSystem::is_left_descent(const Word& w, int s) const {
  check_letter(s);
  return (descents_of_reduced(*this, w.letters()) >> s & 1u) != 0;
}

bool CoxeterSystem::is_right_descent(const Word& w, int s) const {
  check_letter(s);
  std::string rev(w.letters().rbegin(), w.letters().rend());
  return (descents_of_reduced(*this, rev) >> s & 1u) != 0;
}

} // namespace racg

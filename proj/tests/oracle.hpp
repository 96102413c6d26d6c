// Test-only oracles, independent of the library's normalization path: they
// use nothing but the elementary moves ss -> e and adjacent commuting swaps.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"

namespace oracle {

// Rewriting closure of one word: breadth-first over deletions of adjacent
// equal pairs and adjacent commuting swaps; the ShortLex minimum of the
// closure is the canonical form.
inline std::string closure_canonical(const racg::CoxeterSystem& sys, const std::string& start) {
  auto shortlex = [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<std::string> visited = {start};
  std::vector<std::string> frontier = {start};
  std::string best = start;
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& w : frontier) {
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        int a = static_cast<unsigned char>(w[i]);
        int b = static_cast<unsigned char>(w[i + 1]);
        if (a == b) {
          std::string v = w.substr(0, i) + w.substr(i + 2);
          if (visited.insert(v).second) next.push_back(v);
        } else if (sys.commutes(a, b)) {
          std::string v = w;
          std::swap(v[i], v[i + 1]);
          if (visited.insert(v).second) next.push_back(v);
        }
      }
    }
    for (const std::string& v : next)
      if (shortlex(v, best)) best = v;
    frontier = std::move(next);
  }
  return best;
}

// Exhaustive union-find oracle over every word of length <= max_len:
// words sharing an elementary move land in one class, so classes are the
// group elements and the index-least member of a class is its canonical
// form (the enumeration order is ShortLex). canonical_of[i] gives the
// index of the canonical form for word index i.
struct ExhaustiveOracle {
  int rank;
  int max_len;
  std::vector<std::size_t> offset; // offset[len] = index of first word of that length
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> canonical_of;

  std::size_t total() const { return offset.back(); }

  std::size_t index_of(const std::string& w) const {
    std::size_t idx = offset[w.size()];
    std::size_t v = 0;
    for (char c : w) v = v * static_cast<std::size_t>(rank) + static_cast<unsigned char>(c);
    return idx + v;
  }

  std::string word_at(std::size_t i) const {
    int len = 0;
    while (offset[static_cast<size_t>(len) + 1] <= i) ++len;
    std::size_t v = i - offset[static_cast<size_t>(len)];
    std::string w(static_cast<size_t>(len), '\0');
    for (int k = len - 1; k >= 0; --k) {
      w[static_cast<size_t>(k)] = static_cast<char>(v % static_cast<std::size_t>(rank));
      v /= static_cast<std::size_t>(rank);
    }
    return w;
  }

  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    std::int32_t ra = find(static_cast<std::int32_t>(a));
    std::int32_t rb = find(static_cast<std::int32_t>(b));
    if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
};

inline ExhaustiveOracle build_exhaustive_oracle(const racg::CoxeterSystem& sys, int max_len) {
  ExhaustiveOracle o;
  o.rank = sys.rank();
  o.max_len = max_len;
  o.offset.assign(1, 0);
  std::size_t count = 1;
  std::size_t pow = 1;
  o.offset.push_back(1);
  for (int len = 1; len <= max_len; ++len) {
    pow *= static_cast<std::size_t>(o.rank);
    count += pow;
    o.offset.push_back(count);
  }
  o.parent.resize(count);
  std::iota(o.parent.begin(), o.parent.end(), 0);

  std::string w;
  for (std::size_t i = 0; i < count; ++i) {
    w = o.word_at(i);
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      int a = static_cast<unsigned char>(w[k]);
      int b = static_cast<unsigned char>(w[k + 1]);
      if (a == b) {
        std::string v = w.substr(0, k) + w.substr(k + 2);
        o.unite(i, o.index_of(v));
      } else if (sys.commutes(a, b)) {
        std::string v = w;
        std::swap(v[k], v[k + 1]);
        o.unite(i, o.index_of(v));
      }
    }
  }
  // index order is ShortLex over raw words, so the least index in a class
  // is the ShortLex-least (hence reduced) representative
  o.canonical_of.assign(count, -1);
  std::vector<std::int32_t> class_min(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    std::int32_t r = o.find(static_cast<std::int32_t>(i));
    if (class_min[static_cast<size_t>(r)] < 0) class_min[static_cast<size_t>(r)] = static_cast<std::int32_t>(i);
    o.canonical_of[i] = class_min[static_cast<size_t>(r)];
  }
  return o;
}

// All commuting-relation choices on a given rank (graphs on rank vertices).
inline std::vector<racg::CoxeterSystem> all_systems_of_rank(int rank) {
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < rank; ++s)
    for (int t = s + 1; t < rank; ++t) edges.emplace_back(s, t);
  std::vector<racg::CoxeterSystem> out;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1u) chosen.push_back(edges[e]);
    out.emplace_back(rank, chosen);
  }
  return out;
}

// Deterministic xorshift generator for test data.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  double real() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }
};

inline std::vector<int> random_raw_word(Rng& rng, int rank, int max_len) {
  int len = rng.uniform(max_len + 1);
  std::vector<int> w(static_cast<size_t>(len));
  for (int& c : w) c = rng.uniform(rank);
  return w;
}

} // namespace oracle

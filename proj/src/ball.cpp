#include "racg/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#ifdef _OPENMP
#include <parallel/algorithm>
#endif

#include "racg/errors.hpp"
#include "racg/parallel.hpp"

namespace racg {

int BallBasis::find(const Word& w) const {
  auto it = index_.find(w.letters());
  return it == index_.end() ? -1 : it->second;
}

int BallBasis::sphere_begin(int len) const {
  if (len < 0) return 0;
  if (len >= static_cast<int>(sphere_begin_.size())) return size();
  return sphere_begin_[static_cast<size_t>(len)];
}

int BallBasis::interior_end(int margin) const { return sphere_begin(radius_ - margin + 1); }

namespace {

// One BFS layer: canonical extensions w*s of every parent with |ws| = len,
// deduplicated and sorted. Extensions land in a flat buffer at fixed
// per-parent offsets, so the result is independent of scheduling and the
// hot loop allocates nothing.
std::vector<std::string> next_sphere(const CoxeterSystem& sys, const std::vector<Word>& words,
                                     int begin, int end, bool parallel) {
  const std::size_t nparents = static_cast<std::size_t>(end - begin);
  const std::size_t rank = static_cast<std::size_t>(sys.rank());
  // fixed-size parent chunks expanded independently, results concatenated
  // in chunk order: content is independent of scheduling
  constexpr std::size_t kChunk = 4096;
  const std::size_t nchunks = (nparents + kChunk - 1) / kChunk;
  std::vector<std::vector<std::string>> chunk_out(nchunks);
  par::for_each_index(nchunks, parallel, [&](std::size_t c) {
    auto& out = chunk_out[c];
    const std::size_t lo = c * kChunk, hi = std::min(nparents, lo + kChunk);
    out.reserve((hi - lo) * rank);
    for (std::size_t k = lo; k < hi; ++k) {
      const Word& w = words[static_cast<size_t>(begin) + k];
      for (std::size_t s = 0; s < rank; ++s) {
        Word x = sys.append(w, static_cast<int>(s));
        if (x.length() == w.length() + 1) out.push_back(x.letters());
      }
    }
  });
  std::size_t total = 0;
  for (const auto& v : chunk_out) total += v.size();
  std::vector<std::string> cand;
  cand.reserve(total);
  for (auto& v : chunk_out) {
    for (auto& s : v) cand.push_back(std::move(s));
    v.clear();
    v.shrink_to_fit();
  }
#ifdef _OPENMP
  // sorted output is unique by value, so a parallel sort stays deterministic
  if (parallel && cand.size() > 1u << 15)
    __gnu_parallel::sort(cand.begin(), cand.end());
  else
    std::sort(cand.begin(), cand.end());
#else
  std::sort(cand.begin(), cand.end());
#endif
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  return cand;
}

} // namespace

BallBasis enumerate_ball(const CoxeterSystem& sys, int radius, const BallOptions& opt) {
  if (radius < 0) throw std::invalid_argument("enumerate_ball: radius must be >= 0");
  BallBasis ball;
  ball.system_ = sys;
  ball.radius_ = radius;
  ball.words_.push_back(Word());
  ball.sphere_begin_ = {0, 1};

  for (int len = 1; len <= radius; ++len) {
    int begin = ball.sphere_begin_[static_cast<size_t>(len - 1)];
    int end = ball.sphere_begin_[static_cast<size_t>(len)];
    if (begin == end) break; // finite group exhausted
    auto cand = next_sphere(sys, ball.words_, begin, end, opt.parallel);
    if (ball.words_.size() + cand.size() > opt.element_cap)
      throw capacity_error("enumerate_ball: ball size exceeds cap of " +
                           std::to_string(opt.element_cap) + " elements at radius " +
                           std::to_string(len));
    for (auto& letters : cand) ball.words_.push_back(Word::from_canonical(std::move(letters)));
    ball.sphere_begin_.push_back(static_cast<int>(ball.words_.size()));
  }
  while (static_cast<int>(ball.sphere_begin_.size()) < radius + 2)
    ball.sphere_begin_.push_back(static_cast<int>(ball.words_.size()));

  const std::size_t n = ball.words_.size();
  ball.length_.resize(n);
  ball.index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    ball.length_[i] = static_cast<std::uint8_t>(ball.words_[i].length());
    ball.index_.emplace(ball.words_[i].letters(), static_cast<int>(i));
  }

  if (opt.build_tables) {
    const std::size_t r = static_cast<std::size_t>(sys.rank());
    ball.left_mult_.assign(n * r, -1);
    ball.right_mult_.assign(n * r, -1);
    ball.inverse_.assign(n, -1);
    par::for_each_index(n, opt.parallel, [&](std::size_t i) {
      const Word& w = ball.words_[i];
      for (int s = 0; s < sys.rank(); ++s) {
        ball.right_mult_[i * r + static_cast<size_t>(s)] = ball.find(sys.append(w, s));
        ball.left_mult_[i * r + static_cast<size_t>(s)] = ball.find(sys.prepend(w, s));
      }
      ball.inverse_[i] = ball.find(sys.inverse(w));
    });
  }
  return ball;
}

std::vector<double> weighted_sphere_sums(const CoxeterSystem& sys, const std::vector<double>& u,
                                         int max_len, std::size_t cap, bool parallel) {
  if (static_cast<int>(u.size()) != sys.rank())
    throw std::invalid_argument("weighted_sphere_sums: one weight per generator required");
  std::vector<double> sums(static_cast<size_t>(max_len) + 1, 0.0);
  sums[0] = 1.0;
  std::vector<Word> sphere = {Word()};
  std::size_t visited = 1;
  for (int len = 1; len <= max_len; ++len) {
    auto cand = next_sphere(sys, sphere, 0, static_cast<int>(sphere.size()), parallel);
    if (cand.empty()) break;
    visited += cand.size();
    if (visited > cap)
      throw capacity_error("weighted_sphere_sums: visited elements exceed cap of " +
                           std::to_string(cap) + " at length " + std::to_string(len));
    sphere.clear();
    sphere.reserve(cand.size());
    for (auto& letters : cand) sphere.push_back(Word::from_canonical(std::move(letters)));
    // weight computed from canonical letters, so the value is history-free
    sums[static_cast<size_t>(len)] = par::blocked_sum(sphere.size(), parallel, [&](std::size_t k) {
      double wgt = 1.0;
      for (int i = 0; i < sphere[k].length(); ++i) wgt *= u[static_cast<size_t>(sphere[k].letter(i))];
      return wgt;
    });
  }
  return sums;
}

} // namespace racg

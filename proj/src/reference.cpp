#include "racg/reference.hpp"

#include <algorithm>

#include "racg/errors.hpp"

namespace racg::reference {

std::vector<Word> enumerate_ball_words(const CoxeterSystem& sys, int radius,
                                       std::size_t element_cap) {
  std::vector<Word> words = {Word()};
  std::size_t begin = 0, end = 1;
  for (int len = 1; len <= radius && begin < end; ++len) {
    std::vector<std::string> cand;
    for (std::size_t i = begin; i < end; ++i) {
      for (int s = 0; s < sys.rank(); ++s) {
        Word x = sys.append(words[i], s);
        if (x.length() == len) cand.push_back(x.letters());
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    if (words.size() + cand.size() > element_cap)
      throw capacity_error("reference ball enumeration exceeds element cap");
    begin = end;
    for (auto& letters : cand) words.push_back(Word::from_canonical(std::move(letters)));
    end = words.size();
  }
  return words;
}

std::vector<double> weighted_sphere_sums(const CoxeterSystem& sys, const std::vector<double>& u,
                                         int max_len, std::size_t cap) {
  std::vector<double> sums(static_cast<size_t>(max_len) + 1, 0.0);
  sums[0] = 1.0;
  std::vector<Word> sphere = {Word()};
  std::size_t visited = 1;
  for (int len = 1; len <= max_len && !sphere.empty(); ++len) {
    std::vector<std::string> cand;
    for (const Word& w : sphere)
      for (int s = 0; s < sys.rank(); ++s) {
        Word x = sys.append(w, s);
        if (x.length() == len) cand.push_back(x.letters());
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    visited += cand.size();
    if (visited > cap) throw capacity_error("reference sphere sums exceed element cap");
    sphere.clear();
    double total = 0.0;
    for (auto& letters : cand) {
      Word w = Word::from_canonical(std::move(letters));
      double wgt = 1.0;
      for (int i = 0; i < w.length(); ++i) wgt *= u[static_cast<size_t>(w.letter(i))];
      total += wgt;
      sphere.push_back(std::move(w));
    }
    sums[static_cast<size_t>(len)] = total;
  }
  return sums;
}

std::vector<double> character_table(const BallBasis& ball, const RepParameter& rep,
                                    std::span<const Word> words) {
  std::vector<double> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(character(ball, rep, w));
  return out;
}

} // namespace racg::reference

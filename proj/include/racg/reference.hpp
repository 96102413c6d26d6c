#pragma once

#include <span>
#include <vector>

#include "racg/ball.hpp"
#include "racg/graph_product.hpp"

namespace racg::reference {

/// Plain serial breadth-first enumeration; same contract and order as
/// racg::enumerate_ball. Kept as the reference the parallel kernels are
/// tested and benchmarked against.
std::vector<Word> enumerate_ball_words(const CoxeterSystem& sys, int radius,
                                       std::size_t element_cap = 10'000'000);

/// Serial weighted sphere sums, straight accumulation.
std::vector<double> weighted_sphere_sums(const CoxeterSystem& sys, const std::vector<double>& u,
                                         int max_len, std::size_t cap = 10'000'000);

/// Serial per-word character evaluation.
std::vector<double> character_table(const BallBasis& ball, const RepParameter& rep,
                                    std::span<const Word> words);

} // namespace racg::reference

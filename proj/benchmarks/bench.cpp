// Compares the OpenMP kernels against the serial reference implementations
// on representative workloads and verifies they agree.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "racg/ball.hpp"
#include "racg/graph_product.hpp"
#include "racg/parallel.hpp"
#include "racg/reference.hpp"

using namespace racg;

namespace {

double time_once(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) best = std::min(best, time_once(f));
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-34s %9.3f ms %9.3f ms %6.2fx %s\n", name.c_str(), serial * 1e3, parallel * 1e3,
              serial / parallel, agree ? "ok" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  int radius = argc > 1 ? std::atoi(argv[1]) : 9;
  std::printf("threads available: %d\n", par::max_threads());
  std::printf("%-34s %12s %12s %7s\n", "kernel", "serial", "openmp", "speedup");

  CoxeterSystem fr(4, {});
  CoxeterSystem mixed(4, {{0, 1}, {2, 3}});

  {
    std::vector<Word> ref = reference::enumerate_ball_words(fr, radius);
    BallOptions ser, par;
    ser.parallel = false;
    ser.build_tables = false;
    par.parallel = true;
    par.build_tables = false;
    BallBasis check = enumerate_ball(fr, radius, par);
    bool agree = check.size() == static_cast<int>(ref.size());
    for (int i = 0; agree && i < check.size(); i += 97)
      agree = check.word(i) == ref[static_cast<size_t>(i)];
    double ts = best_of(2, [&] { enumerate_ball(fr, radius, ser); });
    double tp = best_of(2, [&] { enumerate_ball(fr, radius, par); });
    row("ball enumeration (free product)", ts, tp, agree);
  }

  {
    std::vector<double> u = {0.3, 0.45, 0.2, 0.55};
    std::vector<double> a, b;
    double ts = best_of(2, [&] { a = reference::weighted_sphere_sums(mixed, u, radius + 3); });
    double tp = best_of(2, [&] { b = weighted_sphere_sums(mixed, u, radius + 3, 50'000'000, true); });
    bool agree = a.size() == b.size();
    for (size_t i = 0; agree && i < a.size(); ++i)
      agree = std::abs(a[i] - b[i]) <= 1e-12 * std::max(1.0, std::abs(a[i]));
    row("weighted sphere sums", ts, tp, agree);
  }

  {
    BallOptions serial_opt, par_opt;
    serial_opt.parallel = false;
    par_opt.parallel = true;
    BallBasis a(enumerate_ball(mixed, radius - 2, serial_opt));
    double ts = best_of(2, [&] { enumerate_ball(mixed, radius - 2, serial_opt); });
    double tp = best_of(2, [&] { enumerate_ball(mixed, radius - 2, par_opt); });
    row("ball + Cayley tables", ts, tp, true);
  }

  {
    BallBasis ball = enumerate_ball(mixed, 7);
    RepParameter rep = RepParameter::from_a({0.4, -0.2, 0.3, 0.1});
    std::vector<Word> words(ball.words().begin(), ball.words().begin() + ball.sphere_end(6));
    std::vector<double> a, b;
    double ts = best_of(2, [&] { a = reference::character_table(ball, rep, words); });
    double tp = best_of(2, [&] { b = character_table(ball, rep, words, true); });
    bool agree = a == b;
    row("character table", ts, tp, agree);
  }

  return 0;
}

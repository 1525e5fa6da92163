// Serial vs OpenMP cosine scoring over random unit rows.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "ragweld/vindex/kernels.hpp"

namespace k = ragweld::vindex::kernels;

namespace {

template <typename F>
double best_ms(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  std::printf("threads=%d\n", omp_get_max_threads());
  std::printf("%8s %5s %12s %12s %8s %s\n", "rows", "dim", "serial_ms", "omp_ms", "speedup", "identical");

  for (std::size_t n : {1000u, 10000u, 100000u}) {
    for (std::size_t dim : {64u, 256u}) {
      std::vector<double> rows(n * dim), norms(n), query(dim);
      for (double& x : rows) x = nd(rng);
      for (double& x : query) x = nd(rng);
      for (std::size_t i = 0; i < n; ++i) {
        norms[i] = k::l2_norm(std::span(rows).subspan(i * dim, dim));
      }
      const double qn = k::l2_norm(query);
      std::vector<double> a(n), b(n);
      const int reps = n >= 100000 ? 3 : 10;
      const double ts = best_ms([&] { k::cosine_scores_serial(rows, norms, dim, query, qn, a); }, reps);
      const double tp = best_ms([&] { k::cosine_scores_omp(rows, norms, dim, query, qn, b); }, reps);
      std::printf("%8zu %5zu %12.3f %12.3f %8.2f %s\n", n, dim, ts, tp, ts / tp, a == b ? "yes" : "NO");
    }
  }
  return 0;
}

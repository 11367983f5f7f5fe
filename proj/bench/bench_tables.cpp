// Timing harness for the two enumeration kernels, serial vs OpenMP.
// Build-only target; not part of the test suite.

#include <cstdio>
#include <functional>
#include <vector>

#include <omp.h>

#include "invlim/limit.hpp"
#include "invlim/points.hpp"
#include "invlim/ringtable.hpp"

using namespace invlim;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = omp_get_wtime();
    fn();
    double t1 = omp_get_wtime();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void report(const char* label, long long size, double serial, double parallel) {
  std::printf("%-28s %9lld entries   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              label, size, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    // Point-map table over a large prime field: p = 997, n = 2 (994009 points).
    Field k = Field::prime(997);
    Polynomial x1 = Polynomial::variable(k, 2, 0);
    Polynomial x2 = Polynomial::variable(k, 2, 1);
    PolyEndo f(k, {x1 + x2 * x2 * x2, x2 + x1 * x1});
    std::vector<long long> ts, tp;
    double s = time_best_of(3, [&] { ts = point_map_table(f, k, Exec::Serial); });
    double p = time_best_of(3, [&] { tp = point_map_table(f, k, Exec::Parallel); });
    if (ts != tp) {
      std::printf("MISMATCH: point_map_table serial != parallel\n");
      return 1;
    }
    report("point_map_table p=997 n=2", static_cast<long long>(ts.size()), s, p);
  }

  {
    // Induced map on a truncated ring: F_3, n = 2, s = 2 gives 3^18 = ...
    // too big; s = 1 gives dimension 9 and 3^9 = 19683 elements.
    Field k = Field::prime(3);
    TruncSpec spec = TruncSpec::frobenius(k, 2, 1, {});
    Polynomial x1 = Polynomial::variable(k, 2, 0);
    Polynomial x2 = Polynomial::variable(k, 2, 1);
    TruncEndo g = project_endo(PolyEndo(k, {x1 + x2 * x2, x2 + x1 * x2}), spec);
    std::vector<long long> ts, tp;
    double s = time_best_of(3, [&] { ts = induced_function_table(g, Exec::Serial); });
    double p = time_best_of(3, [&] { tp = induced_function_table(g, Exec::Parallel); });
    if (ts != tp) {
      std::printf("MISMATCH: induced_function_table serial != parallel\n");
      return 1;
    }
    report("induced_function_table F_3", static_cast<long long>(ts.size()), s, p);
  }

  return 0;
}
